"""Ideals of Z_n and Z: lattice operations, smallness, radicals, parsing."""
from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sasmall.errors import InfiniteEnumeration, InfiniteLattice, ParseError
from sasmall.rings import (
    ZZ,
    Ideal,
    RingDesc,
    ideal_lattice,
    is_small_ideal_in,
    jacobson_radical_ring,
    maximal_ideals,
    parse_ideal,
    parse_ring,
    rad_ideal,
    ring_predicates,
)

MODULI = range(2, 13)


def brute_small(n, a, s):
    """``aR`` small in ``sR`` by literal sets."""
    I = {a * k % n for k in range(n)}
    A = {s * k % n for k in range(n)}
    if not I <= A:
        return False
    for d in range(n):
        L = {d * k % n for k in range(n)}
        if L <= A and L != A and {(x + y) % n for x in I for y in L} == A:
            return False
    return True


@pytest.mark.parametrize("n", MODULI)
def test_small_ideal_against_sets(n):
    R = RingDesc(n)
    for I in ideal_lattice(R):
        for A in ideal_lattice(R):
            assert is_small_ideal_in(I, A) == brute_small(n, I.gen, A.gen), (I, A)


@pytest.mark.parametrize("n", MODULI)
def test_small_iff_in_jacobson(n):
    R = RingDesc(n)
    J = jacobson_radical_ring(R)
    for I in ideal_lattice(R):
        assert is_small_ideal_in(I, R.unit_ideal) == (I <= J)


@pytest.mark.parametrize("n", MODULI)
def test_semisimple_iff_only_zero_small(n):
    R = RingDesc(n)
    smalls = [I for I in ideal_lattice(R) if is_small_ideal_in(I, R.unit_ideal)]
    assert ring_predicates(R).is_semisimple == (smalls == [R.zero_ideal])


@pytest.mark.parametrize("n", MODULI)
def test_lattice_closed_and_radical(n):
    R = RingDesc(n)
    ideals = set(ideal_lattice(R))
    for I in ideals:
        r = rad_ideal(I)
        assert I <= r and rad_ideal(r) == r
        for K in ideals:
            assert I + K in ideals and I & K in ideals
            assert (I + K).gen == gcd(I.gen, K.gen)


def test_z_ideals():
    assert is_small_ideal_in(Ideal(ZZ, 0), Ideal(ZZ, 2))
    assert not is_small_ideal_in(Ideal(ZZ, 8), Ideal(ZZ, 2))
    assert not is_small_ideal_in(Ideal(ZZ, 4), Ideal(ZZ, 0))   # not contained
    assert is_small_ideal_in(Ideal(ZZ, 0), Ideal(ZZ, 0))
    assert jacobson_radical_ring(ZZ).is_zero
    with pytest.raises(InfiniteLattice):
        ideal_lattice(ZZ)
    with pytest.raises(InfiniteEnumeration):
        maximal_ideals(ZZ)
    with pytest.raises(InfiniteEnumeration):
        ring_predicates(ZZ)


def test_canonical_generators():
    R = RingDesc(12)
    assert Ideal(R, 8) == Ideal(R, 4)
    assert Ideal(R, 0) == R.zero_ideal and R.zero_ideal.gen == 12
    assert Ideal(ZZ, -6) == Ideal(ZZ, 6)
    assert str(Ideal(R, 4)) == "(4) mod 12" and str(Ideal(ZZ, 3)) == "3Z"
    with pytest.raises(AttributeError):
        Ideal(R, 2).gen = 3


@given(st.sampled_from(list(MODULI)), st.integers(0, 50))
def test_ideal_text_round_trip(n, d):
    for I in (Ideal(RingDesc(n), d), Ideal(ZZ, d)):
        assert parse_ideal(str(I), I.ring) == I


def test_ring_parsing():
    assert parse_ring("Z") == ZZ
    assert parse_ring("Z/6") == parse_ring("Z_6") == RingDesc(6)
    for bad in ("Q", "Z/", "Z/x"):
        with pytest.raises(ParseError):
            parse_ring(bad)
    with pytest.raises(ValueError):
        RingDesc(1)


def test_ring_flags():
    f = ring_predicates(RingDesc(6))
    assert f.is_semisimple and not f.is_local and f.idempotents == (0, 1, 3, 4)
    f = ring_predicates(RingDesc(8))
    assert f.is_local and not f.is_semisimple and f.units == (1, 3, 5, 7)
    assert ring_predicates(RingDesc(7)).is_field

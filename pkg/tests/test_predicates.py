"""Predicates: worked instances, the Z line against brute quantification, edge cases."""
from __future__ import annotations

from math import gcd

import pytest

from sasmall.errors import Undecidable
from sasmall.modules import annihilator, module_make, parse_module, parse_submodule, z_line
from sasmall.predicates import (
    FAILS,
    HOLDS,
    UNDECIDED,
    T_sa_small_set,
    is_completely_irreducible,
    is_essential,
    is_sa_hollow,
    is_sa_small,
    is_small,
    is_T_sa_hollow,
    is_T_sa_small,
    j_sa_T,
    jacobson_radical_by_small_sum,
    jacobson_radical_module,
    lattice,
    module_class,
    refute_or_confirm_T_sa_small_with_witness,
    sa_small_set,
    small_set,
)
from sasmall.rings import ZZ, Ideal, RingDesc, is_small_ideal_in

S_RANGE = range(0, 73)   # every residue pattern of gcd(k, s) for k, t <= 24 appears


def line_brute(k, t, strict):
    """Literal quantifier over X = sZ, s in a range closed under the relevant gcds."""
    for s in S_RANGE:
        if strict and s == 0:
            continue
        g = gcd(k, s)
        covers = (t % g == 0) if g else t == 0
        ann = Ideal(ZZ, 0 if s else 1)
        if covers and not is_small_ideal_in(ann, Ideal(ZZ, t)):
            return False
    return True


@pytest.mark.parametrize("strict", [False, True])
def test_z_line_T_sa_small_against_brute(strict):
    Z = z_line()
    for k in range(0, 25):
        for t in range(0, 25):
            v = is_T_sa_small(Z.line(k), Z.line(t), strict=strict)
            assert (v.value == HOLDS) == line_brute(k, t, strict), (k, t, strict)
            if v.value == FAILS:
                X = v.witness
                assert Z.line(t) <= Z.line(k) + X
                assert not is_small_ideal_in(annihilator(X), Ideal(ZZ, t))


def test_z_line_small_and_sa_against_brute():
    Z = z_line()
    for k in range(0, 25):
        covers = [s for s in S_RANGE if gcd(k, s) == 1]
        assert bool(is_small(Z.line(k))) == all(s == 1 for s in covers)
        assert bool(is_sa_small(Z.line(k))) == all(s != 0 for s in covers)
        assert (Z.line(k) in small_set(Z)) == bool(is_small(Z.line(k)))
        assert (Z.line(k) in sa_small_set(Z)) == bool(is_sa_small(Z.line(k)))
        for t in range(1, 13):
            fam = T_sa_small_set(Z, Z.line(t))
            assert (Z.line(k) in fam) == bool(is_T_sa_small(Z.line(k), Z.line(t)))


def test_z_line_reduces_to_finite_when_x_is_bounded():
    """``N = kZ ⊇ T = tZ``: both sides are decided by the same (k, t) data in Z/mZ."""
    Z = z_line()
    for m in (4, 6, 8, 12):
        M = module_make(ZZ, [m])
        for k in range(1, m + 1):
            if m % k:
                continue
            for t in range(1, m + 1):
                if m % t or t % k:
                    continue
                # T ⊆ N: X = 0 covers; the conclusion then asks Ann(0) = R ≪ (T:M)
                fin = is_T_sa_small(M.sub([k]), M.sub([t]))
                inf = is_T_sa_small(Z.line(k), Z.line(t))
                assert fin.value == FAILS and inf.value == FAILS
                assert fin.witness.is_zero and inf.witness.is_zero


def test_z6_sets():
    M = module_make(ZZ, [6])
    assert small_set(M) == [M.zero]
    assert sa_small_set(M) == []
    assert annihilator(M.sub([2])) == Ideal(ZZ, 3)


def test_sa_small_zero_and_top():
    for f in ([2], [8], [2, 4], [6]):
        M = module_make(RingDesc(8) if 8 % max(f) == 0 else ZZ, f)
        assert not is_sa_small(M.full)
        v = is_sa_small(M.zero)
        assert bool(v) == is_small_ideal_in(annihilator(M.full), M.ring.unit_ideal)


def test_minimal_witness_is_canonical_first():
    M = module_make(ZZ, [8])
    lat = lattice(M)
    K, T = M.sub([4]), M.sub([2])
    v = is_T_sa_small(K, T)
    bad = [X for X in lat.all if T <= K + X
           and not is_small_ideal_in(annihilator(X), Ideal(ZZ, 2))]
    assert v.witness == bad[0] == M.sub([2])


def test_strict_reading_skips_zero():
    M = module_make(RingDesc(8), [8])
    T = M.sub([4])
    assert is_T_sa_small(T, T).value == FAILS and is_T_sa_small(T, T).witness.is_zero
    strict = is_T_sa_small(T, T, strict=True)
    assert strict.witness is None or not strict.witness.is_zero


def test_witness_mode_on_presented_module():
    M = parse_module("presented:2Z x Z/8", ZZ)
    N, T = M.zero, parse_submodule("<(0,4)>", M)
    v = refute_or_confirm_T_sa_small_with_witness(N, T, parse_submodule("<(0,2)>", M))
    assert v.value == FAILS
    v = refute_or_confirm_T_sa_small_with_witness(N, T, parse_submodule("<(2,0)>", M))
    assert v.value == UNDECIDED
    with pytest.raises(Undecidable):
        is_T_sa_small(N, T)
    assert is_sa_small(M.zero).value == HOLDS


def test_essential_and_irreducible():
    M = module_make(ZZ, [8])
    assert all(bool(is_essential(N)) == (not N.is_zero) for N in lattice(M).all)
    assert all(bool(is_completely_irreducible(N)) == (N != M.full) for N in lattice(M).all)
    V = module_make(ZZ, [2, 2])
    assert not is_essential(V.sub([1, 0]))
    assert not is_completely_irreducible(V.zero)
    with pytest.raises(Undecidable):
        is_completely_irreducible(z_line().line(2))


def test_jacobson_two_ways():
    for f in ([8], [2, 4], [6], [2, 2], [4, 4], [2, 6]):
        M = module_make(ZZ, f)
        assert jacobson_radical_module(M) == jacobson_radical_by_small_sum(M)


def test_hollow_and_j_sa():
    R = RingDesc(8)
    M = module_make(R, [8])
    assert is_sa_hollow(M).value == HOLDS
    assert is_sa_hollow(module_make(ZZ, [6])).value == FAILS
    assert is_T_sa_hollow(M, M.sub([4])).value == FAILS
    Z = z_line()
    assert j_sa_T(Z, Z.line(2)) == Z.full
    assert j_sa_T(M, M.full) == M.sub([2])


def test_module_classes():
    c = module_class(module_make(RingDesc(8), [8]))
    assert c.is_faithful and c.is_multiplication and c.is_comultiplication
    assert not c.is_semisimple_module
    c = module_class(module_make(RingDesc(6), [6]))
    assert c.is_semisimple_module
    c = module_class(module_make(RingDesc(2), [2, 2]))
    assert not c.is_multiplication and c.is_prime

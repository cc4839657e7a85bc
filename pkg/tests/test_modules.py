"""Modules, submodules, quotients and lattices."""
from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sasmall.errors import BadFactors, BoundExceeded, InfiniteLattice, ParseError, RingMismatch
from sasmall.modules import (
    annihilator,
    colon,
    enumerate_submodules,
    format_module,
    format_submodule,
    module_make,
    parse_module,
    parse_submodule,
    quotient_module,
    z_line,
)
from sasmall.rings import ZZ, Ideal, RingDesc

FACTORS = [(2,), (6,), (8,), (2, 2), (2, 4), (2, 6), (3, 3), (2, 2, 2), (4, 4), (2, 2, 4)]


def closure(M, gens):
    """Elements reached from ``gens`` by repeated addition (brute force)."""
    out = {M.reduce([0] * M.rank)}
    frontier = list(out)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = M.reduce([a + b for a, b in zip(x, g)])
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(out)


def test_construction():
    M = module_make(ZZ, [6])
    assert M.invariant_factors == (6,) and M.order == 6 and M.backend == "finite"
    assert module_make(ZZ, [2, 3]).invariant_factors == (6,)
    assert module_make(RingDesc(8), []).is_zero
    assert z_line().backend == "z_line"
    assert parse_module("presented:2Z x Z/8", ZZ).backend == "z_presented"
    with pytest.raises(BadFactors):
        module_make(RingDesc(6), [4])
    with pytest.raises(RingMismatch):
        module_make(RingDesc(6), "Z")


@pytest.mark.parametrize("text,ring", [
    ("Z/6", ZZ), ("Z/2 x Z/8", ZZ), ("Z", ZZ), ("0", RingDesc(4)),
    ("presented:2Z x Z/8", ZZ), ("Z/2 x Z/6 x Z/12", RingDesc(12)),
])
def test_module_text_round_trip(text, ring):
    M = parse_module(text, ring)
    assert parse_module(format_module(M), ring) == M


def test_parse_errors():
    for bad in ("Q", "Z/1", "Z/2 y Z/3", "presented[[1,2"):
        with pytest.raises(ParseError):
            parse_module(bad, ZZ)
    M = module_make(ZZ, [2, 8])
    for bad in ("(1,2)", "<(1,a)>", "<(1,2)x>"):
        with pytest.raises((ParseError, ValueError)):
            parse_submodule(bad, M)


@pytest.mark.parametrize("f", FACTORS)
def test_submodule_round_trip_and_soundness(f):
    M = module_make(ZZ, list(f))
    lat = enumerate_submodules(M)
    seen = set()
    for N in lat.all:
        assert parse_submodule(format_submodule(N), M) == N
        es = N.element_set
        assert es == closure(M, N.generators)
        assert es not in seen
        seen.add(es)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_lattice_of_p_by_p(p):
    assert len(enumerate_submodules(module_make(ZZ, [p, p]))) == p + 3


@pytest.mark.parametrize("f", FACTORS)
def test_lattice_closed_under_sum_and_meet(f):
    M = module_make(ZZ, list(f))
    lat = enumerate_submodules(M)
    idx = {N: i for i, N in enumerate(lat.all)}
    assert lat.all[0].is_zero and lat.all[-1].is_full
    for i, A in enumerate(lat.all):
        for j, B in enumerate(lat.all):
            assert idx[A + B] == lat.join[i, j] == lat.join_of(i, j)
            assert idx[A & B] == lat.meet[i, j]
            assert (A <= B) == lat.leq[i, j] == (A.element_set <= B.element_set)
            assert (A & B).element_set == A.element_set & B.element_set


@pytest.mark.parametrize("f", FACTORS)
def test_annihilator_and_colon_by_scan(f):
    M = module_make(ZZ, list(f))
    e = M.exponent
    lat = enumerate_submodules(M)
    for X in lat.all:
        ann = min(r for r in range(1, e + 1) if all(not any(M.reduce([r * v for v in x]))
                                                   for x in X.element_set))
        assert annihilator(X) == Ideal(ZZ, ann)
        for T in lat.all:
            c = min(r for r in range(1, e + 1)
                    if all(M.reduce([r * v for v in x]) in T.element_set
                           for x in X.element_set))
            assert colon(T, X) == Ideal(ZZ, c)


@pytest.mark.parametrize("f", FACTORS)
def test_quotient_transport_bijection(f):
    M = module_make(ZZ, list(f))
    lat = enumerate_submodules(M)
    for N in lat.all:
        q = quotient_module(M, N)
        assert q.target.order * N.order == M.order
        above = [K for K in lat.all if N <= K]
        images = [q.push(K) for K in above]
        Q = enumerate_submodules(q.target) if not q.target.is_zero else None
        assert len(set(images)) == len(above) == (len(Q) if Q else 1)
        for K, Kb in zip(above, images):
            assert q.pull(Kb) == K
        for A, Ab in zip(above, images):
            for B, Bb in zip(above, images):
                assert q.push(A + B) == Ab + Bb
                assert q.push(A & B) == Ab & Bb


def test_z_line():
    Z = z_line()
    assert Z.line(4) + Z.line(6) == Z.line(2)
    assert Z.line(4) & Z.line(6) == Z.line(12)
    assert Z.line(8) <= Z.line(2) and not Z.line(2) <= Z.line(8)
    assert annihilator(Z.line(3)).is_zero and annihilator(Z.zero) == Ideal(ZZ, 1)
    assert colon(Z.line(2), Z.full) == Ideal(ZZ, 2)
    assert format_submodule(Z.line(8)) == "8Z" and parse_submodule("8Z", Z) == Z.line(8)
    with pytest.raises(InfiniteLattice):
        enumerate_submodules(Z)


def test_presented_witness_arithmetic():
    M = parse_module("presented:2Z x Z/8", ZZ)
    X = parse_submodule("<(0,2)>", M)
    T = parse_submodule("<(0,4)>", M)
    assert annihilator(X) == Ideal(ZZ, 4)
    assert colon(T, M.full) == Ideal(ZZ, 0)
    assert T <= M.zero + X
    assert format_submodule(X) == "<(0,2)>"
    with pytest.raises(InfiniteLattice):
        enumerate_submodules(M)


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        enumerate_submodules(module_make(ZZ, [8, 8]), max_order=32)


def test_exports():
    lat = enumerate_submodules(module_make(ZZ, [6]))
    dot = lat.to_dot()
    assert dot.startswith("digraph") and dot.count("label=") == 4
    data = json.loads(lat.to_json())
    assert len(data["submodules"]) == 4


@given(st.sampled_from(FACTORS), st.data())
@settings(max_examples=60, deadline=None)
def test_canonical_key_iff_same_elements(f, data):
    M = module_make(ZZ, list(f))
    elems = list(M.elements)
    g1 = data.draw(st.lists(st.sampled_from(elems), max_size=3))
    g2 = data.draw(st.lists(st.sampled_from(elems), max_size=3))
    A, B = M.sub_internal(g1), M.sub_internal(g2)
    assert (A == B) == (closure(M, g1) == closure(M, g2))
    assert A.element_set == closure(M, g1)

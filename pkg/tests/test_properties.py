"""Invariant suites, exhaustive on the default corpus.

Each suite sweeps every finite corpus module (over every Z_n and over Z) and
every window of the Z line. A single violation fails the build. Statement
falsifications from the registry are findings and live elsewhere.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sasmall.modules import (
    annihilator,
    format_submodule,
    parse_module,
    parse_submodule,
    quotient_module,
)
from sasmall.predicates import (
    is_sa_small,
    is_small,
    is_T_sa_small,
    jacobson_radical_by_small_sum,
    jacobson_radical_module,
    lattice,
)
from sasmall.rings import is_small_ideal_in, parse_ring
from sasmall.verifier.context import get_context
from sasmall.verifier.corpus import DEFAULT, finite_modules, z_windows

MODULES = finite_modules(DEFAULT)
WINDOWS = z_windows(DEFAULT)


@lru_cache(maxsize=None)
def contexts():
    out = [get_context(r, m) for r, m in MODULES]
    out += [get_context("Z", "Z", window=w) for w in WINDOWS]
    return out


def finite_contexts():
    return [C for C in contexts() if not C.is_window]


def test_corpus_shape():
    assert len(MODULES) >= 150 and 8 in WINDOWS
    assert sum(C.L for C in finite_contexts()) > 5000


def test_definition_reduction_T_equals_M():
    """``N ≪_M M`` is ``N`` sa-small, on tables and through the predicate functions."""
    violations = []
    for C in contexts():
        if not np.array_equal(C.tsa_row(C.top), C.sa):
            violations.append(("table", C.spec))
        if not np.array_equal(C.tsa_row(C.top, strict=True), C.sa_strict):
            violations.append(("table-strict", C.spec))
        full = C.module.full
        for N in C.subs:
            if is_T_sa_small(N, full).value != is_sa_small(N).value:
                violations.append(("predicate", C.spec, str(N)))
    assert violations == []


def test_T_monotone():
    """``T ⊆ T'`` and ``N ≪_T M`` give ``N ≪_T' M``."""
    violations = []
    for C in contexts():
        tsa = C.tsa()
        for t, t2 in zip(*np.nonzero(C.leq)):
            bad = tsa[t] & ~tsa[t2]
            if bad.any():
                violations.append((C.spec, C.names[t], C.names[t2], C.names[int(np.argmax(bad))]))
    assert violations == []


def test_N_downward_closed():
    """``N ⊆ K`` and ``K ≪_T M`` give ``N ≪_T M``."""
    violations = []
    for C in contexts():
        tsa = C.tsa()
        for n, k in zip(*np.nonzero(C.leq)):
            bad = tsa[:, k] & ~tsa[:, n]
            if bad.any():
                violations.append((C.spec, C.names[n], C.names[k]))
    assert violations == []


def test_small_ideals_are_sa_small():
    """``S(R) ⊆ S^sa(R)`` for every corpus ring."""
    rings = [get_context(f"Z/{n}", f"Z/{n}") for n in DEFAULT.ring_moduli]
    rings += [get_context("Z", "Z", window=w) for w in WINDOWS]
    violations = []
    for C in rings:
        assert C.is_ring_module
        if (C.small & ~C.sa).any():
            violations.append(C.spec)
        for N in C.subs:
            if is_small(N) and not is_sa_small(N):
                violations.append((C.spec, str(N)))
    assert violations == []


def test_module_never_sa_small_in_itself():
    violations = [C.spec for C in contexts()
                  if C.sa[C.top] or is_sa_small(C.module.full).holds]
    assert violations == []


def test_zero_sa_small_iff_annihilator_small():
    violations = []
    for C in contexts():
        M = C.module
        expected = is_small_ideal_in(annihilator(M.full), M.ring.unit_ideal)
        if bool(C.sa[C.zero]) != expected or is_sa_small(M.zero).holds != expected:
            violations.append(C.spec)
    assert violations == []


def test_jacobson_dual_computation():
    """Meet of maximal submodules = sum of small submodules = table value."""
    violations = []
    for C in finite_contexts():
        M = C.module
        J1, J2 = jacobson_radical_module(M), jacobson_radical_by_small_sum(M)
        if not (J1 == J2 == C.subs[C.jacobson]):
            violations.append(C.spec)
    assert violations == []


def test_quotient_transport_bijection():
    """``K ↦ K/N`` is a lattice isomorphism from ``[N, M]`` onto ``L(M/N)``."""
    violations = []
    for C in finite_contexts():
        M = C.module
        for n in range(C.L):
            N = C.subs[n]
            q = quotient_module(M, N)
            Q, mp = C.quotient(n)
            up = np.array(sorted(mp))
            img = np.array([mp[k] for k in up])
            if sorted(img.tolist()) != list(range(Q.L)):
                violations.append(("not bijective", C.spec, C.names[n]))
                continue
            inv = {int(i): int(k) for k, i in zip(up, img)}
            if any(q.pull(Q.subs[i]) != C.subs[k] for i, k in inv.items()):
                violations.append(("pull", C.spec, C.names[n]))
            to_q = np.full(C.L, -1)
            to_q[up] = img
            J = C.join[np.ix_(up, up)]
            Mt = C.meet[np.ix_(up, up)]
            if not (np.array_equal(to_q[J], Q.join[np.ix_(img, img)])
                    and np.array_equal(to_q[Mt], Q.meet[np.ix_(img, img)])):
                violations.append(("lattice ops", C.spec, C.names[n]))
    assert violations == []


def test_canonicalization_soundness():
    """Equal canonical forms ⟺ equal element sets, for every corpus submodule."""
    violations = []
    for C in finite_contexts():
        sets = [s.element_set for s in C.subs]
        if len(set(sets)) != C.L or len({s.key for s in C.subs}) != C.L:
            violations.append(("collision", C.spec))
        M = C.module
        for s, es in zip(C.subs, sets):
            regen = M.sub_internal(list(reversed(s.generators)) + [M.reduce([0] * M.rank)])
            if regen != s or len(es) != s.order:
                violations.append(("regen", C.spec, str(s)))
    assert violations == []


# -- randomized complements ---------------------------------------------------------

SMALL = [(r, m) for r, m in MODULES if parse_module(m, parse_ring(r)).order <= 32]


@given(st.sampled_from(SMALL), st.data())
@settings(max_examples=80, deadline=None)
def test_text_round_trip_random_submodules(rm, data):
    r, m = rm
    M = parse_module(m, parse_ring(r))
    gens = data.draw(st.lists(st.sampled_from(list(M.elements)), max_size=3))
    N = M.sub_internal(gens)
    assert parse_submodule(format_submodule(N), M) == N
    assert N in lattice(M).all


@pytest.mark.parametrize("w", WINDOWS)
def test_window_tables_match_predicates(w):
    C = get_context("Z", "Z", window=w)
    for t, T in enumerate(C.subs):
        row = C.tsa_row(t)
        for i, N in enumerate(C.subs):
            assert row[i] == is_T_sa_small(N, T).holds

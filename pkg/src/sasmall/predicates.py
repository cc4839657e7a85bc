"""Smallness-family predicates and module-class flags.

Finite modules are decided by quantifying over the whole submodule lattice,
the Z line by closed forms or the finite divisor case split, and infinite
presented modules only through explicit witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Callable, Iterable

import numpy as np

from .errors import ParentMismatch, Undecidable
from .modules import (
    DEFAULT_MAX_ORDER,
    FGModule,
    Submodule,
    annihilator,
    ann_in_module,
    colon,
    enumerate_submodules,
    format_module,
    format_submodule,
    ideal_times_module,
    module_make,
    z_line,
    z_line_divisor_candidates,
)
from .rings import Ideal, RingDesc, ideal_lattice, is_small_ideal_in, prime_factors

HOLDS = "holds"
FAILS = "fails"
UNDECIDED = "undecidable_here"


@dataclass(frozen=True)
class Verdict:
    value: str
    witness: Submodule | None = None
    reason: str = ""

    def __bool__(self):
        return self.value == HOLDS

    @property
    def holds(self) -> bool:
        return self.value == HOLDS

    @property
    def fails(self) -> bool:
        return self.value == FAILS

    def to_json(self, predicate: str, inputs: dict) -> dict:
        return {
            "predicate": predicate,
            "inputs": inputs,
            "value": self.value,
            "witness": None if self.witness is None else format_submodule(self.witness),
            "reason": self.reason,
        }


def _holds(reason: str) -> Verdict:
    return Verdict(HOLDS, None, reason)


def _fails(witness: Submodule, reason: str) -> Verdict:
    return Verdict(FAILS, witness, reason)


@lru_cache(maxsize=256)
def lattice(M: FGModule, max_order: int = DEFAULT_MAX_ORDER):
    return enumerate_submodules(M, max_order)


def _first(cands: Iterable[Submodule], bad: Callable[[Submodule], bool]) -> Submodule | None:
    for X in cands:
        if bad(X):
            return X
    return None


def _require(M: FGModule, what: str):
    if M.backend == "z_presented":
        raise Undecidable(f"{what} is not decidable on {format_module(M)}; supply a witness")


def _ann_small(lat, A: Ideal) -> np.ndarray:
    """``Ann(X) ≪ A`` for every ``X`` in the lattice (memoized on the lattice)."""
    memo = lat.__dict__.setdefault("_ann_small", {})
    v = memo.get(A.gen)
    if v is None:
        gens = lat.__dict__.get("_ann_gens")
        if gens is None:
            gens = lat.__dict__["_ann_gens"] = [annihilator(X) for X in lat.all]
        v = memo[A.gen] = np.array([is_small_ideal_in(a, A) for a in gens], dtype=bool)
    return v


def _first_true(lat, mask: np.ndarray) -> Submodule | None:
    hits = np.flatnonzero(mask)
    return lat[int(hits[0])] if len(hits) else None


def _sub_candidates(M: FGModule, within: Submodule | None = None) -> list[Submodule]:
    subs = lattice(M).all
    if within is None:
        return subs
    return [X for X in subs if X <= within]


# -- ideals as submodules of R_R ---------------------------------------------

def ring_module(ring: RingDesc) -> FGModule:
    """``R`` as a module over itself."""
    return module_make(ring, [ring.n]) if ring.is_finite else z_line()


def ideal_sub(I: Ideal) -> Submodule:
    R = ring_module(I.ring)
    return R.sub_internal([[I.gen]])


def sub_ideal(N: Submodule) -> Ideal:
    """The ideal of R that a submodule of ``ring_module(R)`` is."""
    return colon(N, N.parent.full)


def _smallest_prime_not_dividing(k: int) -> int:
    p = 2
    while k % p == 0 or prime_factors(p) != (p,):
        p += 1
    return p


# -- small / essential ---------------------------------------------------------

def is_small(N: Submodule, M: FGModule | None = None) -> Verdict:
    M = M or N.parent
    if N.parent != M:
        raise ParentMismatch("N is not a submodule of M")
    _require(M, "smallness")
    if M.backend == "z_line":
        k = N.k
        if k == 0:
            return _holds("zero submodule is small")
        p = _smallest_prime_not_dividing(k) if k > 1 else 0
        return _fails(M.line(p), f"{k}Z + {p}Z = Z with {p}Z != Z")
    lat = lattice(M)
    n, top = lat.index_of(N), len(lat) - 1
    cover = lat.join_row(n) == top
    cover[top] = False
    X = _first_true(lat, cover)
    if X is None:
        return _holds("zero submodule is small" if N.is_zero else "every L with N+L=M is M")
    return _fails(X, "N + L = M with L != M")


def is_essential(N: Submodule, M: FGModule | None = None) -> Verdict:
    M = M or N.parent
    _require(M, "essentiality")
    if M.backend == "z_line":
        if N.k:
            return _holds("every nonzero kZ meets every nonzero sZ")
        return _fails(M.full, "0 meets Z trivially")
    lat = lattice(M)
    n = lat.index_of(N)
    X = _first_true(lat, np.array([k > 0 and lat.is_trivial_meet(n, k) for k in range(len(lat))]))
    if X is None:
        return _holds("N meets every nonzero submodule")
    return _fails(X, "N ∩ K = 0 for nonzero K")


# -- sa-small ------------------------------------------------------------------

def is_sa_small(N: Submodule, M: FGModule | None = None, *, within: Submodule | None = None) -> Verdict:
    """``N + L = A`` forces ``Ann(L) ≪ R`` for every ``L ≤ A`` (``A = M`` or ``within``)."""
    M = M or N.parent
    if N.parent != M:
        raise ParentMismatch("N is not a submodule of M")
    R = M.ring.unit_ideal
    if M.backend == "z_presented":
        if N.is_zero and within is None:
            # only L = M covers 0
            a = annihilator(M.full)
            if is_small_ideal_in(a, R):
                return _holds(f"0 + L = M forces L = M and Ann(M) = {a} is small in R")
            return _fails(M.full, f"Ann(M) = {a} is not small in R")
        raise Undecidable("sa-smallness is witness-only on presented modules")
    if M.backend == "z_line":
        if within is not None:
            raise Undecidable("sub-ambient quantification is not implemented on the Z line")
        if N.k == 1:
            return _fails(M.zero, "Z + 0 = Z and Ann(0) = Z is not small in Z")
        return _holds("every cover sZ has s != 0, so Ann(sZ) = 0 is small")
    A = within or M.full
    if not N <= A:
        raise ParentMismatch("N is not inside the ambient submodule")
    lat = lattice(M)
    n, a = lat.index_of(N), lat.index_of(A)
    cover = (lat.join_row(n) == a) & lat.leq[:, a]
    X = _first_true(lat, cover & ~_ann_small(lat, R))
    if X is None:
        return _holds("every cover L has Ann(L) small in R")
    return _fails(X, f"N + L = M but Ann(L) = {annihilator(X)} is not small in R")


def _tsa_bad(N: Submodule, T: Submodule, A: Submodule, cT: Ideal):
    def bad(X: Submodule) -> bool:
        return T <= N + X and not is_small_ideal_in(annihilator(X), cT)
    return bad


def is_T_sa_small(N: Submodule, T: Submodule, M: FGModule | None = None, *,
                  within: Submodule | None = None, strict: bool = False) -> Verdict:
    """Is ``N`` T-sa-small in ``M`` (or in the submodule ``within``)?

    ``X`` ranges over every submodule, ``X = 0`` included; ``strict=True``
    restricts to nonzero ``X``.
    """
    M = M or N.parent
    if N.parent != M or T.parent != M:
        raise ParentMismatch("N and T must be submodules of M")
    _require(M, "T-sa-smallness")
    A = within or M.full
    if within is not None and not (N <= A and T <= A):
        raise ParentMismatch("N and T must lie inside the ambient submodule")
    cT = colon(T, A)
    if M.backend == "z_line":
        if within is not None:
            raise Undecidable("sub-ambient quantification is not implemented on the Z line")
        if T.is_zero:
            if strict:
                return _holds("every nonzero sZ has Ann 0, small in (0:Z) = 0")
            return _fails(M.zero, "T = 0 ⊆ N + 0 and Ann(0) = Z is not small in (0:M)")
        cands = z_line_divisor_candidates(N, T)
        if strict:
            cands = [X for X in cands if not X.is_zero]
        X = _first(cands, _tsa_bad(N, T, A, cT))
    else:
        lat = lattice(M)
        n, t = lat.index_of(N), lat.index_of(T)
        cover = lat.leq[t][lat.join_row(n)] & lat.leq[:, lat.index_of(A)]
        if strict:
            cover[0] = False
        X = _first_true(lat, cover & ~_ann_small(lat, cT))
    if X is None:
        return _holds(f"every X with T ⊆ N + X has Ann(X) small in (T:M) = {cT}")
    return _fails(X, f"T ⊆ N + X but Ann(X) = {annihilator(X)} is not small in (T:M) = {cT}")


def refute_or_confirm_T_sa_small_with_witness(N: Submodule, T: Submodule, X: Submodule,
                                              M: FGModule | None = None) -> Verdict:
    """Check the single instance ``X`` of the T-sa-small implication."""
    M = M or N.parent
    for S in (N, T, X):
        if S.parent != M:
            raise ParentMismatch("N, T, X must share the parent module")
    if not T <= N + X:
        return Verdict(UNDECIDED, None, "T ⊄ N + X: witness does not apply")
    a, cT = annihilator(X), colon(T, M.full)
    if is_small_ideal_in(a, cT):
        return Verdict(UNDECIDED, None, f"Ann(X) = {a} is small in (T:M) = {cT}: not refuted")
    return _fails(X, f"T ⊆ N + X whereas Ann(X) = {a} is not small in (T:M) = {cT}")


# -- sets, radicals, hollowness ---------------------------------------------------

@dataclass(frozen=True)
class LineFamily:
    """Symbolic family of submodules ``kZ`` of the Z line."""

    description: str
    test: Callable[[int], bool] = field(compare=False)

    def __contains__(self, N: Submodule) -> bool:
        return self.test(N.k)

    def __str__(self):
        return self.description


def small_set(M: FGModule):
    _require(M, "S(M)")
    if M.backend == "z_line":
        return LineFamily("{0}", lambda k: k == 0)
    return [N for N in lattice(M).all if is_small(N, M)]


def sa_small_set(M: FGModule):
    _require(M, "S^sa(M)")
    if M.backend == "z_line":
        return LineFamily("L*(Z): every proper kZ", lambda k: k != 1)
    return [N for N in lattice(M).all if is_sa_small(N, M)]


def T_sa_small_set(M: FGModule, T: Submodule, strict: bool = False):
    _require(M, "S_T^sa(M)")
    if M.backend == "z_line":
        t = T.k
        if strict:
            return LineFamily("every kZ", lambda k: True)
        return LineFamily(f"kZ with k not dividing {t}", lambda k: t != 0 and (k == 0 or t % k != 0))
    return [N for N in lattice(M).all if is_T_sa_small(N, T, M, strict=strict)]


def maximal_submodules(M: FGModule) -> list[Submodule]:
    lat = lattice(M)
    top = len(lat) - 1
    return [lat[i] for i, j in lat.hasse if j == top]


def jacobson_radical_module(M: FGModule) -> Submodule:
    """Intersection of the maximal submodules; ``M`` when there are none."""
    _require(M, "J(M)")
    if M.backend == "z_line":
        return M.zero
    maxes = maximal_submodules(M)
    return reduce(lambda a, b: a & b, maxes, M.full)


def jacobson_radical_by_small_sum(M: FGModule) -> Submodule:
    return reduce(lambda a, b: a + b, small_set(M), M.zero)


def j_sa_T(M: FGModule, T: Submodule, strict: bool = False) -> Submodule:
    """Sum of all T-sa-small submodules."""
    if M.backend == "z_line":
        # (t+1)Z and (t+2)Z are T-sa-small whenever t != 0, and they sum to Z
        return M.full if strict or not T.is_zero else M.zero
    return reduce(lambda a, b: a + b, T_sa_small_set(M, T, strict), M.zero)


def is_sa_hollow(M: FGModule) -> Verdict:
    """Nonzero and every proper submodule is sa-small."""
    _require(M, "sa-hollowness")
    if M.backend == "z_line":
        return _holds("every proper kZ is sa-small")
    if M.is_zero:
        return Verdict(FAILS, M.full, "the zero module is not sa-hollow")
    full = M.full
    X = _first(lattice(M).all, lambda N: N != full and not is_sa_small(N, M))
    if X is None:
        return _holds("every proper submodule is sa-small")
    return _fails(X, "proper submodule that is not sa-small")


def is_T_sa_hollow(M: FGModule, T: Submodule, strict: bool = False) -> Verdict:
    """Every submodule (``M`` included) is T-sa-small."""
    _require(M, "T-sa-hollowness")
    if M.backend == "z_line":
        if strict:
            return _holds("every nonzero X = sZ has Ann(X) = 0, small in (T:Z)")
        return _fails(M.full, "T ⊆ M = M + 0 and Ann(0) = Z is not small in (T:M)")
    X = _first(lattice(M).all, lambda N: not is_T_sa_small(N, T, M, strict=strict))
    if X is None:
        return _holds("every submodule is T-sa-small")
    return _fails(X, "submodule that is not T-sa-small")


# -- module classes ----------------------------------------------------------------

@dataclass(frozen=True)
class ModuleClass:
    is_prime: bool
    is_faithful: bool
    is_multiplication: bool
    is_comultiplication: bool
    satisfies_dac: bool
    is_strong_comultiplication: bool
    is_cancellation: bool
    is_semisimple_module: bool


def module_class(M: FGModule) -> ModuleClass:
    _require(M, "module classes")
    if M.backend == "z_line":
        return ModuleClass(True, True, True, False, False, False, True, False)
    ring = M.ring
    subs = lattice(M).all
    full = M.full
    annM = annihilator(full)
    prime = all(annihilator(K) == annM for K in subs if not K.is_zero)
    faithful = annM.is_zero
    mult = all(N == ideal_times_module(colon(N, full), M) for N in subs)
    comult = all(N == ann_in_module(M, annihilator(N)) for N in subs)
    if ring.is_finite:
        ideals = ideal_lattice(ring)
        dac = all(I == annihilator(ann_in_module(M, I)) for I in ideals)
        prods = [ideal_times_module(I, M) for I in ideals]
        canc = len(set(prods)) == len(prods)
    else:
        # I = 0 and I = Ann(M) != 0 already separate both conditions
        dac = False
        canc = False
    semisimple = all(any((N + K) == full and (N & K).is_zero for K in subs) for N in subs)
    return ModuleClass(prime, faithful, mult, comult, dac, comult and dac, canc, semisimple)


# -- irreducibility, prime submodules, radical -------------------------------------------

def is_completely_irreducible(N: Submodule, M: FGModule | None = None) -> Verdict:
    """``N`` differs from the intersection of all submodules strictly above it.

    For a finite lattice this is the definition: any family with
    intersection ``N`` that avoids ``N`` consists of strict supermodules.
    """
    M = M or N.parent
    _require(M, "complete irreducibility")
    if M.backend == "z_line":
        raise Undecidable("complete irreducibility is only decided on finite modules")
    above = [K for K in lattice(M).all if N < K]
    meet = reduce(lambda a, b: a & b, above, M.full)
    if meet == N:
        return Verdict(FAILS, None, "N is the intersection of the submodules above it")
    return _holds(f"every family meeting in N contains N; unique cover {meet}")


def is_prime_submodule(P: Submodule) -> bool:
    """``rm ∈ P`` implies ``m ∈ P`` or ``rM ⊆ P`` (scan over residues)."""
    M = P.parent
    if M.backend != "finite":
        raise Undecidable("prime submodules are only decided on finite modules")
    if P.is_full:
        return False
    e = M.exponent
    elems = M.elements
    full = M.full
    for r in range(e):
        if full.scale(r) <= P:
            continue
        for m in elems:
            rm = tuple(r * v for v in m)
            if P.contains_element(rm) and not P.contains_element(m):
                return False
    return True


def prime_submodules(M: FGModule) -> list[Submodule]:
    return [P for P in lattice(M).all if is_prime_submodule(P)]


def rad_submodule(N: Submodule) -> Submodule:
    """Intersection of the prime submodules containing ``N``; ``M`` if none."""
    M = N.parent
    primes = [P for P in prime_submodules(M) if N <= P]
    return reduce(lambda a, b: a & b, primes, M.full)


# -- ring-level wrappers -------------------------------------------------------

def is_sa_small_ideal(I: Ideal) -> Verdict:
    return is_sa_small(ideal_sub(I))


def is_A_sa_small_ideal(I: Ideal, A: Ideal, strict: bool = False) -> Verdict:
    return is_T_sa_small(ideal_sub(I), ideal_sub(A), strict=strict)

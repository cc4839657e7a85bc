"""Module homomorphisms and the constructions built from them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd

from . import intmat
from .errors import NotEpi, NotMCS, NotWellDefined, ParentMismatch, RingMismatch
from .modules import (
    FGModule,
    Submodule,
    Quotient,
    module_make,
    quotient_module,
    torsion_killed_by,
)
from .predicates import Verdict, is_sa_small, is_T_sa_small
from .rings import RingDesc


class Hom:
    """``f(x) = x @ matrix`` reduced in the target; rows are images of basis vectors."""

    def __init__(self, source: FGModule, target: FGModule, matrix):
        if source.ring != target.ring:
            raise RingMismatch(f"{source.ring} vs {target.ring}")
        A = tuple(tuple(target.reduce(r)) for r in matrix)
        if len(A) != source.rank or any(len(r) != target.rank for r in A):
            raise NotWellDefined("matrix shape does not match the modules")
        self.source, self.target, self.matrix = source, target, A
        for rel in source.relations:
            if any(target.reduce(intmat.vec_mat(rel, A)) if A else ()):
                raise NotWellDefined(f"relation {rel} is not sent to 0")

    def __call__(self, vec) -> tuple[int, ...]:
        if not self.matrix:
            return self.target.reduce([0] * self.target.rank)
        return self.target.reduce(intmat.vec_mat(vec, self.matrix))

    def __eq__(self, other):
        return (isinstance(other, Hom) and (self.source, self.target, self.matrix)
                == (other.source, other.target, other.matrix))

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __repr__(self):
        return f"Hom({self.source} -> {self.target}, {[list(r) for r in self.matrix]})"

    @cached_property
    def kernel(self) -> Submodule:
        return preimage(self, self.target.zero)

    @cached_property
    def image(self) -> Submodule:
        return self.target.sub_internal([self(e) for e in intmat.identity(self.source.rank)])

    @cached_property
    def is_epi(self) -> bool:
        return self.image == self.target.full

    @cached_property
    def is_mono(self) -> bool:
        return self.kernel == self.source.zero

    def to_json(self) -> dict:
        return {"source": str(self.source), "target": str(self.target),
                "ring": str(self.source.ring), "matrix": [list(r) for r in self.matrix]}


def hom_make(source: FGModule, target: FGModule, matrix) -> Hom:
    return Hom(source, target, matrix)


def identity_hom(M: FGModule) -> Hom:
    return Hom(M, M, intmat.identity(M.rank))


def kernel(f: Hom) -> Submodule:
    return f.kernel


def image(f: Hom) -> Submodule:
    return f.image


def push(f: Hom, N: Submodule) -> Submodule:
    """``f(N)``."""
    if N.parent != f.source:
        raise ParentMismatch("submodule is not in the source")
    return f.target.sub_internal([f(g) for g in N.generators])


def preimage(f: Hom, Y: Submodule) -> Submodule:
    """``f^{-1}(Y) = {x : x @ A ∈ L_Y}`` via an integer left kernel."""
    if Y.parent != f.target:
        raise ParentMismatch("submodule is not in the target")
    M = f.source
    if not f.matrix or not f.target.rank:
        return M.full
    rows = [list(r) for r in f.matrix] + [list(r) for r in Y.basis]
    ker = intmat.left_kernel(rows, f.target.rank)
    return M.sub_internal([c[:M.rank] for c in ker] + [list(e) for e in intmat.identity(M.rank)
                                                      if not f.target.rank])


def compose(g: Hom, f: Hom) -> Hom:
    """``g ∘ f``."""
    if f.target != g.source:
        raise ParentMismatch("cannot compose: f.target != g.source")
    mat = intmat.mat_mul([list(r) for r in f.matrix], [list(r) for r in g.matrix]) \
        if f.matrix and g.matrix else [[0] * g.target.rank for _ in range(f.source.rank)]
    return Hom(f.source, g.target, mat)


def quotient_map(M: FGModule, K: Submodule) -> Hom:
    q = quotient_module(M, K)
    return Hom(M, q.target, q.proj_matrix)


def is_sa_small_epi(f: Hom) -> Verdict:
    if not f.is_epi:
        raise NotEpi(f"{f} is not onto")
    return is_sa_small(f.kernel)


def is_T_sa_small_epi(f: Hom, T: Submodule, strict: bool = False) -> Verdict:
    if not f.is_epi:
        raise NotEpi(f"{f} is not onto")
    return is_T_sa_small(f.kernel, T, strict=strict)


# -- direct sums and free tensoring ------------------------------------------------

@dataclass(frozen=True)
class DirectSum:
    module: FGModule
    inj1: Hom
    inj2: Hom
    pr1: Hom
    pr2: Hom

    def sub(self, N1: Submodule, N2: Submodule) -> Submodule:
        """``N1 ⊕ N2``."""
        return push(self.inj1, N1) + push(self.inj2, N2)


def direct_sum(M1: FGModule, M2: FGModule) -> DirectSum:
    if M1.ring != M2.ring:
        raise RingMismatch(f"{M1.ring} vs {M2.ring}")
    k1, k2 = M1.rank, M2.rank
    rels = [list(r) + [0] * k2 for r in M1.relations] + [[0] * k1 + list(r) for r in M2.relations]
    S = module_make(M1.ring, {"relations": rels, "rank": k1 + k2,
                              "scales": M1.scales + M2.scales})
    eye = intmat.identity(k1 + k2)
    inj1 = Hom(M1, S, eye[:k1])
    inj2 = Hom(M2, S, eye[k1:])
    pr1 = Hom(S, M1, [row[:k1] for row in eye])
    pr2 = Hom(S, M2, [row[k1:] for row in eye])
    return DirectSum(S, inj1, inj2, pr1, pr2)


def sub_direct_sum(ds: DirectSum, N1: Submodule, N2: Submodule) -> Submodule:
    return ds.sub(N1, N2)


@dataclass(frozen=True)
class FreeTensor:
    """``R^k ⊗ M ≅ M^k`` with ``N ↦ N^k``."""

    base: FGModule
    k: int
    module: FGModule
    injections: tuple[Hom, ...]

    def transport(self, N: Submodule) -> Submodule:
        if N.parent != self.base:
            raise ParentMismatch("submodule is not in the base module")
        return reduce(lambda a, b: a + b, (push(i, N) for i in self.injections))


def tensor_with_free(M: FGModule, k: int) -> FreeTensor:
    if k < 1:
        raise ValueError("rank of the free module must be >= 1")
    r = M.rank
    rels = [[0] * (i * r) + list(row) + [0] * ((k - i - 1) * r)
            for i in range(k) for row in M.relations]
    P = module_make(M.ring, {"relations": rels, "rank": r * k, "scales": M.scales * k})
    eye = intmat.identity(r * k)
    inj = tuple(Hom(M, P, eye[i * r:(i + 1) * r]) for i in range(k))
    return FreeTensor(M, k, P, inj)


# -- localization ---------------------------------------------------------------------

def mcs_closure(ring: RingDesc, gens) -> frozenset[int]:
    """Multiplicative closure of ``gens ∪ {1}`` in ``Z_n``."""
    n = ring.n
    S = {1 % n}
    frontier = [g % n for g in gens]
    while frontier:
        s = frontier.pop()
        if s in S:
            continue
        S.add(s)
        frontier.extend(s * t % n for t in list(S))
    return frozenset(S)


@dataclass(frozen=True)
class Localization:
    base: FGModule
    S: frozenset
    ring: RingDesc
    killed: Submodule
    module: FGModule
    proj: Hom

    def transport(self, N: Submodule) -> Submodule:
        """``S^{-1}N = (N + K_S) / K_S``."""
        P = push(self.proj, N)
        return self.module.sub_internal(P.generators)


def change_ring(M: FGModule, ring: RingDesc) -> FGModule:
    return FGModule(ring, M.rank, M.relations, M.scales)


def localize(M: FGModule, gens) -> Localization:
    """``S^{-1}M`` realized as ``M / K_S`` over ``S^{-1}R ≅ Z_m``."""
    ring = M.ring
    if not ring.is_finite or not M.is_finite:
        raise NotMCS("localization is implemented for finite modules over Z_n")
    n = ring.n
    S = mcs_closure(ring, gens)
    if 0 in S:
        raise NotMCS("0 lies in the multiplicative closure")
    s_star = 1
    for s in S:
        s_star = s_star * s % n
    killed = torsion_killed_by(M, s_star)
    m = n // gcd(n, s_star)
    q = quotient_module(M, killed)
    L = change_ring(q.target, RingDesc(m))
    proj = Hom(M, change_ring(q.target, ring), q.proj_matrix)
    loc = Localization(M, S, RingDesc(m), killed, L, proj)
    _validate_localization(loc)
    return loc


def _validate_localization(loc: Localization):
    L = loc.module
    elems = L.elements
    for s in loc.S:
        image = {L.reduce([s * v for v in e]) for e in elems}
        if len(image) != len(elems):
            raise AssertionError(f"{s} does not act bijectively on S^-1 M")


# -- enumeration helpers used by the verifier -------------------------------------------

def homs(M: FGModule, M2: FGModule, limit: int | None = None):
    """Every homomorphism ``M -> M2`` between finite modules, canonical order."""
    if not (M.is_finite and M2.is_finite):
        raise ParentMismatch("hom enumeration needs finite modules")
    elems = M2.elements
    count = 0
    for imgs in itertools.product(elems, repeat=M.rank):
        try:
            f = Hom(M, M2, imgs)
        except NotWellDefined:
            continue
        yield f
        count += 1
        if limit is not None and count >= limit:
            return


@dataclass(frozen=True)
class SubmoduleAsModule:
    """A submodule ``K ≤ M`` re-presented as a module in Smith form, with its embedding."""

    sub: Submodule
    module: FGModule
    embedding: Hom
    coords: Quotient    # raw coordinates over the basis of K -> Smith coordinates

    def transport(self, N: Submodule) -> Submodule:
        """``N ≤ K`` as a submodule of the re-presented module."""
        basis = self.sub.basis
        gens = []
        for g in N.generators:
            c = intmat.coords_in(g, basis)
            if c is None:
                raise ParentMismatch(f"{N} is not inside {self.sub}")
            gens.append(self.coords.project(c))
        return self.module.sub_internal(gens)


def submodule_as_module(K: Submodule) -> SubmoduleAsModule:
    M = K.parent
    basis = K.basis
    rels = [intmat.coords_in(r, basis) for r in M.relations]
    raw = module_make(M.ring, {"relations": rels, "rank": len(basis)})
    q = quotient_module(raw, raw.zero)
    P = q.target
    emb_rows = intmat.mat_mul([list(r) for r in q.lift_matrix], [list(b) for b in basis]) \
        if q.lift_matrix and basis else [[0] * M.rank for _ in range(P.rank)]
    emb = Hom(P, M, emb_rows)
    return SubmoduleAsModule(K, P, emb, q)

"""Finitely generated modules over Z_n and Z and their submodules.

Every module is a presentation ``Z^k / Rel`` with ``Rel`` held in Hermite
form. Three backends fall out of the shape of ``Rel``:

* ``finite``  -- ``Rel`` has full rank, the module is a finite abelian group;
* ``z_line``  -- ``k == 1`` and ``Rel == 0``: the module Z over Z;
* ``z_presented`` -- anything else (infinite, e.g. ``2Z x Z/8``).

A submodule is the lattice ``span(gens) + Rel`` in Hermite form, so equal
submodules have equal keys. ``scales`` only affects how coordinates are read
and printed (``2Z x Z/8`` stores ``(a, b)`` as ``(a/2, b)``).
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd, prod

import numpy as np

from . import intmat
from .errors import (
    BadFactors,
    BoundExceeded,
    ElementOutOfRange,
    InfiniteLattice,
    ParentMismatch,
    ParseError,
    RingMismatch,
    ZeroT,
)
from .intmat import hnf, lcm, order_mod, reduce_mod
from .rings import ZZ, Ideal, RingDesc, divisors

DEFAULT_MAX_ORDER = 4096


@dataclass(frozen=True)
class FGModule:
    ring: RingDesc
    rank: int
    relations: tuple[tuple[int, ...], ...]
    scales: tuple[int, ...]

    def __post_init__(self):
        if len(self.scales) != self.rank or any(s < 1 for s in self.scales):
            raise BadFactors("scales must be positive, one per coordinate")
        if hnf(self.relations, self.rank) != self.relations:
            raise BadFactors("relations must be given in Hermite form")
        if self.ring.is_finite:
            n = self.ring.n
            for i in range(self.rank):
                e = [0] * self.rank
                e[i] = n
                if not intmat.in_lattice(e, self.relations):
                    raise BadFactors(f"module is not killed by {n}; not a {self.ring}-module")

    # -- shape ---------------------------------------------------------
    @property
    def backend(self) -> str:
        if len(self.relations) == self.rank:
            return "finite"
        if self.rank == 1 and not self.relations and self.scales == (1,) and not self.ring.is_finite:
            return "z_line"
        return "z_presented"

    @property
    def is_finite(self) -> bool:
        return self.backend == "finite"

    @property
    def is_zero(self) -> bool:
        return self.is_finite and self.order == 1

    @cached_property
    def order(self) -> int:
        if not self.is_finite:
            return 0
        return prod(row[i] for i, row in enumerate(self.relations))

    @cached_property
    def invariant_factors(self) -> tuple[int, ...]:
        """Torsion invariant factors ``d1 | d2 | ...`` (ones dropped)."""
        diag, *_ = intmat.smith_with_transform(self.relations, self.rank)
        return tuple(d for d in diag if d != 1)

    @property
    def free_rank(self) -> int:
        return self.rank - len(self.relations)

    def is_isomorphic(self, other: FGModule) -> bool:
        return (self.ring == other.ring and self.invariant_factors == other.invariant_factors
                and self.free_rank == other.free_rank)

    @cached_property
    def exponent(self) -> int:
        """Least ``e > 0`` with ``eM = 0``; 0 for infinite modules."""
        return reduce(lcm, (order_mod(e, self.relations) for e in _unit_rows(self.rank)), 1)

    # -- elements ------------------------------------------------------
    def reduce(self, vec) -> tuple[int, ...]:
        return reduce_mod(vec, self.relations)

    def element(self, coords) -> tuple[int, ...]:
        """Internal vector for user coordinates (divided by ``scales``)."""
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise ElementOutOfRange(f"expected {self.rank} coordinates, got {coords}")
        out = []
        for c, s in zip(coords, self.scales):
            if c % s:
                raise ElementOutOfRange(f"{c} is not in {s}Z")
            out.append(c // s)
        return self.reduce(out)

    def coords(self, vec) -> tuple[int, ...]:
        return tuple(v * s for v, s in zip(self.reduce(vec), self.scales))

    @cached_property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        """Canonical representatives, in lexicographic order (finite only)."""
        if not self.is_finite:
            raise InfiniteLattice(f"{self} is infinite")
        ranges = [range(row[i]) for i, row in enumerate(self.relations)]
        return tuple(tuple(v) for v in itertools.product(*ranges))

    @cached_property
    def element_index(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    # -- submodules ----------------------------------------------------
    def sub(self, *gens) -> Submodule:
        """Submodule generated by elements given in user coordinates."""
        return submodule_from_generators(self, [self.element(g) for g in gens])

    def sub_internal(self, gens) -> Submodule:
        return Submodule(self, hnf([*gens, *self.relations], self.rank))

    @cached_property
    def zero(self) -> Submodule:
        return Submodule(self, self.relations)

    @cached_property
    def full(self) -> Submodule:
        return self.sub_internal(_unit_rows(self.rank))

    def line(self, k: int) -> Submodule:
        """The submodule ``kZ`` of the Z line."""
        return self.sub_internal([[k]])

    def __str__(self):
        return format_module(self)


def _unit_rows(k: int) -> list[list[int]]:
    return intmat.identity(k)


class Submodule:
    __slots__ = ("parent", "basis", "__dict__")

    def __init__(self, parent: FGModule, basis):
        self.parent = parent
        self.basis = tuple(tuple(r) for r in basis)

    def __eq__(self, other):
        return (isinstance(other, Submodule) and self.parent == other.parent
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.parent, self.basis))

    def __repr__(self):
        return f"Submodule({format_submodule(self)} in {self.parent})"

    def __str__(self):
        return format_submodule(self)

    def _check(self, other: Submodule):
        if self.parent != other.parent:
            raise ParentMismatch(f"{self.parent} vs {other.parent}")

    @property
    def key(self):
        return self.basis

    @property
    def k(self) -> int:
        """Generator ``k`` of ``kZ`` on the Z line."""
        return self.basis[0][0] if self.basis else 0

    @cached_property
    def order(self) -> int:
        """Number of elements; 0 for infinite submodules."""
        M = self.parent
        if not M.is_finite:
            return 1 if self.is_zero else 0
        return M.order // prod(row[i] for i, row in enumerate(self.basis))

    @property
    def is_zero(self) -> bool:
        return self.basis == self.parent.relations

    @property
    def is_full(self) -> bool:
        return self == self.parent.full

    @cached_property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        """Nonzero reduced basis rows: a generating set modulo relations."""
        out = []
        for row in self.basis:
            r = self.parent.reduce(row)
            if any(r):
                out.append(r)
        return tuple(out)

    def contains_element(self, vec) -> bool:
        return intmat.in_lattice(vec, self.basis)

    def __contains__(self, vec) -> bool:
        return self.contains_element(vec)

    def __add__(self, other: Submodule) -> Submodule:
        return sub_sum(self, other)

    def __and__(self, other: Submodule) -> Submodule:
        return sub_intersect(self, other)

    def __le__(self, other: Submodule) -> bool:
        return sub_contains(other, self)

    def __lt__(self, other: Submodule) -> bool:
        return self <= other and self != other

    def __ge__(self, other: Submodule) -> bool:
        return sub_contains(self, other)

    def __gt__(self, other: Submodule) -> bool:
        return self >= other and self != other

    def scale(self, r: int) -> Submodule:
        """``rN``."""
        return self.parent.sub_internal([[r * v for v in g] for g in self.generators])

    @cached_property
    def element_set(self) -> frozenset:
        """All elements (finite parent only) via closure under addition."""
        M = self.parent
        seen = {M.reduce([0] * M.rank)}
        frontier = list(seen)
        gens = self.generators
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = M.reduce([a + b for a, b in zip(x, g)])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)


def module_make(ring: RingDesc, spec) -> FGModule:
    """Build a module from an invariant-factor list, ``"Z"``, or a matrix.

    ``spec`` may be a list of cyclic orders (kept as coordinates; their
    invariant factors come from Smith form), the token ``"Z"`` for the Z
    line, or ``{"relations": rows, "scales": ...}`` for a presentation.
    """
    if spec == "Z":
        if ring.is_finite:
            raise RingMismatch("the Z line is a module over Z only")
        return FGModule(ZZ, 1, (), (1,))
    if isinstance(spec, dict):
        rows = [list(r) for r in spec["relations"]]
        k = spec.get("rank") or (len(rows[0]) if rows else 0)
        scales = tuple(spec.get("scales") or (1,) * k)
        return FGModule(ring, k, hnf(rows, k), scales)
    factors = list(spec)
    for d in factors:
        if d < 1:
            raise BadFactors(f"cyclic order {d} < 1")
        if ring.is_finite and ring.n % d:
            raise BadFactors(f"{d} does not divide {ring.n}")
    factors = [d for d in factors if d != 1]
    k = len(factors)
    rows = [[d if i == j else 0 for j in range(k)] for i, d in enumerate(factors)]
    return FGModule(ring, k, hnf(rows, k), (1,) * k)


def z_line() -> FGModule:
    return module_make(ZZ, "Z")


def submodule_from_generators(M: FGModule, gens) -> Submodule:
    for g in gens:
        if len(g) != M.rank:
            raise ElementOutOfRange(f"{g} has the wrong length for {M}")
    return M.sub_internal([list(g) for g in gens])


def sub_sum(N: Submodule, K: Submodule) -> Submodule:
    N._check(K)
    return Submodule(N.parent, hnf([*N.basis, *K.basis], N.parent.rank))


def sub_intersect(N: Submodule, K: Submodule) -> Submodule:
    N._check(K)
    M = N.parent
    if not N.basis or not K.basis:
        return M.zero
    ker = intmat.left_kernel([*N.basis, *K.basis], M.rank)
    a = len(N.basis)
    vecs = [intmat.vec_mat(c[:a], N.basis) for c in ker]
    return M.sub_internal(vecs)


def sub_contains(N: Submodule, K: Submodule) -> bool:
    """``K ⊆ N``."""
    N._check(K)
    return all(intmat.in_lattice(row, N.basis) for row in K.basis)


def sub_equals(N: Submodule, K: Submodule) -> bool:
    N._check(K)
    return N.basis == K.basis


def sub_membership(N: Submodule, m) -> bool:
    return N.contains_element(m)


def _ideal_from_gen(ring: RingDesc, c: int) -> Ideal:
    return Ideal(ring, c)


def annihilator(X: Submodule) -> Ideal:
    """``Ann_R(X)``; the exponent of ``X`` as an ideal of the base ring."""
    M = X.parent
    e = reduce(lcm, (order_mod(g, M.relations) for g in X.generators), 1)
    return _ideal_from_gen(M.ring, e)


def colon(N: Submodule, K: Submodule) -> Ideal:
    """``(N : K) = {r : rK ⊆ N}``."""
    N._check(K)
    c = reduce(lcm, (order_mod(g, N.basis) for g in K.generators), 1)
    return _ideal_from_gen(N.parent.ring, c)


def ann_in_module(M: FGModule, I: Ideal) -> Submodule:
    """``Ann_M(I) = {m : Im = 0}``."""
    if I.ring != M.ring:
        raise RingMismatch(f"{I.ring} vs {M.ring}")
    if I.gen == 0:
        return M.full
    return torsion_killed_by(M, I.gen)


def torsion_killed_by(M: FGModule, d: int) -> Submodule:
    """``{m : d m = 0}`` computed through Smith coordinates."""
    diag, _, V, Vinv = intmat.smith_with_transform(M.relations, M.rank)
    gens = []
    for i in range(M.rank):
        s = diag[i] if i < len(diag) else 0
        if s == 0:
            continue  # free coordinate: d x = 0 forces x = 0 (d != 0)
        step = s // gcd(s, d)
        gens.append([step * v for v in Vinv[i]])
    return M.sub_internal(gens)


def ideal_times_module(I: Ideal, M: FGModule) -> Submodule:
    """``IM``."""
    if I.ring != M.ring:
        raise RingMismatch(f"{I.ring} vs {M.ring}")
    return M.full.scale(I.gen)


def ideal_times_sub(I: Ideal, N: Submodule) -> Submodule:
    return N.scale(I.gen)


# -- quotients -------------------------------------------------------------

@dataclass(frozen=True)
class Quotient:
    """``M / N`` with explicit coordinate maps both ways."""

    source: FGModule
    kernel: Submodule
    target: FGModule
    proj_matrix: tuple[tuple[int, ...], ...]   # rank(M) x rank(M/N)
    lift_matrix: tuple[tuple[int, ...], ...]   # rank(M/N) x rank(M)

    def project(self, vec) -> tuple[int, ...]:
        return self.target.reduce(intmat.vec_mat(vec, self.proj_matrix))

    def lift(self, vec) -> tuple[int, ...]:
        return self.source.reduce(intmat.vec_mat(vec, self.lift_matrix))

    def push(self, L: Submodule) -> Submodule:
        """``(L + N) / N``."""
        if L.parent != self.source:
            raise ParentMismatch("submodule is not in the quotient's source")
        return self.target.sub_internal([self.project(g) for g in L.generators])

    def pull(self, Lbar: Submodule) -> Submodule:
        """The submodule ``L ⊇ N`` with ``L / N == Lbar``."""
        if Lbar.parent != self.target:
            raise ParentMismatch("submodule is not in the quotient")
        gens = [self.lift(g) for g in Lbar.generators]
        return self.kernel + self.source.sub_internal(gens)


def quotient_module(M: FGModule, N: Submodule) -> Quotient:
    """Quotient in Smith coordinates; cyclic factors of order 1 are dropped."""
    if N.parent != M:
        raise ParentMismatch("submodule is not in M")
    diag, _, V, Vinv = intmat.smith_with_transform(N.basis, M.rank)
    keep, factors = [], []
    for i in range(M.rank):
        s = diag[i] if i < len(diag) else 0
        if s != 1:
            keep.append(i)
            factors.append(s)
    proj = tuple(tuple(V[r][i] for i in keep) for r in range(M.rank))
    lift = tuple(tuple(Vinv[i]) for i in keep)
    k = len(keep)
    if k == 1 and factors[0] == 0 and not M.ring.is_finite:
        target = z_line()
    else:
        rows = [[f if a == b else 0 for b in range(k)] for a, f in enumerate(factors) if f]
        target = FGModule(M.ring, k, hnf(rows, k), (1,) * k)
    return Quotient(M, N, target, proj, lift)


# -- lattices --------------------------------------------------------------

class SubmoduleLattice:
    """All submodules of a finite module, in canonical order.

    Canonical order sorts by order, then by Hermite key, so index 0 is the
    zero submodule and the last index is the module itself. ``masks`` hold
    the element sets as Python integers (bit ``i`` = element ``i``).
    """

    def __init__(self, parent: FGModule, subs: list[Submodule], masks: list[int],
                 cyclic_sum: dict, cyclic_gens: list[tuple[int, ...]]):
        self.parent = parent
        self.all = subs
        self.masks = masks
        self.index = {s.key: i for i, s in enumerate(subs)}
        self._cyclic_sum = cyclic_sum
        self._cyclic_gens = cyclic_gens

    def __len__(self):
        return len(self.all)

    def __iter__(self):
        return iter(self.all)

    def __getitem__(self, i) -> Submodule:
        return self.all[i]

    def index_of(self, N: Submodule) -> int:
        return self.index[N.key]

    @cached_property
    def orders(self) -> np.ndarray:
        return np.array([s.order for s in self.all], dtype=np.int64)

    @cached_property
    def leq(self) -> np.ndarray:
        """``leq[i, j]`` iff ``all[i] ⊆ all[j]``."""
        B = self.bits.astype(np.float32)
        return (B @ (1.0 - B).T) == 0

    @cached_property
    def bits(self) -> np.ndarray:
        """Element-membership matrix, one row per submodule."""
        n = len(self.parent.elements)
        out = np.zeros((len(self.all), n), dtype=bool)
        for i, m in enumerate(self.masks):
            out[i] = [(m >> e) & 1 for e in range(n)]
        return out

    @cached_property
    def meet(self) -> np.ndarray:
        L = len(self.all)
        by_mask = {m: i for i, m in enumerate(self.masks)}
        out = np.empty((L, L), dtype=np.int32)
        masks = self.masks
        for i in range(L):
            mi = masks[i]
            for j in range(i, L):
                out[i, j] = out[j, i] = by_mask[mi & masks[j]]
        return out

    @cached_property
    def join(self) -> np.ndarray:
        """Sum table, built by folding cyclic generators."""
        L = len(self.all)
        gens = self._cyclic_gens
        cs = self._cyclic_sum
        out = np.empty((L, L), dtype=np.int32)
        for i in range(L):
            for j in range(i, L):
                a = i
                for c in gens[j]:
                    a = cs[a, c]
                out[i, j] = out[j, i] = a
        return out

    @cached_property
    def _fold_arrays(self):
        cyc = sorted({c for (_, c) in self._cyclic_sum})
        col = {c: k for k, c in enumerate(cyc)}
        L = len(self.all)
        cs = np.empty((L, len(cyc)), dtype=np.int32)
        for (a, c), b in self._cyclic_sum.items():
            cs[a, col[c]] = b
        width = max((len(g) for g in self._cyclic_gens), default=0)
        zero_col = col.get(0, 0)
        gens = np.full((L, max(width, 1)), zero_col, dtype=np.int32)
        for j, g in enumerate(self._cyclic_gens):
            gens[j, :len(g)] = [col[c] for c in g]
        return cs, gens

    def join_row(self, i: int) -> np.ndarray:
        """Indices of ``all[i] + all[j]`` for every ``j`` (vectorized fold)."""
        cs, gens = self._fold_arrays
        a = np.full(len(self.all), i, dtype=np.int32)
        for k in range(gens.shape[1]):
            a = cs[a, gens[:, k]]
        return a

    def join_of(self, i: int, j: int) -> int:
        """Index of ``all[i] + all[j]`` without building the whole table."""
        cs = self._cyclic_sum
        for c in self._cyclic_gens[j]:
            i = cs[i, c]
        return i

    def is_trivial_meet(self, i: int, j: int) -> bool:
        """``all[i] ∩ all[j] = 0`` (bit 0 is the zero element)."""
        return self.masks[i] & self.masks[j] == 1

    @cached_property
    def hasse(self) -> list[tuple[int, int]]:
        """Covering pairs ``(i, j)`` with ``all[i]`` covered by ``all[j]``."""
        strict = self.leq & ~np.eye(len(self.all), dtype=bool)
        s = strict.astype(np.int32)
        between = (s @ s) > 0
        cover = strict & ~between
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(cover))]

    def to_dot(self) -> str:
        lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box];"]
        for i, s in enumerate(self.all):
            lines.append(f'  n{i} [label="{format_submodule(s)}"];')
        for i, j in self.hasse:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "schema": 1,
            "module": format_module(self.parent),
            "ring": str(self.parent.ring),
            "submodules": [{"id": i, "sub": format_submodule(s), "order": s.order}
                           for i, s in enumerate(self.all)],
            "covers": [list(e) for e in self.hasse],
        }, sort_keys=True)


def _addition_table(M: FGModule) -> list[list[int]]:
    """``add[i][j]`` = index of ``elements[i] + elements[j]``."""
    rels = M.relations
    if all(sum(1 for v in r if v) == 1 for r in rels):
        d = np.array([r[i] for i, r in enumerate(rels)], dtype=np.int64)
        w = np.ones(len(d), dtype=np.int64)
        for i in range(len(d) - 2, -1, -1):
            w[i] = w[i + 1] * d[i + 1]
        E = np.array(M.elements, dtype=np.int64).reshape(len(M.elements), len(d))
        return (((E[:, None, :] + E[None, :, :]) % d) @ w).tolist()
    eidx = M.element_index
    els = M.elements
    return [[eidx[M.reduce([x + y for x, y in zip(a, b)])] for b in els] for a in els]


def enumerate_submodules(M: FGModule, max_order: int = DEFAULT_MAX_ORDER) -> SubmoduleLattice:
    """Every submodule of a finite module by sum-closure over cyclic seeds.

    Sums are formed on element-index sets (coset by coset), so Hermite forms
    are computed once per distinct submodule.
    """
    if not M.is_finite:
        raise InfiniteLattice(f"{M} has infinitely many submodules")
    if M.order > max_order:
        raise BoundExceeded(f"|M| = {M.order} exceeds bound {max_order}")
    elements = M.elements
    add = _addition_table(M)

    def plus_cyclic(H: frozenset, g: int) -> frozenset:
        out = set(H)
        r = g
        while r not in H:
            out.update(add[h][r] for h in H)
            r = add[r][g]
        return frozenset(out)

    found: dict = {}
    sets: list[frozenset] = []
    gens: list[tuple] = []

    def intern(es: frozenset, gs: tuple) -> int:
        i = found.get(es)
        if i is None:
            i = found[es] = len(sets)
            sets.append(es)
            gens.append(gs)
        return i

    zero = intern(frozenset([0]), ())
    cyc_of = {}
    elem_cyc = [zero]
    for e in range(1, len(elements)):
        c = intern(plus_cyclic(sets[zero], e), (e,))
        cyc_of.setdefault(c, e)
        elem_cyc.append(c)
    cyc = sorted(cyc_of)
    plus: dict = {}
    frontier = [zero] + cyc
    done = set()
    while frontier:
        nxt = []
        for a in frontier:
            if a in done:
                continue
            done.add(a)
            H = sets[a]
            for c in [zero] + cyc:
                g = cyc_of.get(c)
                if g is None or g in H:
                    plus[a, c] = a
                    continue
                b = intern(plus_cyclic(H, g), gens[a] + (g,))
                plus[a, c] = b
                if b not in done:
                    nxt.append(b)
        frontier = nxt
    subs = [M.sub_internal([elements[e] for e in gs]) for gs in gens]
    for s, es in zip(subs, sets):
        s.__dict__["order"] = len(es)
    order = sorted(range(len(subs)), key=lambda i: (len(sets[i]), subs[i].key))
    remap = {old: new for new, old in enumerate(order)}
    subs_sorted = [subs[i] for i in order]
    masks = [sum(1 << e for e in sets[i]) for i in order]
    cyclic_sum = {(remap[a], remap[c]): remap[b] for (a, c), b in plus.items()}
    cyclic_gens = [tuple(remap[elem_cyc[e]] for e in gens[i]) for i in order]
    return SubmoduleLattice(M, subs_sorted, masks, cyclic_sum, cyclic_gens)


def z_line_divisor_candidates(N: Submodule, T: Submodule) -> list[Submodule]:
    """Finite representative set of ``X = sZ`` for the T-sa-small quantifier.

    For ``X = sZ`` the hypothesis ``T ⊆ N + X`` only depends on
    ``gcd(k, s)`` and the conclusion only on whether ``s == 0``, so the
    divisors of ``k`` (or of ``t`` when ``k == 0``) together with ``0Z``
    cover every case.
    """
    M = N.parent
    if M.backend != "z_line" or T.parent != M:
        raise ParentMismatch("z_line submodules required")
    k, t = N.k, T.k
    if t == 0:
        raise ZeroT("T = 0 is handled by the predicate itself")
    base = k if k else t
    return [M.line(s) for s in divisors(base)] + [M.zero]


# -- text syntax -----------------------------------------------------------

def format_module(M: FGModule) -> str:
    if M.backend == "z_line":
        return "Z"
    rel = M.relations
    pivots = {intmat.pivot_col(r): r for r in rel}
    diagonal = all(sum(1 for v in r if v) == 1 for r in rel)
    if diagonal:
        parts = []
        for i in range(M.rank):
            s = M.scales[i]
            if i in pivots:
                if s != 1:
                    break
                parts.append(f"Z/{pivots[i][i]}")
            else:
                parts.append("Z" if s == 1 else f"{s}Z")
        else:
            text = " x ".join(parts) if parts else "0"
            return text if M.is_finite else "presented:" + text
    if any(s != 1 for s in M.scales):
        raise ParseError("cannot print a scaled non-diagonal presentation")
    return "presented" + json.dumps([list(r) for r in rel]).replace(" ", "") + f"/{M.rank}"


def parse_module(text: str, ring: RingDesc) -> FGModule:
    t = re.sub(r"\s+", "", text)
    if t == "Z":
        return module_make(ring, "Z")
    if t == "0":
        return module_make(ring, [])
    presented = False
    if t.startswith("presented:"):
        presented = True
        t = t[len("presented:"):]
    elif t.startswith("presented["):
        m = re.fullmatch(r"presented(\[.*\])(?:/(\d+))?", t)
        if not m:
            raise ParseError(f"bad presentation {text!r}")
        try:
            rows = json.loads(m.group(1))
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from None
        k = int(m.group(2)) if m.group(2) else (len(rows[0]) if rows else 0)
        return module_make(ring, {"relations": rows, "rank": k})
    parts = t.split("x")
    factors, scales = [], []
    for i, p in enumerate(parts):
        m = re.fullmatch(r"Z/(\d+)|Z_(\d+)", p)
        if m:
            factors.append(int(m.group(1) or m.group(2)))
            scales.append(1)
            continue
        m = re.fullmatch(r"(\d*)Z", p)
        if m:
            factors.append(0)
            scales.append(int(m.group(1) or 1))
            continue
        raise ParseError(f"cannot parse module factor {p!r}")
    if 0 not in factors and not presented:
        if any(d < 2 for d in factors):
            raise ParseError("cyclic factors must have order >= 2")
        return module_make(ring, factors)
    k = len(factors)
    rows = [[d if a == b else 0 for b in range(k)] for a, d in enumerate(factors) if d]
    return module_make(ring, {"relations": rows, "rank": k, "scales": scales})


def format_element(M: FGModule, vec) -> str:
    c = M.coords(vec)
    if M.rank == 1:
        return str(c[0])
    return "(" + ",".join(str(v) for v in c) + ")"


def format_submodule(N: Submodule) -> str:
    M = N.parent
    if N.is_zero:
        return "0"
    if M.backend == "z_line":
        return "Z" if N.k == 1 else f"{N.k}Z"
    return "<" + ",".join(format_element(M, g) for g in N.generators) + ">"


def parse_submodule(text: str, M: FGModule) -> Submodule:
    t = re.sub(r"\s+", "", text)
    if t in ("0", "<>", "<0>"):
        return M.zero
    if M.backend == "z_line":
        m = re.fullmatch(r"(\d*)Z", t)
        if m:
            return M.line(int(m.group(1) or 1))
    if t in ("M", "Z") and M.backend != "z_line":
        return M.full
    m = re.fullmatch(r"<(.*)>", t)
    if not m:
        raise ParseError(f"cannot parse submodule {text!r}")
    body = m.group(1)
    gens = []
    if M.rank == 1 and "(" not in body:
        items = [x for x in body.split(",") if x]
        try:
            gens = [(int(x),) for x in items]
        except ValueError:
            raise ParseError(f"bad generator list {body!r}") from None
    else:
        for g in re.findall(r"\(([^()]*)\)", body):
            try:
                gens.append(tuple(int(x) for x in g.split(",")))
            except ValueError:
                raise ParseError(f"bad generator {g!r}") from None
        if re.sub(r"\([^()]*\)|,", "", body):
            raise ParseError(f"bad generator list {body!r}")
    return M.sub(*gens)


"""Numpy tables over a closed family of submodules, shared by every statement.

A context is either the whole submodule lattice of a finite module or a
window of the Z line: ``{dZ : d | n} ∪ {0}``, which is closed under sums
(gcd) and intersections (lcm). Predicate tables on a window are filled from
the exact closed forms, so only the quantified slots are restricted to the
window, never the inner "for every X" of a definition.
"""
from __future__ import annotations

from functools import cached_property, lru_cache, reduce
from math import gcd

import numpy as np

from ..modules import (
    FGModule,
    Submodule,
    annihilator,
    ann_in_module,
    colon,
    format_module,
    format_submodule,
    ideal_times_module,
    module_make,
    parse_module,
    quotient_module,
    z_line,
)
from ..predicates import (
    is_T_sa_small,
    is_sa_small,
    is_small,
    lattice,
    module_class,
    ModuleClass,
)
from ..rings import Ideal, RingDesc, divisors, ideal_lattice, is_small_ideal_in, parse_ring


@lru_cache(maxsize=None)
def small_in(ring: RingDesc, a: int, s: int) -> bool:
    """``aR ≪ sR`` (False when ``aR ⊄ sR``)."""
    return is_small_ideal_in(Ideal(ring, a), Ideal(ring, s))


class Context:
    """Tables for one module. ``subs`` is in canonical order, zero first, top last."""

    def __init__(self, M: FGModule, window: int | None = None):
        self.module = M
        self.ring = M.ring
        self.window = window
        if window is None:
            lat = lattice(M)
            self.subs: list[Submodule] = list(lat.all)
            self.leq = lat.leq
            self.join = lat.join
            self.meet = lat.meet
            self.lat = lat
        else:
            ks = [0] + sorted(divisors(window), reverse=True)
            self.subs = [M.line(k) for k in ks]
            L = len(ks)
            self.leq = np.array([[b != 0 and a % b == 0 or a == 0 for b in ks] for a in ks]
                                if L else [], dtype=bool)
            idx = {k: i for i, k in enumerate(ks)}
            self.join = np.array([[idx[gcd(a, b)] for b in ks] for a in ks], dtype=np.int32)
            self.meet = np.array([[idx[a * b // gcd(a, b) if a and b else 0] for b in ks]
                                  for a in ks], dtype=np.int32)
            self.lat = None
        self.L = len(self.subs)
        self.index = {s.key: i for i, s in enumerate(self.subs)}
        self.zero = 0
        self.top = self.L - 1

    # -- identity ----------------------------------------------------------
    @property
    def is_window(self) -> bool:
        return self.window is not None

    @cached_property
    def names(self) -> list[str]:
        """Printed forms; ideals of a finite ring render as ``(d) mod n``."""
        if self.ring.is_finite and self.is_ring_module:
            return [str(Ideal(self.ring, int(g))) for g in self.col_top]
        return [format_submodule(s) for s in self.subs]

    @cached_property
    def spec(self) -> dict:
        d = {"ring": str(self.ring), "module": format_module(self.module)}
        if self.window is not None:
            d["window"] = self.window
        return d

    def idx(self, N: Submodule) -> int:
        return self.index[N.key]

    # -- order structure -----------------------------------------------------
    @cached_property
    def lt(self) -> np.ndarray:
        return self.leq & ~np.eye(self.L, dtype=bool)

    @cached_property
    def maximal(self) -> np.ndarray:
        """Coatoms: maximal submodules."""
        lt = self.lt
        top = self.top
        out = np.zeros(self.L, dtype=bool)
        if self.is_window:
            # maximal submodules of Z are pZ; inside the window those with p prime
            for i, s in enumerate(self.subs):
                k = s.k
                out[i] = k > 1 and all(k % d for d in range(2, k))
            return out
        for i in range(self.L):
            if lt[i, top] and not (lt[i] & lt[:, top]).any():
                out[i] = True
        return out

    @cached_property
    def jacobson(self) -> int:
        """``J(M)``: meet of the maximal submodules (``M`` when there are none)."""
        if self.is_window:
            return self.zero
        return reduce(lambda a, b: int(self.meet[a, b]), np.nonzero(self.maximal)[0], self.top)

    @cached_property
    def completely_irreducible(self) -> np.ndarray:
        """``T`` differs from the meet of its strict supermodules (finite only)."""
        out = np.zeros(self.L, dtype=bool)
        for t in range(self.L):
            above = np.nonzero(self.lt[t])[0]
            m = reduce(lambda a, b: int(self.meet[a, b]), above, self.top)
            out[t] = m != t
        return out

    @cached_property
    def essential(self) -> np.ndarray:
        nonzero = np.arange(self.L) != self.zero
        return ~((self.meet == self.zero) & nonzero[None, :]).any(1) | ~nonzero.any()

    # -- ideals --------------------------------------------------------------
    @cached_property
    def ann(self) -> np.ndarray:
        return np.array([annihilator(s).gen for s in self.subs], dtype=np.int64)

    @cached_property
    def col_top(self) -> np.ndarray:
        """``(T : M)`` generator for every ``T``."""
        full = self.module.full
        return np.array([colon(s, full).gen for s in self.subs], dtype=np.int64)

    def small_vec(self, s: int) -> np.ndarray:
        """``Ann(X) ≪ sR`` for every ``X``."""
        return self._small_vec(int(s))

    @lru_cache(maxsize=None)
    def _small_vec(self, s: int) -> np.ndarray:
        return np.array([small_in(self.ring, int(a), s) for a in self.ann], dtype=bool)

    @cached_property
    def ann_top_small(self) -> bool:
        return small_in(self.ring, int(self.ann[self.top]), 1)

    # -- predicates ------------------------------------------------------------
    @cached_property
    def small(self) -> np.ndarray:
        if self.is_window:
            return np.array([bool(is_small(s)) for s in self.subs])
        covers = self.join == self.top
        proper = np.arange(self.L) != self.top
        return ~(covers & proper[None, :]).any(1)

    @cached_property
    def sa(self) -> np.ndarray:
        if self.is_window:
            return np.array([bool(is_sa_small(s)) for s in self.subs])
        bad = ~self.small_vec(1)
        return ~((self.join == self.top) & bad[None, :]).any(1)

    @cached_property
    def sa_strict(self) -> np.ndarray:
        """sa-smallness with ``X`` restricted to nonzero submodules."""
        if self.is_window:
            full = self.module.full
            return np.array([bool(is_T_sa_small(s, full, strict=True)) for s in self.subs])
        bad = ~self.small_vec(1)
        bad[self.zero] = False
        return ~((self.join == self.top) & bad[None, :]).any(1)

    def tsa_row(self, t: int, strict: bool = False) -> np.ndarray:
        """``N ≪_T M`` for every ``N``, at ``T = subs[t]``."""
        return self._tsa_row(int(t), bool(strict))

    @lru_cache(maxsize=None)
    def _tsa_row(self, t: int, strict: bool) -> np.ndarray:
        if self.is_window:
            T = self.subs[t]
            return np.array([bool(is_T_sa_small(N, T, strict=strict)) for N in self.subs])
        cover = self.leq[t][self.join]
        bad = ~self.small_vec(self.col_top[t])
        if strict:
            bad = bad.copy()
            bad[self.zero] = False
        return ~(cover & bad[None, :]).any(1)

    def tsa(self, strict: bool = False) -> np.ndarray:
        """Full table ``tsa[T, N]``."""
        return self._tsa(bool(strict))

    @lru_cache(maxsize=None)
    def _tsa(self, strict: bool) -> np.ndarray:
        if self.L == 0:
            return np.zeros((0, 0), dtype=bool)
        return np.stack([self.tsa_row(t, strict) for t in range(self.L)])

    def below(self, k: int) -> np.ndarray:
        return np.nonzero(self.leq[:, k])[0]

    def tsa_within(self, k: int, strict: bool = False):
        """``N ≪_T K`` for ``N, T ≤ K = subs[k]``: returns (indices, table)."""
        return self._tsa_within(int(k), bool(strict))

    @lru_cache(maxsize=None)
    def _tsa_within(self, k: int, strict: bool):
        if self.is_window:
            raise ValueError("sub-ambient tables are built for finite modules only")
        sub = self.below(k)
        K = self.subs[k]
        col = [colon(self.subs[t], K).gen for t in sub]
        Xmask = np.zeros(self.L, dtype=bool)
        Xmask[sub] = True
        table = np.zeros((len(sub), len(sub)), dtype=bool)
        jn = self.join[np.ix_(sub, sub)]
        for a, t in enumerate(sub):
            cover = self.leq[t][jn]
            bad = ~self.small_vec(col[a])[sub]
            if strict:
                bad = bad & (sub != self.zero)
            table[a] = ~(cover & bad[None, :]).any(1)
        return sub, table

    def j_sa(self, t: int, strict: bool = False) -> int:
        """Index of the sum of all ``T``-sa-small submodules."""
        row = self.tsa_row(t, strict)
        return reduce(lambda a, b: int(self.join[a, b]), np.nonzero(row)[0], self.zero)

    # -- module classes --------------------------------------------------------
    @cached_property
    def flags(self) -> ModuleClass:
        if self.is_window:
            return module_class(z_line())
        M, L = self.module, self.L
        nz = [i for i in range(L) if i != self.zero]
        annM = self.ann[self.top]
        prime = all(self.ann[i] == annM for i in nz)
        faithful = Ideal(self.ring, int(annM)).is_zero
        mult = all(self.idx(ideal_times_module(Ideal(self.ring, int(self.col_top[i])), M)) == i
                   for i in range(L))
        comult = all(self.idx(ann_in_module(M, Ideal(self.ring, int(self.ann[i])))) == i
                     for i in range(L))
        if self.ring.is_finite:
            ideals = ideal_lattice(self.ring)
            dac = all(I == annihilator(ann_in_module(M, I)) for I in ideals)
            prods = [ideal_times_module(I, M) for I in ideals]
            canc = len(set(prods)) == len(prods)
        else:
            dac = canc = False
        comp = (self.join == self.top) & (self.meet == self.zero)
        semisimple = bool(comp.any(1).all())
        return ModuleClass(prime, faithful, mult, comult, dac, comult and dac, canc, semisimple)

    # -- related contexts --------------------------------------------------------
    @cached_property
    def ring_ctx(self) -> Context:
        """Context of ``R`` as a module over itself (a window for ``R = Z``)."""
        if self.ring.is_finite:
            return get_context(str(self.ring), f"Z/{self.ring.n}")
        e = self.window if self.is_window else self.module.exponent
        return get_context("Z", "Z", window=e)

    def ideal_index(self, gen: int) -> int:
        """Index, in this ring context, of the ideal ``gen·R``."""
        R = self.module
        return self.idx(R.sub_internal([[int(gen)]]))

    @property
    def is_ring_module(self) -> bool:
        if self.is_window:
            return True
        return self.ring.is_finite and self.module == module_make(self.ring, [self.ring.n])

    def quotient(self, n: int):
        """``M / subs[n]`` as a context, and the index map on ``{K ⊇ subs[n]}``."""
        return self._quotient(int(n))

    @lru_cache(maxsize=None)
    def _quotient(self, n: int):
        N = self.subs[n]
        if self.is_window and N.is_zero:
            return self, {i: i for i in range(self.L)}
        q = quotient_module(self.module, N)
        Q = get_context(str(self.ring), format_module(q.target))
        up = np.nonzero(self.leq[n])[0]
        return Q, {int(k): Q.idx(q.push(self.subs[k])) for k in up}


_CACHE: dict = {}


def get_context(ring: str, module: str, window: int | None = None) -> Context:
    key = (ring, module, window)
    ctx = _CACHE.get(key)
    if ctx is None:
        R = parse_ring(ring)
        M = parse_module(module, R)
        ctx = _CACHE[key] = Context(M, window)
    return ctx


def context_for(M: FGModule) -> Context:
    return get_context(str(M.ring), format_module(M))


def clear_caches():
    """Drop every memoized context and lattice (used by replay)."""
    _CACHE.clear()
    lattice.cache_clear()
    small_in.cache_clear()

"""Every numbered result as a quantified property over the corpus.

A statement produces *slices* (self-contained JSON specs naming a ring, a
module and any extra objects) and evaluates each slice to a pair of boolean
arrays ``hyp`` / ``concl`` over named axes. An instance is a counterexample
when ``hyp & ~concl``. Hypotheses are filters, never assumptions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable

import numpy as np

from ..modules import (
    colon,
    format_submodule,
    ideal_times_module,
    parse_module,
    parse_submodule,
)
from ..morphisms import (
    Hom,
    direct_sum,
    localize,
    mcs_closure,
    preimage,
    push,
    quotient_map,
    submodule_as_module,
    tensor_with_free,
)
from ..predicates import (
    FAILS,
    HOLDS,
    is_sa_small,
    is_T_sa_small,
    rad_submodule,
    refute_or_confirm_T_sa_small_with_witness,
)
from ..rings import Ideal, parse_ring, squarefree_kernel
from .context import Context, context_for, get_context
from .corpus import (
    CorpusConfig,
    finite_modules,
    hom_corpus,
    invariant_factor_lists,
    ring_flags,
    z_windows,
)


@dataclass
class SliceResult:
    hyp: np.ndarray
    concl: np.ndarray
    axes: list[tuple[str, list[str]]]
    skipped: int = 0
    witness: Callable[[tuple], dict] | None = None


@dataclass(frozen=True)
class Statement:
    id: str
    anchor: str
    quote: str
    text: str
    slices: Callable[[CorpusConfig], Iterable[dict]] = field(compare=False)
    evaluate: Callable[[dict], SliceResult] = field(compare=False)
    expected_vacuous: bool = False
    variant: str = "as-stated"
    expected_falsified: bool = False   # a claim made in order to be refuted

    def meta(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "quote": self.quote,
                "text": self.text, "variant": self.variant,
                "expected_vacuous": self.expected_vacuous,
                "expected_falsified": self.expected_falsified}


_REGISTRY: list[Statement] = []


def _register(id, anchor, quote, text, slices, *, strict=False, vacuous=(False, False),
              variant="as-stated", refuted=False):
    """Decorator: ``fn(spec, strict) -> SliceResult``; optionally adds ``id.strict``."""
    def deco(fn):
        _REGISTRY.append(Statement(id, anchor, quote, text, slices,
                                   lambda s, fn=fn: fn(s, False), vacuous[0], variant, refuted))
        if strict:
            _REGISTRY.append(Statement(id + ".strict", anchor, quote,
                                       text + " [X ranges over nonzero submodules only]",
                                       slices, lambda s, fn=fn: fn(s, True), vacuous[1],
                                       "strict-nonzero-X"))
        return fn
    return deco


def registry() -> list[Statement]:
    return list(_REGISTRY)


def lookup(sid: str) -> Statement:
    for s in _REGISTRY:
        if s.id == sid:
            return s
    raise KeyError(sid)


# -- slice generators ----------------------------------------------------------------

def module_slices(cfg: CorpusConfig, *, windows: bool = True, finite: bool = True):
    if finite:
        for r, m in finite_modules(cfg):
            yield {"ring": r, "module": m}
    if windows:
        for w in z_windows(cfg):
            yield {"ring": "Z", "module": "Z", "window": w}


def finite_slices(cfg: CorpusConfig):
    return module_slices(cfg, windows=False)


def ring_slices(cfg: CorpusConfig, *, windows: bool = True):
    for n in cfg.ring_moduli:
        yield {"ring": f"Z/{n}", "module": f"Z/{n}"}
    if windows:
        for w in z_windows(cfg):
            yield {"ring": "Z", "module": "Z", "window": w}


def sub_slices(cfg: CorpusConfig, key: str = "N", *, windows: bool = True):
    """One slice per (module, submodule): used for quotient maps ``M -> M/N``."""
    for s in module_slices(cfg, windows=windows):
        C = ctx_of(s)
        for name in C.names:
            yield {**s, key: name}


def hom_slices(kind: str):
    def gen(cfg: CorpusConfig):
        for h in hom_corpus(cfg):
            if h[kind]:
                yield {"ring": h["ring"], "source": h["source"], "target": h["target"],
                       "matrix": h["matrix"]}
    return gen


def chain(*gens):
    def gen(cfg: CorpusConfig):
        for g in gens:
            yield from g(cfg)
    return gen


def fixed(*specs):
    def gen(cfg: CorpusConfig):
        yield from specs
    return gen


# -- evaluation helpers ----------------------------------------------------------------

def ctx_of(spec: dict) -> Context:
    return get_context(spec["ring"], spec["module"], spec.get("window"))


@lru_cache(maxsize=None)
def _name_index(C: Context) -> dict:
    return {n: i for i, n in enumerate(C.names)}


def nidx(C: Context, name: str) -> int:
    return _name_index(C)[name]


def ax(label: str, C: Context, idx=None):
    names = C.names if idx is None else [C.names[i] for i in idx]
    return (label, names)


def res(hyp, concl, axes, **kw) -> SliceResult:
    hyp, concl = np.broadcast_arrays(np.asarray(hyp, dtype=bool), np.asarray(concl, dtype=bool))
    return SliceResult(hyp.copy(), concl.copy(), axes, **kw)


def pick(r: SliceResult, spec: dict) -> SliceResult:
    """Restrict a result to the axis values named in ``spec["pick"]``."""
    want = spec.get("pick")
    if not want:
        return r
    sel, axes = [], []
    for label, names in r.axes:
        if label in want:
            i = names.index(want[label])
            sel.append([i])
            axes.append((label, [names[i]]))
        else:
            sel.append(list(range(len(names))))
            axes.append((label, names))
    grid = np.ix_(*sel)
    wit = r.witness
    if wit is not None:
        def wit2(t, sel=sel, wit=wit):
            return wit(tuple(s[i] for s, i in zip(sel, t)))
        wit = wit2
    return SliceResult(r.hyp[grid], r.concl[grid], axes, r.skipped, wit)


def ideal_gen_of(C: Context, i: int) -> int:
    return int(C.col_top[i])


def colon_indices(C: Context) -> np.ndarray:
    """Index of ``(N:M)`` inside the ring context, for every ``N``."""
    R = C.ring_ctx
    return np.array([R.ideal_index(g) for g in C.col_top], dtype=np.int64)


def ring_n(C: Context) -> int:
    return C.ring.n


def sa_hollow_ring(R: Context) -> bool:
    return bool(R.sa[np.arange(R.L) != R.top].all())


def hollow_ring(R: Context) -> bool:
    return bool(R.small[np.arange(R.L) != R.top].all())


def elements_of(R: Context) -> list[int]:
    n = ring_n(R)
    return list(range(n)) if n else list(range(0, R.window + 1))


def tsa_witness(C: Context, t_of, n_of, strict: bool):
    """Witness callback: the canonical-first failing X in context ``C``."""
    def wit(ix):
        T, N = C.subs[t_of(ix)], C.subs[n_of(ix)]
        v = is_T_sa_small(N, T, strict=strict)
        return {"context": C.spec, "T": format_submodule(T), "N": format_submodule(N),
                "verdict": v.value,
                "witness": None if v.witness is None else format_submodule(v.witness),
                "reason": v.reason}
    return wit


# -- Note after the definition -------------------------------------------------------------

@_register("Note.i", "Note (i)", "If we take T=M, then the notions of T-sa-small submodules and sa-small submodules are equal",
           "N ≪_M M ⟺ N ≪^sa M", module_slices, strict=True)
def _note_i(spec, strict):
    C = ctx_of(spec)
    sa = C.sa_strict if strict else C.sa
    return res(np.ones(C.L), C.tsa_row(C.top, strict) == sa, [ax("N", C)])


@_register("Note.ii", "Note (ii)", "a nonzero module M has no any 0-sa-small submodule",
           "M ≠ 0 ⟹ no N is 0-sa-small", module_slices, strict=True)
def _note_ii(spec, strict):
    C = ctx_of(spec)
    return res(np.ones(C.L), ~C.tsa_row(C.zero, strict), [ax("N", C)])


@_register("Note.iii.a", "Note (iii)", "If T≠0, then N≪^sa_T M implies that T⊈N",
           "T ≠ 0 and N ≪_T M ⟹ T ⊄ N", module_slices, strict=True)
def _note_iii_a(spec, strict):
    C = ctx_of(spec)
    tsa = C.tsa(strict)
    nz = (np.arange(C.L) != C.zero)[:, None]
    return res(nz & tsa, ~C.leq, [ax("T", C), ax("N", C)])


@_register("Note.iii.b", "Note (iii)", "there exists a maximal submodule N of M such that T⊆N. This implies that N is not a T-sa-small submodule",
           "M f.g., 0 ≠ T ≠ M, N maximal ⊇ T ⟹ N not T-sa-small", module_slices, strict=True)
def _note_iii_b(spec, strict):
    C = ctx_of(spec)
    idx = np.arange(C.L)
    okT = ((idx != C.zero) & (idx != C.top))[:, None]
    hyp = okT & C.maximal[None, :] & C.leq
    return res(hyp, ~C.tsa(strict), [ax("T", C), ax("N", C)])


@_register("Note.pK", "Note after Example", "K≪^sa_T M if and only if R-epimorphism p_K: M→M/K is a T-sa-small epimorphism",
           "K ≪_T M ⟺ Ker(p_K) ≪_T M, with p_K built as a homomorphism", module_slices)
def _note_pk(spec, strict):
    C = ctx_of(spec)
    ker = np.array([C.idx(quotient_map(C.module, K).kernel) for K in C.subs])
    tsa = C.tsa()
    return res(np.ones((C.L, C.L)), tsa[:, ker] == tsa, [ax("T", C), ax("K", C)])


# -- Theorem t.2.3 -------------------------------------------------------------------------

@_register("T2.3.i", "Theorem t.2.3 (i)", "Every T-sa-small submodule of M is a sa-small submodule of M",
           "N ≪_T M ⟹ N ≪^sa M", module_slices, strict=True)
def _t23_i(spec, strict):
    C = ctx_of(spec)
    return res(C.tsa(strict), C.sa[None, :], [ax("T", C), ax("N", C)])


@_register("T2.3.ii", "Theorem t.2.3 (ii)", "If M is a faithful prime R-module, then M is a T-sa-small hollow module",
           "M faithful prime ⟹ every N is T-sa-small for every T", module_slices, strict=True)
def _t23_ii(spec, strict):
    C = ctx_of(spec)
    f = C.flags
    return res(np.full((C.L, C.L), f.is_faithful and f.is_prime), C.tsa(strict),
               [ax("T", C), ax("N", C)],
               witness=tsa_witness(C, lambda i: i[0], lambda i: i[1], strict))


@_register("T2.3.iii", "Theorem t.2.3 (iii)", "If M is a prime module on a semisimple ring R and N≪^sa M, then for every submodule T⊋N of M, N≪^sa_T M",
           "R semisimple, M prime, N ≪^sa M, T ⊋ N ⟹ N ≪_T M", module_slices, strict=True)
def _t23_iii(spec, strict):
    C = ctx_of(spec)
    flag = ring_flags(ring_n(C))["semisimple"] and C.flags.is_prime
    hyp = flag & C.sa[None, :] & C.lt.T
    return res(hyp, C.tsa(strict), [ax("T", C), ax("N", C)])


@_register("Ex.iii.claim", "Example (iii)", "N=⟨(0,0̄)⟩ is a sa-small submodule of M but N is not a T-sa-small submodule of M",
           "converse of Theorem t.2.3 (i): N ≪^sa M ⟹ N ≪_T M for every T (expected to fail)",
           chain(fixed({"ring": "Z", "module": "presented:2Z x Z/8", "N": "0", "T": "<(0,4)>",
                        "X": "<(0,2)>"}), module_slices), refuted=True)
def _ex_iii(spec, strict):
    if "X" in spec:
        M = parse_module(spec["module"], parse_ring(spec["ring"]))
        N, T, X = (parse_submodule(spec[k], M) for k in ("N", "T", "X"))
        v = refute_or_confirm_T_sa_small_with_witness(N, T, X)
        hyp = is_sa_small(N).value == HOLDS
        label = [f"N={spec['N']}, T={spec['T']}, X={spec['X']}"]
        if v.value != FAILS:
            return res([False], [True], [("instance", label)], skipped=1)

        def wit(_):
            return {"witness": spec["X"], "reason": v.reason}
        return res([hyp], [False], [("instance", label)], witness=wit)
    C = ctx_of(spec)
    return res(C.sa[None, :], C.tsa(), [ax("T", C), ax("N", C)])


# -- Theorem t2.5 ------------------------------------------------------------------------

@_register("T2.5.i", "Theorem t2.5 (i)", "If N≪^sa_T M, then N≪^sa_{T'} M",
           "T ⊊ T' ⊊ M and N ≪_T M ⟹ N ≪_{T'} M", module_slices, strict=True)
def _t25_i(spec, strict):
    C = ctx_of(spec)
    tsa = C.tsa(strict)
    pair = C.lt & C.lt[:, C.top][None, :]
    return res(pair[:, :, None] & tsa[:, None, :], tsa[None, :, :],
               [ax("T", C), ax("T'", C), ax("N", C)])


@_register("T2.5.ii", "Theorem t2.5 (ii)", "If T=T₁∩⋯∩T_s and N≪^sa_T M, then N≪^sa_{T_i} M",
           "N ≪_{T1∩T2} M ⟹ N ≪_{T1} M and N ≪_{T2} M", module_slices, strict=True)
def _t25_ii(spec, strict):
    C = ctx_of(spec)
    tsa = C.tsa(strict)
    return res(tsa[C.meet], tsa[:, None, :] & tsa[None, :, :],
               [ax("T1", C), ax("T2", C), ax("N", C)])


@_register("T2.5.ii.conv", "Theorem t2.5 (ii)", "Conversely, if T is a completely irreducible submodule and for any 1≤i≤s, N≪^sa_{T_i} M, then N≪^sa_T M",
           "T = T1∩T2 completely irreducible, N ≪_{Ti} M ⟹ N ≪_T M", finite_slices, strict=True)
def _t25_ii_conv(spec, strict):
    C = ctx_of(spec)
    tsa = C.tsa(strict)
    ci = C.completely_irreducible[C.meet]
    return res(ci[:, :, None] & tsa[:, None, :] & tsa[None, :, :], tsa[C.meet],
               [ax("T1", C), ax("T2", C), ax("N", C)])


@_register("T2.5.iii", "Theorem t2.5 (iii)", "If T≤K and N≪^sa_T M, then N≪^sa_T K",
           "T, N ≤ K and N ≪_T M ⟹ N ≪_T K", finite_slices, strict=True)
def _t25_iii(spec, strict):
    C = ctx_of(spec)
    tsa = C.tsa(strict)
    L = C.L
    hyp = np.zeros((L, L, L), dtype=bool)
    concl = np.ones((L, L, L), dtype=bool)
    for k in range(L):
        sub, tab = C.tsa_within(k, strict)
        g = np.ix_(sub, sub)
        hyp[k][g] = tsa[g]
        concl[k][g] = tab
    return res(hyp, concl, [ax("K", C), ax("T", C), ax("N", C)])


@_register("T2.5.iv", "Theorem t2.5 (iv)", "If T=T₁+⋯+T_n for some submodules T_i of M and N≤^sa_{T_i} M for some 1≤i≤n, then N≤^sa_T M",
           "N ≪_{T1} M ⟹ N ≪_{T1+T2} M (the relation written ≤ is read as ≪)", module_slices, strict=True)
def _t25_iv(spec, strict):
    C = ctx_of(spec)
    tsa = C.tsa(strict)
    return res(tsa[:, None, :], tsa[C.join], [ax("T1", C), ax("T2", C), ax("N", C)])


# -- S(R) ⊆ S^sa(R) theorem -------------------------------------------------------------------

@_register("S.i", "Theorem S(R) (i)", "S(R)⊆S^sa(R)", "small ideals are sa-small", ring_slices)
def _s_i(spec, strict):
    R = ctx_of(spec)
    return res(R.small, R.sa, [ax("I", R)])


@_register("S.ii", "Theorem S(R) (ii)", "If R is an Artinian ring and I≪^sa_{J(R)} R, then for every maximal ideal m of R, I≪^sa_m R",
           "R finite, I ≪_{J(R)} R ⟹ I ≪_m R for every maximal m",
           lambda cfg: ring_slices(cfg, windows=False), strict=True)
def _s_ii(spec, strict):
    R = ctx_of(spec)
    tsa = R.tsa(strict)
    return res(tsa[R.jacobson][None, :], tsa[R.maximal], [("m", [R.names[i] for i in np.nonzero(R.maximal)[0]]), ax("I", R)])


def _s_iii(nonzero: bool):
    def fn(spec, strict):
        C = ctx_of(spec)
        hyp = C.flags.is_multiplication & (C.meet == C.zero) & (C.join == C.top)
        if nonzero:
            nz = np.arange(C.L) != C.zero
            hyp = hyp & nz[:, None] & nz[None, :]
        return res(hyp, ~C.sa[:, None] & ~C.sa[None, :], [ax("N", C), ax("K", C)])
    return fn


_register("S.iii", "Theorem S(R) (iii)", "Let M=N⊕K be a multiplication module such that N, K are finitely generated submodules of M. Then N and K are not sa-small in M",
          "M = N ⊕ K multiplication ⟹ N, K not sa-small", module_slices)(_s_iii(False))
_register("S.iii.nonzero", "Theorem S(R) (iii)", "Then N and K are not sa-small in M",
          "M = N ⊕ K multiplication with N, K ≠ 0 ⟹ N, K not sa-small", module_slices,
          variant="as-proved")(_s_iii(True))


# -- M ∉ S^sa(M) theorem and its corollary -------------------------------------------------------

@_register("M.i", "Theorem M∉S^sa(M) (i)", "M∉S^sa(M)", "M is not sa-small in itself", module_slices)
def _m_i(spec, strict):
    C = ctx_of(spec)
    return res([True], [not C.sa[C.top]], [("M", [C.names[C.top]])])


@_register("M.ii", "Theorem M∉S^sa(M) (ii)", "0∈S^sa(M) if and only if Ann(M)≪R",
           "0 ≪^sa M ⟺ Ann(M) ≪ R", module_slices)
def _m_ii(spec, strict):
    C = ctx_of(spec)
    return res([True], [bool(C.sa[C.zero]) == C.ann_top_small], [("M", [C.names[C.top]])])


@_register("M.iii", "Theorem M∉S^sa(M) (iii)", "If R is a simple ring, then L*(M)=S^sa(M)",
           "R a field ⟹ the sa-small submodules are exactly the proper ones", module_slices)
def _m_iii(spec, strict):
    C = ctx_of(spec)
    flag = ring_flags(ring_n(C))["simple"]
    return res(np.full(C.L, flag), C.sa == (np.arange(C.L) != C.top), [ax("N", C)])


@_register("M.iv", "Theorem M∉S^sa(M) (iv)", "Let m∈Max(R)∩S^sa(R). If x∉m, then Ann(Rx)⊆J(R)",
           "m maximal and sa-small, x ∉ m ⟹ Ann(Rx) ⊆ J(R)", ring_slices)
def _m_iv(spec, strict):
    R = ctx_of(spec)
    n = ring_n(R)
    xs = elements_of(R)
    ms = np.nonzero(R.maximal)[0]
    J = Ideal(R.ring, squarefree_kernel(n) if n else 0)
    hyp = np.zeros((len(ms), len(xs)), dtype=bool)
    concl = np.ones_like(hyp)
    for a, m in enumerate(ms):
        d = ideal_gen_of(R, m)
        for b, x in enumerate(xs):
            hyp[a, b] = R.sa[m] and x % d != 0
            ann = n // gcd(n, x) if n else (1 if x == 0 else 0)
            concl[a, b] = Ideal(R.ring, ann) <= J
    return res(hyp, concl, [("m", [R.names[i] for i in ms]), ("x", [str(x) for x in xs])])


@_register("M.v", "Theorem M∉S^sa(M) (v)", "If M is a prime module with Ann(M)≪R, then L*(M)=S^sa(M). Moreover, in this case, S(M)⊆S^sa(M)",
           "M prime, Ann(M) ≪ R ⟹ S^sa(M) = L*(M) and S(M) ⊆ S^sa(M)", module_slices)
def _m_v(spec, strict):
    C = ctx_of(spec)
    flag = C.flags.is_prime and C.ann_top_small
    proper = np.arange(C.L) != C.top
    return res(np.full(C.L, flag), (C.sa == proper) & (~C.small | C.sa), [ax("N", C)])


@_register("Cor.faithful-prime", "Corollary after Theorem M∉S^sa(M)", "Every proper submodule of a faithful prime module M is a sa-small submodule of M",
           "M faithful prime, N ≠ M ⟹ N ≪^sa M", module_slices)
def _cor_fp(spec, strict):
    C = ctx_of(spec)
    flag = C.flags.is_faithful and C.flags.is_prime
    return res(flag & (np.arange(C.L) != C.top), C.sa, [ax("N", C)])


# -- Theorem t2.3 (rings) -------------------------------------------------------------------------

@_register("t2.3.i", "Theorem t2.3 (i)", "If R has a nonzero comaximal sa-small ideal, then R is not semisimple",
           "I ≠ 0 sa-small with I + J = R for a proper J ⟹ R not semisimple", ring_slices)
def _r_i(spec, strict):
    R = ctx_of(spec)
    idx = np.arange(R.L)
    comax = ((R.join == R.top) & (idx != R.top)[None, :]).any(1)
    hyp = (idx != R.zero) & R.sa & comax
    return res(hyp, np.full(R.L, not ring_flags(ring_n(R))["semisimple"]), [ax("I", R)])


@_register("t2.3.ii", "Theorem t2.3 (ii)", "Every sa-small hollow semisimple ring is simple",
           "R sa-hollow and semisimple ⟹ R simple", ring_slices)
def _r_ii(spec, strict):
    R = ctx_of(spec)
    fl = ring_flags(ring_n(R))
    return res([sa_hollow_ring(R) and fl["semisimple"]], [fl["simple"]], [("R", [str(R.ring)])])


def _zero_divisor(n: int, x: int) -> bool:
    if n == 0:
        return x == 0
    return any(x * y % n == 0 for y in range(1, n))


def _r_iii_a(as_proved: bool):
    def fn(spec, strict):
        R = ctx_of(spec)
        n = ring_n(R)
        xs = elements_of(R)
        hollow = sa_hollow_ring(R)
        hyp = np.array([hollow and _zero_divisor(n, x) for x in xs])
        concl = []
        for x in xs:
            if as_proved:
                ys = [y for y in xs if y and (x * y % n == 0 if n else x * y == 0)]
            else:
                ys = xs
            concl.append(any(gcd(gcd(x, y), n) != 1 for y in ys))
        return res(hyp, concl, [("x", [str(x) for x in xs])])
    return fn


_register("t2.3.iii.a", "Theorem t2.3 (iii)", "If x∈Z(R), then R≠Rx+Ry for some element y∈R",
          "R sa-hollow, x a zero divisor ⟹ Rx + Ry ≠ R for some y", ring_slices)(_r_iii_a(False))
_register("t2.3.iii.a.as-proved", "Theorem t2.3 (iii)", "there exists an element 0≠y∈R such that xy=0. Let R=Rx+Ry",
          "R sa-hollow, x a zero divisor ⟹ Rx + Ry ≠ R for every... some y ≠ 0 with xy = 0",
          ring_slices, variant="as-proved")(_r_iii_a(True))


@_register("t2.3.iii.b", "Theorem t2.3 (iii)", "1 is the only nonzero idempotent element of R",
           "R sa-hollow, e² = e ≠ 0 ⟹ e = 1", ring_slices)
def _r_iii_b(spec, strict):
    R = ctx_of(spec)
    n = ring_n(R)
    xs = elements_of(R)
    hollow = sa_hollow_ring(R)
    idem = [(x * x % n == x) if n else x * x == x for x in xs]
    return res([hollow and e and x != 0 for x, e in zip(xs, idem)], [x == 1 for x in xs],
               [("e", [str(x) for x in xs])])


def _r_iv(nonzero: bool):
    def fn(spec, strict):
        R = ctx_of(spec)
        flag = ring_flags(ring_n(R))["vnr"]
        hyp = np.full(R.L, flag)
        if nonzero:
            hyp = hyp & (np.arange(R.L) != R.zero)
        return res(hyp, ~R.sa, [ax("I", R)])
    return fn


_register("t2.3.iv", "Theorem t2.3 (iv)", "If R is a von Neumann regular ring, then none of the finitely generated ideals of R is a sa-small ideal of R",
          "R von Neumann regular ⟹ no ideal is sa-small", ring_slices)(_r_iv(False))
_register("t2.3.iv.nonzero", "Theorem t2.3 (iv)", "every finitely generated ideal I of R is a direct summand of R",
          "R von Neumann regular ⟹ no nonzero ideal is sa-small", ring_slices,
          variant="as-proved")(_r_iv(True))


@_register("t2.3.v", "Theorem t2.3 (v)", "Let R be an integral domain and let M be a faithful multiplication module, then L*(M)=S^sa(M)",
           "R domain, M faithful multiplication ⟹ S^sa(M) = L*(M)", module_slices)
def _r_v(spec, strict):
    C = ctx_of(spec)
    flag = ring_flags(ring_n(C))["domain"] and C.flags.is_faithful and C.flags.is_multiplication
    return res(np.full(C.L, flag), C.sa == (np.arange(C.L) != C.top), [ax("N", C)])


# -- Proposition pro2.6 -----------------------------------------------------------------------------

@_register("P2.6.i", "Proposition pro2.6 (i)", "Let M be a strong comultiplication module and N≪^sa M. Then for every nonzero submodule L of M with N+L=M, L≤_e M",
           "M strong comultiplication, N ≪^sa M, 0 ≠ L, N + L = M ⟹ L essential", module_slices)
def _p26_i(spec, strict):
    C = ctx_of(spec)
    nz = np.arange(C.L) != C.zero
    hyp = C.flags.is_strong_comultiplication & C.sa[:, None] & nz[None, :] & (C.join == C.top)
    return res(hyp, C.essential[None, :], [ax("N", C), ax("L", C)])


@_register("P2.6.ii", "Proposition pro2.6 (ii)", "If K≪^sa_T M, then N≪^sa_T M",
           "N ⊆ K and K ≪_T M ⟹ N ≪_T M", module_slices, strict=True)
def _p26_ii(spec, strict):
    C = ctx_of(spec)
    tsa = C.tsa(strict)
    return res(C.leq[None, :, :] & tsa[:, None, :], tsa[:, :, None],
               [ax("T", C), ax("N", C), ax("K", C)])


@_register("P2.6.iii", "Proposition pro2.6 (iii)", "If N_t≪^sa_T M for some t∈Λ, then ∩N_λ≪^sa_T M",
           "N1 ≪_T M ⟹ N1 ∩ N2 ≪_T M", module_slices, strict=True)
def _p26_iii(spec, strict):
    C = ctx_of(spec)
    tsa = C.tsa(strict)
    return res(tsa[:, :, None], tsa[:, C.meet], [ax("T", C), ax("N1", C), ax("N2", C)])


@_register("P2.6.iv", "Proposition pro2.6 (iv)", "Let T⊆K and N≪^sa_T K, then N≪^sa_T M",
           "T, N ≤ K and N ≪_T K ⟹ N ≪_T M", finite_slices, strict=True)
def _p26_iv(spec, strict):
    C = ctx_of(spec)
    tsa = C.tsa(strict)
    L = C.L
    hyp = np.zeros((L, L, L), dtype=bool)
    concl = np.ones((L, L, L), dtype=bool)
    for k in range(L):
        sub, tab = C.tsa_within(k, strict)
        g = np.ix_(sub, sub)
        hyp[k][g] = tab
        concl[k][g] = tsa[g]
    return res(hyp, concl, [ax("K", C), ax("T", C), ax("N", C)])


def _p26_v_parts(C: Context, strict: bool):
    R = C.ring_ctx
    ci = colon_indices(C)
    tsa, tsaR = C.tsa(strict), R.tsa(strict)
    saR = R.sa[ci]
    tsaRc = tsaR[np.ix_(ci, ci)]
    fl = C.flags
    return fl, saR, tsa, tsaRc


@_register("P2.6.v", "Proposition pro2.6 (v)", "N is a T-sa-small submodule of M if and only if (N:M) is a (T:M)-sa-small ideal of R",
           "all parts together: M multiplication ⟹ (N ≪^sa M ⟹ (N:M) ≪^sa R) and (N ≪_T M ⟹ (N:M) ≪_(T:M) R); "
           "if also faithful, both converses and J_T^sa(M) = J_(T:M)^sa(R)·M",
           module_slices, strict=True)
def _p26_v(spec, strict):
    C = ctx_of(spec)
    fl, saR, tsa, tsaRc = _p26_v_parts(C, strict)
    mult, faithful = fl.is_multiplication, fl.is_faithful and fl.is_multiplication
    fwd = (~C.sa | saR)[None, :] & (~tsa | tsaRc)
    conv = (~saR | C.sa)[None, :] & (~tsaRc | tsa)
    jok = _j_identity(C, strict)[:, None]
    concl = fwd & (conv & jok | (not faithful))
    return res(np.full((C.L, C.L), mult), concl, [ax("T", C), ax("N", C)])


def _j_identity(C: Context, strict: bool) -> np.ndarray:
    fl = C.flags
    if not (fl.is_faithful and fl.is_multiplication):
        return np.ones(C.L, dtype=bool)
    R = C.ring_ctx
    ci = colon_indices(C)
    out = np.zeros(C.L, dtype=bool)
    for t in range(C.L):
        jR = R.j_sa(int(ci[t]), strict)
        I = Ideal(C.ring, ideal_gen_of(R, jR))
        out[t] = C.idx(ideal_times_module(I, C.module)) == C.j_sa(t, strict)
    return out


@_register("P2.6.v.fwd", "Proposition pro2.6 (v)", "If N≪^sa M, then (N:M)≪^sa R",
           "M multiplication, N ≪^sa M ⟹ (N:M) ≪^sa R", module_slices)
def _p26_v_fwd(spec, strict):
    C = ctx_of(spec)
    fl, saR, _, _ = _p26_v_parts(C, False)
    return res(fl.is_multiplication & C.sa, saR, [ax("N", C)])


@_register("P2.6.v.fwd-T", "Proposition pro2.6 (v)", "(resp. N≪_T^sa M), then ... (resp. (N:M)≪^sa_{(T:M)} R)",
           "M multiplication, N ≪_T M ⟹ (N:M) ≪_(T:M) R", module_slices, strict=True)
def _p26_v_fwd_t(spec, strict):
    C = ctx_of(spec)
    fl, _, tsa, tsaRc = _p26_v_parts(C, strict)
    return res(fl.is_multiplication & tsa, tsaRc, [ax("T", C), ax("N", C)])


@_register("P2.6.v.conv", "Proposition pro2.6 (v)", "The converse is true if M is also a finitely generated faithful module",
           "M f.g. faithful multiplication, (N:M) ≪^sa R ⟹ N ≪^sa M", module_slices)
def _p26_v_conv(spec, strict):
    C = ctx_of(spec)
    fl, saR, _, _ = _p26_v_parts(C, False)
    return res((fl.is_multiplication and fl.is_faithful) & saR, C.sa, [ax("N", C)])


@_register("P2.6.v.conv-T", "Proposition pro2.6 (v)", "The converse is true if M is also a finitely generated faithful module",
           "M f.g. faithful multiplication, (N:M) ≪_(T:M) R ⟹ N ≪_T M", module_slices, strict=True)
def _p26_v_conv_t(spec, strict):
    C = ctx_of(spec)
    fl, _, tsa, tsaRc = _p26_v_parts(C, strict)
    return res((fl.is_multiplication and fl.is_faithful) & tsaRc, tsa, [ax("T", C), ax("N", C)])


@_register("P2.6.v.J", "Proposition pro2.6 (v)", "Furthermore, in this case, J^sa_T(M)=J^sa_{(T:M)}(R)M",
           "M f.g. faithful multiplication ⟹ J_T^sa(M) = J_(T:M)^sa(R)·M", module_slices, strict=True)
def _p26_v_j(spec, strict):
    C = ctx_of(spec)
    fl = C.flags
    flag = fl.is_multiplication and fl.is_faithful
    return res(np.full(C.L, flag), _j_identity(C, strict), [ax("T", C)])


# epimorphisms: quotient maps p_K for every corpus module, plus every epi in the hom corpus

def epi_slices(cfg: CorpusConfig):
    yield from sub_slices(cfg, "K")
    yield from hom_slices("epi")(cfg)


def hom_of(spec: dict) -> Hom:
    A = get_context(spec["ring"], spec["source"]).module
    B = get_context(spec["ring"], spec["target"]).module
    return Hom(A, B, spec["matrix"])


def epi_maps(spec: dict):
    """``(A, B, push_idx, pre_idx)`` for the epimorphism named by ``spec``."""
    if "K" in spec:
        A = ctx_of(spec)
        k = nidx(A, spec["K"])
        B, up = A.quotient(k)
        push_idx = np.array([up[int(A.join[x, k])] for x in range(A.L)])
        inv = {v: u for u, v in up.items()}
        pre_idx = np.array([inv[y] for y in range(B.L)])
        return A, B, push_idx, pre_idx
    f = hom_of(spec)
    A, B = context_for(f.source), context_for(f.target)
    push_idx = np.array([B.idx(push(f, X)) for X in A.subs])
    pre_idx = np.array([A.idx(preimage(f, Y)) for Y in B.subs])
    return A, B, push_idx, pre_idx


@_register("P2.6.vi", "Proposition pro2.6 (vi)", "If N'≪_{T'}^sa M' for some submodule T' of M', then f⁻¹(N')≪^sa_{f⁻¹(T')} M",
           "f: M → M' epi, N' ≪_T' M' ⟹ f⁻¹(N') ≪_f⁻¹(T') M", epi_slices, strict=True)
def _p26_vi(spec, strict):
    A, B, _, pre = epi_maps(spec)
    return res(B.tsa(strict), A.tsa(strict)[np.ix_(pre, pre)], [ax("T'", B), ax("N'", B)])


@_register("Thm.finv-hollow", "Theorem on f⁻¹-hollowness", "If M' is a T'-sa-hollow module, then M is an f⁻¹(T')-sa-hollow module",
           "f: M → M' epi, M' T'-sa-hollow ⟹ M f⁻¹(T')-sa-hollow", epi_slices, strict=True,
           vacuous=(True, False))
def _finv_hollow(spec, strict):
    A, B, _, pre = epi_maps(spec)
    return res(B.tsa(strict).all(1), A.tsa(strict)[pre].all(1), [ax("T'", B)])


@_register("Ex.iv.claim", "Example (iv)", "π(N)=π(0)=⟨0̄⟩ is not π(T)-sa-small submodule of Z_8",
           "images under an epimorphism: N ≪_T M ⟹ f(N) ≪_f(T) M' (expected to fail)",
           chain(fixed({"ring": "Z", "module": "Z", "window": 8, "K": "8Z",
                        "pick": {"T": "2Z", "N": "0"}}), epi_slices), refuted=True)
def _ex_iv(spec, strict):
    A, B, push_idx, _ = epi_maps(spec)
    r = res(A.tsa(), B.tsa()[np.ix_(push_idx, push_idx)], [ax("T", A), ax("N", A)],
            witness=tsa_witness(B, lambda i: push_idx[i[0]], lambda i: push_idx[i[1]], False))
    return pick(r, spec)


def _quot_tables(spec: dict, strict: bool):
    C = ctx_of(spec)
    n = nidx(C, spec["N"])
    Q, up = C.quotient(n)
    U = np.array(sorted(up))
    q = np.array([up[int(u)] for u in U])
    return C, n, Q, U, q


@_register("P2.6.vii", "Proposition pro2.6 (vii)", "If K/N≪^sa_{T/N} M/N, then K≪^sa_T M and N≪^sa_T M",
           "N ⊊ T, N ≤ K, K/N ≪_T/N M/N ⟹ K ≪_T M and N ≪_T M", sub_slices, strict=True)
def _p26_vii(spec, strict):
    C, n, Q, U, q = _quot_tables(spec, strict)
    tsa, tsaQ = C.tsa(strict), Q.tsa(strict)
    hyp = (U != n)[:, None] & tsaQ[np.ix_(q, q)]
    concl = tsa[np.ix_(U, U)] & tsa[U, n][:, None]
    return res(hyp, concl, [ax("T", C, U), ax("K", C, U)])


@_register("Ex.converse-fails", "Example after the f⁻¹-hollow theorem", "K/N=4Z/8Z is not 2Z/8Z-sa-small submodule of Z/8Z",
           "converse of pro2.6 (vii): K ≪_T M and N ≪_T M ⟹ K/N ≪_T/N M/N (expected to fail)",
           chain(fixed({"ring": "Z", "module": "Z", "window": 8, "N": "8Z",
                        "pick": {"T": "2Z", "K": "4Z"}}), sub_slices), refuted=True)
def _ex_conv(spec, strict):
    C, n, Q, U, q = _quot_tables(spec, strict)
    tsa, tsaQ = C.tsa(), Q.tsa()
    hyp = (U != n)[:, None] & tsa[np.ix_(U, U)] & tsa[U, n][:, None]
    concl = tsaQ[np.ix_(q, q)]
    r = res(hyp, concl, [ax("T", C, U), ax("K", C, U)],
            witness=tsa_witness(Q, lambda i: q[i[0]], lambda i: q[i[1]], False))
    return pick(r, spec)


def loc_slices(cfg: CorpusConfig):
    for s in finite_slices(cfg):
        R = parse_ring(s["ring"])
        if not R.is_finite:
            continue
        seen = set()
        for g in range(1, R.n):
            S = mcs_closure(R, [g])
            if 0 in S or S in seen:
                continue
            seen.add(S)
            yield {**s, "S": g}


@_register("P2.6.viii", "Proposition pro2.6 (viii)", "If S is a m.c.s. of R and S⁻¹N is an S⁻¹T-sa-small submodule of S⁻¹R-module S⁻¹M, then N is a T-sa-small submodule of M",
           "S⁻¹N ≪_S⁻¹T S⁻¹M ⟹ N ≪_T M (finite M over Z_n)", loc_slices, strict=True)
def _p26_viii(spec, strict):
    C = ctx_of(spec)
    loc = localize(C.module, [spec["S"]])
    P = context_for(loc.module)
    tr = np.array([P.idx(loc.transport(N)) for N in C.subs])
    return res(P.tsa(strict)[np.ix_(tr, tr)], C.tsa(strict), [ax("T", C), ax("N", C)])


# -- corollaries -----------------------------------------------------------------------------------

@_register("Cor.T-sa-hollow", "Corollary after pro2.6", "M is a T-sa-hollow module if and only if R is a (T:M)-sa-hollow ring",
           "M f.g. faithful multiplication ⟹ (M T-sa-hollow ⟺ R (T:M)-sa-hollow)", module_slices, strict=True)
def _cor_hollow(spec, strict):
    C = ctx_of(spec)
    fl = C.flags
    R = C.ring_ctx
    ci = colon_indices(C)
    flag = fl.is_multiplication and fl.is_faithful
    return res(np.full(C.L, flag), C.tsa(strict).all(1) == R.tsa(strict)[ci].all(1), [ax("T", C)])


def _cor_local(proper: bool):
    def fn(spec, strict):
        R = ctx_of(spec)
        ms = np.nonzero(R.maximal)[0]
        tsa = R.tsa(strict)
        flag = ring_flags(ring_n(R))["local"]
        m = int(ms[0]) if len(ms) else R.top
        hyp = flag & tsa[:, m][:, None] & np.ones((1, R.L), dtype=bool)
        if proper:
            hyp = hyp & (np.arange(R.L) != R.top)[None, :]
        return res(hyp, tsa, [ax("A", R), ax("I", R)])
    return fn


_register("Cor.local", "Corollary (local ring)", "If m∈S^sa_A(R), then I∈S^sa_A(R) for every ideal I of R",
          "R local, m ≪_A R ⟹ I ≪_A R for every ideal I",
          lambda cfg: ring_slices(cfg, windows=False), strict=True)(_cor_local(False))
_register("Cor.local.proper", "Corollary (local ring)", "The proof is straightforward by Proposition pro2.6 (ii)",
          "R local, m ≪_A R ⟹ I ≪_A R for every proper ideal I",
          lambda cfg: ring_slices(cfg, windows=False), variant="as-proved")(_cor_local(True))


# -- radicals ----------------------------------------------------------------------------------------

@_register("L3.16", "Lemma L3.16", "If I≪^sa R, then rad(I)≪^sa R", "I ≪^sa R ⟹ rad(I) ≪^sa R", ring_slices)
def _l316(spec, strict):
    R = ctx_of(spec)
    rad = np.array([R.ideal_index(squarefree_kernel(ideal_gen_of(R, i))) for i in range(R.L)])
    return res(R.sa, R.sa[rad], [ax("I", R)])


@_register("Prop.rad", "Proposition after Lemma L3.16", "Let M be a finitely generated faithful multiplication R-module. If N≪^sa M, then rad(N)≪^sa M",
           "M f.g. faithful multiplication, N ≪^sa M ⟹ rad(N) ≪^sa M", module_slices)
def _prop_rad(spec, strict):
    C = ctx_of(spec)
    fl = C.flags
    flag = fl.is_faithful and fl.is_multiplication
    if not flag:
        return res(np.zeros(C.L), np.ones(C.L), [ax("N", C)])
    if C.is_window:
        rad = [C.idx(C.module.line(squarefree_kernel(N.k))) for N in C.subs]
    else:
        rad = [C.idx(rad_submodule(N)) for N in C.subs]
    return res(C.sa, C.sa[np.array(rad)], [ax("N", C)])


# -- N ∩ K, K + H -------------------------------------------------------------------------------------

@_register("Thm.NcapK", "Theorem on N∩K", "Let N be a nonzero sa-small submodule of M and K≤M with (N:K)+(K:N)=R, then N∩K≠0",
           "0 ≠ N ≪^sa M, (N:K) + (K:N) = R ⟹ N ∩ K ≠ 0", module_slices)
def _ncapk(spec, strict):
    C = ctx_of(spec)
    L = C.L
    hyp = np.zeros((L, L), dtype=bool)
    for a in range(L):
        if a == C.zero or not C.sa[a]:
            continue
        N = C.subs[a]
        for b in range(L):
            K = C.subs[b]
            hyp[a, b] = Ideal(C.ring, gcd(colon(N, K).gen, colon(K, N).gen)).is_unit
    return res(hyp, C.meet != C.zero, [ax("N", C), ax("K", C)])


@_register("Thm.KH.i", "Theorem on K+H (i)", "If K+H≪^sa_T M, then K≪^sa_T M and H≪^sa_T M",
           "K + H ≪_T M ⟹ K ≪_T M and H ≪_T M", module_slices, strict=True)
def _kh_i(spec, strict):
    C = ctx_of(spec)
    tsa = C.tsa(strict)
    return res(tsa[:, C.join], tsa[:, :, None] & tsa[:, None, :], [ax("T", C), ax("K", C), ax("H", C)])


@_register("Thm.KH.ii", "Theorem on K+H (ii)", "If M is a prime module and K≪^sa_T M and K+H≠M, then K+H≪^sa_T M",
           "M prime, K ≪_T M, K + H ≠ M ⟹ K + H ≪_T M", module_slices, strict=True)
def _kh_ii(spec, strict):
    C = ctx_of(spec)
    tsa = C.tsa(strict)
    hyp = C.flags.is_prime & tsa[:, :, None] & (C.join != C.top)[None, :, :]
    return res(hyp, tsa[:, C.join], [ax("T", C), ax("K", C), ax("H", C)])


# -- direct sums, monomorphisms, composition, flatness -------------------------------------------------

def sum_slices(cfg: CorpusConfig):
    for n in cfg.ring_moduli:
        fs = invariant_factor_lists(n, cfg.sum_max_order, cfg.max_rank)
        for f1 in fs:
            for f2 in fs:
                if len(f1) + len(f2) <= cfg.max_rank and _prod(f1) * _prod(f2) <= cfg.sum_max_order:
                    yield {"ring": f"Z/{n}", "M1": _lab(f1), "M2": _lab(f2)}


def _prod(f):
    p = 1
    for d in f:
        p *= d
    return p


def _lab(f):
    return " x ".join(f"Z/{d}" for d in f)


@_register("Thm.direct-sum", "Theorem on direct sums", "N₁⊕N₂≪^sa_{T₁⊕T₂} M₁⊕M₂",
           "R semisimple hollow, N_i ≪_Ti M_i ⟹ N1 ⊕ N2 ≪_T1⊕T2 M1 ⊕ M2", sum_slices, strict=True)
def _direct_sum(spec, strict):
    A, B = get_context(spec["ring"], spec["M1"]), get_context(spec["ring"], spec["M2"])
    R = A.ring_ctx
    flag = ring_flags(ring_n(R))["semisimple"] and hollow_ring(R)
    ds = direct_sum(A.module, B.module)
    S = context_for(ds.module)
    d = np.array([[S.idx(ds.sub(X, Y)) for Y in B.subs] for X in A.subs])
    ta, tb, ts = A.tsa(strict), B.tsa(strict), S.tsa(strict)
    hyp = flag & ta[:, None, :, None] & tb[None, :, None, :]
    # axes (T1, T2, N1, N2)
    concl = ts[d[:, :, None, None], d[None, None, :, :]]
    return res(hyp, concl, [ax("T1", A), ax("T2", B), ax("N1", A), ax("N2", B)])


def _mono_image(f: Hom):
    P = submodule_as_module(f.image)
    Pc = context_for(P.module)
    A = context_for(f.source)
    img = np.array([Pc.idx(P.transport(push(f, X))) for X in A.subs])
    return A, Pc, img


@_register("Thm.mono", "Theorem on monomorphisms", "If K≪^sa_T M, then f(K)≪^sa_{f(T)} f(M)",
           "f mono, K ≪_T M ⟹ f(K) ≪_f(T) f(M) (f(M) re-presented as a module)", hom_slices("mono"), strict=True)
def _mono(spec, strict):
    f = hom_of(spec)
    A, P, img = _mono_image(f)
    return res(A.tsa(strict), P.tsa(strict)[np.ix_(img, img)], [ax("T", A), ax("K", A)])


def _composition(as_proved: bool):
    def fn(spec, strict):
        f = hom_of(spec)
        A, B = context_for(f.source), context_for(f.target)
        fT = np.array([B.idx(push(f, T)) for T in A.subs])
        pre = np.array([A.idx(preimage(f, Y)) for Y in B.subs])
        im = B.idx(f.image)
        tb, ta = B.tsa(strict), A.tsa(strict)
        hyp = tb[np.ix_(fT, np.arange(B.L))].T          # (Y, T)
        concl = ta[np.arange(A.L)[None, :], pre[:, None]]  # T-sa-smallness of Ker(g∘f) = f⁻¹(Y)
        if not as_proved:
            concl = concl & (B.join[im] == B.top)[:, None]
        return res(hyp, concl, [ax("Y", B), ax("T", A)])
    return fn


_register("Thm.composition", "Theorem on composition", "then g∘f: N→M is also a T-sa-small epimorphism",
          "f mono, g = p_Y an f(T)-sa-small epi ⟹ g∘f is an epi with T-sa-small kernel",
          hom_slices("mono"), strict=True)(_composition(False))
_register("Thm.composition.as-proved", "Theorem on composition", "Therefore Ann(X)⊆Ann(f(X))≪(T:_R N)",
          "f mono, g = p_Y an f(T)-sa-small epi ⟹ Ker(g∘f) ≪_T N (epi-ness not required)",
          hom_slices("mono"), strict=True, variant="as-proved")(_composition(True))


@_register("Thm.composition.colon-step", "Theorem on composition", "We have (f(T):_R K)⊆(T:_R N)",
           "f mono ⟹ (f(T):K) ⊆ (T:N) (measured proof step)", hom_slices("mono"), variant="proof-step")
def _comp_colon(spec, strict):
    f = hom_of(spec)
    A, B = context_for(f.source), context_for(f.target)
    ok = [colon(push(f, T), B.module.full) <= Ideal(A.ring, int(A.col_top[i]))
          for i, T in enumerate(A.subs)]
    return res(np.ones(A.L), ok, [ax("T", A)])


def flat_slices(cfg: CorpusConfig):
    for s in finite_slices(cfg):
        M = ctx_of(s).module
        if M.order <= cfg.flat_max_order and 2 * M.rank <= cfg.max_rank + 1:
            yield {**s, "k": 2}


def _flat(spec):
    C = ctx_of(spec)
    ft = tensor_with_free(C.module, spec["k"])
    P = context_for(ft.module)
    tr = np.array([P.idx(ft.transport(N)) for N in C.subs])
    return C, P, tr


@_register("Thm.flat.i", "Theorem on faithfully flat modules (i)", "N is a sa-small submodule of M if and only if F⊗N is a sa-small submodule of F⊗M",
           "F = R^2: N ≪^sa M ⟺ N² ≪^sa M²", flat_slices)
def _flat_i(spec, strict):
    C, P, tr = _flat(spec)
    return res(np.ones(C.L), C.sa == P.sa[tr], [ax("N", C)])


@_register("Thm.flat.ii", "Theorem on faithfully flat modules (ii)", "N is a T-sa-small submodule of M if and only if F⊗N is a F⊗T-sa-small submodule of F⊗M",
           "F = R^2: N ≪_T M ⟺ N² ≪_T² M²", flat_slices, strict=True)
def _flat_ii(spec, strict):
    C, P, tr = _flat(spec)
    rows = np.stack([P.tsa_row(int(t), strict)[tr] for t in tr])
    return res(np.ones((C.L, C.L)), C.tsa(strict) == rows, [ax("T", C), ax("N", C)])


@_register("Thm.flat.colon-step", "Theorem on faithfully flat modules (ii)", "It is easy to see that (T:_R M)=(F⊗T:_R F⊗M)",
           "F = R^2: (T:M) = (T²:M²) (measured proof step)", flat_slices, variant="proof-step")
def _flat_colon(spec, strict):
    C, P, tr = _flat(spec)
    return res(np.ones(C.L), C.col_top == P.col_top[tr], [ax("T", C)])

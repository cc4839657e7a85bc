"""Deterministic corpus of rings, modules and homomorphisms."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache

from ..errors import BoundExceeded
from ..modules import format_module, module_make
from ..morphisms import homs
from ..rings import RingDesc, divisors, is_prime, prime_factors


@dataclass(frozen=True)
class CorpusConfig:
    ring_moduli: tuple[int, ...] = tuple(range(2, 13))
    include_Z: bool = True
    max_module_order: int = 200
    max_rank: int = 3
    z_window_max: int = 24         # Z line: windows {dZ : d | w} for w <= this
    hom_max_order: int = 8         # all homs between modules of at most this order
    flat_max_order: int = 12       # M with R^2 ⊗ M enumerated
    sum_max_order: int = 64        # pairs for the direct-sum statement
    seed: int = 0                  # every slot is exhaustive; kept for reproducible extensions

    def __post_init__(self):
        if min(self.ring_moduli, default=2) < 2 or self.max_module_order < 1 or self.max_rank < 1:
            raise BoundExceeded("corpus bounds must be positive")

    def to_json(self) -> dict:
        d = asdict(self)
        d["ring_moduli"] = list(self.ring_moduli)
        return d


DEFAULT = CorpusConfig()


def invariant_factor_lists(n: int, max_order: int, max_rank: int) -> list[tuple[int, ...]]:
    """Chains ``d1 | d2 | ... | dk`` of divisors of ``n`` (all > 1), canonical order."""
    ds = [d for d in divisors(n) if d > 1]
    out: list[tuple[int, ...]] = []

    def rec(cur: tuple[int, ...], order: int):
        for d in ds:
            if cur and d % cur[-1]:
                continue
            if order * d > max_order or len(cur) >= max_rank:
                continue
            nxt = cur + (d,)
            out.append(nxt)
            rec(nxt, order * d)

    rec((), 1)
    out.sort(key=lambda f: (_prod(f), len(f), f))
    return out


def _prod(f) -> int:
    p = 1
    for d in f:
        p *= d
    return p


def _label(f) -> str:
    return " x ".join(f"Z/{d}" for d in f)


WORKED_MODULES = (("Z", "Z/6"), ("Z", "Z/8"), ("Z/8", "Z/8"))


@lru_cache(maxsize=None)
def finite_modules(cfg: CorpusConfig = DEFAULT) -> tuple[tuple[str, str], ...]:
    """``(ring, module)`` labels of every nonzero finite module in the corpus.

    Over ``Z_n``: all invariant-factor chains within the bounds. Over Z: the
    same abelian groups (exponent dividing some listed modulus), viewed as
    Z-modules. The modules of the worked examples come first.
    """
    seen = list(WORKED_MODULES)
    for n in cfg.ring_moduli:
        for f in invariant_factor_lists(n, cfg.max_module_order, cfg.max_rank):
            seen.append((f"Z/{n}", _label(f)))
    if cfg.include_Z:
        groups = set()
        for n in cfg.ring_moduli:
            groups.update(invariant_factor_lists(n, cfg.max_module_order, cfg.max_rank))
        for f in sorted(groups, key=lambda f: (_prod(f), len(f), f)):
            seen.append(("Z", _label(f)))
    return tuple(dict.fromkeys(seen))


@lru_cache(maxsize=None)
def z_windows(cfg: CorpusConfig = DEFAULT) -> tuple[int, ...]:
    """Window sizes for the Z line; 8 (home of 8Z, 4Z, 2Z in the worked examples) first."""
    if not cfg.include_Z:
        return ()
    ws = [8] + [w for w in range(1, cfg.z_window_max + 1) if w != 8]
    return tuple(w for w in ws if w <= cfg.z_window_max)


def ring_labels(cfg: CorpusConfig = DEFAULT) -> tuple[str, ...]:
    return tuple(f"Z/{n}" for n in cfg.ring_moduli)


def ring_flags(n: int) -> dict:
    """Ring-level hypotheses for ``Z_n`` (``n = 0``: Z)."""
    if n == 0:
        return {"finite": False, "semisimple": False, "simple": False, "local": False,
                "domain": True, "vnr": False}
    ps = prime_factors(n)
    sqf = _prod(ps) == n
    return {"finite": True, "semisimple": sqf, "simple": is_prime(n), "local": len(ps) == 1,
            "domain": is_prime(n), "vnr": sqf}


@lru_cache(maxsize=None)
def hom_corpus(cfg: CorpusConfig = DEFAULT) -> tuple[dict, ...]:
    """Every homomorphism between corpus modules over ``Z_n`` of small order."""
    out = []
    for n in cfg.ring_moduli:
        R = RingDesc(n)
        mods = [module_make(R, list(f))
                for f in invariant_factor_lists(n, cfg.hom_max_order, cfg.max_rank)]
        for A in mods:
            for B in mods:
                for f in homs(A, B):
                    out.append({"ring": str(R), "source": format_module(A),
                                "target": format_module(B),
                                "matrix": [list(r) for r in f.matrix],
                                "epi": f.is_epi, "mono": f.is_mono})
    return tuple(out)


def summary(cfg: CorpusConfig = DEFAULT) -> dict:
    mods = finite_modules(cfg)
    hc = hom_corpus(cfg)
    return {
        "schema": 1,
        "config": cfg.to_json(),
        "rings": list(ring_labels(cfg)) + (["Z"] if cfg.include_Z else []),
        "finite_modules": len(mods),
        "z_windows": list(z_windows(cfg)),
        "homs": len(hc),
        "monos": sum(h["mono"] for h in hc),
        "epis": sum(h["epi"] for h in hc),
        "worked_instances": [f"{m} over {r}" for r, m in WORKED_MODULES]
        + ["Z over Z", "presented:2Z x Z/8 over Z (witness only)"],
    }


def generate_corpus(cfg: CorpusConfig = DEFAULT):
    """Yield corpus instantiations as plain dicts, canonical order."""
    for r, m in finite_modules(cfg):
        yield {"kind": "module", "ring": r, "module": m}
    for w in z_windows(cfg):
        yield {"kind": "z_window", "ring": "Z", "module": "Z", "window": w}
    for h in hom_corpus(cfg):
        yield {"kind": "hom", **h}

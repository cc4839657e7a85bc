"""The rings Z_n and Z, their principal ideals and ring-level predicates."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod

from .errors import InfiniteEnumeration, InfiniteLattice, ParseError, RingMismatch
from .intmat import lcm


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n >= 1`` in increasing order (trial division)."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    out = []
    p = 2
    n = abs(n)
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def squarefree_kernel(n: int) -> int:
    if n == 0:
        return 0
    return prod(prime_factors(n))


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == (n,)


@dataclass(frozen=True, order=True)
class RingDesc:
    """``Z_n`` when ``n >= 2``; the integers when ``n == 0``."""

    n: int = 0

    def __post_init__(self):
        if self.n == 1 or self.n < 0:
            raise ValueError(f"Z_{self.n} is not a ring with 1 != 0")

    @property
    def is_finite(self) -> bool:
        return self.n != 0

    @property
    def zero_gen(self) -> int:
        """Canonical generator of the zero ideal."""
        return self.n

    def ideal(self, d: int) -> Ideal:
        return Ideal(self, d)

    @property
    def unit_ideal(self) -> Ideal:
        return Ideal(self, 1)

    @property
    def zero_ideal(self) -> Ideal:
        return Ideal(self, self.n)

    def __str__(self):
        return f"Z/{self.n}" if self.n else "Z"


ZZ = RingDesc(0)


def Zn(n: int) -> RingDesc:
    return RingDesc(n)


class Ideal:
    """A principal ideal ``dR`` held by its canonical nonnegative generator."""

    __slots__ = ("ring", "gen")

    def __init__(self, ring: RingDesc, d: int):
        if ring.is_finite:
            d = gcd(d, ring.n)
        else:
            d = abs(d)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gen", d)

    def __setattr__(self, key, value):
        raise AttributeError("Ideal is immutable")

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.gen == other.gen

    def __hash__(self):
        return hash((self.ring, self.gen))

    def __repr__(self):
        return f"Ideal({self.ring}, {self.gen})"

    def __str__(self):
        if self.ring.is_finite:
            return f"({self.gen}) mod {self.ring.n}"
        return f"{self.gen}Z"

    @property
    def is_zero(self) -> bool:
        return self.gen == self.ring.zero_gen

    @property
    def is_unit(self) -> bool:
        return self.gen == 1

    def _check(self, other: Ideal):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: Ideal) -> Ideal:
        self._check(other)
        return Ideal(self.ring, gcd(self.gen, other.gen))

    def __and__(self, other: Ideal) -> Ideal:
        self._check(other)
        return Ideal(self.ring, lcm(self.gen, other.gen))

    def __mul__(self, other: Ideal) -> Ideal:
        self._check(other)
        return Ideal(self.ring, self.gen * other.gen)

    def __le__(self, other: Ideal) -> bool:
        """Containment ``self ⊆ other``."""
        self._check(other)
        if other.gen == 0:
            return self.gen == 0
        return self.gen % other.gen == 0

    def __lt__(self, other: Ideal) -> bool:
        return self <= other and self != other

    def contains_element(self, r: int) -> bool:
        return Ideal(self.ring, r) <= self


def parse_ring(text: str) -> RingDesc:
    t = text.replace(" ", "")
    if t == "Z":
        return ZZ
    m = re.fullmatch(r"Z(?:/|_)\(?(\d+)\)?(?:Z)?", t)
    if not m:
        raise ParseError(f"cannot parse ring {text!r}")
    return RingDesc(int(m.group(1)))


def parse_ideal(text: str, ring: RingDesc | None = None) -> Ideal:
    """Parse ``dZ`` / ``Z`` / ``0`` (ring Z) or ``(d) mod n``."""
    t = text.replace(" ", "")
    m = re.fullmatch(r"\((\d+)\)mod(\d+)", t)
    if m:
        r = RingDesc(int(m.group(2)))
        if ring is not None and ring != r:
            raise ParseError(f"ideal {text!r} is not in {ring}")
        return Ideal(r, int(m.group(1)))
    m = re.fullmatch(r"(\d*)Z", t)
    if m:
        if ring is not None and ring.is_finite:
            raise ParseError(f"ideal {text!r} is not in {ring}")
        return Ideal(ZZ, int(m.group(1) or 1))
    if t == "0":
        r = ring or ZZ
        return r.zero_ideal
    raise ParseError(f"cannot parse ideal {text!r}")


def ideal_lattice(ring: RingDesc) -> list[Ideal]:
    """All ideals of ``Z_n``: unit ideal first, zero ideal last."""
    if not ring.is_finite:
        raise InfiniteLattice("Z has infinitely many ideals")
    return [Ideal(ring, d) for d in divisors(ring.n)]


def jacobson_radical_ring(ring: RingDesc) -> Ideal:
    if not ring.is_finite:
        return ring.zero_ideal
    return Ideal(ring, squarefree_kernel(ring.n))


def maximal_ideals(ring: RingDesc) -> list[Ideal]:
    if not ring.is_finite:
        raise InfiniteEnumeration("Z has infinitely many maximal ideals")
    return [Ideal(ring, p) for p in prime_factors(ring.n)]


def is_small_ideal_in(I: Ideal, A: Ideal) -> bool:
    """Is ``I`` a small submodule of the ideal ``A`` (viewed as an R-module)?

    Returns False when ``I`` is not contained in ``A``. Finite rings scan the
    ideals below ``A``; over Z, ``aZ`` is small in ``sZ`` exactly when
    ``a == 0``.
    """
    I._check(A)
    if not I <= A:
        return False
    if not I.ring.is_finite:
        return I.gen == 0
    return _small_in_finite(I.ring.n, I.gen, A.gen)


@lru_cache(maxsize=None)
def _small_in_finite(n: int, a: int, s: int) -> bool:
    for l in divisors(n):
        if l % s == 0 and l != s and gcd(a, l) == s:
            return False
    return True


def rad_ideal(I: Ideal) -> Ideal:
    """``{x : x^k in I for some k}``; squarefree kernel of the generator."""
    return Ideal(I.ring, squarefree_kernel(I.gen))


@dataclass(frozen=True)
class RingFlags:
    is_semisimple: bool
    is_simple: bool
    is_local: bool
    is_vnr: bool
    is_domain: bool
    is_field: bool
    idempotents: tuple[int, ...] | None
    units: tuple[int, ...] | None
    zero_divisors: tuple[int, ...] | None


def ring_predicates(ring: RingDesc, elements: bool = True) -> RingFlags:
    """Structural flags of ``Z_n`` / ``Z``.

    Element lists are produced by scanning residues; over Z they raise
    InfiniteEnumeration unless ``elements=False``.
    """
    if not ring.is_finite:
        if elements:
            raise InfiniteEnumeration("cannot list elements of Z")
        return RingFlags(False, False, False, False, True, False, None, None, None)
    n = ring.n
    ps = prime_factors(n)
    squarefree = prod(ps) == n
    prime = ps == (n,)
    idem = units = zd = None
    if elements:
        idem = tuple(e for e in range(n) if e * e % n == e)
        units = tuple(u for u in range(n) if gcd(u, n) == 1)
        zd = tuple(x for x in range(n) if any(x * y % n == 0 for y in range(1, n)))
    return RingFlags(
        is_semisimple=squarefree,
        is_simple=prime,
        is_local=len(ps) == 1,
        is_vnr=squarefree,
        is_domain=prime,
        is_field=prime,
        idempotents=idem,
        units=units,
        zero_divisors=zd,
    )

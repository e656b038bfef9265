"""Reduced fractions as vertices of the Farey diagram.

A :class:`Fraction` is a reduced pair ``num/den`` with ``den >= 0``.  The
point at infinity is the single value ``1/0``.  Only the operations needed
to walk the Farey tessellation are provided: determinants, neighbor tests,
mediants and Stern-Brocot parents.  There is no general field arithmetic.
"""

from __future__ import annotations

from math import gcd
from operator import itemgetter
from typing import Iterator

__all__ = [
    "Fraction",
    "INFINITY",
    "ZERO",
    "ONE",
    "make_fraction",
    "det",
    "is_farey_neighbor",
    "mediant",
    "parents",
    "reduced_fractions",
]


class Fraction(tuple):
    """Canonical reduced fraction; ``1/0`` is a legal value.

    Instances are immutable and hashable (a ``(num, den)`` pair underneath,
    which keeps hashing and equality cheap in the hot loops).  Ordering
    treats ``1/0`` as ``+infinity``.  Build them with :func:`make_fraction`
    or :meth:`Fraction.parse`.
    """

    __slots__ = ()

    num = property(itemgetter(0))
    den = property(itemgetter(1))

    def __new__(cls, num: int, den: int) -> Fraction:
        return tuple.__new__(cls, _normalize(num, den))

    @classmethod
    def _trusted(cls, num: int, den: int) -> Fraction:
        # caller guarantees reduced form with den >= 0 and 1/0 canonical
        return tuple.__new__(cls, (num, den))

    @classmethod
    def from_vector(cls, num: int, den: int) -> Fraction:
        """Projective reading of ``(num, den)``: ``(-1, 0)`` is ``1/0``."""
        if den < 0 or (den == 0 and num < 0):
            num, den = -num, -den
        return cls(num, den)

    @classmethod
    def parse(cls, text: str) -> Fraction:
        """Parse ``"p/q"`` (or a bare integer); non-reduced input is reduced."""
        text = text.strip()
        if "/" in text:
            a, _, b = text.partition("/")
            return cls(int(a), int(b))
        return cls(int(text), 1)

    def __getnewargs__(self):
        return tuple(self)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_knot(self) -> bool:
        """Odd denominator: the fraction labels a 2-bridge knot."""
        return self.den % 2 == 1

    @property
    def is_link(self) -> bool:
        """Even (nonzero) denominator: a two-component 2-bridge link."""
        return self.den != 0 and self.den % 2 == 0

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Fraction({self.num}, {self.den})"

    def __lt__(self, other: Fraction) -> bool:
        if self.den == 0:
            return False
        if other.den == 0:
            return True
        return self.num * other.den < other.num * self.den

    def __le__(self, other: Fraction) -> bool:
        return self == other or self < other

    def __gt__(self, other: Fraction) -> bool:
        return other < self

    def __ge__(self, other: Fraction) -> bool:
        return self == other or other < self


def _normalize(num: int, den: int) -> tuple[int, int]:
    num, den = int(num), int(den)
    if num == 0 and den == 0:
        raise ValueError("0/0 is not a fraction")
    if den == 0:
        if num < 0:
            raise ValueError(f"{num}/0: negative infinity is not a vertex")
        return 1, 0
    if den < 0:
        num, den = -num, -den
    g = gcd(num, den)
    return num // g, den // g


def make_fraction(n: int, d: int) -> Fraction:
    """Reduced canonical form of ``n/d``.

    >>> make_fraction(26, 68)
    Fraction(13, 34)
    >>> make_fraction(3, 0)
    Fraction(1, 0)
    """
    return Fraction(n, d)


INFINITY = Fraction._trusted(1, 0)
ZERO = Fraction._trusted(0, 1)
ONE = Fraction._trusted(1, 1)


def det(f: Fraction, g: Fraction) -> int:
    """Edge determinant ``num(f)*den(g) - num(g)*den(f)``."""
    return f.num * g.den - g.num * f.den


def is_farey_neighbor(f: Fraction, g: Fraction) -> bool:
    return abs(f.num * g.den - g.num * f.den) == 1


def mediant(f: Fraction, g: Fraction) -> Fraction:
    """Mediant of two Farey neighbors; raises ``ValueError`` otherwise."""
    if not is_farey_neighbor(f, g):
        raise ValueError(f"{f} and {g} are not Farey neighbors")
    # neighbors give a primitive sum vector, no reduction needed
    return Fraction._trusted(f.num + g.num, f.den + g.den)


def parents(f: Fraction) -> tuple[Fraction, Fraction]:
    """The Farey neighbors ``(a/c, b/d)``, ``a/c < f < b/d``, whose mediant is ``f``.

    Defined for ``0 < f <= 1``; ``1/1`` has parents ``(0/1, 1/0)``.
    """
    p, q = f.num, f.den
    if q == 0 or p <= 0 or p > q:
        raise ValueError(f"parents are defined on (0, 1]; got {f}")
    if q == 1:
        return ZERO, INFINITY
    # left parent a/c satisfies p*c - a*q = 1 with 0 < c < q
    c = pow(p, -1, q)
    a = (p * c - 1) // q
    return Fraction._trusted(a, c), Fraction._trusted(p - a, q - c)


def reduced_fractions(max_q: int, min_q: int = 2) -> Iterator[Fraction]:
    """Every reduced ``p/q`` with ``0 < p < q`` and ``min_q <= q <= max_q``,
    ordered by ``(q, p)``."""
    for q in range(max(min_q, 2), max_q + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                yield Fraction._trusted(p, q)

"""Exact integer helpers and the two-modulus CRT residue ``<i|j>``.

``<i|j>`` (for moduli m, n) is the unique integer in ``[1, lcm(m, n)]`` that is
congruent to ``i`` mod ``m`` and to ``j`` mod ``n``.  It exists iff
``i = j (mod gcd(m, n))``; :func:`crt` returns ``None`` otherwise.

All arithmetic is on Python ints.  The single modular inverse needed per pair
of moduli is cached on :class:`Moduli`; when ``gmpy2`` is importable it is used
for that inverse, which is the only super-linear step at 10^5 digits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

try:
    import gmpy2
except ImportError:  # pragma: no cover - exercised only without gmpy2
    gmpy2 = None

__all__ = ["DomainError", "Moduli", "gcd", "lcm", "crt", "modinv"]


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def gcd(x: int, y: int) -> int:
    """Nonnegative gcd of ``|x|`` and ``|y|``; ``gcd(0, 0) == 0``."""
    return math.gcd(x, y)


def lcm(x: int, y: int) -> int:
    if x == 0 or y == 0:
        raise DomainError("lcm is undefined for a zero argument")
    return abs(x // math.gcd(x, y) * y)


def modinv(x: int, modulus: int) -> int:
    """Inverse of ``x`` modulo ``modulus`` (``gcd(x, modulus)`` must be 1)."""
    if modulus == 1:
        return 0
    if math.gcd(x, modulus) != 1:
        raise DomainError(f"{x} has no inverse modulo {modulus}")
    if gmpy2 is not None:
        return int(gmpy2.invert(x, modulus))
    return pow(x, -1, modulus)


@dataclass(frozen=True)
class Moduli:
    """Lengths ``m, n >= 2`` of the two directed cycles."""

    m: int
    n: int

    def __post_init__(self):
        if not isinstance(self.m, int) or not isinstance(self.n, int):
            raise DomainError("moduli must be integers")
        if self.m < 2 or self.n < 2:
            raise DomainError(f"moduli must be >= 2, got m={self.m}, n={self.n}")

    @cached_property
    def g(self) -> int:
        return math.gcd(self.m, self.n)

    @cached_property
    def lcm(self) -> int:
        return self.m // self.g * self.n

    @cached_property
    def _inv(self) -> int:
        # (m/g)^-1 mod (n/g)
        return modinv(self.m // self.g, self.n // self.g)

    def swapped(self) -> Moduli:
        return Moduli(self.n, self.m)

    def crt(self, i: int, j: int) -> int | None:
        m, n, g = self.m, self.n, self.g
        i %= m
        j %= n
        diff = j - i
        if diff % g:
            return None
        ng = n // g
        t = (diff // g) * self._inv % ng
        value = i + m * t  # in [0, lcm)
        return value if value else self.lcm


def crt(i: int, j: int, m: int | Moduli, n: int | None = None) -> int | None:
    """Return ``<i|j>`` for moduli ``(m, n)``, or ``None`` if it does not exist.

    ``m`` may be a :class:`Moduli`, in which case ``n`` is omitted.  Negative
    and out-of-range ``i, j`` are reduced first; the all-zero residue maps to
    ``lcm(m, n)``.

    >>> crt(-1, -1, 3, 5)
    14
    >>> crt(1, 0, 2, 4) is None
    True
    """
    mod = m if isinstance(m, Moduli) else Moduli(m, n)
    return mod.crt(i, j)

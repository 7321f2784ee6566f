"""Exact arithmetic over the supported coefficient rings: the integers,
the rationals, and the integers modulo m."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class RingMismatchError(ValueError):
    """Operands belong to different coefficient rings."""


@dataclass(frozen=True)
class Ring:
    """Descriptor of a coefficient ring: ``int``, ``rat`` or ``mod`` (m >= 2)."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("int", "rat", "mod"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "mod":
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise ValueError("modulus must be an integer >= 2")
        elif self.modulus is not None:
            raise ValueError(f"ring {self.kind!r} takes no modulus")

    def coeff(self, value) -> Coeff:
        return Coeff(self, value)

    def zero(self) -> Coeff:
        return Coeff(self, 0)

    def one(self) -> Coeff:
        return Coeff(self, 1)

    def __str__(self):
        return f"mod:{self.modulus}" if self.kind == "mod" else self.kind


INT = Ring("int")
RAT = Ring("rat")


def Zmod(m: int) -> Ring:
    return Ring("mod", m)


@dataclass(frozen=True)
class Coeff:
    """An element of a coefficient ring, always kept in normal form:
    rationals gcd-reduced with positive denominator, residues in [0, m)."""

    ring: Ring
    value: int | Fraction

    def __post_init__(self):
        if self.ring.kind == "rat":
            object.__setattr__(self, "value", Fraction(self.value))
        elif not isinstance(self.value, int):
            raise TypeError(f"{self.ring} coefficient must be an int, got {self.value!r}")
        elif self.ring.kind == "mod":
            object.__setattr__(self, "value", self.value % self.ring.modulus)

    @classmethod
    def _make(cls, ring: Ring, value) -> Coeff:
        # fast path for arithmetic results that are already normalized
        c = object.__new__(cls)
        object.__setattr__(c, "ring", ring)
        object.__setattr__(c, "value", value)
        return c

    def _coerce(self, other) -> Coeff:
        if isinstance(other, int):
            return Coeff(self.ring, other)
        if not isinstance(other, Coeff):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(f"mixed rings {self.ring} and {other.ring}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        v = self.value + other.value
        if self.ring.kind == "mod":
            v %= self.ring.modulus
        return Coeff._make(self.ring, v)

    __radd__ = __add__

    def __neg__(self):
        v = -self.value
        if self.ring.kind == "mod":
            v %= self.ring.modulus
        return Coeff._make(self.ring, v)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        v = self.value * other.value
        if self.ring.kind == "mod":
            v %= self.ring.modulus
        return Coeff._make(self.ring, v)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if self.ring.kind == "mod":
            return Coeff._make(self.ring, pow(self.value, k, self.ring.modulus))
        return Coeff._make(self.ring, self.value ** k)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_negative(self) -> bool:
        # residues are canonical representatives, never rendered with a sign
        return self.ring.kind != "mod" and self.value < 0

    def __abs__(self):
        return Coeff(self.ring, abs(self.value)) if self.is_negative() else self

    def __str__(self):
        return str(self.value)


def characteristic(ring: Ring) -> int:
    return ring.modulus if ring.kind == "mod" else 0


def is_unit(c: Coeff) -> bool:
    if c.ring.kind == "int":
        return c.value in (1, -1)
    if c.ring.kind == "rat":
        return c.value != 0
    return math.gcd(c.value, c.ring.modulus) == 1


def is_zero_divisor(c: Coeff) -> bool:
    if c.ring.kind != "mod" or c.value == 0:
        return False
    return math.gcd(c.value, c.ring.modulus) > 1


def is_nilpotent(c: Coeff) -> bool:
    if c.ring.kind != "mod":
        return c.value == 0
    m = c.ring.modulus
    # c is nilpotent mod m iff every prime factor of m divides c, in which
    # case the nilpotency index is at most log2(m).
    return pow(c.value, max(1, m.bit_length()), m) == 0


def inverse(c: Coeff) -> Coeff:
    """Multiplicative inverse; raises ValueError when c is not a unit."""
    if not is_unit(c):
        raise ValueError(f"{c} is not a unit in {c.ring}")
    if c.ring.kind == "rat":
        return Coeff(c.ring, 1 / c.value)
    if c.ring.kind == "mod":
        return Coeff(c.ring, pow(c.value, -1, c.ring.modulus))
    return c  # +-1 over the integers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


INFINITY = math.inf


def lambda_valuation(c: Coeff, lam: Coeff) -> int | float:
    """Largest k with lam^k dividing c over the integers; inf for c = 0.

    Only defined over the integers with lam of prime absolute value.
    """
    if c.ring != INT or lam.ring != INT:
        raise ValueError("the lambda-adic valuation is defined over the integers only")
    if not is_prime(abs(lam.value)):
        raise ValueError(f"lambda = {lam} is not a prime integer")
    if c.value == 0:
        return INFINITY
    v, p = 0, abs(lam.value)
    n = abs(c.value)
    while n % p == 0:
        n //= p
        v += 1
    return v


def parse_coeff(ring: Ring, text: str) -> Coeff:
    """Parse a coefficient literal: a decimal integer, or p/q over the rationals."""
    text = text.strip()
    if ring.kind == "rat":
        return Coeff(ring, Fraction(text))
    try:
        return Coeff(ring, int(text))
    except ValueError:
        raise ValueError(f"invalid {ring} coefficient {text!r}") from None

"""Sparse multivariate polynomials over an exact coefficient ring.

These form the base algebra whose monomials make up the tensor-word
alphabet used everywhere else.
"""
from __future__ import annotations

from dataclasses import dataclass

from .rings import Coeff, Ring, RingMismatchError, is_nilpotent


@dataclass(frozen=True)
class Monomial:
    """A power product of variables, stored as sorted (name, exponent) pairs
    with strictly positive exponents; the empty product is the unit."""

    exps: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        names = [v for v, _ in self.exps]
        if names != sorted(names) or len(set(names)) != len(names):
            raise ValueError("monomial variables must be sorted and distinct")
        if any(e <= 0 for _, e in self.exps):
            raise ValueError("monomial exponents must be positive")
        object.__setattr__(self, "_hash", hash(self.exps))
        object.__setattr__(self, "sort_key", (sum(e for _, e in self.exps), self.exps))

    def __hash__(self):
        # monomials are hashed constantly as word factors; cache it
        return self._hash

    @staticmethod
    def of(**exps: int) -> Monomial:
        return Monomial(tuple(sorted((v, e) for v, e in exps.items() if e != 0)))

    @staticmethod
    def _raw(exps: tuple[tuple[str, int], ...]) -> Monomial:
        # trusted constructor for products of already-valid monomials
        m = object.__new__(Monomial)
        object.__setattr__(m, "exps", exps)
        object.__setattr__(m, "_hash", hash(exps))
        object.__setattr__(m, "sort_key", (sum(e for _, e in exps), exps))
        return m

    def __mul__(self, other: Monomial) -> Monomial:
        if not self.exps:
            return other
        if not other.exps:
            return self
        merged = dict(self.exps)
        for v, e in other.exps:
            merged[v] = merged.get(v, 0) + e
        return Monomial._raw(tuple(sorted(merged.items())))

    def degree(self) -> int:
        return self.sort_key[0]

    def is_unit(self) -> bool:
        return not self.exps

    def divisible_by(self, var: str) -> bool:
        return any(v == var for v, _ in self.exps)

    def variables(self) -> set[str]:
        return {v for v, _ in self.exps}

    def to_obj(self):
        return [[v, e] for v, e in self.exps]

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self.exps)


UNIT_MONOMIAL = Monomial()


def _term_str(coeff: Coeff, body: str | None) -> tuple[bool, str]:
    """Render one term as (is_negative, unsigned text)."""
    c = abs(coeff)
    if body is None:
        return coeff.is_negative(), str(c)
    if c.value == 1:
        return coeff.is_negative(), body
    return coeff.is_negative(), f"{c}*{body}"


def _join_terms(parts: list[tuple[bool, str]]) -> str:
    if not parts:
        return "0"
    neg, text = parts[0]
    out = ("-" + text) if neg else text
    for neg, text in parts[1:]:
        out += (" - " if neg else " + ") + text
    return out


@dataclass(frozen=True)
class Poly:
    """A finite sum of monomials with nonzero coefficients from one ring.

    Terms are kept sorted in descending monomial order, so equality is
    structural and printing is deterministic.
    """

    ring: Ring
    terms: tuple[tuple[Monomial, Coeff], ...]

    @staticmethod
    def from_terms(ring: Ring, terms) -> Poly:
        acc: dict[Monomial, Coeff] = {}
        for mono, coeff in dict(terms).items():
            if coeff.ring != ring:
                raise RingMismatchError(f"coefficient ring {coeff.ring} != {ring}")
            if not coeff.is_zero():
                acc[mono] = coeff
        ordered = sorted(acc.items(), key=lambda t: t[0].sort_key, reverse=True)
        return Poly(ring, tuple(ordered))

    @staticmethod
    def zero(ring: Ring) -> Poly:
        return Poly(ring, ())

    @staticmethod
    def constant(c: Coeff) -> Poly:
        return Poly.from_terms(c.ring, {UNIT_MONOMIAL: c})

    @staticmethod
    def one(ring: Ring) -> Poly:
        return Poly.constant(ring.one())

    @staticmethod
    def variable(ring: Ring, name: str) -> Poly:
        return Poly.from_terms(ring, {Monomial.of(**{name: 1}): ring.one()})

    def _check(self, other: Poly):
        if not isinstance(other, Poly):
            raise TypeError(f"expected a polynomial, got {other!r}")
        if other.ring != self.ring:
            raise RingMismatchError(f"mixed rings {self.ring} and {other.ring}")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        acc = dict(self.terms)
        for mono, coeff in other.terms:
            acc[mono] = acc[mono] + coeff if mono in acc else coeff
        return Poly.from_terms(self.ring, acc)

    def __neg__(self) -> Poly:
        return Poly(self.ring, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (Coeff, int)):
            return self.scaled(other)
        self._check(other)
        acc: dict[Monomial, Coeff] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = m1 * m2
                c = c1 * c2
                acc[m] = acc[m] + c if m in acc else c
        return Poly.from_terms(self.ring, acc)

    def __rmul__(self, other):
        if isinstance(other, (Coeff, int)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, c: Coeff | int) -> Poly:
        if isinstance(c, int):
            c = self.ring.coeff(c)
        return Poly.from_terms(self.ring, {m: c * cf for m, cf in self.terms})

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly.one(self.ring)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def is_nilpotent(self) -> bool:
        # N(C[X]) = N(C)[X]: a polynomial is nilpotent exactly when all of
        # its coefficients are.
        return all(is_nilpotent(c) for _, c in self.terms)

    def coefficient(self, mono: Monomial) -> Coeff:
        for m, c in self.terms:
            if m == mono:
                return c
        return self.ring.zero()

    def variables(self) -> set[str]:
        out: set[str] = set()
        for m, _ in self.terms:
            out |= m.variables()
        return out

    def to_obj(self):
        return [{"coeff": str(c), "monomial": m.to_obj()} for m, c in self.terms]

    def __str__(self):
        parts = []
        for mono, coeff in self.terms:
            body = None if mono.is_unit() else str(mono)
            parts.append(_term_str(coeff, body))
        return _join_terms(parts)

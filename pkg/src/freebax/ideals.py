"""Baxter ideals generated by a set of variables or by a scalar, and the
corresponding quotient reduction maps.

For these two generator shapes membership is decidable word by word: a
variable ideal contains exactly the combinations of words with some factor
divisible by a generator, and a scalar ideal the elements with every
coefficient in the principal coefficient ideal.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .rings import Coeff, Zmod
from .shuffle import Context, Element, element


class TrivialIdealWarning(UserWarning):
    """A nonzero scalar generates the whole ring of rationals."""


@dataclass(frozen=True)
class IdealSpec:
    kind: str
    names: tuple[str, ...] = ()
    generator: Coeff | None = None

    def __post_init__(self):
        if self.kind == "vars":
            if not self.names:
                raise ValueError("a variable ideal needs at least one generator")
        elif self.kind == "scalar":
            if self.generator is None or self.generator.is_zero():
                raise ValueError("a scalar ideal needs a nonzero generator")
        else:
            raise ValueError(f"unknown ideal kind {self.kind!r}")

    def __str__(self):
        if self.kind == "vars":
            return "(" + ", ".join(self.names) + ")"
        return f"({self.generator})"


def variable_ideal(*names: str) -> IdealSpec:
    return IdealSpec("vars", tuple(names))


def scalar_ideal(c: Coeff) -> IdealSpec:
    return IdealSpec("scalar", generator=c)


def coeff_in_scalar_ideal(c: Coeff, gen: Coeff) -> bool:
    ring = gen.ring
    if ring.kind == "rat":
        warnings.warn(
            "every nonzero scalar generates the whole ring of rationals",
            TrivialIdealWarning,
            stacklevel=3,
        )
        return True
    if ring.kind == "int":
        return c.value % gen.value == 0
    return c.value % math.gcd(gen.value, ring.modulus) == 0


def baxter_ideal_member(a: Element, spec: IdealSpec) -> bool:
    if spec.kind == "vars":
        unknown = set(spec.names) - set(a.ctx.variables)
        if unknown:
            raise ValueError(f"generators {sorted(unknown)} are not context variables")
        return all(
            any(m.divisible_by(v) for m in w for v in spec.names) for w, _ in a.terms
        )
    if spec.generator.ring != a.ctx.ring:
        raise ValueError("scalar generator belongs to a different ring")
    return all(coeff_in_scalar_ideal(c, spec.generator) for _, c in a.terms)


def reduce_mod(a: Element, m: int) -> Element:
    """Coefficientwise reduction of an integer element to the ring mod m
    (lambda reduced along); a ring homomorphism commuting with the Baxter
    operator."""
    if a.ctx.ring.kind != "int":
        raise ValueError("modular reduction starts from an integer context")
    ring = Zmod(m)
    ctx = Context(ring, ring.coeff(a.ctx.lam.value), a.ctx.variables)
    return element(ctx, {w: ring.coeff(c.value) for w, c in a.terms})


def reduce_vars(a: Element, names) -> Element:
    """Quotient by the ideal generated by the given variables: kill every
    word with a factor divisible by one of them, keep the rest verbatim."""
    names = tuple(names)
    unknown = set(names) - set(a.ctx.variables)
    if unknown:
        raise ValueError(f"variables {sorted(unknown)} are not context variables")
    ctx = Context(a.ctx.ring, a.ctx.lam, tuple(v for v in a.ctx.variables if v not in names))
    kept = {
        w: c
        for w, c in a.terms
        if not any(m.divisible_by(v) for m in w for v in names)
    }
    return element(ctx, kept)

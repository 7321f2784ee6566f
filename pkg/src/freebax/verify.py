"""Constructive witnesses and check suites: zero-divisor products,
nilpotents, nilradical membership, reducedness conditions, and the
randomized identity probes behind them.

Every passing report is backed by a residual that is identically zero (or
by an explicitly stated probe); the inputs are serialized into the report
so a reader can re-parse and re-check them by hand.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, factorial, isqrt

from . import sequences as sq
from . import series as sr
from .ideals import baxter_ideal_member, reduce_mod, reduce_vars, scalar_ideal, variable_ideal
from .poly import Monomial, Poly
from .rings import INT, RAT, Coeff, Ring, Zmod, characteristic, inverse, is_prime
from .rings import is_unit as coeff_is_unit
from .rings import is_zero_divisor as coeff_is_zero_divisor
from .shuffle import (
    Context,
    Element,
    baxter_P,
    element,
    closed_form_unit_product,
    degree_components,
    element_power,
    enumerate_mixable_shuffles,
    lambda_adic_valuation,
    one,
    scalar,
    shuffle_product,
    shuffle_product_enumerated,
    unit_word,
    zero,
)

DEFAULT_SEED = 20317
DEFAULT_PRECISION = 12


class PreconditionError(ValueError):
    """A witness was requested outside the hypotheses it needs."""


@dataclass(frozen=True)
class WitnessReport:
    claim: str
    inputs: tuple[tuple[str, str], ...]
    verdict: bool
    detail: str

    def to_obj(self):
        return {
            "claim": self.claim,
            "inputs": {k: v for k, v in self.inputs},
            "verdict": "pass" if self.verdict else "fail",
            "detail": self.detail,
        }

    def line(self) -> str:
        return f"{'PASS' if self.verdict else 'FAIL'}  {self.claim}: {self.detail}"


def _report(claim, inputs, verdict, detail) -> WitnessReport:
    return WitnessReport(claim, tuple((k, str(v)) for k, v in inputs), verdict, detail)


# --- randomized element generation (fixed seeds make probes reproducible) ---

def random_coeff(rng: random.Random, ring: Ring) -> Coeff:
    if ring.kind == "mod":
        return ring.coeff(rng.randrange(ring.modulus))
    return ring.coeff(rng.randint(-4, 4))


def random_monomial(rng: random.Random, ctx: Context, max_degree: int = 2) -> Monomial:
    exps: dict[str, int] = {}
    for v in ctx.variables:
        e = rng.randint(0, max_degree)
        if e:
            exps[v] = e
    return Monomial.of(**exps)


def random_element(
    rng: random.Random,
    ctx: Context,
    max_terms: int = 3,
    max_word_len: int = 3,
    max_degree: int = 2,
) -> Element:
    acc = zero(ctx)
    for _ in range(rng.randint(0, max_terms)):
        word = tuple(
            random_monomial(rng, ctx, max_degree) for _ in range(rng.randint(1, max_word_len))
        )
        acc = acc + element(ctx, {word: random_coeff(rng, ctx.ring)})
    return acc


def random_nonzero_element(rng, ctx, **kw) -> Element:
    while True:
        a = random_element(rng, ctx, **kw)
        if not a.is_zero():
            return a


# --- individual witnesses ---

def charp_zero_divisor_witness(p: int, lam_value: int) -> WitnessReport:
    """Over the ring mod a prime p with nonzero weight, the product of the
    p elements  i*lam*1 + (unit word of degree 1)  vanishes while every
    factor is nonzero; cross-checked entrywise through the sequence model.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    ring = Zmod(p)
    lam = ring.coeff(lam_value)
    if lam.is_zero():
        raise PreconditionError("the weight must be nonzero mod p")
    ctx = Context(ring, lam)
    factors = [scalar(ctx, lam.value * i) + unit_word(ctx, 1) for i in range(p)]
    product = one(ctx)
    for f in factors:
        product = shuffle_product(product, f)
    nonzero = all(not f.is_zero() for f in factors)
    length = 2 * p + 1
    seq_product = sq.seq_one(ctx, length)
    for f in factors:
        seq_product = seq_product * sq.phi(f, length)
    ok = product.is_zero() and nonzero and seq_product.is_zero()
    return _report(
        f"charp-zero-divisor p={p} lambda={lam}",
        [(f"factor{i}", f) for i, f in enumerate(factors)],
        ok,
        f"product = {product}; sequence image zero through entry {length}: {seq_product.is_zero()}",
    )


def weight0_nilpotent_witness(q: int) -> WitnessReport:
    """At weight zero over the ring mod q, the q-th power of the degree-1
    unit word vanishes; on the way every lower power equals the factorial
    closed form."""
    if q < 2:
        raise PreconditionError("the characteristic must be at least 2")
    ring = Zmod(q)
    ctx = Context(ring, ring.zero())
    u = unit_word(ctx, 1)
    closed_ok = True
    for k in range(1, q):
        expected = unit_word(ctx, k).scaled(factorial(k))
        if element_power(u, k) != expected:
            closed_ok = False
    final = element_power(u, q)
    ok = closed_ok and final.is_zero()
    return _report(
        f"weight0-nilpotent q={q}",
        [("base", u)],
        ok,
        f"power {q} = {final}; factorial closed form held below {q}: {closed_ok}",
    )


def nilradical_member_weight0(a: Element) -> bool:
    """At weight zero over a ring of positive characteristic, an element is
    nilpotent exactly when its degree-0 part is a nilpotent polynomial (all
    higher-degree parts are nilpotent outright)."""
    if characteristic(a.ctx.ring) == 0:
        raise PreconditionError("the nilradical description needs positive characteristic")
    if not a.ctx.lam.is_zero():
        raise PreconditionError("the nilradical description needs weight zero")
    head = degree_components(a).get(0)
    if head is None:
        return True
    poly = Poly.from_terms(a.ctx.ring, {w[0]: c for w, c in head.terms})
    return poly.is_nilpotent()


def complete_zero_divisor_witness(ctx: Context, precision: int) -> WitnessReport:
    """When the weight is a unit, the degree-1 unit word annihilates the
    geometric series with ratio -1/lambda in the completion."""
    if not coeff_is_unit(ctx.lam):
        raise PreconditionError(f"lambda = {ctx.lam} is not a unit in {ctx.ring}")
    x = sr.embed(unit_word(ctx, 1), precision)
    y = sr.geometric_unit_series(ctx, -inverse(ctx.lam), precision)
    product = sr.complete_product(x, y)
    ok = product.is_zero() and not x.is_zero() and not y.is_zero()
    return _report(
        f"complete-zero-divisor ring={ctx.ring} lambda={ctx.lam} precision={precision}",
        [("x", x), ("y", y)],
        ok,
        f"x*y = {product}",
    )


def _alternating_series(ctx: Context, precision: int, odd_sign: int, constant: int) -> sr.Series:
    comps = {}
    if constant:
        comps[0] = scalar(ctx, constant)
    for n in range(1, precision + 1):
        sign = odd_sign if n % 2 == 1 else -odd_sign
        comps[n] = unit_word(ctx, n).scaled(sign)
    return sr.make_series(ctx, precision, comps)


def integer_lambda2_witness(precision: int) -> WitnessReport:
    """Over the integers at weight 2 the two alternating unit series
    multiply to zero, even though 2 is not a unit; their sequence-model
    images interlace as (0, 2, 0, 2, ...) and (2, 0, 2, 0, ...), so the
    entrywise product vanishes as well."""
    ring = INT
    ctx = Context(ring, ring.coeff(2))
    x = _alternating_series(ctx, precision, odd_sign=1, constant=0)
    y = _alternating_series(ctx, precision, odd_sign=-1, constant=2)
    product = sr.complete_product(x, y)

    length = min(precision, 20)
    px = sq.phi_series(x, length)
    py = sq.phi_series(y, length)
    two = sq.bar_scalar(ring, ring.coeff(2))
    zero_bar = sq.bar_zero(ring)
    pattern_x = all(
        px.entry(k) == (zero_bar if k % 2 == 1 else two) for k in range(1, length + 1)
    )
    pattern_y = all(
        py.entry(k) == (two if k % 2 == 1 else zero_bar) for k in range(1, length + 1)
    )
    entrywise = (px * py).is_zero()

    head_only = sr.make_series(ctx, precision, {1: unit_word(ctx, 1)})
    truncated_nonzero = not sr.complete_product(head_only, y).is_zero()

    ok = product.is_zero() and pattern_x and pattern_y and entrywise and truncated_nonzero
    return _report(
        f"integer-lambda2 precision={precision}",
        [("x", x), ("y", y)],
        ok,
        f"x*y = {product}; image patterns (0,2)/(2,0): {pattern_x and pattern_y}; "
        f"entrywise image product zero: {entrywise}; "
        f"head of x alone does not annihilate y: {truncated_nonzero}",
    )


def lemma_power_suite(trials: int = 20, seed: int = DEFAULT_SEED) -> list[WitnessReport]:
    """At weight zero, the two factorial power identities: iterating
    y -> P(x*y) n times from the unit satisfies
    (iterate n) * (iterate 1) = (n+1) * (iterate n+1)  and
    P(x)^n = n! * (iterate n)."""
    reports = []
    for ring in (RAT, Zmod(9)):
        ctx = Context(ring, ring.zero(), ("x", "y"))
        rng = random.Random(f"{seed}:{ring}")
        failures = []
        for _ in range(trials):
            x = random_element(rng, ctx, max_terms=2, max_word_len=2)
            p_of_x = baxter_P(x)  # also the iterate at n = 1: P(x * 1)
            pn = one(ctx)
            ppow = one(ctx)
            for n in range(6):
                pnext = baxter_P(shuffle_product(x, pn))
                if shuffle_product(pn, p_of_x) != pnext.scaled(n + 1):
                    failures.append(("product-identity", x, n))
                if ppow != pn.scaled(factorial(n)):
                    failures.append(("factorial-identity", x, n))
                pn = pnext
                ppow = shuffle_product(ppow, p_of_x)
        reports.append(
            _report(
                f"lemma-power ring={ring}",
                [("trials", trials)],
                not failures,
                "both identities held for n <= 5" if not failures else f"failed at {failures[0]}",
            )
        )
    return reports


def _squarefree(m: int) -> bool:
    return all(m % (d * d) for d in range(2, isqrt(m) + 1))


@dataclass(frozen=True)
class ReducednessReport:
    ctx: Context
    char: int
    lam_nonzero: bool
    lam_not_zero_divisor: bool
    coefficients_reduced: bool
    status: str  # "satisfied" | "conditions-fail" | "out-of-scope"
    witness: str | None
    probe_passed: bool
    probe_count: int

    def to_obj(self):
        return {
            "context": self.ctx.to_obj(),
            "characteristic": self.char,
            "lambda_nonzero": self.lam_nonzero,
            "lambda_not_zero_divisor": self.lam_not_zero_divisor,
            "coefficients_reduced": self.coefficients_reduced,
            "status": self.status,
            "witness": self.witness,
            "probe_passed": self.probe_passed,
            "probe_count": self.probe_count,
        }


def reducedness_conditions(
    ctx: Context, seed: int = DEFAULT_SEED, probe_count: int = 100
) -> ReducednessReport:
    """Check the sufficient conditions for the algebra to be reduced in
    positive characteristic (nonzero weight, weight not a zero divisor,
    reduced coefficients), and run a randomized nilpotence probe either
    way.  Characteristic zero is reported as outside the criterion."""
    char = characteristic(ctx.ring)
    lam_nonzero = not ctx.lam.is_zero()
    lam_ok = not coeff_is_zero_divisor(ctx.lam)
    reduced = ctx.ring.kind != "mod" or _squarefree(ctx.ring.modulus)

    witness = None
    if char > 0 and not (lam_nonzero and lam_ok and reduced):
        if ctx.lam.is_zero():
            u = unit_word(ctx, 1)
            power = element_power(u, char)
            if power.is_zero():
                witness = f"({u})^{char} = 0"

    rng = random.Random(seed)
    probe_passed = True
    for _ in range(probe_count):
        a = random_nonzero_element(rng, ctx, max_terms=2, max_word_len=2)
        powered = a
        for k in range(2, 7):
            powered = shuffle_product(powered, a)
            if powered.is_zero():
                probe_passed = False
                witness = witness or f"({a})^{k} = 0"
                break
        if not probe_passed:
            break

    if char == 0:
        status = "out-of-scope"
    elif lam_nonzero and lam_ok and reduced:
        status = "satisfied"
    else:
        status = "conditions-fail"
    return ReducednessReport(
        ctx, char, lam_nonzero, lam_ok, reduced, status, witness, probe_passed, probe_count
    )


# --- suites ---

def _identity_residual(x: Element, y: Element) -> Element:
    lam = x.ctx.lam
    lhs = shuffle_product(baxter_P(x), baxter_P(y))
    rhs = (
        baxter_P(shuffle_product(x, baxter_P(y)))
        + baxter_P(shuffle_product(y, baxter_P(x)))
        + baxter_P(shuffle_product(x, y)).scaled(lam)
    )
    return lhs - rhs


BAXTER_IDENTITY_CONFIGS = (
    (INT, 0),
    (INT, 1),
    (INT, 2),
    (RAT, 1),
    (Zmod(9), 0),
    (Zmod(9), 3),
)


def suite_baxter_identity(seed=DEFAULT_SEED, precision=DEFAULT_PRECISION, pairs=200):
    reports = []
    for ring, lam in BAXTER_IDENTITY_CONFIGS:
        ctx = Context(ring, ring.coeff(lam), ("x", "y"))
        rng = random.Random(f"{seed}:{ring}:{lam}")
        bad = None
        for _ in range(pairs):
            x = random_element(rng, ctx)
            y = random_element(rng, ctx)
            residual = _identity_residual(x, y)
            if not residual.is_zero():
                bad = (x, y, residual)
                break
        reports.append(
            _report(
                f"baxter-identity ring={ring} lambda={lam}",
                [("pairs", pairs)],
                bad is None,
                f"residual 0 on {pairs} random pairs" if bad is None else f"residual {bad[2]}",
            )
        )
    return reports


def suite_prop_unit(seed=DEFAULT_SEED, precision=DEFAULT_PRECISION):
    reports = []
    for lam in (0, 1, 2, 5):
        ctx = Context(INT, INT.coeff(lam))
        bad = None
        for m in range(7):
            for n in range(7):
                computed = shuffle_product(unit_word(ctx, m), unit_word(ctx, n))
                if computed != closed_form_unit_product(ctx, m, n):
                    bad = (m, n)
        reports.append(
            _report(
                f"prop-unit lambda={lam}",
                [("range", "m, n <= 6")],
                bad is None,
                "closed form = computed product" if bad is None else f"mismatch at {bad}",
            )
        )
    return reports


def _delannoy(m: int, n: int) -> int:
    if m == 0 or n == 0:
        return 1
    return _delannoy(m - 1, n) + _delannoy(m, n - 1) + _delannoy(m - 1, n - 1)


def suite_oracle_equivalence(seed=DEFAULT_SEED, precision=DEFAULT_PRECISION):
    """Recursion equals enumeration on generic words, and the enumerator's
    counts satisfy the three-term lattice-path recursion."""
    reports = []
    counts_ok = all(
        len(enumerate_mixable_shuffles(m, n)) == _delannoy(m, n)
        for m in range(7)
        for n in range(7)
    )
    reports.append(
        _report(
            "mixable-shuffle-counts",
            [("range", "m, n <= 6")],
            counts_ok,
            "enumeration sizes match the lattice-path recursion",
        )
    )
    names = tuple("abcdefghij")
    bad = None
    for lam in (0, 1, 2):
        ctx = Context(INT, INT.coeff(lam), names)
        for m in range(5):
            for n in range(5):
                wa = tuple(Monomial.of(**{names[i]: 1}) for i in range(m + 1))
                wb = tuple(Monomial.of(**{names[m + 1 + j]: 1}) for j in range(n + 1))
                a = element(ctx, {wa: INT.one()})
                b = element(ctx, {wb: INT.one()})
                if shuffle_product(a, b) != shuffle_product_enumerated(a, b):
                    bad = (lam, m, n)
    reports.append(
        _report(
            "product-oracle-equivalence",
            [("range", "m, n <= 4; lambda in {0,1,2}")],
            bad is None,
            "recursion = enumeration" if bad is None else f"mismatch at {bad}",
        )
    )
    return reports


def suite_charp(seed=DEFAULT_SEED, precision=DEFAULT_PRECISION):
    return [
        charp_zero_divisor_witness(p, lam)
        for p in (2, 3, 5, 7)
        for lam in range(1, p)
    ]


def suite_weight0_nilpotent(seed=DEFAULT_SEED, precision=DEFAULT_PRECISION):
    return [weight0_nilpotent_witness(q) for q in (2, 3, 4, 5, 9)]


def suite_complete_zero_divisor(seed=DEFAULT_SEED, precision=DEFAULT_PRECISION):
    n = max(precision, 20)
    return [
        complete_zero_divisor_witness(Context(RAT, RAT.coeff(1)), n),
        complete_zero_divisor_witness(Context(Zmod(5), Zmod(5).coeff(2)), n),
    ]


def suite_int_lambda2(seed=DEFAULT_SEED, precision=DEFAULT_PRECISION):
    return [integer_lambda2_witness(max(precision, 20))]


def suite_lemma_power(seed=DEFAULT_SEED, precision=DEFAULT_PRECISION):
    return lemma_power_suite(seed=seed)


def suite_phi_homomorphism(seed=DEFAULT_SEED, precision=DEFAULT_PRECISION, pairs=100):
    reports = []
    bad = None
    length = 10
    for lam in (0, 1, 2, 3):
        ctx = Context(INT, INT.coeff(lam))
        for top in range(11):
            rng = random.Random(f"{seed}:{lam}:{top}")
            bs = [random_coeff(rng, INT) for _ in range(top + 1)]
            combo = zero(ctx)
            for n, b in enumerate(bs):
                combo = combo + unit_word(ctx, n).scaled(b)
            if sq.phi(combo, length) != sq.phi_constants(ctx, bs, length):
                bad = (lam, top)
    reports.append(
        _report(
            "phi-constants-closed-form",
            [("range", "indices <= 10; lambda in {0,1,2,3}")],
            bad is None,
            "recursive phi = closed form" if bad is None else f"mismatch at {bad}",
        )
    )
    for ring, lam in ((INT, 1), (INT, 2), (RAT, 1)):
        ctx = Context(ring, ring.coeff(lam), ("x", "y"))
        rng = random.Random(f"{seed}:{ring}:{lam}:hom")
        bad = None
        for _ in range(pairs):
            a = random_element(rng, ctx)
            b = random_element(rng, ctx)
            pa, pb = sq.phi(a, length), sq.phi(b, length)
            if sq.phi(shuffle_product(a, b), length) != pa * pb:
                bad = (a, b, "multiplicative")
                break
            if sq.phi(baxter_P(a), length) != sq.p_prime(pa):
                bad = (a, None, "operator")
                break
        reports.append(
            _report(
                f"phi-homomorphism ring={ring} lambda={lam}",
                [("pairs", pairs), ("length", length)],
                bad is None,
                "multiplicative and operator-compatible" if bad is None else f"failed: {bad[2]}",
            )
        )
    return reports


def suite_ideal_quotient(seed=DEFAULT_SEED, precision=DEFAULT_PRECISION, pairs=100):
    reports = []

    ctx = Context(INT, INT.coeff(2), ("x", "y"))
    rng = random.Random(f"{seed}:mod")
    bad = None
    for _ in range(pairs):
        a = random_element(rng, ctx)
        b = random_element(rng, ctx)
        for m in (4, 5):
            if reduce_mod(shuffle_product(a, b), m) != shuffle_product(reduce_mod(a, m), reduce_mod(b, m)):
                bad = (a, b, m, "product")
            if reduce_mod(baxter_P(a), m) != baxter_P(reduce_mod(a, m)):
                bad = (a, None, m, "operator")
    reports.append(
        _report(
            "quotient-mod-homomorphism",
            [("pairs", pairs), ("moduli", "4, 5")],
            bad is None,
            "reduction commutes with product and operator" if bad is None else f"failed {bad[3]}",
        )
    )

    ctx3 = Context(INT, INT.coeff(1), ("x", "y", "z"))
    rng = random.Random(f"{seed}:vars")
    spec = variable_ideal("x")
    bad = None
    for _ in range(pairs):
        a = random_element(rng, ctx3)
        b = random_element(rng, ctx3)
        if reduce_vars(shuffle_product(a, b), ("x",)) != shuffle_product(
            reduce_vars(a, ("x",)), reduce_vars(b, ("x",))
        ):
            bad = (a, b, "product")
        if reduce_vars(baxter_P(a), ("x",)) != baxter_P(reduce_vars(a, ("x",))):
            bad = (a, None, "operator")
        if reduce_vars(a, ("x",)).is_zero() != baxter_ideal_member(a, spec):
            bad = (a, None, "kernel")
    reports.append(
        _report(
            "quotient-vars-homomorphism",
            [("pairs", pairs), ("killed", "x")],
            bad is None,
            "reduction is a homomorphism with the predicted kernel" if bad is None else f"failed {bad[2]}",
        )
    )

    ctx2 = Context(INT, INT.coeff(2), ("x",))
    rng = random.Random(f"{seed}:scalar")
    spec2 = scalar_ideal(INT.coeff(2))
    bad = None
    for _ in range(pairs):
        a = random_element(rng, ctx2)
        member = baxter_ideal_member(a, spec2)
        if member != (lambda_adic_valuation(a) >= 1):
            bad = a
    reports.append(
        _report(
            "scalar-membership-valuation",
            [("pairs", pairs), ("generator", 2)],
            bad is None,
            "membership in (2) = valuation >= 1" if bad is None else f"failed on {bad}",
        )
    )
    return reports


SUITES = {
    "baxter-identity": suite_baxter_identity,
    "prop-unit": suite_prop_unit,
    "oracle-equivalence": suite_oracle_equivalence,
    "charp": suite_charp,
    "weight0-nilpotent": suite_weight0_nilpotent,
    "complete-zero-divisor": suite_complete_zero_divisor,
    "int-lambda2": suite_int_lambda2,
    "lemma-power": suite_lemma_power,
    "phi-homomorphism": suite_phi_homomorphism,
    "ideal-quotient": suite_ideal_quotient,
}


def run_suites(names, seed=DEFAULT_SEED, precision=DEFAULT_PRECISION) -> list[WitnessReport]:
    if isinstance(names, str):
        names = [names]
    selected = list(SUITES) if "all" in names else list(names)
    unknown = [n for n in selected if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites {unknown}; available: {', '.join(SUITES)} or all")
    reports = []
    for name in selected:
        reports.extend(SUITES[name](seed=seed, precision=precision))
    return reports

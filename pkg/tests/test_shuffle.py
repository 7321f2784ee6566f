import math
import random

import pytest

from freebax import (
    INT,
    RAT,
    Context,
    ContextMismatchError,
    Monomial,
    Zmod,
    baxter_P,
    closed_form_unit_product,
    degree_components,
    element,
    element_power,
    enumerate_mixable_shuffles,
    lambda_adic_valuation,
    one,
    p_x_power,
    scalar,
    shuffle_product,
    shuffle_product_enumerated,
    tensor_word,
    unit_word,
    variable,
    zero,
)
from freebax.poly import UNIT_MONOMIAL
from freebax.verify import random_element


def ctx_int(lam, variables=()):
    return Context(INT, INT.coeff(lam), variables)


def delannoy(m, n, cache={}):
    """Lattice-path oracle for the number of mixable shuffles."""
    if m == 0 or n == 0:
        return 1
    if (m, n) not in cache:
        cache[(m, n)] = delannoy(m - 1, n) + delannoy(m, n - 1) + delannoy(m - 1, n - 1)
    return cache[(m, n)]


class TestEnumeration:
    def test_1_1_by_hand(self):
        shuffles = enumerate_mixable_shuffles(1, 1)
        assert len(shuffles) == 3
        # the x-first shuffle admits the merge at (1,2); the y-first one admits none
        merged = [s for s in shuffles if s.merges]
        assert len(merged) == 1 and merged[0].sigma == (1, 2) and merged[0].merges == (1,)

    @pytest.mark.parametrize("m", range(5))
    def test_empty_second_tail(self, m):
        assert len(enumerate_mixable_shuffles(m, 0)) == 1

    def test_2_2_is_13(self):
        assert len(enumerate_mixable_shuffles(2, 2)) == 13

    def test_counts_match_lattice_recursion(self):
        for m in range(7):
            for n in range(7):
                assert len(enumerate_mixable_shuffles(m, n)) == delannoy(m, n)

    def test_shuffles_are_valid(self):
        for m, n in [(2, 3), (3, 2), (4, 1)]:
            seen = set()
            for s in enumerate_mixable_shuffles(m, n):
                seen.add((s.sigma, s.merges))
                firsts = [k for k, v in enumerate(s.sigma) if v <= m]
                assert [s.sigma[k] for k in firsts] == sorted(s.sigma[k] for k in firsts)
                seconds = [k for k, v in enumerate(s.sigma) if v > m]
                assert [s.sigma[k] for k in seconds] == sorted(s.sigma[k] for k in seconds)
                for k in s.merges:
                    assert s.sigma[k - 1] <= m < s.sigma[k]
            assert len(seen) == len(enumerate_mixable_shuffles(m, n))


class TestProductExamples:
    @pytest.mark.parametrize("lam", [0, 1, 2])
    def test_degree_one_square(self, lam):
        ctx = ctx_int(lam)
        u = unit_word(ctx, 1)
        expected = unit_word(ctx, 2).scaled(2) + unit_word(ctx, 1).scaled(lam)
        assert shuffle_product(u, u) == expected

    def test_empty_tail_degenerates_to_head_product(self):
        ctx = ctx_int(5, ("x", "y"))
        a = tensor_word(ctx, Monomial.of(x=1), Monomial.of(x=1))
        b = tensor_word(ctx, Monomial.of(y=1))
        assert shuffle_product(a, b) == tensor_word(ctx, Monomial.of(x=1, y=1), Monomial.of(x=1))

    @pytest.mark.parametrize("n", range(7))
    @pytest.mark.parametrize("lam", [1, 2])
    def test_degree_one_times_degree_n(self, n, lam):
        ctx = ctx_int(lam)
        got = shuffle_product(unit_word(ctx, 1), unit_word(ctx, n))
        expected = unit_word(ctx, n + 1).scaled(n + 1) + unit_word(ctx, n).scaled(n * lam)
        assert got == expected

    def test_degree_zero_words_multiply_in_base(self):
        ctx = ctx_int(3, ("x", "y"))
        assert shuffle_product(variable(ctx, "x"), variable(ctx, "y")) == tensor_word(
            ctx, Monomial.of(x=1, y=1)
        )

    def test_unit_element_is_neutral(self):
        ctx = ctx_int(2, ("x",))
        rng = random.Random(5)
        for _ in range(20):
            a = random_element(rng, ctx)
            assert shuffle_product(a, one(ctx)) == a


class TestClosedForm:
    def test_1_1(self):
        for lam in (0, 1, 2, 7):
            ctx = ctx_int(lam)
            assert closed_form_unit_product(ctx, 1, 1) == unit_word(ctx, 2).scaled(2) + unit_word(
                ctx, 1
            ).scaled(lam)

    @pytest.mark.parametrize("n", range(6))
    def test_m_zero_is_identity(self, n):
        ctx = ctx_int(3)
        assert closed_form_unit_product(ctx, 0, n) == unit_word(ctx, n)

    def test_2_2_against_enumeration(self):
        # independent oracle: the definitional enumeration product
        ctx = ctx_int(1)
        by_enumeration = shuffle_product_enumerated(unit_word(ctx, 2), unit_word(ctx, 2))
        expected = (
            unit_word(ctx, 4).scaled(6) + unit_word(ctx, 3).scaled(6) + unit_word(ctx, 2)
        )
        assert by_enumeration == expected
        assert closed_form_unit_product(ctx, 2, 2) == expected

    @pytest.mark.parametrize("lam", [0, 1, 2, 5])
    def test_matches_product_up_to_6(self, lam):
        ctx = ctx_int(lam)
        for m in range(7):
            for n in range(7):
                assert closed_form_unit_product(ctx, m, n) == shuffle_product(
                    unit_word(ctx, m), unit_word(ctx, n)
                )


class TestOracleEquivalence:
    @pytest.mark.parametrize("lam", [0, 1, 2])
    def test_generic_words(self, lam):
        names = tuple("abcdefghij")
        ctx = Context(INT, INT.coeff(lam), names)
        for m in range(4):
            for n in range(4):
                wa = tuple(Monomial.of(**{names[i]: 1}) for i in range(m + 1))
                wb = tuple(Monomial.of(**{names[m + 1 + j]: 1}) for j in range(n + 1))
                a = element(ctx, {wa: INT.one()})
                b = element(ctx, {wb: INT.one()})
                assert shuffle_product(a, b) == shuffle_product_enumerated(a, b)

    def test_repeated_factors_and_nonunit_heads(self):
        ctx = ctx_int(2, ("x", "y"))
        rng = random.Random(11)
        for _ in range(25):
            a = random_element(rng, ctx)
            b = random_element(rng, ctx)
            assert shuffle_product(a, b) == shuffle_product_enumerated(a, b)


class TestBaxterOperator:
    def test_examples(self):
        ctx = ctx_int(1, ("x", "y", "z"))
        assert baxter_P(one(ctx)) == unit_word(ctx, 1)
        w = tensor_word(ctx, Monomial.of(x=1), Monomial.of(y=2))
        assert baxter_P(w) == tensor_word(ctx, UNIT_MONOMIAL, Monomial.of(x=1), Monomial.of(y=2))

    def test_linearity(self):
        ctx = ctx_int(1, ("x", "y", "z"))
        a = variable(ctx, "x").scaled(2)
        b = tensor_word(ctx, Monomial.of(y=1), Monomial.of(z=1)).scaled(3)
        assert baxter_P(a + b) == baxter_P(a) + baxter_P(b)

    def test_identity_holds(self):
        # the defining relation, across all three rings
        configs = [(INT, 0), (INT, 1), (INT, 2), (RAT, 1), (Zmod(9), 0), (Zmod(9), 3)]
        for ring, lam in configs:
            ctx = Context(ring, ring.coeff(lam), ("x", "y"))
            rng = random.Random(f"identity:{ring}:{lam}")
            for _ in range(25):
                a = random_element(rng, ctx)
                b = random_element(rng, ctx)
                lhs = shuffle_product(baxter_P(a), baxter_P(b))
                rhs = (
                    baxter_P(shuffle_product(a, baxter_P(b)))
                    + baxter_P(shuffle_product(b, baxter_P(a)))
                    + baxter_P(shuffle_product(a, b)).scaled(ctx.lam)
                )
                assert lhs == rhs


class TestIteratedP:
    def test_zero_iterations(self):
        ctx = ctx_int(4, ("x",))
        assert p_x_power(variable(ctx, "x"), 0) == one(ctx)

    def test_two_iterations_weight_zero(self):
        ctx = ctx_int(0)
        assert p_x_power(one(ctx), 2) == unit_word(ctx, 2)

    def test_one_iteration_is_P(self):
        ctx = ctx_int(2, ("x", "y"))
        rng = random.Random(3)
        for _ in range(10):
            a = random_element(rng, ctx)
            assert p_x_power(a, 1) == baxter_P(a)


class TestPowers:
    def test_first_power(self):
        ctx = ctx_int(1, ("x",))
        a = variable(ctx, "x") + unit_word(ctx, 1)
        assert element_power(a, 1) == a

    def test_cube_weight_zero_rationals(self):
        ctx = Context(RAT, RAT.coeff(0))
        u = unit_word(ctx, 1)
        # two routes: direct powering, and the factorial identity via iterated P
        direct = element_power(u, 3)
        via_iterates = p_x_power(one(ctx), 3).scaled(math.factorial(3))
        assert direct == via_iterates == unit_word(ctx, 3).scaled(6)

    def test_square_is_self_product(self):
        ctx = ctx_int(2, ("x", "y"))
        rng = random.Random(9)
        for _ in range(10):
            a = random_element(rng, ctx)
            assert element_power(a, 2) == shuffle_product(a, a)

    def test_commutative_associative(self):
        ctx = Context(Zmod(6), Zmod(6).coeff(5), ("x", "y"))
        rng = random.Random(13)
        for _ in range(15):
            a, b, c = (random_element(rng, ctx, max_word_len=2) for _ in range(3))
            assert shuffle_product(a, b) == shuffle_product(b, a)
            assert shuffle_product(shuffle_product(a, b), c) == shuffle_product(
                a, shuffle_product(b, c)
            )


class TestValuation:
    def test_examples(self):
        ctx = ctx_int(2, ("x", "y"))
        a = baxter_P(variable(ctx, "x")).scaled(4) + variable(ctx, "y").scaled(2)
        assert lambda_adic_valuation(a) == 1
        assert lambda_adic_valuation(zero(ctx)) == math.inf
        assert lambda_adic_valuation(unit_word(ctx, 1).scaled(8)) == 3

    def test_superadditive_under_product(self):
        ctx = ctx_int(2, ("x",))
        rng = random.Random(17)
        for _ in range(40):
            a = random_element(rng, ctx, max_word_len=2)
            b = random_element(rng, ctx, max_word_len=2)
            va, vb = lambda_adic_valuation(a), lambda_adic_valuation(b)
            assert lambda_adic_valuation(shuffle_product(a, b)) >= va + vb


class TestGrading:
    def test_components(self):
        ctx = ctx_int(1, ("x", "y"))
        a = variable(ctx, "x") + baxter_P(variable(ctx, "y"))
        comps = degree_components(a)
        assert set(comps) == {0, 1}
        assert comps[0] == variable(ctx, "x")
        assert comps[1] == baxter_P(variable(ctx, "y"))
        assert degree_components(zero(ctx)) == {}

    def test_components_resum(self):
        ctx = ctx_int(2, ("x", "y"))
        rng = random.Random(23)
        for _ in range(10):
            a = random_element(rng, ctx)
            total = zero(ctx)
            for comp in degree_components(a).values():
                total = total + comp
            assert total == a

    def test_degree_bounds_from_enumeration(self):
        # every mixable shuffle of (m, n) tails has length in [max(m,n), m+n]
        for m in range(5):
            for n in range(5):
                for s in enumerate_mixable_shuffles(m, n):
                    produced = m + n - len(s.merges)
                    assert max(m, n) <= produced <= m + n
                    assert len(s.merges) <= min(m, n)

    def test_product_degree_window(self):
        ctx = ctx_int(1)
        for m in range(5):
            for n in range(5):
                prod = shuffle_product(unit_word(ctx, m), unit_word(ctx, n))
                degrees = {len(w) - 1 for w, _ in prod.terms}
                assert degrees <= set(range(max(m, n), m + n + 1))

    def test_low_degree_output_ignores_high_degree_input(self):
        # the degree-d part of a product only sees inputs of degree <= d
        ctx = ctx_int(2, ("x",))
        rng = random.Random(29)
        for _ in range(10):
            a = random_element(rng, ctx, max_terms=4)
            b = random_element(rng, ctx, max_terms=4)
            d = 2
            def cut(e):
                kept = {w: c for w, c in e.terms if len(w) - 1 <= d}
                return element(ctx, kept)
            full = degree_components(shuffle_product(a, b)).get(d, zero(ctx))
            cutprod = degree_components(shuffle_product(cut(a), cut(b))).get(d, zero(ctx))
            assert full == cutprod


class TestContextChecks:
    def test_mismatch(self):
        a = one(ctx_int(1))
        b = one(ctx_int(2))
        with pytest.raises(ContextMismatchError):
            shuffle_product(a, b)

    def test_lambda_must_live_in_ring(self):
        with pytest.raises(Exception):
            Context(INT, RAT.coeff(1))

    def test_scalar_embedding(self):
        ctx = ctx_int(1)
        assert scalar(ctx, 3) == one(ctx).scaled(3)

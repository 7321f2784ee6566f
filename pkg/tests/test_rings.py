import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from freebax import (
    INT,
    RAT,
    Coeff,
    RingMismatchError,
    Zmod,
    characteristic,
    inverse,
    is_nilpotent,
    is_unit,
    is_zero_divisor,
    lambda_valuation,
    parse_coeff,
)


def egcd(a, b):
    """Extended gcd oracle: returns (g, s, t) with s*a + t*b = g."""
    if b == 0:
        return a, 1, 0
    g, s, t = egcd(b, a % b)
    return g, t, s - (a // b) * t


class TestArithmetic:
    def test_rational_add_normalizes(self):
        a = RAT.coeff(Fraction(2, 3))
        b = RAT.coeff(Fraction(1, 6))
        assert a + b == RAT.coeff(Fraction(5, 6))

    def test_modular_mul(self):
        assert Zmod(9).coeff(5) * Zmod(9).coeff(7) == Zmod(9).coeff(8)

    def test_neg_zero(self):
        for ring in (INT, RAT, Zmod(9)):
            assert -ring.zero() == ring.zero()

    def test_negative_residues_reduce(self):
        assert Zmod(9).coeff(-3) == Zmod(9).coeff(6)

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            INT.coeff(1) + RAT.coeff(1)

    def test_pow(self):
        assert Zmod(9).coeff(2) ** 4 == Zmod(9).coeff(7)
        assert RAT.coeff(Fraction(1, 2)) ** 3 == RAT.coeff(Fraction(1, 8))


class TestCharacteristic:
    def test_values(self):
        assert characteristic(INT) == 0
        assert characteristic(RAT) == 0
        assert characteristic(Zmod(9)) == 9


class TestPredicates:
    def test_two_is_not_a_unit_in_the_integers(self):
        assert not is_unit(INT.coeff(2))

    def test_one_is_a_unit_everywhere(self):
        for ring in (INT, RAT, Zmod(9), Zmod(6)):
            assert is_unit(ring.one())

    def test_unit_mod_9_matches_extended_gcd(self):
        g, s, _ = egcd(4, 9)
        assert g == 1 and (4 * s) % 9 == 1
        assert is_unit(Zmod(9).coeff(4))

    def test_zero_divisor_mod_9_by_search(self):
        witnesses = [d for d in range(1, 9) if (3 * d) % 9 == 0]
        assert witnesses  # 3 * 3 = 0 mod 9
        assert is_zero_divisor(Zmod(9).coeff(3))

    def test_zero_divisor_trivial_cases(self):
        assert not is_zero_divisor(INT.coeff(2))
        assert not is_zero_divisor(Zmod(9).coeff(0))

    def test_nilpotent_by_powers(self):
        assert (3 ** 2) % 9 == 0
        assert is_nilpotent(Zmod(9).coeff(3))
        assert all(pow(3, k, 6) == 3 for k in range(1, 7))
        assert not is_nilpotent(Zmod(6).coeff(3))

    def test_zero_is_nilpotent(self):
        for ring in (INT, RAT, Zmod(4)):
            assert is_nilpotent(ring.zero())

    def test_unit_xor_zero_or_zero_divisor(self):
        for m in (4, 6, 9, 12, 13):
            ring = Zmod(m)
            for c in range(m):
                coeff = ring.coeff(c)
                assert is_unit(coeff) != (c == 0 or is_zero_divisor(coeff))

    def test_nilpotent_matches_direct_powers_up_to_64(self):
        for m in range(2, 65):
            ring = Zmod(m)
            for c in range(m):
                direct = any(pow(c, k, m) == 0 for k in range(1, m + 1))
                assert is_nilpotent(ring.coeff(c)) == direct, (c, m)


class TestValuation:
    def test_examples(self):
        two = INT.coeff(2)
        assert lambda_valuation(INT.coeff(12), two) == 2
        assert lambda_valuation(INT.coeff(0), two) == math.inf

    def test_negative_by_repeated_division(self):
        n, v = 8, 0
        while n % 2 == 0:
            n //= 2
            v += 1
        assert v == 3
        assert lambda_valuation(INT.coeff(-8), INT.coeff(2)) == 3

    def test_rejects_nonprime_lambda(self):
        with pytest.raises(ValueError):
            lambda_valuation(INT.coeff(12), INT.coeff(6))

    def test_rejects_non_integer_ring(self):
        with pytest.raises(ValueError):
            lambda_valuation(RAT.coeff(4), RAT.coeff(2))


class TestInverse:
    def test_examples(self):
        assert inverse(Zmod(9).coeff(4)) * Zmod(9).coeff(4) == Zmod(9).one()
        assert inverse(RAT.coeff(Fraction(-2, 3))) == RAT.coeff(Fraction(-3, 2))
        assert inverse(INT.coeff(-1)) == INT.coeff(-1)

    def test_non_unit(self):
        with pytest.raises(ValueError):
            inverse(INT.coeff(2))


small_ints = st.integers(min_value=-30, max_value=30)


@st.composite
def ring_and_triples(draw):
    ring = draw(st.sampled_from([INT, RAT, Zmod(9), Zmod(6)]))
    def c():
        if ring.kind == "rat":
            return ring.coeff(Fraction(draw(small_ints), draw(st.integers(1, 9))))
        return ring.coeff(draw(small_ints))
    return ring, c(), c(), c()


class TestRingAxioms:
    @given(ring_and_triples())
    def test_axioms(self, data):
        ring, a, b, c = data
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + ring.zero() == a
        assert a * ring.one() == a
        assert a + (-a) == ring.zero()


class TestParsing:
    def test_round_trip(self):
        assert parse_coeff(RAT, "-1/2") == RAT.coeff(Fraction(-1, 2))
        assert parse_coeff(INT, "-7") == INT.coeff(-7)
        assert parse_coeff(Zmod(9), "-3") == Zmod(9).coeff(6)

    def test_rejects_fraction_over_integers(self):
        with pytest.raises(ValueError):
            parse_coeff(INT, "1/2")

    def test_str(self):
        assert str(RAT.coeff(Fraction(-1, 2))) == "-1/2"
        assert str(Zmod(9).coeff(-3)) == "6"

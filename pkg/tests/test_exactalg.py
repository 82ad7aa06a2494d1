import random
from fractions import Fraction
from math import comb

import pytest

from classs.exactalg import (DivergentSeriesError, LaurentPoly, PoleError,
                             QSeries, RationalFunctionK, qs_eta_product,
                             qs_eta_product_inverse, qs_geom_inverse, qs_mul,
                             rf_eval)

K = RationalFunctionK.variable()


def brute_partitions(n, min_part=1):
    """Independent oracle: count partitions of n into parts >= min_part."""
    if n == 0:
        return 1
    return sum(brute_partitions(n - p, p) for p in range(min_part, n + 1))


def qpoly(*pairs):
    return QSeries(0, {Fraction(e): LaurentPoly(0, {(): c}) for e, c in pairs},
                   None)


class TestLaurentPoly:
    def test_add_mul(self):
        z = LaurentPoly.monomial((1,))
        zi = LaurentPoly.monomial((-1,))
        p = z + zi
        sq = p * p
        assert sq == LaurentPoly(1, {(2,): 1, (0,): 2, (-2,): 1})
        assert sq.total() == 4
        assert (p - p).is_zero()

    def test_invert_variables(self):
        p = LaurentPoly(1, {(2,): 1, (-1,): 3})
        assert p.invert_variables() == LaurentPoly(1, {(-2,): 1, (1,): 3})

    def test_embed(self):
        p = LaurentPoly(1, {(2,): 5})
        assert p.embed(3, 1) == LaurentPoly(3, {(0, 2, 0): 5})
        scalar = LaurentPoly(0, {(): 7})
        assert scalar.embed(2, 0) == LaurentPoly(2, {(0, 0): 7})

    def test_divexact(self):
        # (1 - z^-2) * (1 + z^-2 + z^-4) = 1 - z^-6
        prod = LaurentPoly(1, {(0,): 1, (-6,): -1})
        quot = prod.divexact((-2,))
        assert quot == LaurentPoly(1, {(0,): 1, (-2,): 1, (-4,): 1})

    def test_divexact_rejects_inexact(self):
        p = LaurentPoly(1, {(0,): 1, (-1,): 1})
        with pytest.raises(ValueError):
            p.divexact((-2,))

    def test_nvars_mismatch(self):
        with pytest.raises(ValueError):
            LaurentPoly.one(1) + LaurentPoly.one(2)


class TestQSeriesBasics:
    def test_simple_product(self):
        a = qpoly((0, 1), (1, 1)).truncate(Fraction(3))
        b = qpoly((0, 1), (1, -1)).truncate(Fraction(3))
        prod = qs_mul(a, b)
        assert prod.coefficient(0).total() == 1
        assert prod.coefficient(1).total() == 0
        assert prod.coefficient(2).total() == -1

    def test_half_integer_exponents(self):
        h = QSeries.q_power(0, Fraction(1, 2), order=Fraction(3))
        assert (h * h).coefficient(1).total() == 1

    def test_partition_counts_match_oracle(self):
        series = qs_eta_product_inverse(1, Fraction(7))
        got = [series.coefficient(n).total() for n in range(7)]
        want = [brute_partitions(n) for n in range(7)]
        assert got == want == [1, 1, 2, 3, 5, 7, 11]

    def test_mul_order_adjusts_for_lowest_exponents(self):
        a = QSeries(0, {Fraction(-1): LaurentPoly.one(0)}, Fraction(2))
        b = QSeries(0, {Fraction(0): LaurentPoly.one(0)}, Fraction(2))
        assert (a * b).order == Fraction(1)

    def test_coefficient_beyond_order_rejected(self):
        s = QSeries.one(0, Fraction(2))
        with pytest.raises(ValueError):
            s.coefficient(2)

    def test_shift_and_truncate(self):
        s = qs_eta_product_inverse(1, Fraction(4)).shift(Fraction(1, 2))
        assert s.lowest_exponent() == Fraction(1, 2)
        assert s.order == Fraction(9, 2)
        with pytest.raises(ValueError):
            s.truncate(Fraction(5))


class TestGeomInverse:
    def test_plain_geometric(self):
        s = qs_geom_inverse(1, (), 1, Fraction(4))
        assert [s.coefficient(n).total() for n in range(4)] == [1, 1, 1, 1]

    def test_binomial_with_weight(self):
        s = qs_geom_inverse(Fraction(1, 2), (1,), 2, Fraction(3, 2))
        assert s.coefficient(0) == LaurentPoly(1, {(0,): 1})
        assert s.coefficient(Fraction(1, 2)) == LaurentPoly(1, {(1,): 2})
        assert s.coefficient(1) == LaurentPoly(1, {(2,): 3})

    def test_eighth_power_coefficient(self):
        s = qs_geom_inverse(1, (), 8, Fraction(4))
        assert s.coefficient(3).total() == comb(10, 3) == 120

    def test_zero_exponent_zero_weight_signals(self):
        with pytest.raises(DivergentSeriesError):
            qs_geom_inverse(0, (0,), 1, Fraction(2), nvars=1)

    def test_zero_exponent_needs_formal_flag(self):
        with pytest.raises(DivergentSeriesError):
            qs_geom_inverse(0, (1,), 1, Fraction(2), nvars=1)
        s = qs_geom_inverse(0, (1,), 1, Fraction(2), nvars=1,
                            formal_weight_terms=3)
        assert s.coefficient(0) == LaurentPoly(
            1, {(0,): 1, (1,): 1, (2,): 1, (3,): 1})

    def test_roundtrip_with_factor(self):
        order = Fraction(5)
        factor = QSeries(1, {Fraction(0): LaurentPoly.one(1),
                             Fraction(2): LaurentPoly.monomial((-1,), -1)},
                         order)
        inv = qs_geom_inverse(2, (-1,), 1, order, nvars=1)
        assert (factor * inv).agrees_with(QSeries.one(1, order))


class TestRingLaws:
    def random_series(self, rng, order):
        terms = {}
        for _ in range(rng.randrange(1, 6)):
            e = Fraction(rng.randrange(0, 8), 2)
            key = (rng.randrange(-2, 3),)
            c = rng.randrange(-5, 6)
            if c:
                poly = terms.setdefault(e, {})
                poly[key] = poly.get(key, 0) + c
        return QSeries(1, {e: LaurentPoly(1, p) for e, p in terms.items()},
                       order)

    def test_ring_laws_random(self):
        rng = random.Random(20240815)
        order = Fraction(4)
        for _ in range(40):
            a = self.random_series(rng, order)
            b = self.random_series(rng, order)
            c = self.random_series(rng, order)
            assert ((a + b) * c).agrees_with(a * c + b * c)
            assert ((a * b) * c).agrees_with(a * (b * c))
            assert (a * b).agrees_with(b * a)

    def test_eta_product_inverse_pair(self):
        order = Fraction(6)
        prod = qs_eta_product(3, order) * qs_eta_product_inverse(3, order)
        assert prod.agrees_with(QSeries.one(0, order))


class TestRationalFunctionK:
    def test_reduction_and_equality(self):
        f = (K * K - 1) / (K - 1)
        assert f == K + 1
        assert str(f) == "k + 1"

    def test_monic_denominator(self):
        f = RationalFunctionK([1], [2, 2])
        assert f.den == (Fraction(1), Fraction(1))
        assert f.num == (Fraction(1, 2),)

    def test_eval_and_pole(self):
        c_k = 1 - 6 * (K + 1) * (K + 1) / (K + 2)
        with pytest.raises(PoleError):
            rf_eval(c_k, -2)
        assert rf_eval(c_k, 0) == -2
        assert rf_eval(2 * (2 - 3 * K), -2) == 16

    def test_mixed_arithmetic_with_fractions(self):
        f = Fraction(1, 2) + K
        assert rf_eval(f, Fraction(1, 2)) == 1
        g = 3 - K / (K + 1)
        assert rf_eval(g, 1) == Fraction(5, 2)

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            K / (K - K)

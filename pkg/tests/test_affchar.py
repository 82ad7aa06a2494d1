from fractions import Fraction
from itertools import product

import pytest

from classs.affchar import (UnsupportedPathError, f_factor, simple_char,
                            weyl_module_char, weyl_module_char_numerator_method,
                            z_char, zbar_char)
from classs.exactalg import LaurentPoly, QSeries
from classs.finchar import enumerate_dominant, full_character, weyl_dimension
from classs.rootsys import build_root_system

GRID_TYPES = [("A", 1), ("A", 2), ("B", 2), ("G", 2)]


def scalar_coeffs(series, exponents):
    return [series.coefficient(e).coefficient(()) for e in exponents]


def brute_mode_count(num_generators, level):
    """Oracle: count monomials in num_generators oscillators of total
    mode sum `level`, enumerating occupation numbers per (generator,
    positive mode) slot directly."""
    slots = [m for m in range(1, level + 1) for _ in range(num_generators)]

    def count(i, remaining):
        if remaining == 0:
            return 1
        if i == len(slots):
            return 0
        acc = 0
        occ = 0
        while occ * slots[i] <= remaining:
            acc += count(i + 1, remaining - occ * slots[i])
            occ += 1
        return acc

    return count(0, level)


class TestWeylModuleChar:
    def test_vacuum_rank_one_against_mode_oracle(self):
        a1 = build_root_system("A", 1)
        series = weyl_module_char(a1, a1.zero_weight(), Fraction(4))
        got = scalar_coeffs(series, range(4))
        want = [brute_mode_count(3, n) for n in range(4)]
        assert got == want
        assert got[:3] == [1, 3, 9]

    def test_flavored_top_level_is_finite_character(self):
        a1 = build_root_system("A", 1)
        series = weyl_module_char(a1, a1.weight((1,)), Fraction(2),
                                  flavored=True)
        assert series.coefficient(0) == LaurentPoly(1, {(1,): 1, (-1,): 1})

    def test_first_level_is_adjoint_dimension(self):
        a2 = build_root_system("A", 2)
        series = weyl_module_char(a2, a2.zero_weight(), Fraction(2))
        assert series.coefficient(1).coefficient(()) == a2.dim_g == 8

    def test_flavored_level_one_is_adjoint_character(self):
        a2 = build_root_system("A", 2)
        series = weyl_module_char(a2, a2.zero_weight(), Fraction(2),
                                  flavored=True)
        assert series.coefficient(1) == full_character(a2, a2.weight((1, 1)))

    def test_unflavored_coefficients_non_negative(self):
        for letter, rank in GRID_TYPES:
            rs = build_root_system(letter, rank)
            for lam in enumerate_dominant(rs, 2):
                series = weyl_module_char(rs, lam, Fraction(5))
                assert all(c.coefficient(()) >= 0
                           for _, c in series.sorted_items())


class TestNumeratorMethod:
    @pytest.mark.parametrize("letter,rank", GRID_TYPES)
    def test_agrees_with_production_path(self, letter, rank):
        rs = build_root_system(letter, rank)
        for lam in enumerate_dominant(rs, 2):
            pbw = weyl_module_char(rs, lam, Fraction(6), flavored=True)
            alt = weyl_module_char_numerator_method(rs, lam, Fraction(6))
            assert pbw.agrees_with(alt, up_to=Fraction(6))

    def test_rank_bound_signalled(self):
        a5 = build_root_system("A", 5)
        with pytest.raises(UnsupportedPathError):
            weyl_module_char_numerator_method(a5, a5.zero_weight(), Fraction(2))


class TestFFactor:
    def test_vacuum_rank_one_is_eta_ratio(self):
        # f_0 = prod_{j>=2} (1 - q^j); expand the product directly
        a1 = build_root_system("A", 1)
        got = f_factor(a1, a1.zero_weight(), Fraction(8))
        expect = QSeries.one(0, Fraction(8))
        for j in range(2, 8):
            expect = expect * QSeries(
                0, {Fraction(0): LaurentPoly.one(0),
                    Fraction(j): LaurentPoly(0, {(): -1})}, Fraction(8))
        assert got.agrees_with(expect)

    def test_constant_term_one(self):
        for letter, rank in GRID_TYPES:
            rs = build_root_system(letter, rank)
            series = f_factor(rs, rs.zero_weight(), Fraction(4))
            assert series.coefficient(0).coefficient(()) == 1

    def test_prefactor_exponent(self):
        a1 = build_root_system("A", 1)
        series = f_factor(a1, a1.weight((1,)), Fraction(3))
        assert series.lowest_exponent() == Fraction(1, 2)
        bare = f_factor(a1, a1.weight((1,)), Fraction(3), with_prefactor=False)
        assert bare.lowest_exponent() == 0


class TestZChar:
    def test_vacuum_rank_one_partitions_into_parts_ge_two(self):
        a1 = build_root_system("A", 1)
        series = z_char(a1, a1.zero_weight(), Fraction(7))

        def partitions_min2(n, min_part=2):
            if n == 0:
                return 1
            return sum(partitions_min2(n - p, p)
                       for p in range(min_part, n + 1))

        got = scalar_coeffs(series, range(7))
        assert got == [partitions_min2(n) for n in range(7)]
        assert got == [1, 0, 1, 1, 2, 2, 4]

    def test_lowest_exponent(self):
        a1 = build_root_system("A", 1)
        assert z_char(a1, a1.weight((1,)), Fraction(2)).lowest_exponent() \
            == Fraction(-1, 2)

    @pytest.mark.parametrize("letter,rank", GRID_TYPES)
    def test_reciprocal_of_f(self, letter, rank):
        rs = build_root_system(letter, rank)
        for lam in enumerate_dominant(rs, 2):
            z = z_char(rs, lam, Fraction(5))
            f = f_factor(rs, lam, Fraction(5))
            assert (z * f).agrees_with(QSeries.one(0, Fraction(5)))


class TestZbarChar:
    def test_rank_one_geometric_ladder(self):
        a1 = build_root_system("A", 1)
        for m in range(5):
            zb = zbar_char(a1, a1.weight((m,)))
            shift = Fraction(m, 2)
            assert zb.lowest_exponent() == -shift
            assert [e + shift for e, _ in zb.sorted_items()] == \
                [Fraction(i) for i in range(m + 1)]
            assert all(c.coefficient(()) == 1 for _, c in zb.sorted_items())

    def test_vacuum_is_one(self):
        for letter, rank in GRID_TYPES:
            rs = build_root_system(letter, rank)
            zb = zbar_char(rs, rs.zero_weight())
            assert zb.sorted_items() == [(Fraction(0), LaurentPoly.one(0))]

    @pytest.mark.parametrize("letter,rank", GRID_TYPES)
    def test_value_at_one_is_weyl_dimension(self, letter, rank):
        rs = build_root_system(letter, rank)
        for lam in enumerate_dominant(rs, 2):
            zb = zbar_char(rs, lam)
            assert sum(c.coefficient(()) for _, c in zb.sorted_items()) \
                == weyl_dimension(rs, lam)

    def test_fundamental_value(self):
        a2 = build_root_system("A", 2)
        zb = zbar_char(a2, a2.weight((1, 0)))
        assert sum(c.coefficient(()) for _, c in zb.sorted_items()) == 3


class TestSimpleChar:
    def test_top_level_dimension(self):
        a1 = build_root_system("A", 1)
        series = simple_char(a1, a1.weight((1,)), Fraction(2))
        assert series.coefficient(0).coefficient(()) == 2

    def test_vacuum_identity(self):
        a1 = build_root_system("A", 1)
        lhs = simple_char(a1, a1.zero_weight(), Fraction(6))
        rhs = f_factor(a1, a1.zero_weight(), Fraction(6)) \
            * weyl_module_char(a1, a1.zero_weight(), Fraction(6))
        assert lhs.agrees_with(rhs)

    @pytest.mark.parametrize("letter,rank", GRID_TYPES)
    @pytest.mark.parametrize("flavored", [False, True])
    def test_factorization_identity(self, letter, rank, flavored):
        rs = build_root_system(letter, rank)
        order = Fraction(5)
        for lam in enumerate_dominant(rs, 2):
            shift = rs.rho_pairing(lam)
            weyl = weyl_module_char(rs, lam, order, flavored)
            z = z_char(rs, lam, order)
            s = simple_char(rs, lam, order, flavored)
            if flavored:
                z = z.embed(rs.rank, 0)
            rhs = (z * s).shift(shift)
            assert weyl.agrees_with(rhs, up_to=order)

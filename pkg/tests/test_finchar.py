from fractions import Fraction

import pytest

from classs.exactalg import LaurentPoly
from classs.finchar import (enumerate_dominant, freudenthal_character,
                            full_character, weyl_dimension, weyl_orbit)
from classs.rootsys import build_root_system

RANK_LE_4 = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3),
             ("B", 4), ("C", 2), ("C", 3), ("C", 4), ("D", 3), ("D", 4),
             ("F", 4), ("G", 2)]


class TestWeylDimension:
    def test_rank_one_ladder(self):
        a1 = build_root_system("A", 1)
        for m in range(8):
            assert weyl_dimension(a1, a1.weight((m,))) == m + 1

    def test_adjoints(self):
        a2 = build_root_system("A", 2)
        assert weyl_dimension(a2, a2.weight((1, 1))) == 8
        d4 = build_root_system("D", 4)
        assert weyl_dimension(d4, d4.weight((0, 1, 0, 0))) == 28 == d4.dim_g

    def test_non_dominant_rejected(self):
        a2 = build_root_system("A", 2)
        with pytest.raises(ValueError):
            weyl_dimension(a2, a2.weight((-1, 0)))
        with pytest.raises(ValueError):
            weyl_dimension(a2, a2.weight((Fraction(1, 2), 0)))


class TestFreudenthal:
    def test_rank_one_symmetric_square(self):
        a1 = build_root_system("A", 1)
        dom = freudenthal_character(a1, a1.weight((2,)))
        assert {w.lattice_key(): m for w, m in dom.dominant_mults.items()} \
            == {(2,): 1, (0,): 1}

    def test_adjoint_zero_weight_space_is_rank(self):
        for label in ("A2", "B2", "G2", "D4"):
            rs = build_root_system(label[0], int(label[1]))
            adjoint = rs.highest_root.weight
            dom = freudenthal_character(rs, adjoint)
            assert dom.multiplicity(rs.zero_weight()) == rs.rank

    def test_symmetric_cube_against_tensor_oracle(self):
        # oracle: third tensor power of the defining representation of
        # the rank-two special linear algebra, minus the known summands;
        # defining weights are hand-coded, so only Laurent arithmetic
        # is shared with the path under test
        a2 = build_root_system("A", 2)
        fund = LaurentPoly(2, {(1, 0): 1, (-1, 1): 1, (0, -1): 1})
        fund_dual = LaurentPoly(2, {(0, 1): 1, (1, -1): 1, (-1, 0): 1})
        one = LaurentPoly.one(2)
        adjoint = fund * fund_dual - one
        cube = fund * fund * fund
        oracle = cube - adjoint.scale(2) - one
        lam = a2.weight((3, 0))
        assert full_character(a2, lam) == oracle
        dom = freudenthal_character(a2, lam)
        assert set(dom.dominant_mults.values()) == {1}
        assert weyl_dimension(a2, lam) == 10

    @pytest.mark.parametrize("letter,rank", RANK_LE_4)
    def test_dimension_matches_product_formula(self, letter, rank):
        rs = build_root_system(letter, rank)
        for lam in enumerate_dominant(rs, 4):
            dom = freudenthal_character(rs, lam)
            total = sum(m * len(weyl_orbit(rs, mu))
                        for mu, m in dom.dominant_mults.items())
            assert total == weyl_dimension(rs, lam)


class TestFullCharacter:
    def test_rank_one(self):
        a1 = build_root_system("A", 1)
        assert full_character(a1, a1.weight((1,))) == \
            LaurentPoly(1, {(1,): 1, (-1,): 1})
        assert full_character(a1, a1.weight((2,))) == \
            LaurentPoly(1, {(2,): 1, (0,): 1, (-2,): 1})

    def test_adjoint_structure(self):
        a2 = build_root_system("A", 2)
        ch = full_character(a2, a2.weight((1, 1)))
        assert ch.coefficient((0, 0)) == 2
        root_keys = {r.weight.lattice_key() for r in a2.positive_roots}
        root_keys |= {tuple(-x for x in k) for k in root_keys}
        assert set(ch.terms) == root_keys | {(0, 0)}
        assert all(ch.coefficient(k) == 1 for k in root_keys)

    def test_weyl_invariance(self):
        for label in (("A", 2), ("B", 2), ("G", 2)):
            rs = build_root_system(*label)
            ch = full_character(rs, rs.rho)
            for i in range(rs.rank):
                reflected = {}
                for key, v in ch.terms.items():
                    w = rs.simple_reflection(
                        i, rs.weight(key))
                    reflected[w.lattice_key()] = v
                assert LaurentPoly(rs.rank, reflected) == ch

    def test_cartan_component(self):
        for label in (("A", 2), ("B", 2), ("C", 3)):
            rs = build_root_system(*label)
            lam = rs.fundamental_weight(0)
            mu = rs.rho
            prod = full_character(rs, lam) * full_character(rs, mu)
            assert prod.coefficient((lam + mu).lattice_key()) == 1


class TestEnumerateDominant:
    def test_rank_one(self):
        a1 = build_root_system("A", 1)
        assert [w.lattice_key() for w in enumerate_dominant(a1, 1)] \
            == [(0,), (1,), (2,)]

    def test_rank_two(self):
        a2 = build_root_system("A", 2)
        assert [w.lattice_key() for w in enumerate_dominant(a2, 1)] \
            == [(0, 0), (1, 0), (0, 1)]

    def test_cutoff_zero(self):
        for label in (("A", 3), ("G", 2), ("E", 6)):
            rs = build_root_system(*label)
            assert [w.lattice_key() for w in enumerate_dominant(rs, 0)] \
                == [(0,) * rs.rank]

    def test_grading_bound_holds(self):
        b2 = build_root_system("B", 2)
        for w in enumerate_dominant(b2, Fraction(7, 2)):
            assert b2.rho_pairing(w) <= Fraction(7, 2)

    def test_negative_cutoff_rejected(self):
        with pytest.raises(ValueError):
            enumerate_dominant(build_root_system("A", 1), -1)

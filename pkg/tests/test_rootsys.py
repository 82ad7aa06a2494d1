from fractions import Fraction

import pytest

from classs.rootsys import (Coweight, InvalidTypeError, Weight,
                            build_root_system, parse_algebra)

# textbook data: dimension, dual Coxeter number, exponents
KNOWN_TABLE = {
    ("A", 1): (3, 2, (1,)),
    ("A", 2): (8, 3, (1, 2)),
    ("A", 3): (15, 4, (1, 2, 3)),
    ("A", 4): (24, 5, (1, 2, 3, 4)),
    ("B", 2): (10, 3, (1, 3)),
    ("B", 3): (21, 5, (1, 3, 5)),
    ("C", 3): (21, 4, (1, 3, 5)),
    ("C", 4): (36, 5, (1, 3, 5, 7)),
    ("D", 3): (15, 4, (1, 2, 3)),
    ("D", 4): (28, 6, (1, 3, 3, 5)),
    ("D", 5): (45, 8, (1, 3, 4, 5, 7)),
    ("E", 6): (78, 12, (1, 4, 5, 7, 8, 11)),
    ("E", 7): (133, 18, (1, 5, 7, 9, 11, 13, 17)),
    ("E", 8): (248, 30, (1, 7, 11, 13, 17, 19, 23, 29)),
    ("F", 4): (52, 9, (1, 5, 7, 11)),
    ("G", 2): (14, 4, (1, 5)),
}

ALL_TYPES = sorted(KNOWN_TABLE)


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_against_textbook_table(letter, rank):
    rs = build_root_system(letter, rank)
    dim, hcheck, exps = KNOWN_TABLE[(letter, rank)]
    assert rs.dim_g == dim
    assert rs.dual_coxeter == hcheck
    assert rs.exponents == exps


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_structural_invariants(letter, rank):
    rs = build_root_system(letter, rank)
    assert rs.dim_g == rs.rank + 2 * len(rs.positive_roots)
    assert sum(rs.exponents) == len(rs.positive_roots)
    # strange formula, exact rationals
    assert rs.normalized_form(rs.rho, rs.rho) == \
        Fraction(rs.dual_coxeter * rs.dim_g, 12)
    for i in range(rs.rank):
        assert rs.cartan_matrix[i][i] == 2
        for j in range(rs.rank):
            if i != j:
                assert rs.cartan_matrix[i][j] <= 0
    # rho and rho_check really are half-sums
    half_sum = rs.zero_weight()
    for r in rs.positive_roots:
        half_sum = half_sum + r.weight
    assert half_sum.scale(Fraction(1, 2)) == rs.rho
    cw = tuple(sum(r.coroot.coords[j] for r in rs.positive_roots) / 2
               for j in range(rs.rank))
    assert Coweight(cw) == rs.rho_check


@pytest.mark.parametrize("letter,rank", [("A", 2), ("A", 3), ("D", 4), ("E", 6)])
def test_simply_laced_pairing_equals_form(letter, rank):
    rs = build_root_system(letter, rank)
    assert rs.pairing(rs.rho, rs.rho_check) == \
        rs.normalized_form(rs.rho, rs.rho)


def test_non_simply_laced_differ():
    rs = build_root_system("B", 2)
    assert rs.pairing(rs.rho, rs.rho_check) == Fraction(7, 2)
    assert rs.normalized_form(rs.rho, rs.rho) == Fraction(5, 2)


def test_pairing_examples():
    a1 = build_root_system("A", 1)
    omega = a1.fundamental_weight(0)
    alpha_check = a1.simple_roots[0].coroot
    assert a1.pairing(omega, alpha_check) == 1
    assert a1.pairing(a1.rho, a1.rho_check) == Fraction(1, 2)
    a2 = build_root_system("A", 2)
    assert a2.pairing(a2.rho, a2.rho_check) == 2


def test_pairing_matches_cartan_matrix_convention():
    for label in ("A2", "B2", "G2", "F4"):
        rs = parse_algebra(label)
        for i in range(rs.rank):
            alpha_i = rs.simple_roots[i].weight
            for j in range(rs.rank):
                coroot_j = rs.simple_roots[j].coroot
                assert rs.pairing(alpha_i, coroot_j) == rs.cartan_matrix[j][i]


def test_normalized_form_examples():
    a1 = build_root_system("A", 1)
    omega = a1.fundamental_weight(0)
    assert a1.normalized_form(omega, omega) == Fraction(1, 2)
    d4 = build_root_system("D", 4)
    assert d4.normalized_form(d4.rho, d4.rho) == 14
    assert d4.normalized_form(d4.zero_weight(), d4.rho) == 0


def test_highest_root_has_length_two():
    for label in ("A3", "B3", "C3", "G2", "F4", "E6"):
        rs = parse_algebra(label)
        assert rs.highest_root.length_sq == 2


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_positive_coroot_pairings_integral(letter, rank):
    rs = build_root_system(letter, rank)
    lam = Weight(tuple(Fraction((i * 7) % 3) for i in range(rank)))
    lam_rho = lam + rs.rho
    for r in rs.positive_roots:
        v = r.coroot_pairing(lam_rho)
        assert v.denominator == 1 and v > 0


def test_coweight_embedding_consistent_with_pairing():
    for label in ("A2", "B2", "G2", "C3"):
        rs = parse_algebra(label)
        lam = rs.rho + rs.fundamental_weight(0)
        for r in rs.positive_roots:
            embedded = rs.coweight_to_weight(r.coroot)
            assert rs.normalized_form(lam, embedded) == \
                rs.pairing(lam, r.coroot)


def test_dominant_representative():
    a2 = build_root_system("A", 2)
    dom = a2.dominant_representative(a2.weight((-1, 2)))
    assert dom == a2.weight((1, 1))
    assert a2.dominant_representative(dom) == dom
    a1 = build_root_system("A", 1)
    assert a1.dominant_representative(a1.weight((-3,))) == a1.weight((3,))


def test_adjoint_weights_multiset():
    a2 = build_root_system("A", 2)
    zeros = [w for w in a2.adjoint_weights if w.is_zero()]
    assert len(zeros) == a2.rank
    assert len(a2.adjoint_weights) == a2.dim_g


@pytest.mark.parametrize("letter,rank", [("A", 0), ("B", 1), ("C", 1),
                                         ("D", 2), ("E", 5), ("E", 9),
                                         ("F", 3), ("G", 3), ("H", 2)])
def test_invalid_types_rejected(letter, rank):
    with pytest.raises(InvalidTypeError):
        build_root_system(letter, rank)


def test_parse_algebra():
    assert parse_algebra("e6").label() == "E6"
    with pytest.raises(InvalidTypeError):
        parse_algebra("Q5")
    with pytest.raises(InvalidTypeError):
        parse_algebra("A")


def test_rank_mismatch_rejected():
    a2 = build_root_system("A", 2)
    a1 = build_root_system("A", 1)
    with pytest.raises(ValueError):
        a2.pairing(a1.rho, a2.rho_check)
    with pytest.raises(ValueError):
        a2.normalized_form(a1.rho, a2.rho)

"""Runnable verification suites covering every module invariant.

Each suite returns a list of Check results; the CLI renders them and
exits nonzero if anything fails.  Randomized checks draw from a seeded
generator so runs are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import affchar, chiral, finchar, opeaudit
from .exactalg import (LaurentPoly, PoleError, QSeries, RationalFunctionK,
                       qs_geom_inverse, rf_eval)
from .rootsys import Weight, build_root_system

K = RationalFunctionK.variable()


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def _check(results: list[Check], name: str, ok: bool, detail: str = "") -> None:
    results.append(Check(name, bool(ok), detail))


SMALL_TYPES = [("A", 1), ("A", 2), ("B", 2), ("G", 2)]
RANK_LE_4 = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3),
             ("B", 4), ("C", 2), ("C", 3), ("C", 4), ("D", 3), ("D", 4),
             ("F", 4), ("G", 2)]
RANK_LE_6 = RANK_LE_4 + [("A", 5), ("A", 6), ("B", 5), ("B", 6), ("C", 5),
                         ("C", 6), ("D", 5), ("D", 6), ("E", 6)]
ALL_TESTED = RANK_LE_6 + [("A", 7), ("A", 8), ("B", 7), ("C", 7), ("D", 7),
                          ("E", 7), ("E", 8)]


def suite_rootsys(seed: int) -> list[Check]:
    rng = random.Random(seed)
    out: list[Check] = []
    for letter, rank in ALL_TESTED:
        rs = build_root_system(letter, rank)
        label = rs.label()
        _check(out, f"{label} dim = rank + 2|roots|",
               rs.dim_g == rs.rank + 2 * len(rs.positive_roots),
               f"dim={rs.dim_g}")
        _check(out, f"{label} sum of exponents = |roots|",
               sum(rs.exponents) == len(rs.positive_roots),
               f"exponents={list(rs.exponents)}")
        fdv = rs.normalized_form(rs.rho, rs.rho)
        _check(out, f"{label} strange formula",
               fdv == Fraction(rs.dual_coxeter * rs.dim_g, 12),
               f"(rho|rho)={fdv}")
        if letter in ("A", "D", "E"):
            _check(out, f"{label} simply-laced rho pairing",
                   rs.pairing(rs.rho, rs.rho_check) == fdv)
        diag_ok = all(rs.cartan_matrix[i][i] == 2 for i in range(rank))
        off_ok = all(rs.cartan_matrix[i][j] <= 0
                     for i in range(rank) for j in range(rank) if i != j)
        _check(out, f"{label} Cartan matrix shape", diag_ok and off_ok)
        lam = Weight(tuple(Fraction(rng.randrange(0, 3)) for _ in range(rank)))
        lam_rho = lam + rs.rho
        pairings_ok = all(
            r.coroot_pairing(lam_rho).denominator == 1
            and r.coroot_pairing(lam_rho) > 0
            for r in rs.positive_roots)
        _check(out, f"{label} <lam+rho, coroot> positive integers",
               pairings_ok, f"lam={[int(c) for c in lam.coords]}")
        cw = rng.choice(rs.positive_roots).coroot
        _check(out, f"{label} pairing matches form through embedding",
               rs.pairing(lam, cw)
               == rs.normalized_form(lam, rs.coweight_to_weight(cw)))
    return out


def _random_qseries(rng: random.Random, nvars: int, order: Fraction) -> QSeries:
    terms = {}
    for _ in range(rng.randrange(1, 6)):
        e = Fraction(rng.randrange(0, 2 * int(order)), 2)
        key = tuple(rng.randrange(-2, 3) for _ in range(nvars))
        c = rng.randrange(-4, 5)
        if c:
            poly = terms.setdefault(e, {})
            poly[key] = poly.get(key, 0) + c
    return QSeries(nvars, {e: LaurentPoly(nvars, p) for e, p in terms.items()},
                   order)


def suite_exactalg(seed: int) -> list[Check]:
    rng = random.Random(seed + 1)
    out: list[Check] = []
    order = Fraction(4)
    for trial in range(20):
        a = _random_qseries(rng, 1, order)
        b = _random_qseries(rng, 1, order)
        c = _random_qseries(rng, 1, order)
        _check(out, f"distributivity trial {trial}",
               ((a + b) * c).agrees_with(a * c + b * c))
        _check(out, f"associativity trial {trial}",
               ((a * b) * c).agrees_with(a * (b * c)))
        _check(out, f"commutativity trial {trial}",
               (a * b).agrees_with(b * a))
    for trial in range(10):
        e = Fraction(rng.randrange(1, 4), rng.choice((1, 2)))
        mu = (rng.randrange(-2, 3),)
        a = _random_qseries(rng, 1, order)
        factor = QSeries(1, {Fraction(0): LaurentPoly.one(1),
                             e: LaurentPoly.monomial(mu, -1)}, order)
        inv = qs_geom_inverse(e, mu, 1, order, nvars=1)
        _check(out, f"geometric inverse trial {trial}",
               ((a * factor) * inv).agrees_with(a))
    ck = 1 - 6 * (K + 1) * (K + 1) / (K + 2)
    try:
        rf_eval(ck, -2)
        _check(out, "pole signal at critical level", False)
    except PoleError:
        _check(out, "pole signal at critical level", True)
    _check(out, "virasoro series value at k=0", rf_eval(ck, 0) == -2)
    _check(out, "linear coefficient value", rf_eval(2 * (2 - 3 * K), -2) == 16)
    return out


def suite_finchar(seed: int) -> list[Check]:
    rng = random.Random(seed + 2)
    out: list[Check] = []
    for letter, rank in RANK_LE_4:
        rs = build_root_system(letter, rank)
        lams = finchar.enumerate_dominant(rs, Fraction(4))
        for lam in lams:
            dom = finchar.freudenthal_character(rs, lam)
            total = sum(m * len(finchar.weyl_orbit(rs, mu))
                        for mu, m in dom.dominant_mults.items())
            want = finchar.weyl_dimension(rs, lam)
            _check(out, f"{rs.label()} Freudenthal dim lam="
                   f"{[int(c) for c in lam.coords]}",
                   total == want, f"{total} vs {want}")
    for letter, rank in SMALL_TYPES:
        rs = build_root_system(letter, rank)
        lam = rng.choice(finchar.enumerate_dominant(rs, Fraction(3))[1:] or
                         [rs.fundamental_weight(0)])
        ch = finchar.full_character(rs, lam)
        for i in range(rs.rank):
            reflected = {}
            for key, v in ch.terms.items():
                w = rs.simple_reflection(i, Weight(tuple(Fraction(x) for x in key)))
                reflected[w.lattice_key()] = v
            _check(out, f"{rs.label()} reflection invariance i={i}",
                   LaurentPoly(rs.rank, reflected) == ch)
        mu = rng.choice(finchar.enumerate_dominant(rs, Fraction(2)))
        prod = finchar.full_character(rs, lam) * finchar.full_character(rs, mu)
        top = (lam + mu).lattice_key()
        _check(out, f"{rs.label()} Cartan component",
               prod.coefficient(top) == 1)
    a1 = build_root_system("A", 1)
    _check(out, "A1 dominant enumeration",
           [w.lattice_key() for w in finchar.enumerate_dominant(a1, 1)]
           == [(0,), (1,), (2,)])
    a2 = build_root_system("A", 2)
    _check(out, "A2 dominant enumeration",
           [w.lattice_key() for w in finchar.enumerate_dominant(a2, 1)]
           == [(0, 0), (1, 0), (0, 1)])
    return out


def suite_affchar(seed: int) -> list[Check]:
    out: list[Check] = []
    order6 = Fraction(6)
    for letter, rank in SMALL_TYPES:
        rs = build_root_system(letter, rank)
        for lam in finchar.enumerate_dominant(rs, Fraction(2)):
            tag = f"{rs.label()} lam={[int(c) for c in lam.coords]}"
            pbw = affchar.weyl_module_char(rs, lam, order6, flavored=True)
            alt = affchar.weyl_module_char_numerator_method(rs, lam, order6)
            _check(out, f"{tag} two-method equality to q^6",
                   pbw.agrees_with(alt, up_to=order6))
            shift = rs.rho_pairing(lam)
            lhs = affchar.weyl_module_char(rs, lam, order6, flavored=True)
            z = affchar.z_char(rs, lam, order6).embed(rs.rank, 0)
            s = affchar.simple_char(rs, lam, order6, flavored=True)
            rhs = (z * s).shift(shift)
            _check(out, f"{tag} factorization identity",
                   lhs.agrees_with(rhs, up_to=order6))
            zbar = affchar.zbar_char(rs, lam)
            value = sum(c.total() for _, c in zbar.sorted_items())
            _check(out, f"{tag} finite shadow at q=1",
                   value == finchar.weyl_dimension(rs, lam))
            unflavored = affchar.weyl_module_char(rs, lam, Fraction(5))
            _check(out, f"{tag} non-negative unflavored coefficients",
                   all(c.coefficient(()) >= 0
                       for _, c in unflavored.sorted_items()))
    return out


def suite_classs(seed: int) -> list[Check]:
    rng = random.Random(seed + 3)
    out: list[Check] = []
    a1 = build_root_system("A", 1)
    a2 = build_root_system("A", 2)

    res = chiral.class_s_char(chiral.ClassSSpec(a1, 3, Fraction(11, 4)))
    coeffs = [res.series.coefficient(Fraction(n, 2)).coefficient(())
              for n in range(4)]
    _check(out, "A1 b=3 unflavored leading coefficients",
           coeffs == [1, 8, 36, 128], str(coeffs))
    _check(out, "A1 b=3 conical", coeffs[0] == 1 and min(coeffs) >= 0)

    flav = chiral.class_s_char(chiral.ClassSSpec(a1, 3, Fraction(11, 4),
                                                 flavored=True))
    omega = 1
    weights = [(s1 * omega, s2 * omega, s3 * omega)
               for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1)]
    bg = chiral.betagamma_char(weights, Fraction(11, 4))
    _check(out, "A1 b=3 flavored equals symplectic bosons",
           flav.series.agrees_with(bg, up_to=Fraction(11, 4)))
    for n in range(5):
        e = Fraction(n, 2)
        series_count = bg.coefficient(e).total()
        fock = chiral.betagamma_fock_count(8, e)
        _check(out, f"symplectic boson Fock oracle at q^{e}",
               series_count == fock, f"{series_count} vs {fock}")

    for b, lam_key, letter in ((3, (1,), "A"), (4, (2,), "A")):
        rs = build_root_system(letter, 1)
        lam = rs.weight(lam_key)
        sector = chiral.class_s_sector_char(rs, b, lam, Fraction(4))
        want = (b - 2) * rs.rho_pairing(lam)
        _check(out, f"A1 b={b} sector lowest exponent",
               sector.lowest_exponent() == want)

    for rs, bs, cutoff in ((a1, (2, 3, 4), 2), (a2, (2, 3), 1)):
        for lam in finchar.enumerate_dominant(rs, cutoff):
            for b in bs:
                ok = chiral.class_s_recursion_check(rs, b, lam, Fraction(3))
                _check(out, f"{rs.label()} recursion b={b} lam="
                       f"{[int(c) for c in lam.coords]}", ok)

    d4res = chiral.class_s_char(chiral.ClassSSpec(a1, 4, Fraction(3, 2)))
    _check(out, "A1 b=4 adjoint dimension coefficient",
           d4res.series.coefficient(1).coefficient(()) == 28)

    e6res = chiral.class_s_char(chiral.ClassSSpec(a2, 3, Fraction(3, 2)))
    _check(out, "A2 b=3 adjoint dimension coefficient",
           e6res.series.coefficient(1).coefficient(()) == 78)

    d4 = build_root_system("D", 4)
    e6 = build_root_system("E", 6)
    _check(out, "A1 b=4 central charge vs Sugawara",
           chiral.central_charge_class_s(a1, 4) == -14
           and chiral.sugawara_central_charge(d4, -2) == -14)
    _check(out, "A2 b=3 central charge vs Sugawara",
           chiral.central_charge_class_s(a2, 3) == -26
           and chiral.sugawara_central_charge(e6, -3) == -26)
    for letter, rank in RANK_LE_6:
        rs = build_root_system(letter, rank)
        _check(out, f"{rs.label()} b=2 central charge is 2 dim g",
               chiral.central_charge_class_s(rs, 2) == 2 * rs.dim_g)
        ghosts = chiral.ghost_central_charges(rs)
        _check(out, f"{rs.label()} ghost paths agree",
               ghosts[1] == -2 * rs.dim_g, f"ghosts={ghosts}")
        combo = rs.dim_g + rs.rank + 24 * chiral.rho_rho_check(rs)
        _check(out, f"{rs.label()} one-puncture value",
               chiral.central_charge_class_s(rs, 1) == combo)
        for b in (1, 2, 3, 5):
            want = b * combo + (b - 1) * ghosts[0]
            _check(out, f"{rs.label()} gluing identity b={b}",
                   chiral.central_charge_class_s(rs, b) == want)
        nd = chiral.principal_nilpotent_data(rs)
        _check(out, f"{rs.label()} universal centralizer",
               chiral.central_charge_I_ff(rs, nd)
               == chiral.central_charge_universal_centralizer(rs))
        _check(out, f"{rs.label()} zero-grading two-sided reduction",
               chiral.central_charge_I_ff(rs, chiral.zero_nilpotent_data(rs))
               == 2 * rs.dim_g)
    nd1 = chiral.principal_nilpotent_data(a1)
    sug = RationalFunctionK.constant(3) * K / (K + 2)
    reduced = chiral.central_charge_ds_reduction(a1, nd1, K, sug)
    virasoro = 1 - 6 * (K + 1) * (K + 1) / (K + 2)
    _check(out, "A1 principal reduction matches Virasoro symbolically",
           reduced == virasoro, str(reduced))
    eqw = chiral.central_charge_equiv_w(a1, nd1, K)
    _check(out, "A1 equivariant W central charge symbolically",
           eqw == 2 * (2 - 3 * K), str(eqw))
    _check(out, "A1 equivariant W at critical level",
           chiral.central_charge_equiv_w(a1, nd1, Fraction(-2)) == 16)
    _check(out, "A2 equivariant W at critical level",
           chiral.central_charge_equiv_w(
               build_root_system("A", 2),
               chiral.principal_nilpotent_data(build_root_system("A", 2)),
               Fraction(-3)) == 58)

    for letter, rank in RANK_LE_4:
        rs = build_root_system(letter, rank)
        ok = True
        for _ in range(100):
            lam = Weight(tuple(Fraction(rng.randrange(0, 4))
                               for _ in range(rank)))
            k = Fraction(rng.randrange(-40, 41), rng.randrange(1, 8))
            if k == -rs.dual_coxeter:
                continue
            try:
                chiral.conformal_weight_h_lambda(rs, lam, k)
            except AssertionError:
                ok = False
                break
        _check(out, f"{rs.label()} conformal-weight expressions agree "
               f"(100 samples)", ok)
    _check(out, "A1 b=3 MT dimension", chiral.mt_dimension(a1, 3) == 8)
    _check(out, "A1 b=4 MT dimension", chiral.mt_dimension(a1, 4) == 10)
    _check(out, "A1 b=2 MT dimension", chiral.mt_dimension(a1, 2) == 6)
    return out


def suite_ope(seed: int) -> list[Check]:
    out: list[Check] = []
    table = opeaudit.builtin_ope_table()
    report = opeaudit.check_weight_homogeneity(table)
    _check(out, "weight homogeneity has zero violations", report.ok,
           f"checked {report.checked_terms} terms; "
           + ("; ".join(report.violations) or "clean"))
    cc_t = opeaudit.extract_central_charge(table, "T")
    _check(out, "stress tensor central charge", cc_t == 2 * (2 - 3 * K),
           str(cc_t))
    cc_s = opeaudit.extract_central_charge(table, "S")
    ck = 1 - 6 * (K + 1) * (K + 1) / (K + 2)
    _check(out, "weight-2 generator self-OPE constant",
           cc_s == (K + 2) * (K + 2) * ck, str(cc_s))
    rescaled = opeaudit.extract_central_charge(
        table, "S", scale=RationalFunctionK.constant(-1) / (K + 2))
    _check(out, "rescaled generator gives the Virasoro series",
           rescaled == ck, str(rescaled))
    _check(out, "central charge at critical level",
           rf_eval(cc_t, -2) == 16)
    primaries = {name: opeaudit.check_primary(table, "T", name)
                 for name in ("S", "a", "b", "c", "d")}
    _check(out, "primariness flags match the displayed poles",
           primaries == {"S": False, "a": True, "b": False,
                         "c": True, "d": False}, str(primaries))
    lookup = table.entry("a", "a")
    _check(out, "(a,a) empty pole list", lookup.poles == ())
    text = opeaudit.table_json_text(table)
    import json as _json
    _check(out, "JSON export round-trips",
           _json.loads(text) == opeaudit.table_to_json(table))
    return out


def suite_eisenstein(seed: int) -> list[Check]:
    out: list[Check] = []
    _check(out, "sigma3(2) = 9", chiral.sigma3(2) == 9)
    series = chiral.eisenstein_check_expansion(4)
    low = series.lowest_exponent()
    _check(out, "lowest exponent is eta prefactor plus one",
           low == 1 + chiral.ETA_PREFACTOR_EXPONENT, str(low))
    _check(out, "leading coefficient 1", series.coefficient(low).total() == 1)
    report = chiral.eisenstein_alignment_report(3)
    _check(out, "alignment report exponents",
           report["exponents_align"],
           f"coefficients_agree={report['coefficients_agree']}")
    return out


SUITES = {
    "rootsys": suite_rootsys,
    "exactalg": suite_exactalg,
    "finchar": suite_finchar,
    "affchar": suite_affchar,
    "classs": suite_classs,
    "ope": suite_ope,
    "eisenstein": suite_eisenstein,
}


def run_suites(only: str | None = None, seed: int = 0) -> dict:
    """Run the named suite (or all) and assemble a machine-readable report."""
    names = [only] if only else list(SUITES)
    for n in names:
        if n not in SUITES:
            raise ValueError(f"unknown suite {n!r}; choose from "
                             + ", ".join(sorted(SUITES)))
    suites = []
    all_ok = True
    for n in names:
        checks = SUITES[n](seed)
        ok = all(c.ok for c in checks)
        all_ok = all_ok and ok
        suites.append({
            "name": n,
            "ok": ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                       for c in checks],
        })
    return {"ok": all_ok, "seed": seed, "suites": suites}

"""q-series characters of affine Weyl modules, their simple quotients,
and the critical-level center modules attached to each dominant weight.

Grading conventions: the Weyl module and its simple quotient start at
q^0; the center module and its finite-dimensional shadow start at
q^{-<lam, rho_check>}.  The factorization identity then reads

    weyl_module_char(lam) = q^{<lam,rho_check>} * z_char(lam) * simple_char(lam),

with the grading shift written out explicitly.
"""

from __future__ import annotations

from fractions import Fraction

from .exactalg import LaurentPoly, QSeries, qs_eta_product, qs_eta_product_inverse, qs_geom_inverse
from .finchar import full_character, weyl_dimension
from .rootsys import RootSystem, Weight

NUMERATOR_METHOD_MAX_RANK = 4


class UnsupportedPathError(ValueError):
    """Raised when the Weyl-enumeration cross-check path is unavailable."""


_WEYL_CHAR_CACHE: dict[tuple, QSeries] = {}


def _root_keys(rs: RootSystem) -> list[tuple[int, ...]]:
    keys = [r.weight.lattice_key() for r in rs.positive_roots]
    return keys + [tuple(-x for x in k) for k in keys]


def weyl_module_char(rs: RootSystem, lam: Weight, order,
                     flavored: bool = False) -> QSeries:
    """Character of the affine Weyl module induced from the irreducible lam.

    Flavored: full finite character times the mode product over all
    current generators (one factor per root and per Cartan direction at
    each positive mode).  Unflavored: dimension times the corresponding
    eta-type product.  The q^0 coefficient is the finite character.
    """
    if not lam.is_dominant_integral():
        raise ValueError(f"{lam} is not dominant integral")
    order = Fraction(order)
    key = (rs.label(), lam.lattice_key(), order, flavored)
    cached = _WEYL_CHAR_CACHE.get(key)
    if cached is not None:
        return cached
    if flavored:
        series = QSeries.from_laurent(full_character(rs, lam), order)
        roots = _root_keys(rs)
        n = 1
        while n < order:
            series = series * qs_geom_inverse(n, (0,) * rs.rank, rs.rank,
                                              order, nvars=rs.rank)
            for rk in roots:
                series = series * qs_geom_inverse(n, rk, 1, order, nvars=rs.rank)
            n += 1
    else:
        dim = weyl_dimension(rs, lam)
        series = qs_eta_product_inverse(rs.dim_g, order).scale(dim)
    _WEYL_CHAR_CACHE[key] = series
    return series


def _signed_weyl_numerator(rs: RootSystem, lam: Weight) -> LaurentPoly:
    """Alternating orbit sum: sum_w eps(w) e^{w(lam+rho) - rho}."""
    start = lam + rs.rho
    signs: dict[tuple[int, ...], int] = {start.lattice_key(): 1}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            s = signs[v.lattice_key()]
            for i in range(rs.rank):
                r = rs.simple_reflection(i, v)
                rk = r.lattice_key()
                if rk not in signs:
                    signs[rk] = -s
                    nxt.append(r)
        frontier = nxt
    rho_key = rs.rho.lattice_key()
    terms = {tuple(a - b for a, b in zip(k, rho_key)): s
             for k, s in signs.items()}
    return LaurentPoly(rs.rank, terms)


def weyl_module_char_numerator_method(rs: RootSystem, lam: Weight, order) -> QSeries:
    """Flavored Weyl-module character via the alternating-sum numerator.

    Cross-check path: the numerator is divided by the explicit
    denominator product using exact series division.  Restricted to
    rank <= 4, where enumerating the Weyl orbit of lam+rho is cheap.
    """
    if rs.rank > NUMERATOR_METHOD_MAX_RANK:
        raise UnsupportedPathError(
            f"numerator method is a rank<={NUMERATOR_METHOD_MAX_RANK} "
            f"cross-check; got rank {rs.rank}")
    if not lam.is_dominant_integral():
        raise ValueError(f"{lam} is not dominant integral")
    order = Fraction(order)
    series = QSeries.from_laurent(_signed_weyl_numerator(rs, lam), order)
    roots = _root_keys(rs)
    n = 1
    while n < order:
        series = series * qs_geom_inverse(n, (0,) * rs.rank, rs.rank,
                                          order, nvars=rs.rank)
        for rk in roots:
            series = series * qs_geom_inverse(n, rk, 1, order, nvars=rs.rank)
        n += 1
    # remaining denominator: prod_{alpha>0} (1 - e^{-alpha}) at q^0,
    # divided out exactly level by level
    for r in rs.positive_roots:
        nu = tuple(-x for x in r.weight.lattice_key())
        series = series.divexact_weight_factor(nu)
    return series


def _coroot_exponents(rs: RootSystem, lam: Weight) -> list[int]:
    """<lam+rho, alpha_check> over positive roots, as positive integers."""
    lam_rho = lam + rs.rho
    out = []
    for r in rs.positive_roots:
        v = r.coroot_pairing(lam_rho)
        if v.denominator != 1 or v <= 0:
            raise AssertionError("coroot pairing of a shifted dominant weight "
                                 "must be a positive integer")
        out.append(int(v))
    return out


def f_factor(rs: RootSystem, lam: Weight, order,
             with_prefactor: bool = True) -> QSeries:
    """The scalar factor q^{<lam,rho_check>} eta-product / root-exponent product.

    with_prefactor=False omits the q^{<lam,rho_check>} shift.
    """
    if not lam.is_dominant_integral():
        raise ValueError(f"{lam} is not dominant integral")
    order = Fraction(order)
    shift = rs.rho_pairing(lam) if with_prefactor else Fraction(0)
    inner_order = order - shift
    series = qs_eta_product(rs.rank, inner_order)
    for a in _coroot_exponents(rs, lam):
        series = series * qs_geom_inverse(a, (), 1, inner_order, nvars=0)
    return series.shift(shift) if shift else series


def z_char(rs: RootSystem, lam: Weight, order) -> QSeries:
    """Character of the center module attached to lam (reciprocal of f).

    Lowest exponent is -<lam, rho_check>.
    """
    if not lam.is_dominant_integral():
        raise ValueError(f"{lam} is not dominant integral")
    order = Fraction(order)
    shift = rs.rho_pairing(lam)
    inner_order = order + shift
    series = qs_eta_product_inverse(rs.rank, inner_order)
    for a in _coroot_exponents(rs, lam):
        factor = QSeries(0, {Fraction(0): LaurentPoly.one(0),
                             Fraction(a): LaurentPoly.one(0).scale(-1)},
                         inner_order)
        series = series * factor
    return series.shift(-shift)


def _qpoly_from_factors(exponents: list[int]) -> list[int]:
    """Coefficient list of prod (1 - q^a) over the given exponents."""
    coeffs = [1]
    for a in exponents:
        out = coeffs + [0] * a
        for i, c in enumerate(coeffs):
            out[i + a] -= c
        coeffs = out
    return coeffs


def _qpoly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    d = list(den)
    while d and d[-1] == 0:
        d.pop()
    if not d or d[0] == 0:
        raise ValueError("denominator must have a nonzero constant term")
    out = [0] * (len(num) - len(d) + 1)
    for i in range(len(out)):
        c = num[i]
        for j in range(1, min(i, len(d) - 1) + 1):
            c -= d[j] * out[i - j]
        if c % d[0]:
            raise ValueError("polynomial division is not exact")
        out[i] = c // d[0]
    # verify the tail cancels
    for i in range(len(out), len(num)):
        c = num[i]
        for j in range(max(1, i - len(out) + 1), min(i, len(d) - 1) + 1):
            c -= d[j] * out[i - j]
        if c != 0:
            raise ValueError("polynomial division is not exact")
    return out


def zbar_char(rs: RootSystem, lam: Weight) -> QSeries:
    """Finite q-polynomial shadow of the center module, exact to all orders.

    Equals q^{-<lam,rho_check>} times a polynomial whose value at q = 1
    is the Weyl dimension of lam.
    """
    if not lam.is_dominant_integral():
        raise ValueError(f"{lam} is not dominant integral")
    num = _qpoly_from_factors(_coroot_exponents(rs, lam))
    den = _qpoly_from_factors(_coroot_exponents(rs, rs.zero_weight()))
    quot = _qpoly_divexact(num, den)
    shift = rs.rho_pairing(lam)
    terms = {Fraction(i) - shift: LaurentPoly(0, {(): c})
             for i, c in enumerate(quot) if c}
    return QSeries(0, terms, None)


def simple_char(rs: RootSystem, lam: Weight, order,
                flavored: bool = False) -> QSeries:
    """Character of the simple quotient of the Weyl module (starts at q^0)."""
    order = Fraction(order)
    scalar = f_factor(rs, lam, order, with_prefactor=False)
    weyl = weyl_module_char(rs, lam, order, flavored)
    if flavored:
        scalar = scalar.embed(rs.rank, 0)
    return scalar * weyl

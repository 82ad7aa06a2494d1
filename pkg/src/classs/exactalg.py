"""Exact sparse arithmetic: group-ring Laurent polynomials, truncated
q-series with rational exponents, and rational functions in the level k.

Everything in this module is exact: coefficients are Python big integers
or Fractions, q-exponents are Fractions, and no floating point is used
anywhere.  All values are immutable by convention; operations return new
objects, so concurrent readers never race.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator


class PoleError(ZeroDivisionError):
    """Raised when a rational function in k is evaluated at a pole."""


class DivergentSeriesError(ValueError):
    """Raised when a request would produce a series that is not
    expressible with finitely many terms per q-level."""


# ---------------------------------------------------------------------------
# Laurent polynomials over the weight lattice
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse integer-coefficient element of the group ring Z[Z^nvars].

    Terms are stored as a dict mapping lattice points (int tuples of
    length ``nvars``) to nonzero integer coefficients.  ``nvars = 0``
    models the unflavored case: the only lattice point is ``()`` and the
    polynomial is just an integer.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, key: tuple[int, ...], coeff: int = 1) -> "LaurentPoly":
        return cls(len(key), {tuple(key): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LaurentPoly)
                and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def _check(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            c = out.get(k, 0) + v
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return LaurentPoly(self.nvars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        # iterate over the smaller support for speed
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                c = out.get(k, 0) + v1 * v2
                if c:
                    out[k] = c
                else:
                    del out[k]
        return LaurentPoly(self.nvars, out)

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly(self.nvars, {k: c * v for k, v in self.terms.items()})

    def coefficient(self, key: tuple[int, ...]) -> int:
        return self.terms.get(tuple(key), 0)

    def total(self) -> int:
        """Sum of all coefficients (evaluation of every variable at 1)."""
        return sum(self.terms.values())

    def invert_variables(self) -> "LaurentPoly":
        """Substitute z -> z^{-1} in every variable."""
        return LaurentPoly(
            self.nvars, {tuple(-x for x in k): v for k, v in self.terms.items()})

    def embed(self, total_vars: int, offset: int) -> "LaurentPoly":
        """Relabel into a larger lattice, placing the variables at ``offset``."""
        if offset < 0 or offset + self.nvars > total_vars:
            raise ValueError("embedding block out of range")
        pre = (0,) * offset
        post = (0,) * (total_vars - offset - self.nvars)
        return LaurentPoly(
            total_vars, {pre + k + post: v for k, v in self.terms.items()})

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def divexact(self, nu: tuple[int, ...], max_steps: int | None = None) -> "LaurentPoly":
        """Exact division by the two-term factor (1 - e^nu), nu != 0.

        Long division from the top of a term order in which e^nu < 1.
        Raises ValueError if the division is not exact (guarded by a
        step bound, since an inexact division would descend forever).
        """
        nu = tuple(nu)
        if len(nu) != self.nvars or all(x == 0 for x in nu):
            raise ValueError("divisor direction must be a nonzero lattice point")
        if not self.terms:
            return LaurentPoly.zero(self.nvars)

        # order keys so that adding nu strictly lowers them
        def height(key: tuple[int, ...]) -> int:
            return -sum(x * y for x, y in zip(key, nu))

        remainder = dict(self.terms)
        quotient: dict[tuple[int, ...], int] = {}
        if max_steps is None:
            span = max(height(k) for k in remainder) - min(height(k) for k in remainder)
            max_steps = 4 * (len(remainder) + span + 8) * (len(remainder) + 8)
        steps = 0
        while remainder:
            steps += 1
            if steps > max_steps:
                raise ValueError("not divisible by the requested factor")
            key = max(remainder, key=lambda k: (height(k), k))
            c = remainder.pop(key)
            quotient[key] = quotient.get(key, 0) + c
            lower = tuple(x + y for x, y in zip(key, nu))
            r = remainder.get(lower, 0) + c
            if r:
                remainder[lower] = r
            else:
                remainder.pop(lower, None)
        return LaurentPoly(self.nvars, quotient)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for k, v in self.sorted_terms():
            if self.nvars == 0:
                bits.append(str(v))
            else:
                bits.append(f"{v}*z^{list(k)}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# Truncated q-series with Laurent-polynomial coefficients
# ---------------------------------------------------------------------------

class QSeries:
    """Truncated formal series sum_e c_e(z) q^e with rational exponents.

    ``order`` is the truncation bound: coefficients are stored and
    trusted only for exponents strictly below it.  ``order = None``
    marks an exactly known (finite) series, valid to every order.
    Exponents may be negative; a series always has finitely many terms,
    so ``lowest_exponent`` is well defined when the series is nonzero.
    """

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars: int,
                 terms: dict[Fraction, LaurentPoly] | None = None,
                 order: Fraction | None = None):
        self.nvars = nvars
        self.order = order
        out: dict[Fraction, LaurentPoly] = {}
        for e, c in (terms or {}).items():
            e = Fraction(e)
            if order is not None and e >= order:
                continue
            if c.is_zero():
                continue
            if c.nvars != nvars:
                raise ValueError("coefficient variable count mismatch")
            out[e] = c
        self.terms = out

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, order: Fraction | None = None) -> "QSeries":
        return cls(nvars, {}, order)

    @classmethod
    def one(cls, nvars: int, order: Fraction | None = None) -> "QSeries":
        return cls(nvars, {Fraction(0): LaurentPoly.one(nvars)}, order)

    @classmethod
    def q_power(cls, nvars: int, e, coeff: LaurentPoly | None = None,
                order: Fraction | None = None) -> "QSeries":
        c = coeff if coeff is not None else LaurentPoly.one(nvars)
        return cls(nvars, {Fraction(e): c}, order)

    @classmethod
    def from_laurent(cls, poly: LaurentPoly, order: Fraction | None = None) -> "QSeries":
        return cls(poly.nvars, {Fraction(0): poly}, order)

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def lowest_exponent(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero series has no lowest exponent")
        return min(self.terms)

    def coefficient(self, e) -> LaurentPoly:
        e = Fraction(e)
        if self.order is not None and e >= self.order:
            raise ValueError(f"coefficient of q^{e} lies at or beyond order {self.order}")
        return self.terms.get(e, LaurentPoly.zero(self.nvars))

    def sorted_items(self) -> list[tuple[Fraction, LaurentPoly]]:
        return sorted(self.terms.items())

    def exponents(self) -> list[Fraction]:
        return sorted(self.terms)

    def __eq__(self, other: object) -> bool:
        """Exact equality of stored data (same order, same terms)."""
        return (isinstance(other, QSeries) and self.nvars == other.nvars
                and self.order == other.order and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.order, frozenset(self.terms.items())))

    def agrees_with(self, other: "QSeries", up_to: Fraction | None = None) -> bool:
        """Term-by-term equality below ``up_to`` (default: both orders)."""
        if self.nvars != other.nvars:
            return False
        bound = _min_order(self.order, other.order)
        bound = _min_order(bound, up_to)
        exps = {e for e in self.terms if bound is None or e < bound}
        exps |= {e for e in other.terms if bound is None or e < bound}
        return all(
            self.terms.get(e, LaurentPoly.zero(self.nvars))
            == other.terms.get(e, LaurentPoly.zero(self.nvars))
            for e in exps)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "QSeries") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        order = _min_order(self.order, other.order)
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return QSeries(self.nvars, out, order)

    def __neg__(self) -> "QSeries":
        return QSeries(self.nvars, {e: -c for e, c in self.terms.items()}, self.order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        if not self.terms or not other.terms:
            return QSeries.zero(self.nvars, _min_order(self.order, other.order))
        order = _mul_order(self.order, self.lowest_exponent(),
                           other.order, other.lowest_exponent())
        out: dict[Fraction, LaurentPoly] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if order is not None and e >= order:
                    continue
                p = c1 * c2
                cur = out.get(e)
                s = p if cur is None else cur + p
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return QSeries(self.nvars, out, order)

    def pow(self, n: int) -> "QSeries":
        if n < 0:
            raise ValueError("negative powers need an explicit inverse")
        result = QSeries.one(self.nvars, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c: int) -> "QSeries":
        return QSeries(self.nvars,
                       {e: p.scale(c) for e, p in self.terms.items()}, self.order)

    def shift(self, delta) -> "QSeries":
        """Multiply by q^delta (shifts every exponent and the order)."""
        delta = Fraction(delta)
        order = None if self.order is None else self.order + delta
        return QSeries(self.nvars,
                       {e + delta: c for e, c in self.terms.items()}, order)

    def truncate(self, order: Fraction) -> "QSeries":
        order = Fraction(order)
        if self.order is not None and order > self.order:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.nvars, self.terms, order)

    def embed(self, total_vars: int, offset: int) -> "QSeries":
        """Relabel flavor variables into a block of a larger variable set."""
        return QSeries(total_vars,
                       {e: c.embed(total_vars, offset) for e, c in self.terms.items()},
                       self.order)

    def invert_variables(self) -> "QSeries":
        return QSeries(self.nvars,
                       {e: c.invert_variables() for e, c in self.terms.items()},
                       self.order)

    def divexact_weight_factor(self, nu: tuple[int, ...]) -> "QSeries":
        """Exact levelwise division by (1 - e^nu), a q-degree-zero factor."""
        return QSeries(self.nvars,
                       {e: c.divexact(nu) for e, c in self.terms.items()},
                       self.order)

    def __repr__(self) -> str:
        bits = [f"({c!r})*q^{e}" for e, c in self.sorted_items()[:8]]
        tail = " + ..." if len(self.terms) > 8 else ""
        return f"QSeries[order={self.order}]: " + (" + ".join(bits) or "0") + tail


def _min_order(a: Fraction | None, b: Fraction | None) -> Fraction | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _mul_order(na: Fraction | None, la: Fraction,
               nb: Fraction | None, lb: Fraction) -> Fraction | None:
    left = None if na is None else na + lb
    right = None if nb is None else nb + la
    return _min_order(left, right)


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Product of two truncated series (order adjusted by lowest exponents)."""
    return a * b


def qs_geom_inverse(factor_exponent, factor_weight: tuple[int, ...],
                    power: int, order,
                    nvars: int | None = None,
                    formal_weight_terms: int | None = None) -> QSeries:
    """Binomial expansion of (1 - q^e * e^mu)^{-power}, truncated at ``order``.

    For e = 0 the expansion runs in the weight direction instead of
    the q-direction; that is a purely formal series, so the caller must
    flag it by passing ``formal_weight_terms`` (the number of weight
    shells to keep).  e = 0 with mu = 0 is division by zero.
    """
    e = Fraction(factor_exponent)
    mu = tuple(factor_weight)
    if nvars is None:
        nvars = len(mu)
    if len(mu) != nvars:
        raise ValueError("factor weight has the wrong number of variables")
    if power < 0:
        raise ValueError("power must be a non-negative integer")
    order = Fraction(order)
    if e < 0:
        raise ValueError("factor exponent must be non-negative")
    if e == 0:
        if all(x == 0 for x in mu):
            raise DivergentSeriesError(
                "(1 - q^0 * e^0) is zero: geometric inverse undefined")
        if formal_weight_terms is None:
            raise DivergentSeriesError(
                "expansion of (1 - e^mu)^{-p} in the weight direction is formal; "
                "pass formal_weight_terms to acknowledge the truncation")
        kmax = formal_weight_terms
    else:
        # k*e < order
        kmax = 0
        while (kmax + 1) * e < order:
            kmax += 1
    coeff = LaurentPoly.zero(nvars)
    terms: dict[Fraction, LaurentPoly] = {}
    for k in range(kmax + 1):
        c = comb(k + power - 1, power - 1) if power > 0 else (1 if k == 0 else 0)
        if c == 0:
            continue
        key = tuple(k * x for x in mu)
        mono = LaurentPoly.monomial(key, c)
        ex = k * e
        if e == 0:
            coeff = coeff + mono
        else:
            terms[Fraction(ex)] = mono
    if e == 0:
        terms[Fraction(0)] = coeff
    return QSeries(nvars, terms, order)


def qs_eta_product_inverse(rank_power: int, order, nvars: int = 0) -> QSeries:
    """prod_{j>=1} (1 - q^j)^{-rank_power}, truncated at ``order``."""
    order = Fraction(order)
    out = QSeries.one(nvars, order)
    j = 1
    while j < order:
        out = out * qs_geom_inverse(j, (0,) * nvars, rank_power, order, nvars=nvars)
        j += 1
    return out


def qs_eta_product(rank_power: int, order, nvars: int = 0) -> QSeries:
    """prod_{j>=1} (1 - q^j)^{rank_power}, truncated at ``order``."""
    order = Fraction(order)
    out = QSeries.one(nvars, order)
    j = 1
    while j < order:
        factor = QSeries(nvars, {Fraction(0): LaurentPoly.one(nvars),
                                 Fraction(j): LaurentPoly.one(nvars).scale(-1)}, order)
        out = out * factor.pow(rank_power)
        j += 1
    return out


# ---------------------------------------------------------------------------
# Univariate rational functions in the level k
# ---------------------------------------------------------------------------

def _ptrim(cs: list[Fraction]) -> tuple[Fraction, ...]:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                   for i in range(n)])


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and _ptrim(list(a)):
        a = list(_ptrim(a))
        if len(a) < len(b):
            break
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[i + d] -= c * y
    return _ptrim(q), _ptrim(list(a))


def _pgcd(a, b):
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


def _peval(a, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(a):
        out = out * x + c
    return out


def _pstr(a) -> str:
    if not a:
        return "0"
    bits = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            var = "k" if i == 1 else f"k^{i}"
            term = f"{mag}{var}"
            if c < 0:
                term = "-" + term
        if bits and not term.startswith("-"):
            bits.append("+ " + term)
        elif bits:
            bits.append("- " + term[1:])
        else:
            bits.append(term)
    return " ".join(bits)


class RationalFunctionK:
    """Rational function in the level variable k with exact coefficients.

    Stored in reduced form with a monic denominator, so equality is
    plain structural equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        num = _ptrim([Fraction(c) for c in num])
        den = _ptrim([Fraction(c) for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = _pgcd(num, den) if num else ()
        if g and len(g) > 1:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------

    @classmethod
    def constant(cls, c) -> "RationalFunctionK":
        return cls([Fraction(c)])

    @classmethod
    def variable(cls) -> "RationalFunctionK":
        return cls([Fraction(0), Fraction(1)])

    @staticmethod
    def _coerce(x) -> "RationalFunctionK":
        if isinstance(x, RationalFunctionK):
            return x
        if isinstance(x, (int, Fraction)):
            return RationalFunctionK.constant(x)
        return NotImplemented

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunctionK(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionK(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunctionK(_pmul(self.num, other.num),
                                 _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunctionK(_pmul(self.num, other.den),
                                 _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and self.den == (Fraction(1),)

    # -- evaluation ----------------------------------------------------

    def __call__(self, k) -> Fraction:
        return rf_eval(self, k)

    def __str__(self) -> str:
        if self.den == (Fraction(1),):
            return _pstr(self.num)
        return f"({_pstr(self.num)})/({_pstr(self.den)})"

    __repr__ = __str__


def rf_eval(f: RationalFunctionK, k) -> Fraction:
    """Exact evaluation of f at a rational level; raises PoleError at poles."""
    k = Fraction(k)
    d = _peval(f.den, k)
    if d == 0:
        raise PoleError(f"pole at k = {k}")
    return _peval(f.num, k) / d


K = RationalFunctionK.variable()


def iter_qseries_pairs(series: QSeries) -> Iterator[tuple[Fraction, LaurentPoly]]:
    """Deterministic iteration over (exponent, coefficient) pairs."""
    return iter(series.sorted_items())

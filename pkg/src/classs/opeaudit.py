"""Structured encoding of the rank-one equivariant W-algebra OPE tables
and their machine-checkable audits: conformal-weight homogeneity,
central-charge extraction, and primariness flags.

The table is a transcription of displayed data, recorded at face value.
Two display quirks are preserved or flagged:

* the (b, d) first-order pole mixes composites evaluated at the other
  insertion point into a w-expansion; those terms carry ``argument="z"``
  and the inconsistency is listed in the table notes for the reader;
* the (T, d) second-order pole names the generator b where d would be
  expected; both have weight 1/2, so the homogeneity audit cannot and
  does not decide between them, and the display is kept.

The audit checks homogeneity and coefficient extraction only; it does
not attempt normal-ordered rewriting or associativity closure.

JSON export schema (see ``table_to_json``): an object with keys
``generators`` (name -> {"weight": "p/q"}), ``entries`` (each with
``left``, ``right`` and a ``poles`` list of {"order": j, "terms":
[{"coeff": canonical string, "coeff_num"/"coeff_den": coefficient
arrays low-to-high degree in k, "factors": [{"name", "derivatives"}],
"argument": "w"|"z"}]}), ``definitions`` (named composite fields with a
declared ``weight`` and the same term shape) and ``notes``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg import RationalFunctionK

K = RationalFunctionK.variable()
ONE = RationalFunctionK.constant(1)


class MissingEntryError(KeyError):
    """Raised when an OPE lookup names an undeclared pair."""


class NotConformalVectorError(ValueError):
    """Raised when central-charge extraction finds no fourth-order constant."""


@dataclass(frozen=True)
class OpeTerm:
    """One right-hand-side term: coefficient times an ordered composite.

    ``factors`` lists (generator name, derivative count); the empty
    composite is the identity, so the term is a central constant.
    ``argument`` records the insertion point the display used.
    """

    coeff: RationalFunctionK
    factors: tuple[tuple[str, int], ...]
    argument: str = "w"


@dataclass(frozen=True)
class OpeEntry:
    left: str
    right: str
    poles: tuple[tuple[int, tuple[OpeTerm, ...]], ...]

    def pole(self, order: int) -> tuple[OpeTerm, ...] | None:
        for j, terms in self.poles:
            if j == order:
                return terms
        return None

    def pole_orders(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.poles)


@dataclass(frozen=True)
class CompositeDefinition:
    """A named field given as a sum of composites, with declared weight."""

    name: str
    weight: Fraction
    terms: tuple[OpeTerm, ...]


@dataclass
class OpeTable:
    generators: dict[str, Fraction]
    entries: list[OpeEntry]
    definitions: list[CompositeDefinition] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def entry(self, left: str, right: str) -> OpeEntry:
        for e in self.entries:
            if e.left == left and e.right == right:
                return e
        raise MissingEntryError(f"no OPE entry for ({left}, {right})")

    def weight_of(self, name: str) -> Fraction:
        if name not in self.generators:
            raise MissingEntryError(f"undeclared generator {name!r}")
        return self.generators[name]

    def composite_weight(self, factors: tuple[tuple[str, int], ...]) -> Fraction:
        return sum((self.weight_of(n) + d for n, d in factors), Fraction(0))


def _terms(*specs) -> tuple[OpeTerm, ...]:
    out = []
    for spec in specs:
        coeff, factors, *rest = spec
        if isinstance(coeff, (int, Fraction)):
            coeff = RationalFunctionK.constant(coeff)
        arg = rest[0] if rest else "w"
        out.append(OpeTerm(coeff, tuple(factors), arg))
    return tuple(out)


def builtin_ope_table() -> OpeTable:
    """The displayed OPE data of the rank-one equivariant W-algebra.

    Generators S, a, b, c, d with weights 2, -1/2, 1/2, -1/2, 1/2; the
    stress tensor T; and the current images e, h, f of weight 1.
    Level-dependent coefficients are rational functions in k.
    """
    half = Fraction(1, 2)
    gens = {
        "S": Fraction(2),
        "a": -half, "c": -half,
        "b": half, "d": half,
        "T": Fraction(2),
        "e": Fraction(1), "h": Fraction(1), "f": Fraction(1),
    }
    c_k = 1 - 6 * (K + 1) * (K + 1) / (K + 2)
    k2 = K + 2

    entries = [
        OpeEntry("a", "a", ()),
        OpeEntry("c", "c", ()),
        OpeEntry("a", "c", ()),
        OpeEntry("a", "b", (
            (1, _terms((half, (("a", 0), ("a", 0))))),
        )),
        OpeEntry("a", "d", (
            (1, _terms((half, (("a", 0), ("c", 0))))),
        )),
        OpeEntry("b", "c", (
            (1, _terms((-half, (("a", 0), ("c", 0))))),
        )),
        OpeEntry("c", "d", (
            (1, _terms((half, (("c", 0), ("c", 0))))),
        )),
        OpeEntry("b", "b", (
            (1, _terms(((2 * K + 3) / 4, (("a", 1), ("a", 0))))),
            (2, _terms(((2 * K + 3) / 4, (("a", 0), ("a", 0))))),
        )),
        OpeEntry("d", "d", (
            (1, _terms(((2 * K + 3) / 4, (("c", 1), ("c", 0))))),
            (2, _terms(((2 * K + 3) / 4, (("c", 0), ("c", 0))))),
        )),
        OpeEntry("b", "d", (
            (1, _terms(
                (half, (("a", 0), ("d", 0)), "z"),
                (-half, (("b", 0), ("c", 0)), "z"),
                ((2 * K + 1) / 4, (("a", 1), ("c", 0)), "z"),
            )),
            (2, _terms(((2 * K + 3) / 4, (("a", 0), ("c", 0))))),
        )),
        OpeEntry("S", "S", (
            (1, _terms((-k2, (("S", 1),)))),
            (2, _terms((-2 * k2, (("S", 0),)))),
            (4, _terms((k2 * k2 * c_k / 2, ()))),
        )),
        OpeEntry("S", "a", (
            (1, _terms((1, (("b", 0),)))),
            (2, _terms(((2 * K + 1) / 4, (("a", 0),)))),
        )),
        OpeEntry("S", "b", (
            (1, _terms((-1, (("S", 0), ("a", 0))))),
            (2, _terms((-(2 * K + 7) / 4, (("b", 0),)))),
            (3, _terms((-k2 * (2 * K + 1) / 2, (("a", 0),)))),
        )),
        OpeEntry("S", "c", (
            (1, _terms((1, (("d", 0),)))),
            (2, _terms(((2 * K + 1) / 4, (("c", 0),)))),
        )),
        OpeEntry("S", "d", (
            (1, _terms((-1, (("S", 0), ("c", 0))))),
            (2, _terms((-(2 * K + 7) / 4, (("d", 0),)))),
            (3, _terms((-k2 * (2 * K + 1) / 2, (("c", 0),)))),
        )),
        OpeEntry("T", "S", (
            (1, _terms((1, (("S", 1),)))),
            (2, _terms((2, (("S", 0),)))),
            (4, _terms(((2 * K + 1) * (3 * K + 4) / 2, ()))),
        )),
        OpeEntry("T", "a", (
            (1, _terms((1, (("a", 1),)))),
            (2, _terms((-half, (("a", 0),)))),
        )),
        OpeEntry("T", "b", (
            (1, _terms((1, (("b", 1),)))),
            (2, _terms((half, (("b", 0),)))),
            (3, _terms(((2 * K + 1) / 2, (("a", 0),)))),
        )),
        OpeEntry("T", "c", (
            (1, _terms((1, (("c", 1),)))),
            (2, _terms((-half, (("c", 0),)))),
        )),
        # the displayed second-order pole names b, kept at face value
        OpeEntry("T", "d", (
            (1, _terms((1, (("d", 1),)))),
            (2, _terms((half, (("b", 0),)))),
            (3, _terms(((2 * K + 1) / 2, (("c", 0),)))),
        )),
        OpeEntry("T", "T", (
            (1, _terms((1, (("T", 1),)))),
            (2, _terms((2, (("T", 0),)))),
            (4, _terms((2 * (2 - 3 * K) / 2, ()))),
        )),
        OpeEntry("e", "a", ((1, _terms((-1, (("c", 0),)))),)),
        OpeEntry("e", "b", ((1, _terms((-1, (("d", 0),)))),)),
        OpeEntry("e", "c", ()),
        OpeEntry("e", "d", ()),
        OpeEntry("h", "a", ((1, _terms((-1, (("a", 0),)))),)),
        OpeEntry("h", "b", ((1, _terms((-1, (("b", 0),)))),)),
        OpeEntry("h", "c", ((1, _terms((1, (("c", 0),)))),)),
        OpeEntry("h", "d", ((1, _terms((1, (("d", 0),)))),)),
        OpeEntry("f", "a", ()),
        OpeEntry("f", "b", ()),
        OpeEntry("f", "c", ((1, _terms((-1, (("a", 0),)))),)),
        OpeEntry("f", "d", ((1, _terms((-1, (("b", 0),)))),)),
    ]

    k7 = (2 * K + 7) / 2
    k3 = 2 * K + 3
    definitions = [
        CompositeDefinition("singular_vector", Fraction(0), _terms(
            (1, (("a", 0), ("d", 0))),
            (-1, (("b", 0), ("c", 0))),
            (-1, (("a", 1), ("c", 0))),
            (-1, ()),
        )),
        CompositeDefinition("T", Fraction(2), _terms(
            (1, (("S", 0), ("a", 0), ("c", 1))),
            (-1, (("S", 0), ("a", 1), ("c", 0))),
            (1, (("b", 0), ("d", 1))),
            (-1, (("b", 1), ("d", 0))),
            (k7, (("a", 1), ("d", 1))),
            (-k7, (("b", 1), ("c", 1))),
            (-3 * (6 * K + 17) / 24, (("a", 2), ("c", 1))),
            (-(6 * K + 17) / 24, (("a", 3), ("c", 0))),
        )),
        CompositeDefinition("e", Fraction(1), _terms(
            (1, (("S", 0), ("c", 0), ("c", 0))),
            (1, (("d", 0), ("d", 0))),
            (-k7, (("c", 0), ("d", 1))),
            (k7, (("c", 1), ("d", 0))),
            ((2 * K + 7) / 4, (("c", 1), ("c", 1))),
            (-k3 / 8, (("c", 2), ("c", 0))),
        )),
        CompositeDefinition("h", Fraction(1), _terms(
            (2, (("S", 0), ("a", 0), ("c", 0))),
            (2, (("b", 0), ("d", 0))),
            (-k7, (("a", 0), ("d", 1))),
            (-k7, (("b", 1), ("c", 0))),
            (k7, (("a", 1), ("d", 0))),
            (k7, (("b", 0), ("c", 1))),
            (k7, (("a", 1), ("c", 1))),
            (-k3 / 4, (("a", 2), ("c", 0))),
        )),
        CompositeDefinition("f", Fraction(1), _terms(
            (-1, (("S", 0), ("a", 0), ("a", 0))),
            (-1, (("b", 0), ("b", 0))),
            (k7, (("a", 0), ("b", 1))),
            (-k7, (("a", 1), ("b", 0))),
            (-(2 * K + 7) / 4, (("a", 1), ("a", 1))),
            (k3 / 8, (("a", 2), ("a", 0))),
        )),
    ]

    notes = [
        "(b, d) first-order pole: the displayed composites are evaluated at "
        "the opposite insertion point inside a w-expansion; recorded at face "
        "value with argument='z' and left to the reader.",
        "(T, d) second-order pole names b where d would be expected; both "
        "have weight 1/2, so the display is kept as printed.",
        "the current-generator OPE list displays (h, c) twice; the second "
        "copy, mapping to d, is recorded as (h, d), the only reading "
        "consistent with weight homogeneity.",
    ]

    return OpeTable(gens, entries, definitions, notes)


# ---------------------------------------------------------------------------
# Audits
# ---------------------------------------------------------------------------

@dataclass
class HomogeneityReport:
    checked_terms: int
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_weight_homogeneity(table: OpeTable) -> HomogeneityReport:
    """Every term at pole order j must have weight w(left)+w(right)-j,
    and every definition term the declared weight of the defined field.
    """
    violations: list[str] = []
    checked = 0
    for e in table.entries:
        expected_base = table.weight_of(e.left) + table.weight_of(e.right)
        for j, terms in e.poles:
            if j < 1:
                violations.append(f"({e.left},{e.right}): pole order {j} < 1")
                continue
            expected = expected_base - j
            for t in terms:
                checked += 1
                got = table.composite_weight(t.factors)
                if got != expected:
                    violations.append(
                        f"({e.left},{e.right}) pole {j}: composite "
                        f"{t.factors} has weight {got}, expected {expected}")
        orders = e.pole_orders()
        if len(set(orders)) != len(orders):
            violations.append(f"({e.left},{e.right}): repeated pole orders")
    for d in table.definitions:
        for t in d.terms:
            checked += 1
            got = table.composite_weight(t.factors)
            if got != d.weight:
                violations.append(
                    f"definition {d.name}: composite {t.factors} has weight "
                    f"{got}, expected {d.weight}")
    return HomogeneityReport(checked, violations)


def extract_central_charge(table: OpeTable, field_name: str,
                           scale: RationalFunctionK | None = None
                           ) -> RationalFunctionK:
    """Twice the fourth-order constant of the field's self-OPE.

    ``scale`` rescales the field first (the constant picks up scale^2),
    which recovers the Virasoro normalization of a weight-2 generator.
    """
    if table.weight_of(field_name) != 2:
        raise NotConformalVectorError(
            f"{field_name} has weight {table.weight_of(field_name)}, not 2")
    entry = table.entry(field_name, field_name)
    terms = entry.pole(4)
    if terms is None:
        raise NotConformalVectorError(
            f"({field_name},{field_name}) has no fourth-order pole")
    consts = [t.coeff for t in terms if not t.factors]
    if not consts:
        raise NotConformalVectorError(
            f"({field_name},{field_name}) fourth-order pole has no "
            f"constant term")
    total = consts[0]
    for c in consts[1:]:
        total = total + c
    cc = 2 * total
    if scale is not None:
        cc = scale * scale * cc
    return cc


def check_primary(table: OpeTable, conformal: str, field_name: str) -> bool:
    """True iff the (conformal, field) entry shows no poles of order >= 3."""
    if table.weight_of(conformal) != 2:
        raise NotConformalVectorError(
            f"{conformal} has weight {table.weight_of(conformal)}, not 2")
    entry = table.entry(conformal, field_name)
    return all(j < 3 for j in entry.pole_orders())


# ---------------------------------------------------------------------------
# JSON export
# ---------------------------------------------------------------------------

def _coeff_json(c: RationalFunctionK) -> dict:
    return {
        "string": str(c),
        "num": [str(x) for x in c.num],
        "den": [str(x) for x in c.den],
    }


def _term_json(t: OpeTerm) -> dict:
    return {
        "coeff": _coeff_json(t.coeff),
        "factors": [{"name": n, "derivatives": d} for n, d in t.factors],
        "argument": t.argument,
    }


def table_to_json(table: OpeTable) -> dict:
    """Plain-dict form of the table, deterministic field order."""
    return {
        "generators": {n: {"weight": str(w)}
                       for n, w in sorted(table.generators.items())},
        "entries": [
            {
                "left": e.left,
                "right": e.right,
                "poles": [
                    {"order": j, "terms": [_term_json(t) for t in terms]}
                    for j, terms in e.poles
                ],
            }
            for e in table.entries
        ],
        "definitions": [
            {
                "name": d.name,
                "weight": str(d.weight),
                "terms": [_term_json(t) for t in d.terms],
            }
            for d in table.definitions
        ],
        "notes": list(table.notes),
    }


def table_json_text(table: OpeTable | None = None) -> str:
    if table is None:
        table = builtin_ope_table()
    return json.dumps(table_to_json(table), indent=2, sort_keys=False)

"""Command-line front end.

Subcommands: ``char`` (class-S characters), ``cc`` (central charges and
dimensions), ``verify`` (invariant suites), ``ope`` (the OPE audit and
its JSON export) and ``eisenstein`` (the expansion utility with its
alignment report).

Exit codes: 0 success, 1 usage or parse error, 2 mathematically
divergent request, 3 verification failure.  Output is deterministic:
identical invocations produce byte-identical bytes.  A JSON config file
may supply any flag value; explicit flags win.  The env var
CLASSS_THREADS caps the sector worker count.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import chiral, opeaudit, verify
from .exactalg import QSeries
from .rootsys import InvalidTypeError, RootSystem, parse_algebra

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DIVERGENT = 2
EXIT_VERIFY_FAILED = 3


class UsageError(ValueError):
    pass


@dataclass
class JobConfig:
    command: str
    algebra: str | None = None
    b: int | None = None
    order: Fraction | None = None
    flavored: bool = False
    lam: tuple[int, ...] | None = None
    cutoff: Fraction | None = None
    format: str = "text"
    seed: int = 0
    only: str | None = None


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse rational {text!r}") from exc


def _load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    return data


def _merged(args: argparse.Namespace, key: str, default=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if getattr(args, "_config", None) and key in args._config:
        return args._config[key]
    return default


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="classs",
        description="exact characters and central charges of the genus-zero "
                    "class-S chiral algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON file with default flag values")
        p.add_argument("--format", choices=("text", "json"))

    p_char = sub.add_parser("char", help="compute a class-S character")
    common(p_char)
    p_char.add_argument("--algebra", help="simple type, e.g. A1 or E6")
    p_char.add_argument("--b", type=int, help="number of punctures")
    p_char.add_argument("--order", help="expand through this q-exponent, "
                                        "rationals like 5/2 accepted")
    p_char.add_argument("--flavored", action="store_true", default=None)
    p_char.add_argument("--cutoff", help="dominant-weight cutoff "
                                         "(required for b=2)")

    p_cc = sub.add_parser("cc", help="central charges and dimensions")
    common(p_cc)
    p_cc.add_argument("--algebra")
    p_cc.add_argument("--b", type=int)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    common(p_verify)
    p_verify.add_argument("--only", help="run a single suite: "
                          + ", ".join(sorted(verify.SUITES)))
    p_verify.add_argument("--seed", type=int)

    p_ope = sub.add_parser("ope", help="audit and export the OPE tables")
    common(p_ope)

    p_eis = sub.add_parser("eisenstein",
                           help="Eisenstein expansion and alignment report")
    common(p_eis)
    p_eis.add_argument("--order")

    return parser


# ---------------------------------------------------------------------------
# char
# ---------------------------------------------------------------------------

def _series_terms_json(series: QSeries, b: int, rank: int, flavored: bool,
                       max_exponent: Fraction) -> list[dict]:
    terms = []
    for e, coeff in series.sorted_items():
        if e > max_exponent:
            continue
        entries = []
        for key, c in coeff.sorted_terms():
            if flavored:
                blocks = [list(key[i * rank:(i + 1) * rank]) for i in range(b)]
            else:
                blocks = []
            entries.append({"weight": blocks, "c": str(c)})
        terms.append({"q": str(e), "coeff": entries})
    return terms


def cmd_char(cfg: JobConfig) -> int:
    if cfg.algebra is None or cfg.b is None or cfg.order is None:
        raise UsageError("char needs --algebra, --b and --order")
    rs = parse_algebra(cfg.algebra)
    # the CLI order is inclusive; the library truncates strictly below
    internal = cfg.order + Fraction(1, 2 * cfg.order.denominator)
    spec = chiral.ClassSSpec(rs, cfg.b, internal, cfg.flavored, cfg.cutoff)
    result = chiral.class_s_char(spec)
    payload = {
        "algebra": rs.label(),
        "b": cfg.b,
        "order": str(cfg.order),
        "flavored": cfg.flavored,
        "terms": _series_terms_json(result.series, cfg.b, rs.rank,
                                    cfg.flavored, cfg.order),
        "truncated_lambda": result.truncated_lambda,
    }
    if cfg.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"character of the {rs.label()} algebra with b={cfg.b} "
              f"punctures, {'flavored' if cfg.flavored else 'unflavored'}, "
              f"through q^{cfg.order}")
        if result.truncated_lambda:
            print(f"  [truncated at lambda-cutoff {result.lambda_cutoff}]")
        for term in payload["terms"]:
            if cfg.flavored:
                parts = [f"{entry['c']}*z^{entry['weight']}"
                         for entry in term["coeff"]]
                print(f"  q^{term['q']}: " + " + ".join(parts))
            else:
                total = term["coeff"][0]["c"] if term["coeff"] else "0"
                print(f"  q^{term['q']}: {total}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# cc
# ---------------------------------------------------------------------------

SUGAWARA_CROSS_CHECKS = {
    ("A1", 4): ("D", 4, Fraction(-2)),
    ("A2", 3): ("E", 6, Fraction(-3)),
}


def _cc_payload(rs: RootSystem, b: int) -> dict:
    from .rootsys import build_root_system
    cc = chiral.central_charge_class_s(rs, b)
    payload = {
        "algebra": rs.label(),
        "b": b,
        "central_charge": str(cc),
        "mt_dimension": chiral.mt_dimension(rs, b),
        "universal_centralizer": str(
            chiral.central_charge_universal_centralizer(rs)),
        "ghost_center": str(chiral.ghost_central_charges(rs)[0]),
        "ghost_charged": str(chiral.ghost_central_charges(rs)[1]),
    }
    if b == 2:
        payload["two_punctures_note"] = "2 dim g"
    cross = SUGAWARA_CROSS_CHECKS.get((rs.label(), b))
    if cross is not None:
        letter, rank, level = cross
        other = build_root_system(letter, rank)
        sug = chiral.sugawara_central_charge(other, level)
        payload["sugawara_cross_check"] = {
            "algebra": other.label(),
            "level": str(level),
            "value": str(sug),
            "match": sug == cc,
        }
    return payload


def cmd_cc(cfg: JobConfig) -> int:
    if cfg.algebra is None or cfg.b is None:
        raise UsageError("cc needs --algebra and --b")
    rs = parse_algebra(cfg.algebra)
    payload = _cc_payload(rs, cfg.b)
    if cfg.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"central charge of the {rs.label()} algebra with b={cfg.b} "
              f"punctures: {payload['central_charge']}")
        cross = payload.get("sugawara_cross_check")
        if cross:
            verdict = "match" if cross["match"] else "MISMATCH"
            print(f"  Sugawara cross-check {cross['algebra']} at level "
                  f"{cross['level']}: {cross['value']} ({verdict})")
        if "two_punctures_note" in payload:
            print("  (two punctures: equals 2 dim g)")
        print(f"  symplectic variety dimension: {payload['mt_dimension']}")
        print(f"  chiral universal centralizer: "
              f"{payload['universal_centralizer']}")
        print(f"  ghost systems: {payload['ghost_center']} (center), "
              f"{payload['ghost_charged']} (charged fermions)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / ope / eisenstein
# ---------------------------------------------------------------------------

def cmd_verify(cfg: JobConfig) -> int:
    try:
        report = verify.run_suites(only=cfg.only, seed=cfg.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if cfg.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for suite in report["suites"]:
            for check in suite["checks"]:
                mark = "PASS" if check["ok"] else "FAIL"
                detail = f"  [{check['detail']}]" if check["detail"] else ""
                print(f"{mark} {suite['name']}: {check['name']}{detail}")
            status = "ok" if suite["ok"] else "FAILED"
            print(f"suite {suite['name']}: {status}")
        print("all suites passed" if report["ok"] else "verification FAILED")
    return EXIT_OK if report["ok"] else EXIT_VERIFY_FAILED


def cmd_ope(cfg: JobConfig) -> int:
    table = opeaudit.builtin_ope_table()
    if cfg.format == "json":
        print(opeaudit.table_json_text(table))
        return EXIT_OK
    report = opeaudit.check_weight_homogeneity(table)
    print(f"OPE audit: {report.checked_terms} composites checked, "
          f"{len(report.violations)} homogeneity violations")
    for v in report.violations:
        print(f"  violation: {v}")
    cc_t = opeaudit.extract_central_charge(table, "T")
    cc_s = opeaudit.extract_central_charge(table, "S")
    print(f"  central charge from T: {cc_t}")
    print(f"  self-OPE constant of S (doubled): {cc_s}")
    for name in ("S", "a", "b", "c", "d"):
        flag = "primary" if opeaudit.check_primary(table, "T", name) \
            else "not primary"
        print(f"  {name}: {flag}")
    for note in table.notes:
        print(f"  note: {note}")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_eisenstein(cfg: JobConfig) -> int:
    order = cfg.order if cfg.order is not None else Fraction(4)
    report = chiral.eisenstein_alignment_report(order)
    if cfg.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(f"Eisenstein expansion vs normalized character through "
              f"q^{report['compared_to_order']}")
        print(f"  eta prefactor exponent: {report['eta_prefactor_exponent']}")
        print(f"  lowest exponents: expansion "
              f"{report['expansion_lowest_exponent']}, normalized character "
              f"{report['normalized_character_lowest_exponent']} "
              f"({'aligned' if report['exponents_align'] else 'misaligned'})")
        print(f"  coefficients agree: {report['coefficients_agree']}")
        for term in report["terms"]:
            print(f"  q^{term['q']}: {term['expansion']} vs "
                  f"{term['normalized_character']}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _config_from_args(args: argparse.Namespace) -> JobConfig:
    config_path = getattr(args, "config", None)
    args._config = _load_config(config_path) if config_path else {}

    def frac(key, default=None):
        raw = _merged(args, key, default)
        if raw is None:
            return None
        return raw if isinstance(raw, Fraction) else _parse_fraction(str(raw))

    lam_raw = _merged(args, "lam")
    lam = None
    if lam_raw is not None:
        try:
            lam = tuple(int(x) for x in str(lam_raw).split(","))
        except ValueError as exc:
            raise UsageError(f"cannot parse weight {lam_raw!r}") from exc

    b_raw = _merged(args, "b")
    seed_raw = _merged(args, "seed", 0)
    return JobConfig(
        command=args.command,
        algebra=_merged(args, "algebra"),
        b=int(b_raw) if b_raw is not None else None,
        order=frac("order"),
        flavored=bool(_merged(args, "flavored", False)),
        lam=lam,
        cutoff=frac("cutoff"),
        format=str(_merged(args, "format", "text")),
        seed=int(seed_raw),
        only=_merged(args, "only"),
    )


COMMANDS = {
    "char": cmd_char,
    "cc": cmd_cc,
    "verify": cmd_verify,
    "ope": cmd_ope,
    "eisenstein": cmd_eisenstein,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = _config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except chiral.DivergentRequestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIVERGENT
    except (UsageError, InvalidTypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

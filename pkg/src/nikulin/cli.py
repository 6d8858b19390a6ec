"""Command-line front end: tables, classification, range scans, constructions,
and verification runs.

Subcommands
    table      fundamental-solution table for even radicands 2t up to a bound
    classify   full arithmetic dossier of one t
    scan       per-t classification over a range plus density summary
    construct  dump the explicit divisor package for one t
    verify     run one named mechanical check; exit 0 on PASS, 1 on FAIL,
               2 on usage or bound errors

Formats: text (human), csv, json.  Pell values are printed as exact decimal
strings everywhere (they outgrow 64 bits almost immediately).  In the text
table the annotation on the 2t column follows the classical convention:
'*' for triangular 2t = k(k+1), square brackets for beta0 odd, and a prime
for beta0 even with the negative equation solvable ('*' wins when both
apply, which happens only at 2t = 2).  The csv/json forms carry the three
raw booleans instead.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional

from .constructions import (
    NoNegPell,
    NoQuarticCase,
    OddBetaCase,
    SquareCase,
    build_double_plane_divisor,
    build_even_beta,
    build_quartic_divisor,
    build_t2_configuration,
    build_t4_configuration,
    check_odd_beta_obstruction,
    subcase_classify,
)
from .lattice import DivisorClass, GramForm
from .pell import (
    classify_t,
    fundamental_solution,
    negative_fundamental_solution,
    scan_parity_lemmas,
)
from .verifiers import (
    BoundOverflow,
    DEFAULT_NODE_CAP,
    Verdict,
    expected_dprime_zero_set,
    expected_lprime_zero_set,
    verify_contracted_set,
    verify_even_propagation,
    verify_lemma_treize,
    verify_quartic_degree_one,
    verify_t2_f1_nef,
    verify_t4_nefness,
)

FORMATS = ("text", "csv", "json")

CLAIMS = (
    "contracted-set-Lprime",
    "contracted-set-Dprime",
    "lemma-treize",
    "quartic-degree-one",
    "t4-nefness",
    "f1-nef",
    "even-propagation",
)


@dataclass(frozen=True)
class TableRow:
    """One table entry: star <=> 2t = k(k+1); boxed <=> beta0 odd;
    primed <=> the negative equation is solvable (raw, before rendering)."""

    two_t: int
    alpha0: Optional[int]
    beta0: Optional[int]
    star: bool
    boxed: bool
    primed: bool


def _is_triangular(n: int) -> bool:
    k = (math.isqrt(1 + 4 * n) - 1) // 2
    return k >= 1 and k * (k + 1) == n


def build_table_rows(max_2t: int) -> list[TableRow]:
    if max_2t < 2 or max_2t % 2 != 0:
        raise ValueError("max 2t must be even and at least 2")
    rows = []
    for two_t in range(2, max_2t + 1, 2):
        fund = fundamental_solution(two_t)
        neg = negative_fundamental_solution(two_t)
        rows.append(TableRow(
            two_t=two_t,
            alpha0=None if fund is None else fund.alpha,
            beta0=None if fund is None else fund.beta,
            star=_is_triangular(two_t),
            boxed=fund is not None and fund.beta % 2 == 1,
            primed=neg is not None,
        ))
    return rows


def _row_label(row: TableRow) -> str:
    if row.star:
        return f"{row.two_t}*"
    if row.boxed:
        return f"[{row.two_t}]"
    if row.primed:
        return f"{row.two_t}'"
    return str(row.two_t)


def render_table(rows: list[TableRow], fmt: str) -> str:
    if fmt == "text":
        lines = [f"{'2t':<6}{'alpha0':>10}{'beta0':>8}"]
        for row in rows:
            alpha = "-" if row.alpha0 is None else str(row.alpha0)
            beta = "-" if row.beta0 is None else str(row.beta0)
            lines.append(f"{_row_label(row):<6}{alpha:>10}{beta:>8}")
        return "\n".join(lines)
    if fmt == "csv":
        lines = ["two_t,alpha0,beta0,star,boxed,primed"]
        for row in rows:
            alpha = "" if row.alpha0 is None else str(row.alpha0)
            beta = "" if row.beta0 is None else str(row.beta0)
            flags = ",".join(str(b).lower() for b in (row.star, row.boxed, row.primed))
            lines.append(f"{row.two_t},{alpha},{beta},{flags}")
        return "\n".join(lines)
    return json.dumps(
        {"rows": [
            {"two_t": r.two_t,
             "alpha0": None if r.alpha0 is None else str(r.alpha0),
             "beta0": None if r.beta0 is None else str(r.beta0),
             "star": r.star, "boxed": r.boxed, "primed": r.primed}
            for r in rows
        ]},
        indent=2,
    )


def cmd_table(max_2t: int, fmt: str) -> str:
    return render_table(build_table_rows(max_2t), fmt)


def _case_of(t: int) -> str:
    info = classify_t(t)
    if info.two_t_is_square:
        return "square"
    return "even-beta0" if info.beta0_even else "odd-beta0"


def classification_dict(t: int) -> dict:
    info = classify_t(t)
    case = _case_of(t)
    out = {
        "t": t,
        "two_t": 2 * t,
        "two_t_is_square": info.two_t_is_square,
        "alpha0": None if info.fundamental is None else str(info.fundamental.alpha),
        "beta0": None if info.fundamental is None else str(info.fundamental.beta),
        "beta0_even": info.beta0_even,
        "neg_pell": None if info.neg_pell is None else
            {"d0": str(info.neg_pell.alpha), "e0": str(info.neg_pell.beta)},
        "t_mod_12": info.t_mod_12,
        "nu": info.nu,
        "predicted_structures": info.predicted_structures,
        "case": case,
    }
    if case == "even-beta0":
        report = subcase_classify(t)
        out["subcase"] = {
            "d0": str(report.d0),
            "e0": str(report.e0),
            "quotient": str(report.quotient),
            "D_prime_sq": str(report.D_prime_sq),
            "same_structure": report.same_structure,
        }
        out["structures_verdict"] = (
            "same Kummer structure (double-plane involution swaps the "
            "configurations)" if report.same_structure else
            "distinct Kummer structures"
        )
    elif case == "odd-beta0":
        out["structures_verdict"] = (
            "single-curve replacement obstructed (beta0 odd)"
            + ("; explicit half-integer configuration exists" if t == 4 else "")
        )
    else:
        out["structures_verdict"] = (
            "no Pell solution"
            + ("; explicit block configuration exists, structure equivalence "
               "unknown" if t == 2 else "")
        )
    return out


def cmd_classify(t: int, fmt: str) -> str:
    data = classification_dict(t)
    if fmt == "json":
        return json.dumps(data, indent=2)
    if fmt == "csv":
        keys = ["t", "two_t", "case", "alpha0", "beta0", "beta0_even",
                "t_mod_12", "nu", "predicted_structures"]

        def cell(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return str(v).lower()
            return str(v)

        return ",".join(keys) + "\n" + ",".join(cell(data[k]) for k in keys)
    lines = [f"t = {t}  (2t = {2 * t}, {'square' if data['two_t_is_square'] else 'non-square'})"]
    if data["alpha0"] is not None:
        lines.append(f"fundamental solution: (alpha0, beta0) = ({data['alpha0']}, {data['beta0']})")
        lines.append(f"case: {data['case']}")
    else:
        lines.append("fundamental solution: none (2t is a square)")
    if data["neg_pell"] is not None:
        d = data["neg_pell"]
        lines.append(f"negative equation: solvable, (d0, e0) = ({d['d0']}, {d['e0']})")
    else:
        lines.append("negative equation: unsolvable")
    if "subcase" in data:
        sc = data["subcase"]
        model = {"1": "degree-2 double-plane model",
                 "2": "degree-4 model with 15 nodes"}.get(sc["quotient"], "no low-degree model")
        lines.append(
            f"sub-case: d0 = {sc['d0']}, e0 = {sc['e0']}, "
            f"quotient = {sc['quotient']} ({model})"
        )
    lines.append(f"verdict: {data['structures_verdict']}")
    lines.append(
        f"t mod 12 = {data['t_mod_12']}; nu = {data['nu']}; "
        f"predicted Kummer structures = {data['predicted_structures']}"
    )
    return "\n".join(lines)


def cmd_scan(t_min: int, t_max: int, fmt: str) -> str:
    if not 1 <= t_min <= t_max:
        raise ValueError("need 1 <= t_min <= t_max")
    report = scan_parity_lemmas(t_max)
    if report.mod4_violations or report.mod12_violations:
        raise RuntimeError(
            f"parity scan found violations: {report.mod4_violations} "
            f"{report.mod12_violations}"
        )
    rows = [classification_dict(t) for t in range(t_min, t_max + 1)]
    tested = [r for r in rows if not r["two_t_is_square"]]
    n = len(tested)
    even = sum(1 for r in tested if r["beta0_even"])
    unsolvable = sum(1 for r in tested if r["neg_pell"] is None)
    both = sum(1 for r in tested if r["beta0_even"] and r["neg_pell"] is None)
    summary = {
        "range": [t_min, t_max],
        "tested_non_square": n,
        "beta0_even_fraction": f"{even}/{n}" if n else "0/0",
        "neg_pell_unsolvable_fraction": f"{unsolvable}/{n}" if n else "0/0",
        "conjunction_fraction": f"{both}/{n}" if n else "0/0",
        "lemma_violations": 0,
    }
    if fmt == "json":
        return json.dumps({"rows": rows, "summary": summary}, indent=2)
    if fmt == "csv":
        header = "t,case,alpha0,beta0,beta0_even,neg_pell_solvable,t_mod_12,nu"
        lines = [header]
        for r in rows:
            lines.append(",".join([
                str(r["t"]), r["case"],
                r["alpha0"] or "", r["beta0"] or "",
                "" if r["beta0_even"] is None else str(r["beta0_even"]).lower(),
                str(r["neg_pell"] is not None).lower(),
                str(r["t_mod_12"]), str(r["nu"]),
            ]))
        return "\n".join(lines)
    lines = []
    for r in rows:
        fund = "-" if r["alpha0"] is None else f"({r['alpha0']}, {r['beta0']})"
        lines.append(f"t={r['t']:<5} {r['case']:<11} fund={fund:<18} {r['structures_verdict']}")
    lines.append(
        f"summary over {t_min}..{t_max}: beta0 even {summary['beta0_even_fraction']}, "
        f"negative unsolvable {summary['neg_pell_unsolvable_fraction']}, "
        f"conjunction {summary['conjunction_fraction']}; lemma violations: 0"
    )
    return "\n".join(lines)


def format_class(c: DivisorClass) -> str:
    """Human form like '2*L - 5*A1' (coefficients shown as exact rationals)."""
    parts = []
    if c.coeff_L != 0:
        coeff = "" if c.coeff_L == 1 else f"{c.coeff_L}*"
        parts.append(f"{coeff}L")
    for i in range(1, 17):
        beta = c.coeff_A(i)
        if beta == 0:
            continue
        sign = "-" if beta > 0 else "+"
        mag = abs(beta)
        coeff = "" if mag == 1 else f"{mag}*"
        parts.append(f"{sign} {coeff}A{i}")
    if not parts:
        return "0"
    first = parts[0]
    if first.startswith("+ "):
        first = first[2:]
    elif first.startswith("- "):
        first = "-" + first[2:]
    return " ".join([first] + parts[1:])


def construction_dict(t: int) -> dict:
    """The explicit-divisor package for this t, dispatched by case."""
    case = _case_of(t)
    if case == "even-beta0":
        ctor = build_even_beta(t)
        report = subcase_classify(t)
        out = {
            "t": t, "case": case,
            "alpha0": str(ctor.fundamental.alpha),
            "beta0": str(ctor.fundamental.beta),
            "A1_prime": ctor.A1_prime.to_json_dict(),
            "L_prime": ctor.L_prime.to_json_dict(),
            "d0": str(report.d0), "e0": str(report.e0),
            "quotient": str(report.quotient),
            "same_structure": report.same_structure,
            "configuration": [c.to_json_dict() for c in ctor.configuration.classes],
        }
        if report.quotient == 2:
            out["D_prime"] = build_quartic_divisor(t).to_json_dict()
            out["D_prime_degree"] = "4"
        elif report.quotient == 1:
            out["D_prime"] = build_double_plane_divisor(t).to_json_dict()
            out["D_prime_degree"] = "2"
        return out
    if case == "odd-beta0":
        if t == 4:
            pkg = build_t4_configuration()
            return {
                "t": t, "case": "odd-beta0-t4",
                "A_double_primes": [c.to_json_dict() for c in pkg.a_double_primes],
                "L1": pkg.L1.to_json_dict(),
                "A1_prime": pkg.A1_prime.to_json_dict(),
                "L_prime": pkg.L_prime.to_json_dict(),
                "identity": "A1_prime = 2*A1'' + A2 + A3 + A4",
                "configuration": [c.to_json_dict() for c in pkg.configuration.classes],
            }
        witness = check_odd_beta_obstruction(t)
        return {
            "t": t, "case": case,
            "alpha0": str(witness.fundamental.alpha),
            "beta0": str(witness.fundamental.beta),
            "A1_prime": witness.A1_prime.to_json_dict(),
            "obstruction_witness": witness.witness.to_json_dict(),
            "witness_admissible": witness.witness_admissible,
            "note": "the replacement class cannot be an irreducible curve",
        }
    if t == 2:
        pkg = build_t2_configuration()
        return {
            "t": t, "case": "square-2t-t2",
            "F": [c.to_json_dict() for c in pkg.F],
            "B": [c.to_json_dict() for c in pkg.B],
            "C": {str(k): c.to_json_dict() for k, c in sorted(pkg.C.items())},
            "L_prime": pkg.L_prime.to_json_dict(),
            "configuration": [c.to_json_dict() for c in pkg.configuration.classes],
        }
    return {
        "t": t, "case": case,
        "note": "2t is a square and t != 2: no mechanized construction",
    }


def cmd_construct(t: int, fmt: str) -> str:
    data = construction_dict(t)
    if fmt in ("json", "csv"):   # the payload is structured; csv degrades to json
        return json.dumps(data, indent=2)
    lines = [f"t = {t}, case: {data['case']}"]
    label_keys = [
        ("A1_prime", "A1'"), ("L_prime", "L'"), ("D_prime", "D'"),
        ("L1", "L1"), ("obstruction_witness", "(A1 + A1')/2"),
    ]
    for key, label in label_keys:
        if key in data:
            lines.append(f"{label} = {format_class(DivisorClass.from_json_dict(data[key]))}")
    if "A_double_primes" in data:
        for i, c in enumerate(data["A_double_primes"]):
            lines.append(f"A{i + 1}'' = {format_class(DivisorClass.from_json_dict(c))}")
    if "F" in data:
        for i, c in enumerate(data["F"]):
            lines.append(f"F{i + 1} = {format_class(DivisorClass.from_json_dict(c))}")
        for i, c in enumerate(data["B"]):
            lines.append(f"B{i + 1} = {format_class(DivisorClass.from_json_dict(c))}")
    if "quotient" in data:
        lines.append(
            f"d0 = {data['d0']}, e0 = {data['e0']}, quotient = {data['quotient']}, "
            f"same_structure = {data['same_structure']}"
        )
    if "identity" in data:
        lines.append(data["identity"])
    if "note" in data:
        lines.append(data["note"])
    if "configuration" in data:
        lines.append("configuration:")
        for c in data["configuration"]:
            lines.append(f"  {format_class(DivisorClass.from_json_dict(c))}")
    return "\n".join(lines)


def run_claim(t: int, claim: str, node_cap: int, m_max: int, n_max: int) -> Verdict:
    form = GramForm(t)
    if claim == "contracted-set-Lprime":
        expected, n_class = expected_lprime_zero_set(t)
        return verify_contracted_set(n_class, expected, form, node_cap=node_cap)
    if claim == "contracted-set-Dprime":
        expected, n_class = expected_dprime_zero_set(t)
        return verify_contracted_set(n_class, expected, form, node_cap=node_cap)
    if claim == "lemma-treize":
        return verify_lemma_treize(t, m_max)
    if claim == "quartic-degree-one":
        return verify_quartic_degree_one(t)
    if claim == "t4-nefness":
        if t != 4:
            raise ValueError("t4-nefness is defined for t = 4")
        return verify_t4_nefness(node_cap=node_cap)
    if claim == "f1-nef":
        if t != 2:
            raise ValueError("f1-nef is defined for t = 2")
        return verify_t2_f1_nef()
    if claim == "even-propagation":
        return verify_even_propagation(t, n_max)
    raise ValueError(f"unknown claim {claim!r}; choose from {', '.join(CLAIMS)}")


def cmd_verify(t: int, claim: str, fmt: str, node_cap: int,
               m_max: int, n_max: int) -> tuple[int, str]:
    verdict = run_claim(t, claim, node_cap, m_max, n_max)
    if fmt == "json":
        text = json.dumps(verdict.to_json_dict(), indent=2)
    else:
        status = "PASS" if verdict.passed else "FAIL"
        text = (
            f"{status} {claim} t={t}: zero set size {len(verdict.zero_set)}, "
            f"{verdict.nodes_visited} nodes"
        )
        if verdict.detail:
            text += f" ({verdict.detail})"
        if not verdict.passed and verdict.witnesses:
            text += "\nwitnesses:\n" + "\n".join(
                f"  {format_class(w)}" for w in verdict.witnesses
            )
    return (0 if verdict.passed else 1), text


def _parse_range(spec: str) -> tuple[int, int]:
    lo, sep, hi = spec.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like A..B")
    try:
        return int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad range {spec!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nikulin",
        description="Pell-Fermat arithmetic and Nikulin configurations "
                    "on generic Kummer surfaces (exact integer arithmetic).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="fundamental-solution table up to --max-2t")
    p.add_argument("--max-2t", type=int, default=60, dest="max_2t")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("classify", help="arithmetic dossier of one t")
    p.add_argument("t", type=int)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("scan", help="classification rows over --range A..B")
    p.add_argument("--range", type=_parse_range, required=True, dest="t_range")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("construct", help="explicit divisor package for one t")
    p.add_argument("t", type=int)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("verify", help="run one mechanical check")
    p.add_argument("t", type=int)
    p.add_argument("--claim", required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--bound", type=int, default=DEFAULT_NODE_CAP,
                   help="enumeration node cap")
    p.add_argument("--m-max", type=int, default=10, dest="m_max")
    p.add_argument("--n-max", type=int, default=20, dest="n_max")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            if args.max_2t < 2 or args.max_2t % 2 != 0:
                parser.error("--max-2t must be even and at least 2")
            print(cmd_table(args.max_2t, args.format))
            return 0
        if args.command == "classify":
            print(cmd_classify(args.t, args.format))
            return 0
        if args.command == "scan":
            print(cmd_scan(args.t_range[0], args.t_range[1], args.format))
            return 0
        if args.command == "construct":
            print(cmd_construct(args.t, args.format))
            return 0
        if args.command == "verify":
            try:
                code, text = cmd_verify(
                    args.t, args.claim, args.format, args.bound,
                    args.m_max, args.n_max,
                )
            except (SquareCase, OddBetaCase, NoQuarticCase, NoNegPell,
                    BoundOverflow, ValueError) as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
            print(text)
            return code
    except (SquareCase, OddBetaCase, NoQuarticCase, NoNegPell) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

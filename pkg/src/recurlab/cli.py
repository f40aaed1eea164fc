"""Command-line interface.

Four subcommands over the library pipeline:

- ``table``   difference table of a sequence, plus the predicted next term
- ``solve``   infer the recurrence and produce closed forms by one or both
              solver routes, with a cross-route agreement verdict
- ``regions`` circle-division region counts by any of the five methods,
              including the exact geometric construction
- ``verify``  run every cross-check (formula sweeps, solver agreement,
              geometric construction) and report a verdict per check

Every command supports ``--json``; JSON output is a single object with a
stable shape (``schema_version`` 1) in which every exact rational is a
``"p/q"`` string.  Exit codes: 0 success/agreement, 1 verification
disagreement, 2 malformed input, 3 unsupported mathematics (no constant
difference row, irrational/zero characteristic roots), 4 degeneracy retry
budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .core_numeric import format_polynomial, format_rational, parse_rational
from .difference_engine import (
    LinearRecurrence,
    Sequence,
    build_difference_table,
    infer_recurrence,
    iterate_recurrence,
    predict_next,
)
from .errors import (
    DegeneracyBudgetError,
    NoConstantRowError,
    RecurlabError,
    SingularMatrixError,
    UnsupportedRootsError,
)
from .genfunc_solver import build_ogf, extract_coefficient_formula, partial_fractions
from .geometry import (
    arrangement_to_json_dict,
    count_regions,
    generic_arrangement,
    hexagon_arrangement,
    verify_against_formula,
)
from .moser_formulas import (
    euler_counts,
    moser_polynomial,
    moser_terms,
    regions_binomial,
    regions_binomial_sum,
    regions_polynomial,
)
from .recurrence_solver import ClosedForm, solve_charpoly, to_moser_variable

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_DEGENERACY = 4

DEFAULT_GEOM_CAP = 15


# ---------------------------------------------------------------------------
# Output plumbing
# ---------------------------------------------------------------------------


def _emit(args, envelope: dict, human_lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(envelope, indent=2))
    else:
        print("\n".join(human_lines))


def _envelope(command: str, inputs: dict, method_tags: list[str], result: dict, agreement) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "method_tags": method_tags,
        "result": result,
        "agreement": agreement,
    }


def _closed_form_json(form: ClosedForm) -> dict:
    return {
        "method": form.method,
        "variable": "m" if form.variable_offset == 1 else "n",
        "terms": [
            {
                "root": format_rational(root),
                "coefficients": [format_rational(c) for c in poly.coefficients],
            }
            for root, poly in form.terms
        ],
        "display": form.describe(),
    }


def _recurrence_json(rec: LinearRecurrence) -> dict:
    return {
        "order": rec.order,
        "coefficients": [format_rational(c) for c in rec.coefficients],
        "rhs": format_polynomial(rec.rhs),
        "initial_conditions": [format_rational(a) for a in rec.initial_conditions],
        "display": rec.describe(),
    }


# ---------------------------------------------------------------------------
# Input plumbing
# ---------------------------------------------------------------------------


def _resolve_sequence(args) -> tuple[Sequence, dict]:
    provided = [
        (name, value)
        for name, value in (("seq", args.seq), ("file", args.file), ("moser", args.moser))
        if value is not None
    ]
    if len(provided) != 1:
        raise ValueError("provide exactly one of --seq, --file, --moser")
    source, value = provided[0]
    if source == "seq":
        tokens = [tok.strip() for tok in value.split(",")]
        if any(tok == "" for tok in tokens) or not tokens:
            raise ValueError(f"malformed sequence: {value!r}")
        terms = [parse_rational(tok) for tok in tokens]
    elif source == "file":
        with open(value, "r", encoding="utf-8") as handle:
            lines = [line.strip() for line in handle]
        terms = [parse_rational(line) for line in lines if line and not line.startswith("#")]
        if not terms:
            raise ValueError(f"no terms found in {value}")
    else:
        if value < 2:
            raise ValueError(f"--moser needs at least 2 terms, got {value}")
        terms = [Fraction(v) for v in moser_terms(value)]
    inputs = {"source": source, "terms": [format_rational(t) for t in terms]}
    return Sequence(tuple(terms)), inputs


def _geometry_cap(args) -> int:
    if getattr(args, "geom_cap", None) is not None:
        cap = args.geom_cap
    else:
        raw = os.environ.get("RECURLAB_GEOM_CAP")
        if raw is None:
            cap = DEFAULT_GEOM_CAP
        else:
            try:
                cap = int(raw)
            except ValueError as exc:
                raise ValueError(f"RECURLAB_GEOM_CAP is not an integer: {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"geometric cap must be >= 1, got {cap}")
    return cap


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_table(args) -> int:
    seq, inputs = _resolve_sequence(args)
    table = build_difference_table(seq, args.max_depth)
    next_term = None if table.constant_depth is None else predict_next(table)

    result = {
        "rows": [[format_rational(v) for v in row] for row in table.rows],
        "constant_depth": table.constant_depth,
        "next": None if next_term is None else format_rational(next_term),
    }
    envelope = _envelope("table", inputs, ["differences"], result, agreement=None)

    human = []
    for depth, row in enumerate(table.rows):
        label = "sequence " if depth == 0 else f"depth {depth}  "
        human.append(f"{label}: " + " ".join(str(v) for v in row))
    if table.constant_depth is None:
        human.append("constant row: none certified")
        human.append("next term: unknown")
    else:
        human.append(f"constant row: depth {table.constant_depth}")
        human.append(f"next term: {next_term}")
    _emit(args, envelope, human)
    return EXIT_OK


def _solve_forms(rec: LinearRecurrence, methods: list[str]) -> list[ClosedForm]:
    forms = []
    for method in methods:
        if method == "charpoly":
            forms.append(solve_charpoly(rec))
        else:
            forms.append(extract_coefficient_formula(partial_fractions(build_ogf(rec))))
    return forms


def cmd_solve(args) -> int:
    seq, inputs = _resolve_sequence(args)
    table = build_difference_table(seq, args.max_depth)
    rec = infer_recurrence(table)
    methods = ["charpoly", "genfunc"] if args.method == "both" else [args.method]
    forms = _solve_forms(rec, methods)

    agreement = forms[0].agrees_with(forms[1]) if len(forms) == 2 else None
    forms_json = []
    for form in forms:
        entry = _closed_form_json(form)
        if form.polynomial_form() is not None:
            entry["display_in_m"] = to_moser_variable(form).describe()
        forms_json.append(entry)
    result = {"recurrence": _recurrence_json(rec), "closed_forms": forms_json}
    envelope = _envelope("solve", inputs, methods, result, agreement)

    human = [f"recurrence: {rec.describe()}"]
    for form, entry in zip(forms, forms_json):
        human.append(f"closed form [{form.method}]: a(n) = {form.describe()}")
        if "display_in_m" in entry:
            human.append(f"  in m = n + 1: {entry['display_in_m']}")
    if agreement is not None:
        human.append(f"methods agree: {'yes' if agreement else 'NO'}")
    _emit(args, envelope, human)
    return EXIT_OK if agreement in (None, True) else EXIT_DISAGREEMENT


def cmd_regions(args) -> int:
    m = args.m
    if m < 1:
        raise ValueError(f"--m must be >= 1, got {m}")
    cap = _geometry_cap(args)
    if args.trials < 1:
        raise ValueError(f"--trials must be >= 1, got {args.trials}")
    if args.degenerate is not None:
        if args.method != "geometric":
            raise ValueError("--degenerate requires --method geometric")
        if m != 6:
            raise ValueError("--degenerate hexagon requires --m 6")

    wants = (
        ["binomial", "polynomial", "sum", "euler", "geometric"]
        if args.method == "all"
        else [args.method]
    )
    counts: dict[str, int] = {}
    geometric_detail = None
    geometric_note = None

    if "binomial" in wants:
        counts["binomial"] = regions_binomial(m)
    if "polynomial" in wants:
        counts["polynomial"] = regions_polynomial(m)
    if "sum" in wants:
        counts["sum"] = regions_binomial_sum(m)
    if "euler" in wants:
        counts["euler"] = euler_counts(m).regions

    if "geometric" in wants:
        if m > cap:
            note = f"m={m} exceeds the geometric cap ({cap}); raise --geom-cap to force it"
            if args.method == "geometric":
                raise ValueError(note)
            geometric_note = note
        else:
            if args.degenerate == "hexagon":
                arrangements = [hexagon_arrangement(workers=args.workers)]
            else:
                arrangements = [
                    generic_arrangement(
                        m,
                        variant=trial,
                        seed=None if args.seed is None else args.seed + trial,
                        workers=args.workers,
                    )
                    for trial in range(args.trials)
                ]
            reports = [count_regions(arr) for arr in arrangements]
            counts["geometric"] = reports[0].regions
            last = arrangements[-1]
            geometric_detail = {
                "trials": len(reports),
                "counts": [r.regions for r in reports],
                "vertices": reports[0].vertices,
                "edges": reports[0].edges,
                "general_position": reports[0].general_position,
                "degeneracy": (
                    None if last.degeneracy is None else last.degeneracy.describe()
                ),
            }
            if args.dump_arrangement:
                with open(args.dump_arrangement, "w", encoding="utf-8") as handle:
                    json.dump(arrangement_to_json_dict(last), handle, indent=2)
                    handle.write("\n")

    agreement = None
    if len(counts) >= 2:
        values = list(counts.values())
        agreement = all(v == values[0] for v in values)

    result = {
        "m": m,
        "counts": counts,
        "geometric": geometric_detail,
        "geometric_note": geometric_note,
    }
    envelope = _envelope("regions", {"m": m, "method": args.method}, wants, result, agreement)

    human = [f"m = {m}"]
    for name, value in counts.items():
        human.append(f"{name:>10}: {value}")
    if geometric_detail is not None:
        gp = "yes" if geometric_detail["general_position"] else "no"
        human.append(f"  geometry: V={geometric_detail['vertices']} E={geometric_detail['edges']}"
                     f" general position: {gp}")
        if geometric_detail["degeneracy"]:
            human.append(f"  degeneracy: {geometric_detail['degeneracy']}")
        if geometric_detail["trials"] > 1:
            human.append(f"  trials: {geometric_detail['counts']}")
    if geometric_note:
        human.append(f"  geometric: {geometric_note}")
    if agreement is not None:
        human.append(f"methods agree: {'yes' if agreement else 'NO'}")
    _emit(args, envelope, human)
    return EXIT_OK if agreement in (None, True) else EXIT_DISAGREEMENT


def _verify_checks(args, cap: int) -> list[dict]:
    max_m = args.max_m
    checks: list[dict] = []

    def add(name: str, scope: str, passed: bool, detail: str = "") -> None:
        checks.append({"name": name, "scope": scope, "passed": passed, "detail": detail})

    # 1. The four symbolic methods agree (Euler identity is enforced inside
    #    euler_counts at construction).
    mismatch = None
    for m in range(1, max_m + 1):
        values = {
            "binomial": regions_binomial(m),
            "polynomial": regions_polynomial(m),
            "sum": regions_binomial_sum(m),
            "euler": euler_counts(m).regions,
        }
        if len(set(values.values())) != 1:
            mismatch = f"m={m}: {values}"
            break
    add(
        "symbolic-methods-agree",
        f"m=1..{max_m}",
        mismatch is None,
        mismatch or "binomial = polynomial = sum = euler",
    )

    # 2. Recurrence pipeline on the region sequence: infer from 7 terms,
    #    solve by both routes, compare against the closed formula.
    seq = Sequence(tuple(Fraction(v) for v in moser_terms(7)))
    rec = infer_recurrence(build_difference_table(seq))
    charpoly_form = solve_charpoly(rec)
    genfunc_form = extract_coefficient_formula(partial_fractions(build_ogf(rec)))
    add(
        "solver-routes-agree",
        "order-4 region recurrence",
        charpoly_form.agrees_with(genfunc_form),
        f"charpoly: {charpoly_form.describe()} | genfunc: {genfunc_form.describe()}",
    )
    in_m = to_moser_variable(charpoly_form)
    expected_poly = moser_polynomial()
    add(
        "closed-form-matches-quartic",
        "m-variable comparison",
        in_m.polynomial_form() == expected_poly,
        f"{in_m.describe()} vs {format_polynomial(expected_poly, 'm')}",
    )
    eval_mismatch = None
    for m in range(1, max_m + 1):
        if charpoly_form.evaluate(m - 1) != regions_binomial(m):
            eval_mismatch = f"m={m}"
            break
    add(
        "closed-form-evaluation",
        f"m=1..{max_m}",
        eval_mismatch is None,
        eval_mismatch or "closed form reproduces the region counts",
    )
    iterate_count = max(rec.order, min(max_m, 100))
    iterated = iterate_recurrence(rec, iterate_count)
    iterate_ok = all(
        iterated[i] == regions_binomial(i + 1) for i in range(iterate_count)
    )
    add(
        "forward-iteration",
        f"m=1..{iterate_count}",
        iterate_ok,
        "recurrence iteration reproduces the region counts",
    )

    # 3. Geometric construction against the closed formula.
    geom_limit = min(max_m, cap)
    geom_fail = None
    for m in range(1, geom_limit + 1):
        verdict = verify_against_formula(
            m, args.trials, seed=args.seed, workers=args.workers
        )
        if not verdict.passed:
            geom_fail = (
                f"m={m}: counted {verdict.counts[-1]}, expected {verdict.expected}, "
                f"points {verdict.failing_parameters}"
            )
            break
    add(
        "geometric-construction",
        f"m=1..{geom_limit}, trials={args.trials}",
        geom_fail is None,
        geom_fail or "constructed region counts match the closed formula",
    )
    return checks


def cmd_verify(args) -> int:
    if args.max_m < 1:
        raise ValueError(f"--max-m must be >= 1, got {args.max_m}")
    if args.trials < 1:
        raise ValueError(f"--trials must be >= 1, got {args.trials}")
    cap = _geometry_cap(args)
    checks = _verify_checks(args, cap)
    all_passed = all(c["passed"] for c in checks)

    result = {"checks": checks, "all_passed": all_passed}
    inputs = {"max_m": args.max_m, "trials": args.trials, "geom_cap": cap}
    tags = ["binomial", "polynomial", "sum", "euler", "charpoly", "genfunc", "geometric"]
    envelope = _envelope("verify", inputs, tags, result, all_passed)

    human = []
    for check in checks:
        status = "ok  " if check["passed"] else "FAIL"
        line = f"{status} {check['name']} [{check['scope']}]"
        if not check["passed"]:
            line += f": {check['detail']}"
        human.append(line)
    human.append(f"verdict: {'all checks passed' if all_passed else 'DISAGREEMENT found'}")
    _emit(args, envelope, human)
    return EXIT_OK if all_passed else EXIT_DISAGREEMENT


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_sequence_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seq", help="comma-separated terms (integers or p/q rationals)")
    sub.add_argument("--file", help="file with one term per line (# comments allowed)")
    sub.add_argument(
        "--moser",
        nargs="?",
        const=7,
        type=int,
        metavar="N",
        help="use the first N circle-division counts (default N=7)",
    )
    sub.add_argument(
        "--max-depth", type=int, default=None, help="difference-table depth limit"
    )
    sub.add_argument("--json", action="store_true", help="emit a JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recurlab",
        description="Exact linear-recurrence inference, solving, and verification.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    table = commands.add_parser(
        "table", help="difference table and next-term prediction"
    )
    _add_sequence_options(table)
    table.set_defaults(handler=cmd_table)

    solve = commands.add_parser(
        "solve", help="infer the recurrence and compute closed forms"
    )
    _add_sequence_options(solve)
    solve.add_argument(
        "--method",
        choices=["charpoly", "genfunc", "both"],
        default="both",
        help="solver route(s) to run (default: both, with agreement verdict)",
    )
    solve.set_defaults(handler=cmd_solve)

    regions = commands.add_parser(
        "regions", help="circle-division region count for m points"
    )
    regions.add_argument("--m", type=int, required=True, help="number of circle points")
    regions.add_argument(
        "--method",
        choices=["binomial", "polynomial", "sum", "euler", "geometric", "all"],
        default="all",
        help="counting method (default: all, with agreement verdict)",
    )
    regions.add_argument("--trials", type=int, default=1, help="geometric layouts to try")
    regions.add_argument("--seed", type=int, default=None, help="seeded generic layouts")
    regions.add_argument(
        "--degenerate",
        choices=["hexagon"],
        default=None,
        help="use the exactly symmetric degenerate hexagon (requires --method geometric, --m 6)",
    )
    regions.add_argument(
        "--geom-cap",
        type=int,
        default=None,
        help=f"max m for the geometric method (default {DEFAULT_GEOM_CAP}, env RECURLAB_GEOM_CAP)",
    )
    regions.add_argument("--workers", type=int, default=None, help="threads for the pair loop")
    regions.add_argument(
        "--dump-arrangement",
        metavar="PATH",
        help="write the full arrangement (points, chords, intersections) as JSON",
    )
    regions.add_argument("--json", action="store_true", help="emit a JSON report")
    regions.set_defaults(handler=cmd_regions)

    verify = commands.add_parser("verify", help="run every cross-check")
    verify.add_argument("--max-m", type=int, default=30, help="sweep limit (default 30)")
    verify.add_argument(
        "--trials", type=int, default=2, help="geometric layouts per m (default 2)"
    )
    verify.add_argument("--seed", type=int, default=None, help="seeded generic layouts")
    verify.add_argument(
        "--geom-cap",
        type=int,
        default=None,
        help=f"max m for geometric checks (default {DEFAULT_GEOM_CAP}, env RECURLAB_GEOM_CAP)",
    )
    verify.add_argument("--workers", type=int, default=None, help="threads for the pair loop")
    verify.add_argument("--json", action="store_true", help="emit a JSON report")
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DegeneracyBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERACY
    except (NoConstantRowError, UnsupportedRootsError, SingularMatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except RecurlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

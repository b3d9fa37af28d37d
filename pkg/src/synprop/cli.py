"""Command-line entry point: ``synprop <command> ...``.

Exit codes: 0 ok, 1 a check failed, 2 unparsable input, 3 contract
violation (e.g. boundary mismatch), 4 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from synprop import ancestry, checks, cospan, logic, serial
from synprop import syn as sy
from synprop.corel import check_boundary, corel_compose, corel_tensor, enumerate_corel
from synprop.errors import ContractError, MonotonicityError, ResourceLimitError
from synprop.finset import fiber_nonempty_functions
from synprop.render import to_dot
from synprop.serial import CATEGORIES, ParseError

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_CONTRACT, EXIT_RESOURCE = 0, 1, 2, 3, 4

COMPOSE = {
    "syn": sy.then,
    "corel": corel_compose,
    "cospan": cospan.cospan_compose,
    "cocom": ancestry.cocom_compose,
}
TENSOR = {
    "syn": sy.tensor,
    "corel": corel_tensor,
    "cospan": cospan.cospan_tensor,
    "cocom": ancestry.cocom_tensor,
}


def read_json_arg(text: str):
    """A JSON literal, ``@path`` to read a file, or ``-`` for stdin."""
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _morphism(category: str, text: str):
    return serial.from_json(category, read_json_arg(text))


def cmd_compose(args) -> int:
    lhs, rhs = _morphism(args.category, args.lhs), _morphism(args.category, args.rhs)
    print(serial.dumps(COMPOSE[args.category](lhs, rhs)))
    return EXIT_OK


def cmd_tensor(args) -> int:
    lhs, rhs = _morphism(args.category, args.lhs), _morphism(args.category, args.rhs)
    print(serial.dumps(TENSOR[args.category](lhs, rhs)))
    return EXIT_OK


def cmd_ancestry(args) -> int:
    f = _morphism("syn", args.morphism)
    out = ancestry.cocom_of(f) if args.cocom else ancestry.pi(f)
    print(serial.dumps(out))
    return EXIT_OK


def enumerate_homset(category: str, m: int, n: int, max_apex: int):
    if category == "syn":
        return sy.enumerate_syn(m, n)
    if category == "corel":
        return enumerate_corel(m, n)
    if category == "cocom":
        return [ancestry.CocomMap(m, n, phi) for phi in fiber_nonempty_functions(n, m)]
    return cospan.enumerate_cospans(m, n, max_apex)


def cmd_enumerate(args) -> int:
    if args.m < 0 or args.n < 0:
        raise ContractError("sizes must be natural numbers")
    check_boundary(args.m, args.n, args.bound)
    for x in enumerate_homset(args.category, args.m, args.n, args.max_apex):
        sys.stdout.write(serial.dumps(x) + "\n")
    return EXIT_OK


def cmd_render(args) -> int:
    print(to_dot(_morphism(args.category, args.morphism)))
    return EXIT_OK


def cmd_fixpoint(args) -> int:
    spec = read_json_arg(args.spec)
    if not isinstance(spec, dict) or "size" not in spec:
        raise ParseError("fixpoint spec needs a 'size' field")
    if "formula" not in spec and "formulas" not in spec:
        raise ParseError("fixpoint spec needs 'formula' or 'formulas'")
    print(json.dumps(logic.solve_fixpoint(spec, seed=args.seed)))
    return EXIT_OK


def suite_kwargs(name: str, bound: int | None, cases: int, seed: int) -> dict:
    """Translate the single ``--bound`` into each suite's size parameters."""
    if name in ("theorem-a", "triangle", "counts"):
        return {} if bound is None else {"max_m": bound, "max_n": bound + 1}
    if name == "theorem-c":
        if bound is None:
            return {}
        return {"section_boundary": bound, "card_boundary": min(bound, 4)}
    if name in ("prop-laws", "functoriality"):
        kw = {"random_cases": cases, "seed": seed}
        if bound is not None:
            kw["size"] = bound
        return kw
    if name == "logic":
        kw = {"seed": seed}
        if bound is not None:
            kw["max_size"] = bound
        return kw
    return {}


def cmd_check(args) -> int:
    report = checks.SUITES[args.suite](**suite_kwargs(args.suite, args.bound, args.cases, args.seed))
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        for line in report.lines():
            print(line)
        print(f"{args.suite}: {'ok' if report.passed else 'FAILED'} "
              f"({len(report.checks)} checks, {report.seconds:.2f}s)")
    return report.exit_status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="synprop",
        description="Finite PROPs, corelations and cospans: compose, enumerate, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("compose", cmd_compose, "diagrammatic composite LHS ; RHS"),
        ("tensor", cmd_tensor, "monoidal product LHS + RHS"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("category", choices=CATEGORIES)
        p.add_argument("lhs", help="JSON literal, @file, or - for stdin")
        p.add_argument("rhs")
        p.set_defaults(func=fn)

    p = sub.add_parser("ancestry", help="boundary partition of a forest")
    p.add_argument("morphism")
    p.add_argument("--cocom", action="store_true", help="print the output->input map instead")
    p.set_defaults(func=cmd_ancestry)

    p = sub.add_parser("enumerate", help="stream a hom-set as JSON lines")
    p.add_argument("category", choices=CATEGORIES)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--bound", type=int, default=None, help="max m + n (default from env)")
    p.add_argument("--max-apex", type=int, default=2, help="apex bound for cospans")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite", choices=sorted(checks.SUITES))
    p.add_argument("--bound", type=int, default=None, help="size bound for the suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=10_000, help="randomized cases")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("render", help="Graphviz DOT for a morphism")
    p.add_argument("category", choices=CATEGORIES)
    p.add_argument("morphism")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("fixpoint", help="least and greatest fixed points of a formula")
    p.add_argument("spec")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_fixpoint)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ContractError, MonotonicityError) as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: gen, cover, verify, realize, compete, theta-e, theta-e-p,
decide, survey.  Objects travel as JSON (optionally DOT for graphs and
digraphs), survey tables as TSV.

Exit codes: 0 success / valid / positive decision, 1 invalid cover or
negative decision, 2 input or parameter problems, 3 infeasible parameters
or an exceeded search guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from .competition import p_competition_graph
from .covers import (
    complement_cycle_cover,
    cover_from_json_dict,
    cover_to_json_dict,
    cycle_cover,
    lift_cover,
    verify_p_ecc,
)
from .errors import (
    InfeasibleError,
    InvalidParameterError,
    ScaleError,
    UnsupportedInstanceError,
)
from .graphs import (
    complement,
    digraph_from_json_dict,
    digraph_to_dot,
    digraph_to_json_dict,
    graph_from_json_dict,
    graph_to_dot,
    graph_to_json_dict,
    make_cycle,
)
from .oracle import exact_theta_e, exact_theta_e_p, is_p_competition
from .realization import realize, realize_acyclic

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _emit_json(obj: dict, out: str | None) -> None:
    _emit(json.dumps(obj, separators=(",", ":")), out)


def _load_json(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _parse_span(text: str) -> tuple[int, int]:
    """Parse 'a..b' (inclusive) or a single integer 'a'."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError as exc:
        raise InvalidParameterError(f"bad range {text!r}: {exc}") from exc
    if b < a:
        raise InvalidParameterError(f"bad range {text!r}: end below start")
    return a, b


def _parse_order(text: str, n: int) -> list[int]:
    try:
        order = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise InvalidParameterError(f"bad order {text!r}: {exc}") from exc
    if len(order) != n:
        raise InvalidParameterError(
            f"order has {len(order)} entries, expected {n}")
    return order


def _family_graph(family: str, n: int):
    if family == "cycle":
        return make_cycle(n)
    return complement(make_cycle(n))


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "co-cycle" and args.n < 5:
        raise InvalidParameterError(f"co-cycle generation requires n >= 5, got n={args.n}")
    g = _family_graph(args.family, args.n)
    if args.format == "dot":
        _emit(graph_to_dot(g), args.out)
    else:
        _emit_json(graph_to_json_dict(g), args.out)
    return EXIT_OK


def cmd_cover(args: argparse.Namespace) -> int:
    if args.family == "cycle":
        if args.p is None:
            raise InvalidParameterError("cover cycle requires --p")
        f = cycle_cover(args.n, args.p)
    else:
        f = complement_cycle_cover(args.n)
        if args.p is not None:
            f = lift_cover(f, args.p)
    _emit_json(cover_to_json_dict(f), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = graph_from_json_dict(_load_json(args.graph))
    f = cover_from_json_dict(_load_json(args.cover))
    verdict = verify_p_ecc(g, f, args.p)
    _emit_json(verdict.to_json_dict(), args.out)
    return EXIT_OK if verdict.valid else EXIT_INVALID


def cmd_realize(args: argparse.Namespace) -> int:
    f = cover_from_json_dict(_load_json(args.cover))
    if args.acyclic:
        if args.order is None:
            raise InvalidParameterError("realize --acyclic requires --order")
        d = realize_acyclic(f, _parse_order(args.order, f.n))
    else:
        d = realize(f)
    if args.format == "dot":
        _emit(digraph_to_dot(d), args.out)
    else:
        _emit_json(digraph_to_json_dict(d), args.out)
    return EXIT_OK


def cmd_compete(args: argparse.Namespace) -> int:
    d = digraph_from_json_dict(_load_json(args.digraph))
    g = p_competition_graph(d, args.p)
    if args.format == "dot":
        _emit(graph_to_dot(g), args.out)
    else:
        _emit_json(graph_to_json_dict(g), args.out)
    return EXIT_OK


def cmd_theta_e(args: argparse.Namespace) -> int:
    g = graph_from_json_dict(_load_json(args.graph))
    result = exact_theta_e(g, upper=args.upper, guard=args.guard)
    _emit_json(result.to_json_dict(), args.out)
    return EXIT_OK


def cmd_theta_e_p(args: argparse.Namespace) -> int:
    g = graph_from_json_dict(_load_json(args.graph))
    budget = args.budget if args.budget is not None else g.n
    result = exact_theta_e_p(g, args.p, budget, guard=args.guard)
    _emit_json(result.to_json_dict(), args.out)
    return EXIT_OK


def cmd_decide(args: argparse.Namespace) -> int:
    g = graph_from_json_dict(_load_json(args.graph))
    decision = is_p_competition(g, args.p, method=args.method, guard=args.guard)
    _emit_json(
        {
            "is_p_competition": decision.value,
            "method": decision.method,
            "cover_size": decision.cover_size,
        },
        args.out,
    )
    return EXIT_OK if decision.value else EXIT_INVALID


def _survey_cell(family: str, n: int, p: int, guard: int) -> tuple[str, str, str, str]:
    g = _family_graph(family, n)
    constructive = None
    try:
        constructive = is_p_competition(g, p, method="construct")
    except UnsupportedInstanceError:
        pass
    oracle = None
    if n <= guard:
        oracle = is_p_competition(g, p, method="oracle", guard=guard)

    if constructive is None and oracle is None:
        return "skipped", "-", "-", "-"
    if constructive is not None and oracle is not None:
        agree = "yes" if constructive.value == oracle.value else "no"
        picked, method = constructive, "both"
    elif constructive is not None:
        agree, picked, method = "-", constructive, "construct"
    else:
        agree, picked, method = "-", oracle, "oracle"
    decision = "yes" if picked.value else "no"
    size = str(picked.cover_size) if picked.value and picked.cover_size is not None else "-"
    return decision, method, size, agree


def cmd_survey(args: argparse.Namespace) -> int:
    n_lo, n_hi = _parse_span(args.n)
    p_lo, p_hi = _parse_span(args.p)
    if n_lo < 3:
        raise InvalidParameterError(f"survey requires n >= 3, got {n_lo}")
    if p_lo < 1:
        raise InvalidParameterError(f"survey requires p >= 1, got {p_lo}")
    lines = ["n\tp\tdecision\tmethod\tcover_size\tagree"]
    for n in range(n_lo, n_hi + 1):
        for p in range(p_lo, p_hi + 1):
            decision, method, size, agree = _survey_cell(args.family, n, p, args.guard)
            lines.append(f"{n}\t{p}\t{decision}\t{method}\t{size}\t{agree}")
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcomp",
        description="p-competition graphs of cycles and cycle complements: "
        "constructions, verification, realization, exact oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a cycle or cycle-complement graph")
    gen.add_argument("family", choices=["cycle", "co-cycle"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--format", choices=["json", "dot"], default="json")
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    cover = sub.add_parser("cover", help="emit a cover family for a cycle or its complement")
    cover.add_argument("family", choices=["cycle", "co-cycle"])
    cover.add_argument("--n", type=int, required=True)
    cover.add_argument("--p", type=int)
    cover.add_argument("--out")
    cover.set_defaults(func=cmd_cover)

    verify = sub.add_parser("verify", help="verify a p-edge clique cover against a graph")
    verify.add_argument("graph")
    verify.add_argument("cover")
    verify.add_argument("--p", type=int, required=True)
    verify.add_argument("--out")
    verify.set_defaults(func=cmd_verify)

    real = sub.add_parser("realize", help="build the digraph realizing a cover")
    real.add_argument("cover")
    real.add_argument("--acyclic", action="store_true")
    real.add_argument("--order", help="comma-separated vertex permutation")
    real.add_argument("--format", choices=["json", "dot"], default="json")
    real.add_argument("--out")
    real.set_defaults(func=cmd_realize)

    compete = sub.add_parser("compete", help="compute the p-competition graph of a digraph")
    compete.add_argument("digraph")
    compete.add_argument("--p", type=int, required=True)
    compete.add_argument("--format", choices=["json", "dot"], default="json")
    compete.add_argument("--out")
    compete.set_defaults(func=cmd_compete)

    te = sub.add_parser("theta-e", help="exact minimum edge clique cover size")
    te.add_argument("graph")
    te.add_argument("--upper", type=int)
    te.add_argument("--guard", type=int, default=16)
    te.add_argument("--out")
    te.set_defaults(func=cmd_theta_e)

    tep = sub.add_parser("theta-e-p", help="exact minimum p-edge clique cover size up to a budget")
    tep.add_argument("graph")
    tep.add_argument("--p", type=int, required=True)
    tep.add_argument("--budget", type=int, help="defaults to the vertex count")
    tep.add_argument("--guard", type=int, default=8)
    tep.add_argument("--out")
    tep.set_defaults(func=cmd_theta_e_p)

    decide = sub.add_parser("decide", help="is the graph a p-competition graph?")
    decide.add_argument("graph")
    decide.add_argument("--p", type=int, required=True)
    decide.add_argument("--method", choices=["auto", "construct", "oracle", "both"],
                        default="auto")
    decide.add_argument("--guard", type=int, default=8)
    decide.add_argument("--out")
    decide.set_defaults(func=cmd_decide)

    survey = sub.add_parser("survey", help="tabulate decisions over n/p ranges as TSV")
    survey.add_argument("family", choices=["cycle", "co-cycle"])
    survey.add_argument("--n", required=True, help="range a..b (inclusive) or a single value")
    survey.add_argument("--p", required=True, help="range a..b (inclusive) or a single value")
    survey.add_argument("--guard", type=int, default=5,
                        help="run the exhaustive oracle on rows with n up to this")
    survey.add_argument("--out")
    survey.set_defaults(func=cmd_survey)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InfeasibleError, ScaleError) as exc:
        print(f"pcomp: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (InvalidParameterError, UnsupportedInstanceError) as exc:
        print(f"pcomp: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, json.JSONDecodeError) as exc:
        print(f"pcomp: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

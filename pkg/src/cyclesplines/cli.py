"""Command line interface.

Usage:
    cyclesplines verify    --cycle 2,5,3 --labels 0,2,12
    cyclesplines basis     --cycle 3,4,8,2,5 --kind king
    cyclesplines decompose --cycle 2,5,3 --labels 1,3,13 --kind triangulation
    cyclesplines multiply  --cycle 3,4,8,2,5 --kind king --i 1 --j 3
    cyclesplines table     --cycle 2,5,3 --kind triangulation
    cyclesplines oracle smallest    --cycle 2,5,3 --k 1
    cyclesplines oracle check-basis --cycle 2,5,3 --kind triangulation
    cyclesplines oracle extension   --cycle 2,6,15,10 --k 1 --labels 0,2,50,200

Input comes from --cycle (comma-separated labels) or --input FILE, a JSON
document with either {"cycle": [2, 5, 3]} or
{"graph": {"vertices": 2, "edges": [[1, 2, 2]]}}.  With --format machine a
single JSON document is written to stdout and diagnostics go to stderr.
Numbers are plain base 10.  Note for negative entries: write
--labels=-1,-1,-1 (with the equals sign) so the value is not mistaken for a
flag.

Exit codes: 0 success, 1 domain failure (violations found, preconditions
unmet), 2 malformed input, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, Union

from .bases import (
    FlowUpBasis,
    king_basis,
    smallest_basis,
    triangulation_basis,
)
from .errors import BudgetExceededError, CycleSplinesError, DimensionError
from .oracle import (
    EnumerationBudget,
    brute_force_smallest,
    check_basis_by_definition,
    default_budget,
    smallest_class_bound,
    verify_triangulated_extension,
)
from .ring_algebra import (
    king_multiplication_table,
    king_product,
    product_in_basis,
    triangulation_table_3cycle,
)
from .spline_core import (
    EdgeLabeledCycle,
    EdgeLabeledGraph,
    Spline,
    is_spline,
    labeled_edges,
    vertex_count,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


class _InputError(Exception):
    """Malformed command input; reported on stderr with exit code 2."""


GraphLike = Union[EdgeLabeledCycle, EdgeLabeledGraph]


def _parse_int_list(text: str, what: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise _InputError(f"{what} must be a comma-separated list of integers, got {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise _InputError(f"{what} must be integers: {exc}") from None


def _load_target(args: argparse.Namespace) -> GraphLike:
    """Build the cycle or graph named by --cycle or --input."""
    if getattr(args, "cycle", None) is not None and getattr(args, "input", None) is not None:
        raise _InputError("give either --cycle or --input, not both")
    if getattr(args, "cycle", None) is not None:
        try:
            return EdgeLabeledCycle(tuple(_parse_int_list(args.cycle, "--cycle")))
        except (ValueError, TypeError) as exc:
            raise _InputError(str(exc)) from None
    if getattr(args, "input", None) is not None:
        try:
            with open(args.input, encoding="utf-8") as fh:
                document = json.load(fh)
        except OSError as exc:
            raise _InputError(f"cannot read {args.input}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise _InputError(f"{args.input} is not valid JSON: {exc}") from None
        return _target_from_document(document)
    raise _InputError("one of --cycle or --input is required")


def _target_from_document(document) -> GraphLike:
    if not isinstance(document, dict):
        raise _InputError("input document must be a JSON object")
    keys = {"cycle", "graph"} & set(document)
    if len(keys) != 1:
        raise _InputError('input document needs exactly one of the keys "cycle" or "graph"')
    try:
        if "cycle" in keys:
            labels = document["cycle"]
            if not isinstance(labels, list):
                raise _InputError('"cycle" must be a list of edge labels')
            return EdgeLabeledCycle(tuple(labels))
        body = document["graph"]
        if not isinstance(body, dict) or "vertices" not in body or "edges" not in body:
            raise _InputError('"graph" must be an object with "vertices" and "edges"')
        edges = tuple(tuple(edge) for edge in body["edges"])
        return EdgeLabeledGraph(body["vertices"], edges)
    except (ValueError, TypeError) as exc:
        raise _InputError(str(exc)) from None


def _require_cycle(target: GraphLike, command: str) -> EdgeLabeledCycle:
    if not isinstance(target, EdgeLabeledCycle):
        raise _InputError(f"{command} needs a cycle, not a general graph")
    return target


def _parse_labels(args: argparse.Namespace, n: int) -> list[int]:
    values = _parse_int_list(args.labels, "--labels")
    if len(values) != n:
        raise _InputError(f"--labels needs {n} entries for this input, got {len(values)}")
    return values


def _budget_for(args: argparse.Namespace, target: GraphLike) -> Optional[EnumerationBudget]:
    bound = getattr(args, "bound", None)
    states = getattr(args, "max_states", None)
    if bound is None and states is None:
        return None
    if bound is None:
        bound = (
            smallest_class_bound(target)
            if isinstance(target, EdgeLabeledCycle)
            else default_budget(target).entry_bound
        )
    if bound < 1:
        raise _InputError(f"--bound must be positive, got {bound}")
    if states is not None and states < 1:
        raise _InputError(f"--max-states must be positive, got {states}")
    if states is None:
        return EnumerationBudget(bound)
    return EnumerationBudget(bound, states)


def _build_basis(cycle: EdgeLabeledCycle, kind: str, args: argparse.Namespace) -> FlowUpBasis:
    if kind == "triangulation":
        return triangulation_basis(cycle)
    if kind == "king":
        return king_basis(cycle)
    return smallest_basis(cycle, getattr(args, "bound", None), getattr(args, "max_states", None))


def _emit(args: argparse.Namespace, payload: dict, human_lines: list[str]) -> None:
    if args.format == "machine":
        json.dump(payload, sys.stdout, separators=(", ", ": "))
        sys.stdout.write("\n")
    else:
        for line in human_lines:
            print(line)


def _spline_text(entries: Sequence[int]) -> str:
    return ",".join(str(e) for e in entries)


# ---------------------------------------------------------------- commands


def _cmd_verify(args: argparse.Namespace) -> int:
    target = _load_target(args)
    values = _parse_labels(args, vertex_count(target))
    check = is_spline(target, values)
    bad = {v.edge: v for v in check.violations}
    lines = []
    for i, u, v, lab in labeled_edges(target):
        if i in bad:
            lines.append("FAIL " + bad[i].describe())
        else:
            lines.append(f"ok   edge {i} (vertex {u} -- vertex {v}, label {lab})")
    lines.append("spline" if check.ok else "not a spline")
    payload = {
        "ok": check.ok,
        "violations": [
            {
                "edge": v.edge,
                "u": v.u,
                "v": v.v,
                "label": v.label,
                "values": [v.value_u, v.value_v],
            }
            for v in check.violations
        ],
    }
    _emit(args, payload, lines)
    if not check.ok and args.format == "machine":
        for v in check.violations:
            print(v.describe(), file=sys.stderr)
    return EXIT_OK if check.ok else EXIT_DOMAIN


def _cmd_basis(args: argparse.Namespace) -> int:
    cycle = _require_cycle(_load_target(args), "basis")
    _budget_for(args, cycle)  # validate the flags even for closed-form kinds
    basis = _build_basis(cycle, args.kind, args)
    lines = [
        f"{basis.symbol}{k}: {_spline_text(element.entries)}"
        for k, element in enumerate(basis.elements)
    ]
    payload = {"kind": basis.kind, "basis": [list(element.entries) for element in basis]}
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    from .ring_algebra import decompose

    cycle = _require_cycle(_load_target(args), "decompose")
    _budget_for(args, cycle)
    values = _parse_labels(args, cycle.n)
    check = is_spline(cycle, values)
    if not check.ok:
        for v in check.violations:
            print(v.describe(), file=sys.stderr)
        print("not a spline; nothing to decompose", file=sys.stderr)
        return EXIT_DOMAIN
    basis = _build_basis(cycle, args.kind, args)
    coefficients = decompose(Spline(tuple(values)), basis)
    _emit(args, {"coefficients": list(coefficients)}, [_spline_text(coefficients)])
    return EXIT_OK


def _cmd_multiply(args: argparse.Namespace) -> int:
    cycle = _require_cycle(_load_target(args), "multiply")
    _budget_for(args, cycle)
    if not (0 <= args.i <= cycle.n - 1 and 0 <= args.j <= cycle.n - 1):
        raise _InputError(f"--i and --j must be in [0, {cycle.n - 1}], got ({args.i}, {args.j})")
    if args.kind == "king":
        cell = king_product(cycle, args.i, args.j)
        symbol = "K"
    else:
        basis = _build_basis(cycle, args.kind, args)
        cell = product_in_basis(basis, args.i, args.j)
        symbol = basis.symbol
    payload = {"product": {"i": cell.i, "j": cell.j, "terms": [list(t) for t in cell.terms]}}
    _emit(
        args,
        payload,
        [f"{symbol}{cell.i} * {symbol}{cell.j} = {cell.render(symbol)}"],
    )
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    cycle = _require_cycle(_load_target(args), "table")
    if args.kind == "king":
        table = king_multiplication_table(cycle)
        symbol = "K"
        lines = []
    else:
        try:
            table = triangulation_table_3cycle(cycle)
        except DimensionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            print(
                "hint: products on longer cycles are available one pair at a "
                "time via 'multiply --kind triangulation'",
                file=sys.stderr,
            )
            return EXIT_DOMAIN
        symbol = "H"
        phi = dict(table[1][1].terms).get(2, 0)
        lines = [f"Phi = {phi}"]
    n = len(table)
    cells = []
    for i in range(n):
        for j in range(i, n):
            cell = table[i][j]
            cells.append({"i": i, "j": j, "terms": [list(t) for t in cell.terms]})
            lines.append(f"{symbol}{i} * {symbol}{j} = {cell.render(symbol)}")
    _emit(args, {"kind": args.kind, "table": cells}, lines)
    return EXIT_OK


def _cmd_oracle_smallest(args: argparse.Namespace) -> int:
    cycle = _require_cycle(_load_target(args), "oracle smallest")
    if not 1 <= args.k <= cycle.n - 1:
        raise _InputError(f"--k must be in [1, {cycle.n - 1}], got {args.k}")
    result = brute_force_smallest(cycle, args.k, _budget_for(args, cycle))
    _emit(args, {"spline": list(result.entries)}, [_spline_text(result.entries)])
    return EXIT_OK


def _cmd_oracle_check_basis(args: argparse.Namespace) -> int:
    target = _load_target(args)
    if args.kind is None and args.candidates is None:
        raise _InputError("give --kind to check a constructed basis or --candidates for explicit ones")
    if args.kind is not None and args.candidates is not None:
        raise _InputError("give either --kind or --candidates, not both")
    if args.kind is not None:
        cycle = _require_cycle(target, "oracle check-basis --kind")
        candidates = list(_build_basis(cycle, args.kind, args).elements)
    else:
        candidates = [
            Spline(tuple(_parse_int_list(part, "--candidates")))
            for part in args.candidates.split(";")
        ]
    ok = check_basis_by_definition(target, candidates, _budget_for(args, target))
    _emit(
        args,
        {"ok": ok},
        [
            "basis condition holds for the given candidates"
            if ok
            else "basis condition fails: some enumerated spline has a leading "
            "entry that is not a multiple of the matching candidate's"
        ],
    )
    return EXIT_OK if ok else EXIT_DOMAIN


def _cmd_oracle_extension(args: argparse.Namespace) -> int:
    cycle = _require_cycle(_load_target(args), "oracle extension")
    values = _parse_labels(args, cycle.n)
    if not 0 <= args.k <= cycle.n - 1:
        raise _InputError(f"--k must be in [0, {cycle.n - 1}], got {args.k}")
    try:
        ok = verify_triangulated_extension(cycle, args.k, values)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    _emit(
        args,
        {"ok": ok},
        [
            "labels satisfy every edge of the chord-augmented cycle"
            if ok
            else "labels violate the chord-augmented cycle"
        ],
    )
    return EXIT_OK if ok else EXIT_DOMAIN


# ------------------------------------------------------------------ parser


def _add_common(parser: argparse.ArgumentParser, budget: bool = False) -> None:
    parser.add_argument("--cycle", help="comma-separated edge labels, e.g. 2,5,3")
    parser.add_argument("--input", help="JSON file with a cycle or graph document")
    parser.add_argument(
        "--format",
        choices=("human", "machine"),
        default="human",
        help="machine prints one JSON document on stdout",
    )
    if budget:
        parser.add_argument("--bound", type=int, help="cap searched entries at this value")
        parser.add_argument(
            "--max-states", type=int, dest="max_states", help="abort after this many search states"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclesplines",
        description="Exact bases, decompositions, and multiplication tables "
        "for integer splines on edge-labeled cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the edge congruences of a labeling")
    _add_common(p)
    p.add_argument("--labels", required=True, help="comma-separated vertex labels")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("basis", help="construct a flow-up basis")
    _add_common(p, budget=True)
    p.add_argument("--kind", choices=("triangulation", "king", "smallest"), required=True)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("decompose", help="write a spline in a flow-up basis")
    _add_common(p, budget=True)
    p.add_argument("--labels", required=True, help="comma-separated vertex labels")
    p.add_argument("--kind", choices=("triangulation", "king", "smallest"), required=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("multiply", help="product of two basis elements, in the basis")
    _add_common(p, budget=True)
    p.add_argument("--kind", choices=("triangulation", "king", "smallest"), required=True)
    p.add_argument("--i", type=int, required=True, help="first basis index")
    p.add_argument("--j", type=int, required=True, help="second basis index")
    p.set_defaults(func=_cmd_multiply)

    p = sub.add_parser("table", help="full multiplication table")
    _add_common(p)
    p.add_argument("--kind", choices=("triangulation", "king"), required=True)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("oracle", help="exhaustive desk-scale checks")
    oracle_sub = p.add_subparsers(dest="oracle_command", required=True)

    q = oracle_sub.add_parser("smallest", help="smallest flow-up spline by exhaustive search")
    _add_common(q, budget=True)
    q.add_argument("--k", type=int, required=True, help="number of leading zeros")
    q.set_defaults(func=_cmd_oracle_smallest)

    q = oracle_sub.add_parser("check-basis", help="basis condition by enumeration")
    _add_common(q, budget=True)
    q.add_argument("--kind", choices=("triangulation", "king", "smallest"))
    q.add_argument(
        "--candidates",
        help='semicolon-separated labelings, e.g. "1,1,1;0,2,12;0,0,15"',
    )
    q.set_defaults(func=_cmd_oracle_check_basis)

    q = oracle_sub.add_parser("extension", help="check a labeling on the chord-augmented cycle")
    _add_common(q)
    q.add_argument("--k", type=int, required=True, help="number of leading zeros")
    q.add_argument("--labels", required=True, help="comma-separated vertex labels")
    q.set_defaults(func=_cmd_oracle_extension)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CycleSplinesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

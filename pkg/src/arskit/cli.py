"""Command-line front end.

ARS files are UTF-8 JSON::

    {"elements": ["a", "b"], "steps": [["a", "b"], ["b", "a"]]}

Exit codes: 0 success, 1 property fails or counterexample found, 2 usage or
parse error, 3 precondition violated, 4 fuel exhausted.  Errors print one line
``error: <kind>: <message>`` on standard error.

``check --json`` prints ``{"element": NAME, "properties": {LABEL: bool}}`` for
one element and ``{"properties": {...}, "elements": {NAME: {...}}}`` for the
whole system.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import lambda_calculus as lam
from .catalog import fixture, fixtures, run_evidence, verify_catalog
from .errors import ArsError, FuelExhausted, ParseError, PreconditionFailed
from .properties import element_profile, global_profile
from .relations import FiniteArs, Lasso, build_ars, converse, path_between
from .testkit.fuzz import DEFAULT_DENSITIES, GenConfig, fuzz_implications
from .theorems import JoinMethod, join_with, make_peak, normalize_sn
from .wellfounded import DEFAULT_LIMIT, wf_equivalence_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION, EXIT_FUEL = 0, 1, 2, 3, 4


class UsageError(ArsError):
    kind = "usage"


# --- documents ---------------------------------------------------------------


def load_document(text: str) -> FiniteArs:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from None
    if not isinstance(doc, dict) or set(doc) != {"elements", "steps"}:
        raise ParseError('expected an object with keys "elements" and "steps"', 0)
    steps = doc["steps"]
    if not all(isinstance(s, list) and len(s) == 2 for s in steps):
        raise ParseError("each step must be a pair of names", 0)
    return build_ars(doc["elements"], [tuple(s) for s in steps])


def dump_document(ars: FiniteArs) -> str:
    steps = [[ars.names[a], ars.names[b]] for a, b in ars.steps]
    return json.dumps({"elements": list(ars.names), "steps": steps}, ensure_ascii=False)


def _read(path: str) -> FiniteArs:
    try:
        with open(path, encoding="utf-8") as fh:
            return load_document(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


_DOT_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _dot_id(name: str) -> str:
    if _DOT_ID.match(name):
        return name
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(ars: FiniteArs) -> str:
    lines = ["digraph {"]
    lines += [f"  {_dot_id(n)};" for n in ars.names]
    lines += [f"  {_dot_id(ars.names[a])} -> {_dot_id(ars.names[b])};" for a, b in ars.steps]
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- commands ----------------------------------------------------------------


def _bits(d: dict[str, bool]) -> str:
    return " ".join(f"{k}={'T' if v else 'F'}" for k, v in d.items())


def cmd_check(args) -> int:
    ars = _read(args.file)
    if args.element:
        p = element_profile(ars, ars.index(args.element))
        if args.json:
            print(json.dumps({"element": args.element, "properties": p.as_dict()}))
        else:
            print(f"{args.element}: {_bits(p.as_dict())}")
            if p.wn_witness is not None:
                print(f"normal form: {p.wn_witness.render(ars)}")
        return EXIT_OK
    g = global_profile(ars)
    if args.json:
        elements = {ars.names[p.element]: p.as_dict() for p in g.elements}
        print(json.dumps({"properties": g.as_dict(), "elements": elements}))
    else:
        print(f"global: {_bits(g.as_dict())}")
        for p in g.elements:
            print(f"{ars.names[p.element]}: {_bits(p.as_dict())}")
    return EXIT_OK


_METHODS = {
    "newman": JoinMethod.NEWMAN,
    "gnewman": JoinMethod.GENERALIZED_NEWMAN,
    "wnun": JoinMethod.WN_UN,
    "cp": JoinMethod.COFINALITY,
    "exhaustive": JoinMethod.EXHAUSTIVE,
}


def _auto_method(ars: FiniteArs, apex: int) -> JoinMethod:
    g = global_profile(ars)
    if g["SN"] and g["WCR"]:
        return JoinMethod.NEWMAN
    if g["WCR"] and g.elements[apex].sm:
        return JoinMethod.GENERALIZED_NEWMAN
    if g["WN"] and g["UNred"]:
        return JoinMethod.WN_UN
    if g.elements[apex].cr:
        return JoinMethod.COFINALITY
    return JoinMethod.EXHAUSTIVE


def cmd_join(args) -> int:
    ars = _read(args.file)
    apex, left, right = (ars.index(n) for n in (args.apex, args.left, args.right))
    peak = make_peak(ars, apex, left, right)
    if peak is None:
        raise UsageError(f"{args.left} or {args.right} is not a reduct of {args.apex}")
    method = _auto_method(ars, apex) if args.method == "auto" else _METHODS[args.method]
    join = join_with(method, ars, peak, args.fuel)
    if join is None:
        print(f"no join: {args.left} and {args.right} have no common reduct")
        return EXIT_FAIL
    print(f"join at {ars.names[join.target]} ({method.value})")
    print(f"left: {join.from_left.render(ars)}")
    print(f"right: {join.from_right.render(ars)}")
    return EXIT_OK


def _cycle_through(ars: FiniteArs, y: int) -> str:
    comp = ars.scc.component_of[y]
    z = next(s for s in ars.successors[y] if ars.scc.component_of[s] == comp)
    back = path_between(ars, z, y)
    return " -> ".join(ars.names[i] for i in (y, *back.nodes))


def cmd_normalize(args) -> int:
    ars = _read(args.file)
    a = ars.index(args.element)
    view = ars.scc
    cyclic = next((y for y in ars.reachable(a) if view.cyclic[view.component_of[y]]), None)
    if cyclic is not None:
        raise PreconditionFailed(
            "SN", f"{args.element} reaches the cycle {_cycle_through(ars, cyclic)}", element=a
        )
    nf, path = normalize_sn(ars, a, args.fuel)
    print(" -> ".join(ars.names[i] for i in path))
    return EXIT_OK


def cmd_wf(args) -> int:
    ars = _read(args.file)
    report = wf_equivalence_report(converse(ars), args.limit)
    for notion, verdict in report.verdicts.items():
        line = f"{notion.value}: {verdict.holds}"
        ce = verdict.counterexample
        if isinstance(ce, Lasso):
            cycle = " -> ".join(ars.names[i] for i in ce.cycle)
            stem = " -> ".join(ars.names[i] for i in ce.stem)
            line += f" (descending lasso: {stem + ' then ' if stem else ''}({cycle})^w)"
        elif ce is not None:
            line += f" (counterexample: {{{', '.join(ars.names[i] for i in sorted(ce))}}})"
        print(line)
    print(f"agreement: {report.agreement}")
    print(f"bridge: {_bits(report.bridge.as_dict())}")
    bad = report.edge_violations()
    print(f"diagram violations: {len(bad)}")
    return EXIT_OK if report.agreement and not bad else EXIT_FAIL


def cmd_catalog(args) -> int:
    if args.verify:
        report = verify_catalog()
        for line in report.lines():
            print(line)
        print("catalog ok" if report.ok else "catalog MISMATCH")
        return EXIT_OK if report.ok else EXIT_FAIL
    if args.name is None:
        for f in fixtures():
            print(f.name)
        return EXIT_OK
    try:
        f = fixture(args.name)
    except KeyError:
        raise UsageError(f"no fixture named {args.name}") from None
    if f.is_finite:
        print(dump_document(f.system))
    else:
        for e in run_evidence(f):
            print(f"{e.demand}: {'ok' if e.ok else 'FAILED'}")
        print(f"note: {f.note}")
    return EXIT_OK


def cmd_fuzz(args) -> int:
    densities = tuple(args.density) if args.density else DEFAULT_DENSITIES
    try:
        cfg = GenConfig(args.seed, args.count, args.max_size, densities)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = fuzz_implications(cfg)
    print(f"instances: {report.instances}")
    print(f"violations: {sum(report.violations.values())}")
    for label, count in sorted(report.violations.items()):
        ce = report.counterexamples[label]
        print(f"{label}: {count} (shrunk: {dump_document(ce)})")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_dot(args) -> int:
    sys.stdout.write(to_dot(_read(args.file)))
    return EXIT_OK


def cmd_lambda(args) -> int:
    context = [c for c in args.context.split(",") if c] if args.context else None
    term = lam.parse_term(args.term, context)
    ctx = context or ()
    if args.action == "parse":
        print(repr(term))
        print(lam.pretty(term, ctx))
        return EXIT_OK
    if args.action == "steps":
        for r in lam.beta_step_enum(term):
            print(lam.pretty(r, ctx))
        return EXIT_OK
    if args.action == "nf":
        nf = lam.is_beta_nf(term)
        print("normal form" if nf else "not a normal form")
        return EXIT_OK if nf else EXIT_FAIL
    result = lam.normalize(term, args.strategy, args.fuel)
    if isinstance(result, lam.OutOfFuel):
        raise FuelExhausted(f"no normal form within {result.steps} steps")
    print(lam.pretty(result.term, ctx))
    print(f"steps: {result.steps}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arskit", description="Analyse finite abstract rewriting systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="element or global property profile")
    p.add_argument("file")
    p.add_argument("--element")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("join", help="join the peak LEFT *<- APEX ->* RIGHT")
    p.add_argument("file")
    p.add_argument("apex")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--method", choices=["auto", *_METHODS], default="auto")
    p.add_argument("--fuel", type=int, default=10_000)
    p.set_defaults(run=cmd_join)

    p = sub.add_parser("normalize", help="reduce a strongly normalizing element to normal form")
    p.add_argument("file")
    p.add_argument("element")
    p.add_argument("--fuel", type=int, default=10_000)
    p.set_defaults(run=cmd_normalize)

    p = sub.add_parser("wf", help="well-foundedness notions of the converse relation")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(run=cmd_wf)

    p = sub.add_parser("catalog", help="list, print or verify the counterexample fixtures")
    p.add_argument("name", nargs="?")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(run=cmd_catalog)

    p = sub.add_parser("fuzz", help="search random systems for claim violations")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--density", type=float, action="append")
    p.set_defaults(run=cmd_fuzz)

    p = sub.add_parser("dot", help="print the system as a DOT digraph")
    p.add_argument("file")
    p.set_defaults(run=cmd_dot)

    p = sub.add_parser("lambda", help="lambda term utilities")
    p.add_argument("action", choices=["parse", "steps", "nf", "normalize"])
    p.add_argument("term")
    p.add_argument("--strategy", choices=["lo", "first"], default="lo")
    p.add_argument("--fuel", type=int, default=1000)
    p.add_argument("--context", help="comma-separated free names, innermost last")
    p.set_defaults(run=cmd_lambda)
    return parser


_EXIT_FOR = {PreconditionFailed: EXIT_PRECONDITION, FuelExhausted: EXIT_FUEL}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ArsError as exc:
        print(f"error: {exc.kind}: {exc}", file=sys.stderr)
        return _EXIT_FOR.get(type(exc), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())

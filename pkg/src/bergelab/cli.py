"""Command-line interface: one JSON line per input graph.

Exit status: 0 success (whatever the verdicts), 1 counterexamples found by
``verify``, 2 usage error, 3 malformed input, 4 a size or search budget refused.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Iterator, Optional, Sequence, TextIO

from . import serialize as ser
from .decompositions import decompose, find_skew_partitions
from .graphcore import Graph, configured_max_n
from .graphio import GraphFormatError, GraphTooLargeError, emit_graph6, parse_dimacs, parse_graph6
from .lemmalab.claims import REGISTRY
from .lemmalab.enumeration import EnumerationTooLarge
from .lemmalab.generators import FAMILIES, GeneratorSpec, generate, sample_seed, validate
from .lemmalab.suite import Exhaustive, FileSource, Sampled, run_suite
from .recognizers import BudgetExceeded, chromatic_number, classify_basic, clique_number, is_berge, is_perfect
from .structures import (
    FIXED_GRAPHS,
    F8_DEFAULT_MAX_N,
    f_ladder,
    find_appearances_k4,
    find_induced_copy,
    find_prisms,
    find_wheels,
    NotBergeError,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3, 4

DETECT_KINDS = {
    "prism": None,
    "wheel": None,
    "double-diamond": "double_diamond",
    "lk33": "L_K33",
    "lk33e": "L_K33_minus_e",
    "appearance-k4": None,
}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def iter_input(paths: Sequence[str], max_n: int) -> Iterator[tuple[str, int, Graph]]:
    """(path, line number, graph); DIMACS files hold one graph, graph6 files one per line."""
    for path in paths:
        text = _read_text(path)
        lines = text.splitlines()
        if any(line.split()[:1] == ["p"] for line in lines):
            try:
                yield path, 1, parse_dimacs(text, max_n)
            except GraphFormatError as exc:
                exc.args = (f"{path}: {exc.args[0]}",)
                raise
            continue
        for lineno, line in enumerate(lines, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line, max_n)
            except GraphFormatError as exc:
                exc.args = (f"{path}:{lineno}: {exc.args[0]}",)
                raise
            yield path, lineno, g


# ---------------------------------------------------------------------------
# per-graph commands

def _with_graph(g: Graph, body: dict) -> dict:
    out = {"graph6": emit_graph6(g)}
    out.update(body)
    return out


def cmd_berge(g: Graph, args) -> dict:
    return _with_graph(g, ser.berge_to_json(is_berge(g)))


def cmd_perfect(g: Graph, args) -> dict:
    report = is_perfect(g, max_n=args.perfect_max_n)
    body = ser.perfect_to_json(report)
    body["omega"] = clique_number(g)
    body["chi"] = chromatic_number(g)
    return _with_graph(g, body)


def cmd_classify(g: Graph, args) -> dict:
    cert = classify_basic(g)
    body = {"basic": cert is not None}
    if cert is not None:
        body.update(ser.basic_to_json(cert))
    return _with_graph(g, body)


def cmd_decompose(g: Graph, args) -> dict:
    try:
        verdict = decompose(g)
    except NotBergeError as exc:
        return _with_graph(g, {"kind": "not_berge", "berge": False,
                               "witness": {"side": exc.witness.side, "hole": list(exc.witness.hole)}})
    return _with_graph(g, ser.verdict_to_json(verdict))


def cmd_detect(g: Graph, args) -> dict:
    kind = args.kind
    target = g.complement() if args.complement else g
    found: list
    if kind == "prism":
        prisms = find_prisms(target)
        found = [ser.prism_to_json(p) for p in prisms
                 if args.parity == "any" or p.kind == args.parity]
    elif kind == "wheel":
        found = [ser.wheel_to_json(w) for w in find_wheels(target) if w.odd or not args.odd_only]
    elif kind == "appearance-k4":
        found = [ser.appearance_to_json(a) for a in find_appearances_k4(target)
                 if not (args.nondegenerate_only and a.degenerate)]
    else:
        mapping = find_induced_copy(target, FIXED_GRAPHS[DETECT_KINDS[kind]]())
        found = [] if mapping is None else [{"mapping": list(mapping), "vertices": sorted(mapping)}]
    if args.first:
        found = found[:1]
    return _with_graph(g, {"detector": kind, "side": "complement" if args.complement else "G",
                           "found": bool(found), "count": len(found), "certificates": found})


def cmd_skew(g: Graph, args) -> dict:
    certs = []
    for cert in find_skew_partitions(g):
        if args.balanced_only and not cert.balanced:
            continue
        certs.append(ser.skew_to_json(cert))
        if args.first:
            break
    return _with_graph(g, {"count": len(certs), "skew_partitions": certs})


def cmd_fladder(g: Graph, args) -> dict:
    try:
        report = f_ladder(g, check_f8=not args.no_f8, f8_max_n=args.f8_max_n)
    except NotBergeError as exc:
        return _with_graph(g, {"berge": False,
                               "witness": {"side": exc.witness.side, "hole": list(exc.witness.hole)}})
    body = ser.fladder_to_json(report)
    body["berge"] = True
    return _with_graph(g, body)


PER_GRAPH = {
    "berge": cmd_berge,
    "perfect": cmd_perfect,
    "classify": cmd_classify,
    "decompose": cmd_decompose,
    "detect": cmd_detect,
    "skew": cmd_skew,
    "fladder": cmd_fladder,
}


# ---------------------------------------------------------------------------
# corpus commands

def _parse_params(family: str, raw: list[str]):
    if family == "complement_of":
        if not raw:
            raise UsageError("complement_of needs an inner family and its parameters")
        return (GeneratorSpec(raw[0], _parse_params(raw[0], raw[1:])),)
    vals = []
    for r in raw:
        try:
            vals.append(int(r))
        except ValueError:
            try:
                vals.append(float(r))
            except ValueError:
                raise UsageError(f"parameter {r!r} is not a number") from None
    return tuple(vals)


def _spec(args) -> GeneratorSpec:
    try:
        spec = GeneratorSpec(args.family, _parse_params(args.family, args.params), 0)
        validate(spec)
        return spec
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args, out: TextIO) -> int:
    if args.claim not in REGISTRY:
        raise UsageError(f"unknown claim {args.claim!r}; known: {', '.join(sorted(REGISTRY))}")
    if args.exhaustive is not None:
        source = Exhaustive(args.exhaustive)
    elif args.file is not None:
        source = FileSource(args.file)
    else:
        if args.family is None or args.samples is None:
            raise UsageError("verify needs --exhaustive N, --file PATH, or --family/--params/--samples")
        if args.seed is None:
            raise UsageError("sampled verification needs --seed")
        source = Sampled(_spec(args), args.samples)
    report = run_suite(args.claim, source, args.seed, jobs=args.jobs)
    out.write(ser.dumps(report.to_json(timing=args.timing)) + "\n")
    if report.budget_failures:
        return EXIT_BUDGET
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def cmd_gen(args, out: TextIO) -> int:
    if args.seed is None:
        raise UsageError("gen needs --seed")
    spec = _spec(args)
    for i in range(args.count):
        seed = sample_seed(args.seed, i)
        g = generate(spec.with_seed(seed))
        if args.format == "graph6":
            out.write(emit_graph6(g) + "\n")
        else:
            out.write(ser.dumps({"index": i, "seed": seed, "graph6": emit_graph6(g), "n": g.n}) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bergelab", description="Berge graph structure toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("inputs", nargs="+", help="graph6 files (one graph per line), DIMACS files, or -")
        return p

    graph_cmd("berge", "odd hole / antihole test")
    p = graph_cmd("perfect", "omega = chi on every induced subgraph")
    p.add_argument("--perfect-max-n", type=_nonneg, default=12)
    graph_cmd("classify", "basic class certificate")
    graph_cmd("decompose", "decomposition verdict for a Berge graph")
    p = sub.add_parser("detect", help="induced structure detectors")
    p.add_argument("kind", choices=sorted(DETECT_KINDS))
    p.add_argument("inputs", nargs="+")
    p.add_argument("--complement", action="store_true", help="search the complement")
    p.add_argument("--parity", choices=("any", "even", "odd"), default="any", help="prism parity filter")
    p.add_argument("--odd-only", action="store_true", help="only odd wheels")
    p.add_argument("--nondegenerate-only", action="store_true", help="only nondegenerate K4 appearances")
    p.add_argument("--first", action="store_true", help="report at most one certificate")
    p = graph_cmd("skew", "skew partitions with loose/balanced flags")
    p.add_argument("--balanced-only", action="store_true")
    p.add_argument("--first", action="store_true")
    p = graph_cmd("fladder", "membership in the F1 .. F11 ladder")
    p.add_argument("--no-f8", action="store_true", help="skip the pseudowheel check")
    p.add_argument("--f8-max-n", type=_nonneg, default=F8_DEFAULT_MAX_N)

    for name in ("verify", "gen"):
        p = sub.add_parser(name, help="run a claim over a corpus" if name == "verify" else "sample graphs")
        p.add_argument("--family", choices=FAMILIES)
        p.add_argument("--params", nargs="*", default=[])
        p.add_argument("--seed", type=_nonneg)
        if name == "verify":
            p.add_argument("--claim", required=True)
            src = p.add_mutually_exclusive_group()
            src.add_argument("--exhaustive", type=_nonneg, metavar="N")
            src.add_argument("--file")
            p.add_argument("--samples", type=_nonneg)
            p.add_argument("--jobs", type=int, default=1)
            p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-stability)")
        else:
            p.add_argument("--count", type=_nonneg, default=1)
            p.add_argument("--format", choices=("json", "graph6"), default="json")
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        max_n = configured_max_n()
    except ValueError as exc:
        err.write(f"bergelab: {exc}\n")
        return EXIT_USAGE
    try:
        if args.command == "verify":
            if getattr(args, "jobs", 1) < 1:
                raise UsageError("--jobs must be at least 1")
            return cmd_verify(args, out)
        if args.command == "gen":
            if args.family is None:
                raise UsageError("gen needs --family")
            return cmd_gen(args, out)
        handler = PER_GRAPH[args.command]
        for _, _, g in iter_input(args.inputs, max_n):
            out.write(ser.dumps(handler(g, args)) + "\n")
        return EXIT_OK
    except UsageError as exc:
        err.write(f"bergelab: {exc}\n")
        return EXIT_USAGE
    except GraphTooLargeError as exc:
        err.write(f"bergelab: {exc} (raise BERGE_MAX_N to allow it)\n")
        return EXIT_BUDGET
    except GraphFormatError as exc:
        err.write(f"bergelab: malformed input: {exc}\n")
        return EXIT_INPUT
    except (BudgetExceeded, EnumerationTooLarge) as exc:
        err.write(f"bergelab: budget exceeded: {exc}\n")
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

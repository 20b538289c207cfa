"""Command-line front end: generate, analyze, solve, verify, counterexample.

Exit status is 0 on success, 1 when ``verify`` (or ``counterexample``)
rejects what it checked, 2 on usage or input errors and 3 if the library
detects an internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import cliques as cliques_mod
from . import oracle as oracle_mod
from .cliques import clique_graph, hajnal_check, maximum_cliques
from .counterexample import (
    build_counterexample,
    feasible_params,
    min_clique_size_threshold,
    verify_counterexample,
)
from .errors import CapExceeded, GraphFormatError, InternalContradiction, PreconditionError
from .formats import FORMATS, dumps, read_graph, sniff_format
from .generators import hole_product, named_graph, random_connected_graph, random_graph
from .graph import Graph, strong_product
from .oracle import oracle_hitting_maximal
from .solver import OddHoleProduct, hitting_set_problems, hitting_stable_set
from .structure import (
    HoleProductWitness,
    analyze_component,
    component_summary,
    meets_two_thirds_bound,
    recognize_hole_product,
)
from .transversal import DEFAULT_STEP_BUDGET

EXIT_OK, EXIT_REJECTED, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}") from None


def _emit(text: str, output: str | None) -> None:
    if output and output != "-":
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj: dict) -> str:
    # one top-level key per line, values kept compact
    lines = [f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in obj.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def _load(args) -> Graph:
    return read_graph(args.graph, args.format)


def _output_format(args) -> str:
    if args.format:
        return args.format
    if args.output and args.output != "-":
        return sniff_format(args.output)
    return "edgelist"


# -- subcommands -------------------------------------------------------------

def cmd_generate(args) -> int:
    rng = random.Random(args.seed)
    if args.product:
        g = strong_product(named_graph(args.product[0]), named_graph(args.product[1]))
    elif args.hole:
        g = hole_product(args.hole[0], args.hole[1])
    elif args.named:
        g = named_graph(args.named)
    elif args.random:
        n, p = int(args.random[0]), float(args.random[1])
        g = random_connected_graph(n, p, rng) if args.connected else random_graph(n, p, rng)
    else:
        raise UsageError("generate needs one of --product, --hole, --named, --random")
    _emit(dumps(g, _output_format(args)), args.output)
    return EXIT_OK


def analysis_report(g: Graph, structure: bool) -> dict:
    omega, family = maximum_cliques(g)
    delta = g.max_degree()
    cg = clique_graph(family)
    hajnal = hajnal_check(family)
    report = {
        "n": g.n,
        "omega": omega,
        "delta": delta,
        "maximum_cliques": [list(c) for c in family.cliques],
        "clique_graph_components": [list(c) for c in cg.components],
        "hajnal": {"lhs": hajnal.lhs, "rhs": hajnal.rhs},
    }
    if structure:
        bound = meets_two_thirds_bound(omega, delta)
        info: dict = {"meets_two_thirds_bound": bound, "connected": g.is_connected()}
        if bound and g.is_connected():
            info["components"] = [
                component_summary(analyze_component(g, cg, c), cg) for c in range(len(cg.components))
            ]
        else:
            info["components"] = None
            info["reason"] = "requires a connected graph with omega >= 2/3 (delta+1)"
        witness = recognize_hole_product(g)
        info["hole_product"] = _witness_json(witness) if witness else None
        report["structure"] = info
    return report


def _witness_json(w: HoleProductWitness) -> dict:
    return {"k": w.hole_length, "m": w.clique_size, "odd": w.is_odd, "copy_map": list(w.copy_map)}


def cmd_analyze(args) -> int:
    g = _load(args)
    if g.n == 0:
        raise UsageError("graph has no vertices")
    _emit(_dump_json(analysis_report(g, args.structure)), args.output)
    return EXIT_OK


def certificate_for(g: Graph, step_budget: int) -> dict:
    if g.n == 0:
        return {"result": "unsupported", "reason": "graph has no vertices"}
    omega, _ = maximum_cliques(g)
    if not meets_two_thirds_bound(omega, g.max_degree()):
        return {"result": "unsupported", "reason": "omega below two-thirds bound"}
    cert = hitting_stable_set(g, step_budget=step_budget)
    if isinstance(cert, OddHoleProduct):
        w = cert.witness
        return {"result": "odd_hole_product", "k": w.hole_length, "m": w.clique_size, "copy_map": list(w.copy_map)}
    return {"result": "stable_set", "vertices": list(cert.vertices)}


def cmd_solve(args) -> int:
    g = _load(args)
    _emit(_dump_json(certificate_for(g, args.step_budget)), args.output)
    return EXIT_OK


def certificate_problems(g: Graph, cert: dict) -> list[str]:
    """Reasons ``cert`` is not a correct answer for ``g``; empty when it checks out."""
    kind = cert.get("result")
    if kind == "stable_set":
        verts = cert.get("vertices")
        if not isinstance(verts, list) or not all(isinstance(v, int) for v in verts):
            raise UsageError("certificate field 'vertices' must be a list of integers")
        if len(set(verts)) != len(verts):
            return ["repeated vertex in certificate"]
        if g.n == 0:
            return [] if not verts else ["vertex out of range"]
        return hitting_set_problems(g, verts)
    if kind == "odd_hole_product":
        try:
            copy_map = tuple(cert["copy_map"])
            witness = HoleProductWitness(int(cert["k"]), int(cert["m"]), copy_map)
        except (KeyError, TypeError, ValueError):
            raise UsageError("odd_hole_product certificate needs integer k, m and a copy_map list") from None
        errs = witness.problems(g)
        if not witness.is_odd:
            errs.append(f"hole length {witness.hole_length} is even")
        if not errs:
            # the certified component must carry maximum cliques of g
            omega, _ = maximum_cliques(g)
            if 2 * witness.clique_size != omega:
                errs.append(f"component clique number {2 * witness.clique_size} differs from omega={omega}")
        return errs
    if kind == "unsupported":
        if g.n == 0:
            return []
        omega, _ = maximum_cliques(g)
        if meets_two_thirds_bound(omega, g.max_degree()):
            return ["graph meets the two-thirds bound, so it is supported"]
        return []
    raise UsageError(f"unknown certificate result {kind!r}")


def cmd_verify(args) -> int:
    g = _load(args)
    try:
        cert = json.loads(Path(args.certificate).read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"certificate is not valid JSON: {exc}") from None
    if not isinstance(cert, dict):
        raise UsageError("certificate must be a JSON object")
    errs = certificate_problems(g, cert)
    _emit(_dump_json({"valid": not errs, "problems": errs}), args.output)
    return EXIT_OK if not errs else EXIT_REJECTED


def cmd_counterexample(args) -> int:
    try:
        eps = Fraction(args.epsilon)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse epsilon {args.epsilon!r}; use p/q") from None
    if (args.k is None) != (args.t is None):
        raise UsageError("--k and --t must be given together")
    if args.k is None:
        k, t = feasible_params(eps)
    else:
        k, t = args.k, args.t
    inst = build_counterexample(k, t, eps)
    report = verify_counterexample(inst).to_json()
    report["min_clique_size_threshold"] = min_clique_size_threshold(inst)
    if args.oracle:
        found = oracle_hitting_maximal(inst.graph, min_clique_size_threshold(inst))
        report["oracle_hitting_set_exists"] = found is not None
    if args.graph_output:
        fmt = args.format or sniff_format(args.graph_output)
        Path(args.graph_output).write_text(dumps(inst.graph, fmt))
    _emit(_dump_json(report), args.output)
    return EXIT_OK if not report["refuted"] else EXIT_REJECTED


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablehit",
        description="Stable sets hitting maximum cliques, odd-hole products and large-maximal-clique counterexamples.",
    )
    parser.add_argument("--max-n", type=int, default=_env_int("STABLEHIT_MAX_N", oracle_mod.DEFAULT_MAX_N),
                        help="vertex cap for brute-force oracles (env STABLEHIT_MAX_N)")
    parser.add_argument("--clique-cap", type=int, default=_env_int("STABLEHIT_CLIQUE_CAP", cliques_mod.DEFAULT_CLIQUE_CAP),
                        help="maximum number of cliques enumerated (env STABLEHIT_CLIQUE_CAP)")
    parser.add_argument("--step-budget", type=int, default=_env_int("STABLEHIT_STEP_BUDGET", DEFAULT_STEP_BUDGET),
                        help="local-search steps before the transversal solver backtracks (env STABLEHIT_STEP_BUDGET)")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("graph", help="graph file (.txt/.edges edge list, .g6 graph6, .json)")
        p.add_argument("--format", choices=FORMATS, help="override format detection")
        p.add_argument("-o", "--output", help="write the report here instead of stdout")

    p = sub.add_parser("generate", help="write a graph file")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--product", nargs=2, metavar=("G", "H"), help="strong product of two named graphs, e.g. C5 K3")
    src.add_argument("--hole", nargs=2, type=int, metavar=("K", "M"), help="C_K strong product K_M")
    src.add_argument("--named", metavar="NAME", help="C<k>, P<l>, K<m> or petersen")
    src.add_argument("--random", nargs=2, metavar=("N", "P"), help="G(N, P) random graph")
    p.add_argument("--connected", action="store_true", help="with --random, overlay a random spanning tree")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="maximum cliques, clique graph and Hajnal bound as JSON")
    graph_input(p)
    p.add_argument("--structure", action="store_true", help="classify clique-graph components")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", help="stable set hitting every maximum clique, or an odd-hole witness")
    graph_input(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="re-check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", help="build and verify a large-maximal-clique counterexample")
    p.add_argument("--epsilon", required=True, help="rational in (0, 1), e.g. 3/5")
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--oracle", action="store_true", help="also run the generic brute-force oracle")
    p.add_argument("--graph-output", help="write the constructed graph here")
    p.add_argument("--format", choices=FORMATS, help="format for --graph-output")
    p.add_argument("-o", "--output", help="write the JSON report here")
    p.set_defaults(func=cmd_counterexample)
    return parser


def run(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser()
    except UsageError as exc:
        print(f"stablehit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cliques_mod.clique_cap = args.clique_cap
    oracle_mod.max_n_cap = args.max_n
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, PreconditionError, CapExceeded, OSError) as exc:
        print(f"stablehit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalContradiction as exc:
        print(f"stablehit: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    finally:
        cliques_mod.clique_cap = cliques_mod.DEFAULT_CLIQUE_CAP
        oracle_mod.max_n_cap = oracle_mod.DEFAULT_MAX_N


def main() -> None:
    sys.exit(run())

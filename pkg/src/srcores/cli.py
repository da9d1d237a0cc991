"""Command-line interface: classify, homology, euler, invariants, collapse,
report.

Inputs are ``.ideal`` or ``.graph`` files; graph inputs are interpreted
through their edge ideal (default) or star ideal via ``--ideal``.  JSON
output is byte-deterministic for a fixed input and seed (timings go to the
text output only).  Exit codes: 0 ok, 1 consistency failure, 2 usage or
parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .complexes import FACE_BUDGET, realize, verify_collapse_sequence
from .covers import euler_via_covers
from .errors import BudgetExceededError, ParseError
from .graphs import Graph, invariants, parse_graph, structure
from .graphs import edge_ideal as graph_edge_ideal
from .graphs import star_ideal as graph_star_ideal
from .homology import reduced_homology
from .ideals import MonomialIdeal, parse_ideal
from .reports import bounds_check, forest_report, unicyclic_report
from .resolution import classify, witness_collapse_to_core

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load(path: str, ideal_kind: str) -> tuple[MonomialIdeal | None, Graph | None]:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    if p.suffix == ".ideal":
        return parse_ideal(text), None
    if p.suffix == ".graph":
        graph = parse_graph(text)
        ideal = graph_star_ideal(graph) if ideal_kind == "star" else graph_edge_ideal(graph)
        return ideal, graph
    raise ParseError(f"unsupported input extension {p.suffix!r} (want .ideal or .graph)")


def _classification_json(cls) -> dict:
    out = {
        "verdict": cls.verdict,
        "depth": cls.depth,
        "simple": cls.is_simple,
        "resolution": cls.resolution.to_json(),
    }
    if cls.all_cores is not None:
        out["all_cores"] = [
            [" ".join(c.universe.names_of(g)) or "1" for g in c.sorted_gens()]
            for c in cls.all_cores
        ]
        out["resolution_count"] = len(cls.all_resolutions)
        out["coco_consistent"] = cls.coco_consistent
    return out


def _emit(args, payload: dict, text_lines: list[str], elapsed: float) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)
        print(f"elapsed: {elapsed:.3f}s")


def _base_payload(args, command: str) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "input": args.path,
        "seed": args.seed,
    }


def cmd_classify(args) -> int:
    ideal, _ = _load(args.path, args.ideal)
    cls = classify(ideal, exhaustive=args.all_resolutions, budget=args.budget)
    payload = _base_payload(args, "classify")
    payload["classification"] = _classification_json(cls)
    lines = [f"verdict: {cls.verdict}"]
    if cls.spherical:
        lines.append(f"depth: {cls.depth}")
        lines.append(f"simple: {cls.is_simple}")
        lines.append(f"core: {cls.core}")
    for step in cls.resolution.steps:
        lines.append(f"step: {step}")
    if cls.all_cores is not None:
        lines.append(f"maximal resolutions: {len(cls.all_resolutions)}")
        lines.append(f"distinct cores: {len(cls.all_cores)}")
        lines.append(f"core-uniqueness consistent: {cls.coco_consistent}")
    ok = cls.coco_consistent is not False
    return payload, lines, ok


def cmd_homology(args) -> int:
    ideal, _ = _load(args.path, args.ideal)
    cplx = realize(ideal, max_faces=args.budget)
    profile = reduced_homology(cplx)
    euler = cplx.reduced_euler()
    payload = _base_payload(args, "homology")
    payload["faces"] = cplx.n_faces
    payload["homology"] = profile.to_json_entries()
    payload["euler"] = euler
    lines = [f"faces: {cplx.n_faces}", f"profile: {profile!r}", f"reduced euler: {euler}"]
    ok = profile.euler == euler
    payload["euler_poincare_consistent"] = ok
    return payload, lines, ok


def cmd_euler(args) -> int:
    ideal, _ = _load(args.path, args.ideal)
    by_covers = euler_via_covers(ideal)
    by_enum = realize(ideal, max_faces=args.budget).reduced_euler()
    agree = by_covers == by_enum
    payload = _base_payload(args, "euler")
    payload["euler"] = {"covers": by_covers, "enumeration": by_enum, "agree": agree}
    lines = [
        f"euler via covers: {by_covers}",
        f"euler via enumeration: {by_enum}",
        f"agree: {agree}",
    ]
    return payload, lines, agree


def cmd_invariants(args) -> int:
    _, graph = _load(args.path, args.ideal)
    if graph is None:
        raise ParseError("invariants requires a .graph input")
    inv = invariants(graph)
    struct = structure(graph)
    payload = _base_payload(args, "invariants")
    payload["invariants"] = inv.to_json()
    payload["structure"] = struct.to_json()
    lines = [
        f"gamma: {inv.gamma}",
        f"i: {inv.i}",
        f"alpha0: {inv.alpha0}",
        f"alpha1: {inv.alpha1}",
        f"beta1: {inv.beta1}",
        f"h1: {struct.h1}",
    ]
    return payload, lines, True


def cmd_collapse(args) -> int:
    ideal, _ = _load(args.path, args.ideal)
    cls = classify(ideal)
    plan = witness_collapse_to_core(cls.ideal, cls.resolution, max_faces=args.budget)
    check = verify_collapse_sequence(plan.start, plan.steps, plan.end)
    payload = _base_payload(args, "collapse")
    payload["classification"] = _classification_json(cls)
    payload["collapse"] = {
        "steps": len(plan.steps),
        "start_faces": plan.start.n_faces,
        "end_faces": plan.end.n_faces,
        "valid": bool(check),
    }
    if args.show_plan:
        payload["collapse"]["plan"] = [
            {"tau": str(s.tau), "sigma": str(s.sigma)} for s in plan.steps
        ]
    lines = [
        f"verdict: {cls.verdict}",
        f"collapse steps: {len(plan.steps)}",
        f"{plan.start.n_faces} faces -> {plan.end.n_faces} faces",
        f"plan valid: {bool(check)}",
    ]
    if not check:
        lines.append(f"failure at step {check.failed_at}: {check.reason}")
    return payload, lines, bool(check)


def cmd_report(args) -> int:
    ideal, graph = _load(args.path, args.ideal)
    payload = _base_payload(args, "report")
    lines: list[str] = []
    ok = True

    cls = classify(ideal)
    payload["classification"] = _classification_json(cls)
    lines.append(f"verdict: {cls.verdict}" + (f" (depth {cls.depth})" if cls.spherical else ""))

    cplx = realize(ideal, max_faces=args.budget)
    profile = reduced_homology(cplx)
    payload["faces"] = cplx.n_faces
    payload["homology"] = profile.to_json_entries()
    lines.append(f"faces: {cplx.n_faces}")
    lines.append(f"homology: {profile!r}")

    by_covers = euler_via_covers(ideal)
    by_enum = cplx.reduced_euler()
    payload["euler"] = {
        "covers": by_covers,
        "enumeration": by_enum,
        "agree": by_covers == by_enum,
    }
    ok &= by_covers == by_enum
    lines.append(f"euler: covers={by_covers} enumeration={by_enum}")

    plan = witness_collapse_to_core(cls.ideal, cls.resolution, max_faces=args.budget)
    check = verify_collapse_sequence(plan.start, plan.steps, plan.end)
    payload["collapse"] = {"steps": len(plan.steps), "valid": bool(check)}
    ok &= bool(check)
    lines.append(f"collapse witness: {len(plan.steps)} steps, valid={bool(check)}")

    if cls.spherical:
        expected = cls.depth - 1
        sphere_ok = not cls.is_simple or profile.sphere_degree() == expected
        payload["sphere_consistent"] = sphere_ok
        ok &= sphere_ok
    else:
        payload["contractible_consistent"] = profile.is_trivial
        ok &= profile.is_trivial

    if graph is not None:
        inv = invariants(graph)
        struct = structure(graph)
        payload["invariants"] = inv.to_json()
        payload["structure"] = struct.to_json()
        lines.append(f"invariants: {inv.to_json()}")
        if struct.is_forest:
            rep = forest_report(graph, max_faces=args.budget)
            payload["forest_checks"] = rep.checks
            ok &= rep.ok
            lines.append(f"forest checks: {'ok' if rep.ok else rep.checks}")
        elif struct.h1 == 1:
            rep = unicyclic_report(graph, max_faces=args.budget)
            payload["unicyclic_checks"] = rep.checks
            payload["shape_class"] = rep.shape_class
            ok &= rep.ok
            lines.append(f"unicyclic class: {rep.shape_class}")
        bounds = bounds_check(graph, max_faces=args.budget)
        payload["bounds_checks"] = bounds.checks
        ok &= bounds.ok
        lines.append(f"homology bounds: {'ok' if bounds.ok else bounds.checks}")

    payload["consistent"] = bool(ok)
    lines.append(f"consistent: {bool(ok)}")
    return payload, lines, ok


COMMANDS = {
    "classify": cmd_classify,
    "homology": cmd_homology,
    "euler": cmd_euler,
    "invariants": cmd_invariants,
    "collapse": cmd_collapse,
    "report": cmd_report,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srcores",
        description="Cores, collapses and exact homology of monomial-ideal complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("path", help="input .ideal or .graph file")
    common.add_argument("--budget", type=int, default=FACE_BUDGET, help="face budget")
    common.add_argument("--seed", type=int, default=0, help="seed recorded in reports")
    common.add_argument("--json", action="store_true", help="deterministic JSON output")
    common.add_argument(
        "--ideal",
        choices=("edge", "star"),
        default="edge",
        help="ideal to associate with a .graph input",
    )
    p = sub.add_parser("classify", parents=[common], help="spherical/conical verdict and core")
    p.add_argument(
        "--all-resolutions",
        action="store_true",
        help="enumerate every maximal resolution and check core uniqueness",
    )
    sub.add_parser("homology", parents=[common], help="exact reduced integer homology")
    sub.add_parser("euler", parents=[common], help="reduced Euler characteristic, both methods")
    sub.add_parser("invariants", parents=[common], help="exact graph invariants")
    p = sub.add_parser("collapse", parents=[common], help="emit and verify a collapse witness")
    p.add_argument("--show-plan", action="store_true", help="include every step in the output")
    p = sub.add_parser("report", parents=[common], help="full consistency report")
    p.add_argument("--show-plan", action="store_true", help=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if not hasattr(args, "show_plan"):
        args.show_plan = False
    start = time.perf_counter()
    try:
        payload, lines, ok = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(args, payload, lines, time.perf_counter() - start)
    return EXIT_OK if ok else EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: generation, solving, verification, reproduction.

Exit codes: 0 success or positive verification, 1 negative verification
(the robber legitimately wins or a reproduction cell mismatches), 2 usage
or validation errors, 3 size-cap violations.  Results are emitted as JSON
with the deterministic payload under "report" and timing segregated under
"timing"; identical inputs and caps give byte-identical report sections.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .errors import (
    GraphParseError,
    GraphValidationError,
    GridVerificationError,
    LzlError,
    PolicyError,
    ScheduleError,
    SizeCapError,
    StrategyPreconditionError,
)
from .graphs import (
    Graph,
    generate,
    max_degree,
    parse_graph,
    serialize_graph,
    subdivide,
)
from .iso import (
    assemble_bounds,
    h_index,
    iso_peak,
    iso_profile,
    profile_to_csv,
)
from .prox import ProbeSchedule, prox_number, run_schedule, trace_to_json
from .strategies import (
    STRATEGY_REGISTRY,
    brute_pathwidth,
    level_decomposition,
    min_dominating_set,
)
from .zeta import build_policy, simulate_policy, zeta_number
from .gridsweep import grid_strategy

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _env_cap(default: int) -> int:
    raw = os.environ.get("LZL_MAX_N")
    return int(raw) if raw else default


def _workers() -> int:
    raw = os.environ.get("LZL_THREADS")
    return max(1, int(raw)) if raw else 1


def load_graph(spec: str) -> tuple[Graph, str]:
    """A file path, or a family spec like grid:4, kary:3,3, spider:3,3,3.

    An optional trailing :sub<i> segment subdivides every edge i times.
    """
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read()), os.path.basename(spec)
    parts = spec.split(":")
    family = parts[0]
    params = [int(x) for x in parts[1].split(",")] if len(parts) > 1 and parts[1] else []
    builders = {
        "path": lambda: generate("path", n=params[0]),
        "cycle": lambda: generate("cycle", n=params[0]),
        "complete": lambda: generate("complete", n=params[0]),
        "grid": lambda: generate("grid", n=params[0]),
        "kary": lambda: generate("kary", k=params[0], d=params[1]),
        "spider": lambda: generate("spider", arms=params),
    }
    if family not in builders:
        raise GraphValidationError(
            f"'{spec}' is neither a file nor a family spec"
        )
    try:
        g = builders[family]()
    except IndexError:
        raise GraphValidationError(
            f"family spec '{spec}' is missing parameters"
        ) from None
    if len(parts) > 2:
        seg = parts[2]
        if not seg.startswith("sub"):
            raise GraphValidationError(f"unknown graph spec segment '{seg}'")
        g = subdivide(g, int(seg[3:]))
    return g, spec


def _report(command: str, graph: Graph | None, parameters: dict, results: dict,
            caps: dict | None = None, notes: list | None = None,
            graph_id: str | None = None) -> dict:
    body = {
        "command": command,
        "engine_version": __version__,
        "parameters": parameters,
        "results": results,
        "caps": caps or {},
        "deviation_notes": notes or [],
    }
    if graph is not None:
        body["graph"] = {
            "id": graph_id or graph.content_hash(),
            "hash": graph.content_hash(),
            "n": graph.n,
            "m": graph.edge_count(),
            "max_degree": max_degree(graph) if graph.n > 1 else 0,
        }
    return body


def _cache_key(body: dict) -> str:
    core = {k: body[k] for k in body if k not in ("results",)}
    return hashlib.sha256(
        json.dumps(core, sort_keys=True).encode()
    ).hexdigest()


def _emit(body: dict, started: float, out_path: str | None = None) -> None:
    cache_dir = os.environ.get("LZL_CACHE")
    cache_info = {"enabled": bool(cache_dir), "hit": False}
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        key = _cache_key(body)
        path = os.path.join(cache_dir, key + ".json")
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                body = json.load(fh)
            cache_info["hit"] = True
        else:
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(body, fh, sort_keys=True)
        cache_info["key"] = key
    payload = json.dumps(
        {"report": body, "timing": {"wall_time_s": round(time.time() - started, 4)},
         "cache": cache_info},
        sort_keys=True,
        indent=2,
    )
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    print(payload)


# -- subcommands -------------------------------------------------------------


def cmd_gen(args) -> int:
    started = time.time()
    if args.family == "kary":
        if args.k is None or args.d is None:
            raise GraphValidationError("kary needs --k and --d")
        g = generate("kary", k=args.k, d=args.d)
    elif args.family == "spider":
        if not args.arms:
            raise GraphValidationError("spider needs --arms a,b,c,...")
        arms = [int(x) for x in args.arms.split(",")]
        g = generate("spider", arms=arms)
    elif args.family in ("path", "cycle", "complete", "grid"):
        if args.n is None:
            raise GraphValidationError(f"{args.family} needs --n")
        g = generate(args.family, n=args.n)
    else:
        raise GraphValidationError(f"unknown family '{args.family}'")
    if args.subdivide:
        g = subdivide(g, args.subdivide)
    text = serialize_graph(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    body = _report(
        "gen",
        g,
        {
            "family": args.family,
            "n": args.n,
            "k": args.k,
            "d": args.d,
            "arms": args.arms,
            "subdivide": args.subdivide,
        },
        {"n": g.n, "m": g.edge_count(), "out": args.out},
    )
    if args.out:
        _emit(body, started)
    return EXIT_OK


def cmd_iso(args) -> int:
    started = time.time()
    g, gid = load_graph(args.graph)
    cap = _env_cap(25)
    profile = iso_profile(g, args.mode, budget=args.budget, cap=cap,
                          workers=_workers())
    results: dict = {
        "mode": args.mode,
        "values": list(profile.values),
        "exact": all(profile.exact),
    }
    if args.peak:
        results["peak"] = iso_peak(profile)
    if args.h_index:
        results["h_index"] = h_index(profile.values)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(profile_to_csv(profile))
        results["csv"] = args.csv
    body = _report("iso", g, {"graph": gid, "mode": args.mode,
                              "budget": args.budget}, results,
                   caps={"iso": cap}, graph_id=gid)
    _emit(body, started)
    return EXIT_OK


def _grid_side_of(g: Graph) -> int | None:
    import math

    side = math.isqrt(g.n)
    if side * side != g.n or side < 2:
        return None
    for r in range(1, side + 1):
        for c in range(1, side + 1):
            v = (r - 1) * side + (c - 1)
            if g.label(v, "row") != r or g.label(v, "col") != c:
                return None
    return side


def cmd_bounds(args) -> int:
    started = time.time()
    g, gid = load_graph(args.graph)
    iso_cap = _env_cap(25)
    quantities: dict = {}
    if not args.no_iso and g.n <= iso_cap:
        pv = iso_profile(g, "vertex", cap=iso_cap, workers=_workers())
        pe = iso_profile(g, "edge", cap=iso_cap, workers=_workers())
        quantities["h_vertex"] = h_index(pv.values)
        quantities["h_edge"] = h_index(pe.values)
        quantities["phi_vertex_peak"] = iso_peak(pv)
        quantities["phi_edge_peak"] = iso_peak(pe)
    if args.pathwidth and g.n <= 10:
        quantities["pathwidth"] = brute_pathwidth(g).width
    if args.domination and g.n <= 20:
        quantities["domination_number"] = len(min_dominating_set(g))
    if args.solve:
        if g.n <= _env_cap(16):
            quantities["prox1"] = prox_number(g, cap=_env_cap(16))
        if g.n <= _env_cap(12):
            quantities["zeta1"] = zeta_number(g, cap=_env_cap(12))
    side = _grid_side_of(g)
    if side:
        quantities["grid_side"] = side
    report = assemble_bounds(g, graph_id=gid, **quantities)
    body = _report("bounds", g, {"graph": gid}, report.as_dict(),
                   caps={"iso": iso_cap}, graph_id=gid)
    _emit(body, started)
    return EXIT_OK


def cmd_prox(args) -> int:
    started = time.time()
    g, gid = load_graph(args.graph)
    if args.action == "solve":
        cap = _env_cap(16)
        value = prox_number(g, cap=cap)
        body = _report("prox-solve", g, {"graph": gid},
                       {"prox1": value}, caps={"prox": cap}, graph_id=gid)
        _emit(body, started)
        return EXIT_OK
    if not args.schedule:
        raise GraphValidationError("prox verify needs --schedule")
    with open(args.schedule, "r", encoding="utf-8") as fh:
        schedule = ProbeSchedule.from_json(fh.read())
    trace = run_schedule(g, schedule, keep_states=False)
    body = _report(
        "prox-verify",
        g,
        {"graph": gid, "schedule": args.schedule, "cops": schedule.cops},
        json.loads(trace_to_json(trace)),
    )
    _emit(body, started)
    return EXIT_OK if trace.cleared else EXIT_NEGATIVE


def cmd_zeta(args) -> int:
    started = time.time()
    g, gid = load_graph(args.graph)
    if args.action == "solve":
        cap = _env_cap(12)
        value = zeta_number(g, cap=cap)
        body = _report("zeta-solve", g, {"graph": gid},
                       {"zeta1": value}, caps={"zeta": cap}, graph_id=gid)
        _emit(body, started)
        return EXIT_OK
    if not args.policy:
        raise GraphValidationError("zeta simulate needs --policy")
    policy = build_policy(args.policy, g)
    sim = simulate_policy(g, policy, round_cap=args.round_cap)
    body = _report(
        "zeta-simulate",
        g,
        {"graph": gid, "policy": args.policy, "round_cap": args.round_cap},
        json.loads(sim.to_json()),
    )
    _emit(body, started)
    return EXIT_OK if sim.captured else EXIT_NEGATIVE


def cmd_strat(args) -> int:
    started = time.time()
    if args.name == "grid-sweep":
        if args.n is None:
            raise GraphValidationError("grid-sweep needs --n")
        schedule, trace = grid_strategy(args.n)
        if args.emit:
            with open(args.emit, "w", encoding="utf-8") as fh:
                fh.write(schedule.to_json())
        body = _report(
            "strat",
            None,
            {"name": "grid-sweep", "n": args.n},
            {
                "budget": schedule.cops,
                "cleared": trace.cleared,
                "clear_round": trace.clear_round,
                "rounds": len(schedule.rounds),
            },
            notes=schedule.metadata.get("notes", []),
        )
        _emit(body, started)
        return EXIT_OK if trace.cleared else EXIT_NEGATIVE

    if not args.graph:
        raise GraphValidationError(f"strategy '{args.name}' needs --graph")
    g, gid = load_graph(args.graph)
    if args.name not in STRATEGY_REGISTRY:
        raise GraphValidationError(f"unknown strategy '{args.name}'")
    kind, artifact = STRATEGY_REGISTRY[args.name](g, root=args.root)
    if kind == "schedule":
        trace = run_schedule(g, artifact, keep_states=False)
        verdict = trace.cleared
        results = {
            "kind": kind,
            "budget": artifact.cops,
            "cleared": trace.cleared,
            "clear_round": trace.clear_round,
            "rounds": len(artifact.rounds),
        }
        if args.emit:
            with open(args.emit, "w", encoding="utf-8") as fh:
                fh.write(artifact.to_json())
    else:
        sim = simulate_policy(g, artifact, round_cap=args.round_cap)
        verdict = sim.captured
        results = {
            "kind": kind,
            "budget": artifact.budget,
            "outcome": sim.outcome,
            "worst_capture_round": sim.worst_capture_round,
        }
        if args.emit:
            with open(args.emit, "w", encoding="utf-8") as fh:
                fh.write(json.dumps({"policy": artifact.name,
                                     "budget": artifact.budget}))
    body = _report("strat", g, {"name": args.name, "graph": gid}, results)
    _emit(body, started)
    return EXIT_OK if verdict else EXIT_NEGATIVE


TABLE1_EXPECTED = {
    "T0": (6, 2, 4),
    "T10": (9, 10, 10),
    "T100": (12, 77, 10),
}


def table1_rows() -> dict[str, tuple[int, int, int]]:
    """Order, depth, and level upper-bound formulas for the three trees."""
    rows = {}
    base = generate("kary", k=3, d=3)
    for name, i in (("T0", 0), ("T10", 10), ("T100", 100)):
        g = subdivide(base, i)
        n = g.n
        depth = max(g.label(v, "depth") for v in range(n))
        ld = level_decomposition(g, 0)
        rows[name] = (
            (n - 1).bit_length(),  # ceil(log2 n)
            depth // 4 + 2,
            -(-ld.max_nonleaf // 3) + 1,
        )
    return rows


def cmd_table(args) -> int:
    started = time.time()
    if args.name != "tab1":
        raise GraphValidationError(f"unknown table '{args.name}'")
    rows = table1_rows()
    mismatches = []
    for name, expected in TABLE1_EXPECTED.items():
        got = rows[name]
        status = "ok" if got == expected else "MISMATCH"
        print(f"{name}: order-bound={got[0]} depth-bound={got[1]} "
              f"level-bound={got[2]}  [{status}]")
        if got != expected:
            mismatches.append({"row": name, "expected": expected, "got": got})
    body = _report(
        "table",
        None,
        {"name": args.name},
        {"rows": {k: list(v) for k, v in rows.items()},
         "mismatches": mismatches},
    )
    _emit(body, started)
    return EXIT_OK if not mismatches else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lzl",
        description="exact engines and verified strategies for the "
        "one-visibility localization and one-proximity games",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a graph file")
    g.add_argument("--family", required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--arms")
    g.add_argument("--subdivide", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(fn=cmd_gen)

    i = sub.add_parser("iso", help="isoperimetric profile, peak, h-index")
    i.add_argument("--graph", required=True)
    i.add_argument("--mode", choices=("vertex", "edge"), default="vertex")
    i.add_argument("--peak", action="store_true")
    i.add_argument("--h-index", dest="h_index", action="store_true")
    i.add_argument("--budget", type=int)
    i.add_argument("--csv")
    i.set_defaults(fn=cmd_iso)

    b = sub.add_parser("bounds", help="assemble every applicable bound")
    b.add_argument("--graph", required=True)
    b.add_argument("--no-iso", action="store_true")
    b.add_argument("--pathwidth", action="store_true")
    b.add_argument("--domination", action="store_true")
    b.add_argument("--solve", action="store_true")
    b.set_defaults(fn=cmd_bounds)

    pr = sub.add_parser("prox", help="one-proximity solving and verification")
    pr.add_argument("action", choices=("solve", "verify"))
    pr.add_argument("--graph", required=True)
    pr.add_argument("--schedule")
    pr.set_defaults(fn=cmd_prox)

    z = sub.add_parser("zeta", help="localization solving and simulation")
    z.add_argument("action", choices=("solve", "simulate"))
    z.add_argument("--graph", required=True)
    z.add_argument("--policy")
    z.add_argument("--round-cap", type=int, default=400)
    z.set_defaults(fn=cmd_zeta)

    s = sub.add_parser("strat", help="generate and verify a named strategy")
    s.add_argument("name")
    s.add_argument("--graph")
    s.add_argument("--n", type=int)
    s.add_argument("--root", type=int, default=0)
    s.add_argument("--round-cap", type=int, default=400)
    s.add_argument("--emit")
    s.set_defaults(fn=cmd_strat)

    t = sub.add_parser("table", help="desk-scale table reproduction")
    t.add_argument("name")
    t.set_defaults(fn=cmd_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (
        GraphParseError,
        GraphValidationError,
        ScheduleError,
        PolicyError,
        StrategyPreconditionError,
        GridVerificationError,
        LzlError,
        FileNotFoundError,
        KeyError,
        ValueError,
        IndexError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

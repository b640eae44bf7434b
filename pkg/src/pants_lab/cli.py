"""Command-line front end.

Every command prints a JSON envelope {"tool_version", "config", "results"}.
Exit status: 0 success, 2 usage or input error, 1 when an audit exceeds
its bound.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from . import constants, graphs
from .surface.ball import (BallOverflow, CacheError, CurveBall, enumerate_curve_ball, read_ball,
                           universe_curves, write_ball)
from .surface.curves import Curve, CurveError, SurfaceError, SurfaceSpec, standard_curve
from .surface.intersection import intersection_number
from .surface.pants import PantsDecomposition, PantsError

EXIT_OK, EXIT_AUDIT, EXIT_USAGE = 0, 1, 2
CACHE_ENV = "PANTS_LAB_CACHE"


class UsageError(Exception):
    pass


def tool_version() -> str:
    try:
        from importlib.metadata import version
        return version("artifact")
    except Exception:
        return "0.1.0"


# ---------------------------------------------------------------- configuration

# option name -> (converter, default); flags override the config file, which overrides these
OPTIONS: Dict[str, tuple] = {
    "case": (str, "complexity2"),
    "M": (int, constants.DEFAULT_M),
    "format": (str, "json"),
    "surface": (str, "s05"),
    "seed": (int, 0),
    "random": (int, 0),
    "max_vertices": (int, 12),
    "tree_vertices": (int, 10),
    "max_cycle": (int, 16),
    "h": (int, 1),
    "coord_bound": (int, 50),
    "word_bound": (int, 4),
    "count": (int, 10),
    "max_main": (int, 3),
    "workers": (int, 1),
    "cache": (str, None),
}


def read_config(path: str) -> Dict[str, str]:
    out = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    for no, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{no}: expected key=value")
        k, v = (x.strip() for x in line.split("=", 1))
        out[k.replace("-", "_")] = v
    return out


def resolve(args: argparse.Namespace) -> Dict[str, object]:
    """Fill unset options from the config file and then from defaults."""
    file_cfg = read_config(args.config) if args.config else {}
    cfg: Dict[str, object] = {}
    for name, (conv, default) in OPTIONS.items():
        if not hasattr(args, name):
            continue
        val = getattr(args, name)
        if val is None and name in file_cfg:
            try:
                val = conv(file_cfg[name])
            except ValueError as exc:
                raise UsageError(f"bad config value for {name}: {file_cfg[name]!r}") from exc
        if val is None:
            val = default
        cfg[name] = val
    for name in ("count", "coord_bound", "workers", "M"):
        if name in cfg and cfg[name] < 1:
            raise UsageError(f"{name} must be positive")
    for name in ("word_bound", "random", "h", "max_vertices", "tree_vertices", "max_cycle"):
        if name in cfg and cfg[name] < 0:
            raise UsageError(f"{name} must be nonnegative")
    if "surface" in cfg and cfg["surface"] not in ("s05", "s06"):
        raise UsageError("surface must be s05 or s06")
    return cfg


# ---------------------------------------------------------------- parsing helpers

def parse_curve(text: str, surface: SurfaceSpec) -> Curve:
    """``std:1,2`` for the round curve about punctures 1 and 2, or a raw coordinate list."""
    text = text.strip()
    try:
        if text.startswith("std:"):
            return standard_curve(surface, [int(x) for x in text[4:].split(",") if x])
        coords = [int(x) for x in text.split(",") if x.strip()]
    except (ValueError, CurveError) as exc:
        raise UsageError(f"bad curve {text!r}: {exc}") from exc
    if len(coords) != surface.n_coords:
        raise UsageError(f"curve {text!r} needs {surface.n_coords} coordinates")
    try:
        return Curve.from_coords(surface, coords)
    except CurveError as exc:
        raise UsageError(f"bad curve {text!r}: {exc}") from exc


def parse_pants(text: str, surface: SurfaceSpec) -> PantsDecomposition:
    try:
        return PantsDecomposition(surface, tuple(parse_curve(t, surface) for t in text.split(";")))
    except PantsError as exc:
        raise UsageError(f"bad pants decomposition {text!r}: {exc}") from exc


def load_graph(args) -> graphs.FiniteGraph:
    chosen = [x for x in ("graph", "cycle", "path", "complete", "petersen") if getattr(args, x, None)]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --graph, --cycle, --path, --complete, --petersen")
    try:
        if args.graph:
            return graphs.FiniteGraph.from_json(Path(args.graph).read_text())
        if args.cycle:
            return graphs.cycle_graph(args.cycle)
        if args.path:
            return graphs.path_graph(args.path)
        if args.complete:
            return graphs.complete_graph(args.complete)
        return graphs.petersen_graph()
    except (OSError, ValueError, KeyError, graphs.GraphError) as exc:
        raise UsageError(f"cannot load graph: {exc}") from exc


def cache_path(cfg, surface: SurfaceSpec) -> Optional[Path]:
    if cfg.get("cache"):
        return Path(cfg["cache"])
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env) / f"{surface.name}_w{cfg['word_bound']}_c{cfg['coord_bound']}.json"
    return None


def load_universe(cfg):
    from .hierarchy.geodesics import Universe
    surface = SurfaceSpec.from_name(cfg["surface"])
    path = cache_path(cfg, surface)
    if path is not None and path.exists():
        try:
            ball = read_ball(path)
        except CacheError as exc:
            raise UsageError(str(exc)) from exc
        if ball.surface != surface:
            raise UsageError(f"cache {path} holds a {ball.surface.name} ball")
        return Universe(ball.curves)
    curves = universe_curves(surface, cfg["word_bound"], cfg["coord_bound"], workers=cfg["workers"])
    return Universe(curves)


# ---------------------------------------------------------------- commands

def cmd_constants(args, cfg):
    if cfg["case"] not in constants.SURFACE_CLASSES:
        raise UsageError(f"unknown case {cfg['case']!r}")
    rep = constants.theorem_pipeline(cfg["case"], cfg["M"])
    if cfg["format"] == "text":
        return rep.to_text(), True
    return rep.to_dict(), True


def cmd_graph(args, cfg):
    op = args.op
    if op == "lemma-check":
        rng = random.Random(cfg["seed"])
        cases = []
        for i in range(cfg["random"]):
            cases.append((f"random{i}", graphs.random_connected_graph(rng, cfg["max_vertices"])))
        for i, t in enumerate(graphs.all_trees(cfg["tree_vertices"])):
            cases.append((f"tree{i}", t))
        for n in range(3, cfg["max_cycle"] + 1):
            cases.append((f"C{n}", graphs.cycle_graph(n)))
        failures = []
        worst = 0
        for name, g in cases:
            thin, cen = graphs.thinness(g), graphs.centeredness(g)
            worst = max(worst, thin - 4 * cen)
            if thin > 4 * cen:
                failures.append({"case": name, "thinness": thin, "centeredness": cen})
            if name.startswith("tree") and (thin, cen) != (0, 0):
                failures.append({"case": name, "thinness": thin, "centeredness": cen, "reason": "tree"})
        res = {"cases": len(cases), "failures": failures, "all_pass": not failures,
               "max_thin_minus_4_centered": worst}
        return res, not failures
    g = load_graph(args)
    if op == "thinness":
        return {"vertices": g.vertex_count, "thinness": graphs.thinness(g)}, True
    if op == "centeredness":
        return {"vertices": g.vertex_count, "centeredness": graphs.centeredness(g)}, True
    if op == "bowditch-check":
        ok = graphs.bowditch_family_check(g, graphs.interval_family(g), cfg["h"])
        return {"vertices": g.vertex_count, "h": cfg["h"], "holds": ok}, True
    raise UsageError(f"unknown graph operation {op!r}")


def cmd_surface(args, cfg):
    surface = SurfaceSpec.from_name(cfg["surface"])
    if args.op == "intersect":
        if not args.a or not args.b:
            raise UsageError("intersect needs --a and --b")
        a, b = parse_curve(args.a, surface), parse_curve(args.b, surface)
        return {"a": a.to_dict(), "b": b.to_dict(), "intersection": intersection_number(a, b)}, True
    if args.op == "ball":
        seed_curve = parse_curve(args.curve or "std:1,2", surface)
        try:
            ball = enumerate_curve_ball(seed_curve, cfg["coord_bound"], cfg["word_bound"], workers=cfg["workers"])
        except BallOverflow as exc:
            raise UsageError(str(exc)) from exc
        path = cache_path(cfg, surface)
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            write_ball(path, ball)
        return {"curves": len(ball.curves), "edges": len(ball.adjacency),
                "cache": None if path is None else str(path),
                "ball": json.loads(ball.to_json()) if args.full else None}, True
    raise UsageError(f"unknown surface operation {args.op!r}")


def cmd_hierarchy(args, cfg):
    from .hierarchy.builder import build_hierarchy, hierarchy_to_path, path_is_valid
    surface = SurfaceSpec.from_name(cfg["surface"])
    if surface.complexity != 2:
        raise UsageError("hierarchies need a complexity-two surface (s05)")
    if not args.alpha or not args.beta:
        raise UsageError("give --alpha and --beta")
    alpha, beta = parse_pants(args.alpha, surface), parse_pants(args.beta, surface)
    h = build_hierarchy(alpha, beta, load_universe(cfg))
    if args.op == "build":
        return h.to_dict(), True
    path = hierarchy_to_path(h)
    return {"path": [p.to_dict() for p in path], "length": len(path) - 1,
            "valid": path_is_valid(path), "certificate": h.certificate}, path_is_valid(path)


def cmd_archy(args, cfg):
    from .hierarchy.builder import build_relative_3archy, cone_biconditional, relative_path_is_connected
    from .hierarchy.experiments import sample_archies
    if cfg["surface"] != "s06":
        raise UsageError("relative 3-archies need --surface s06")
    surface = SurfaceSpec.from_name("s06")
    universe = load_universe(cfg)
    if cfg["random"]:
        recs = sample_archies(universe, cfg["random"], cfg["seed"], cfg["workers"])
        ok = all(r.passes for r in recs)
        return {"samples": [r.to_dict() for r in recs], "all_pass": ok}, ok
    if not args.alpha or not args.beta:
        raise UsageError("give --alpha and --beta, or --random N")
    ar = build_relative_3archy(parse_pants(args.alpha, surface), parse_pants(args.beta, surface), universe)
    ok = cone_biconditional(ar) and relative_path_is_connected(ar.path)
    out = ar.to_dict()
    out["checks"] = {"cone_biconditional": cone_biconditional(ar),
                     "connected": relative_path_is_connected(ar.path)}
    return out, ok


def cmd_experiment(args, cfg):
    from .hierarchy.experiments import BGIT_BOUND, CENTER_BOUND, sample_bgit, sample_triangles
    if cfg["surface"] != "s05":
        raise UsageError("experiments run on s05")
    universe = load_universe(cfg)
    if args.op == "bgit":
        recs = sample_bgit(universe, cfg["count"], cfg["seed"], cfg["workers"])
        vals = [r.diameter for r in recs]
        ok = all(r.passes for r in recs)
        return {"bound": BGIT_BOUND, "samples": [r.to_dict() for r in recs], "max": max(vals),
                "distribution": _histogram(vals), "all_pass": ok}, ok
    if args.op == "triangles":
        recs = sample_triangles(universe, cfg["count"], cfg["seed"], cfg["workers"])
        vals = [r.measured_k for r in recs]
        ok = all(r.passes for r in recs)
        return {"bound": CENTER_BOUND, "samples": [r.to_dict() for r in recs], "max": max(vals),
                "distribution": _histogram(vals), "all_pass": ok}, ok
    raise UsageError(f"unknown experiment {args.op!r}")


def _histogram(vals: Sequence[int]) -> Dict[str, int]:
    out: Dict[str, int] = {}
    for v in sorted(vals):
        out[str(v)] = out.get(str(v), 0) + 1
    return out


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pants-lab", description="Curve-graph, hierarchy and hyperbolicity-constant toolkit.")
    p.add_argument("--config", help="key=value file; flags override it")
    p.add_argument("--out", help="write the report here instead of standard output")
    sub = p.add_subparsers(dest="command", metavar="command")

    def common(sp, *names):
        for name in names:
            conv = OPTIONS[name][0]
            sp.add_argument("--" + name.replace("_", "-"), dest=name, type=conv, default=None)

    sp = sub.add_parser("constants", help="hyperbolicity constant pipeline")
    common(sp, "case", "M", "format")

    sp = sub.add_parser("graph", help="triangle constants of finite graphs")
    sp.add_argument("op", choices=["thinness", "centeredness", "lemma-check", "bowditch-check"])
    sp.add_argument("--graph", help="JSON file {\"n\": ..., \"edges\": [[u, v], ...]}")
    sp.add_argument("--cycle", type=int)
    sp.add_argument("--path", type=int)
    sp.add_argument("--complete", type=int)
    sp.add_argument("--petersen", action="store_true")
    common(sp, "seed", "random", "max_vertices", "tree_vertices", "max_cycle", "h")

    sp = sub.add_parser("surface", help="curves, intersections and curve balls")
    sp.add_argument("op", choices=["ball", "intersect"])
    sp.add_argument("--a")
    sp.add_argument("--b")
    sp.add_argument("--curve", help="seed curve for ball (default std:1,2)")
    sp.add_argument("--full", action="store_true", help="include the whole ball in the report")
    common(sp, "surface", "coord_bound", "word_bound", "workers", "cache")

    for name, ops in (("hierarchy", ["build", "path"]), ("archy", ["build"])):
        sp = sub.add_parser(name, help=f"{name} construction")
        sp.add_argument("op", choices=ops)
        sp.add_argument("--alpha", help="curves separated by ';', each std:i,j,... or coordinates")
        sp.add_argument("--beta")
        common(sp, "surface", "coord_bound", "word_bound", "workers", "cache", "seed", "random")

    sp = sub.add_parser("experiment", help="empirical audits")
    sp.add_argument("op", choices=["triangles", "bgit"])
    common(sp, "surface", "coord_bound", "word_bound", "workers", "cache", "seed", "count")
    return p


COMMANDS: Dict[str, Callable] = {
    "constants": cmd_constants,
    "graph": cmd_graph,
    "surface": cmd_surface,
    "hierarchy": cmd_hierarchy,
    "archy": cmd_archy,
    "experiment": cmd_experiment,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        cfg = resolve(args)
        results, ok = COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"pants-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SurfaceError, CurveError, PantsError) as exc:
        print(f"pants-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        # disconnected universes and exhausted samplers: the inputs are too small
        print(f"pants-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    config = {"command": args.command, **{k: v for k, v in cfg.items()}}
    if hasattr(args, "op"):
        config["op"] = args.op
    if isinstance(results, str):
        text = results + "\n"
    else:
        env = {"tool_version": tool_version(), "config": config, "results": results}
        text = json.dumps(env, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_AUDIT


def main() -> None:
    sys.exit(run())

"""Command-line entry point: ``arbor <command> [options]``.

Commands: gen, orient, decompose, star, lfd, verify, bench, oracle. Every
randomized step draws from --seed (default: $ARBOR_SEED or 0), so replaying a
plan reproduces its artifacts byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .generators import FAMILIES, SEEDED, GeneratorSpec, generate
from .graph import GraphFormatError, MultiGraph
from .runtime import RoundLedger, as_stream
from .structures import PaletteSet, PartialColoring
from .util import frac

ALGOS = ("combine-fd", "greedy-fd", "star-3t", "exhaustive")
ORACLES = ("arboricity", "pseudo-arboricity", "degeneracy")
EXHAUSTIVE_BUDGET = 10 ** 6
FAMILY_PARAMS = sorted({p for _, names in FAMILIES.values() for p in names})
FLOAT_PARAMS = {"p"}


class UsageError(Exception):
    pass


@dataclass
class RunPlan:
    command: str
    source: dict = field(default_factory=dict)  # {"file": path} or {"family", "params", "seed"}
    algo: str | None = None
    eps: str | None = None
    seed: int = 0
    outputs: dict = field(default_factory=dict)
    strategy: str | None = None
    overrides: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, doc) -> "RunPlan":
        return cls(**doc)

    def replay_key(self) -> dict:
        """The plan without output paths, embedded in every artifact."""
        doc = self.to_json()
        doc.pop("outputs")
        return doc


def default_seed() -> int:
    raw = os.environ.get("ARBOR_SEED")
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ARBOR_SEED must be an integer, got {raw!r}") from None


def _eps_arg(text: str) -> str:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"--eps expects a number such as 0.5 or 1/4, got {text!r}") from None
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"--eps must lie in (0, 1], got {text}")
    return str(value)


def _override_arg(text: str) -> tuple[str, object]:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"--override expects NAME=VALUE, got {text!r}")
    name, raw = text.split("=", 1)
    try:
        value: object = int(raw)
    except ValueError:
        try:
            value = str(Fraction(raw))
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"override {name} needs a number, got {raw!r}") from None
    return name, value


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", help="edge-list file ('n m' header, one 'u v' per line)")
    p.add_argument("--family", choices=sorted(FAMILIES), help="generate the input instead of reading it")
    for name in FAMILY_PARAMS:
        p.add_argument(f"--{name}", type=float if name in FLOAT_PARAMS else int, default=None,
                       help=f"generator parameter {name}")


def _add_common(p: argparse.ArgumentParser, eps_required: bool = True) -> None:
    p.add_argument("--seed", type=int, default=None, help="master seed (default: $ARBOR_SEED or 0)")
    p.add_argument("-o", "--out", help="output path (default: stdout)")
    p.add_argument("--ledger", help="also write the round ledger to this path")
    if eps_required:
        p.add_argument("--eps", type=_eps_arg, required=True, help="slack eps in (0, 1]")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arbor", description="Forest, star-forest and orientation decompositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    _add_source(p)
    _add_common(p, eps_required=False)

    p = sub.add_parser("orient", help="low-outdegree orientation")
    _add_source(p)
    _add_common(p)

    p = sub.add_parser("decompose", help="forest decomposition")
    _add_source(p)
    _add_common(p)
    p.add_argument("--algo", choices=ALGOS, default="combine-fd")
    p.add_argument("--strategy", choices=("diameter", "random_depth", "random_outedge"))
    p.add_argument("--diameter", choices=("log", "inverse"), help="append a diameter reduction")
    p.add_argument("--a-bound", type=int, help="arboricity upper bound (default: exact or flow-based)")
    p.add_argument("--max-colors", type=int, help="fail unless at most this many colors are used")
    p.add_argument("--max-diameter", type=int, help="fail unless every tree has at most this diameter")
    p.add_argument("--override", type=_override_arg, action="append", default=[],
                   help="parameter override NAME=VALUE (R, R_prime, K, K_prime, K_dprime, c_len, p, N)")
    p.add_argument("--no-precondition-check", action="store_true")

    p = sub.add_parser("star", help="star-forest decomposition of a simple graph")
    _add_source(p)
    _add_common(p)
    p.add_argument("--mode", choices=("sfd", "lsfd"), default="sfd")
    p.add_argument("--palettes", help="palette JSON for lsfd ({'lists': [...], 'universe': [...]})")
    p.add_argument("--universe", type=int, help="draw random palettes from this many colors (lsfd)")
    p.add_argument("--palette-size", type=int, help="size of the random palettes (lsfd)")
    p.add_argument("--a-bound", type=int)
    p.add_argument("--test-mode", action="store_true", help="relax the parameter thresholds")
    p.add_argument("--leaf-prob", type=float, help="probability that a color joins C_v (lsfd, test mode)")

    p = sub.add_parser("lfd", help="list-forest decomposition")
    _add_source(p)
    _add_common(p)
    p.add_argument("--palettes", help="palette JSON")
    p.add_argument("--universe", type=int, help="draw random palettes from this many colors (default 3a)")
    p.add_argument("--palette-size", type=int, help="size of the random palettes (default ceil((1+eps)a))")
    p.add_argument("--mode", type=int, choices=(1, 2), default=1)
    p.add_argument("--a-bound", type=int)
    p.add_argument("--override", type=_override_arg, action="append", default=[])
    p.add_argument("--no-precondition-check", action="store_true")

    p = sub.add_parser("verify", help="check a coloring or orientation file against a graph")
    _add_source(p)
    _add_common(p, eps_required=False)
    p.add_argument("--coloring", help="coloring JSON (an 'assignment' list, or an artifact containing one)")
    p.add_argument("--orientation", help="orientation JSON (a 0/1 list, or an artifact containing one)")
    p.add_argument("--kind", choices=("forest", "star", "orientation"), default="forest")
    p.add_argument("--palettes", help="palette JSON to check list membership")
    p.add_argument("--bound", type=int, help="outdegree bound for --kind orientation")
    p.add_argument("--max-diameter", type=int)

    p = sub.add_parser("bench", help="CSV of colors, diameter, rounds and wall time")
    p.add_argument("--sizes", type=int, nargs="+", default=[2 ** i for i in range(8, 15)])
    p.add_argument("--eps-list", type=_eps_arg, nargs="+", default=["1", "1/2", "1/4"])
    p.add_argument("--algos", nargs="+", choices=("orient", "combine-fd", "star-3t", "greedy-fd"),
                   default=["orient", "combine-fd"])
    p.add_argument("--k", type=int, default=8, help="forests per random_forest_union instance")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--out")

    p = sub.add_parser("oracle", help="exact or flow-based density parameters")
    _add_source(p)
    _add_common(p, eps_required=False)
    p.add_argument("--kind", choices=ORACLES, default="pseudo-arboricity")
    return parser


def parse(argv: list[str]) -> RunPlan:
    """Turn argv into a validated plan; raises SystemExit(2) with a usage message on bad input."""
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        seed = ns.seed if ns.seed is not None else default_seed()
    except UsageError as err:
        parser.error(str(err))
    plan = RunPlan(ns.command, seed=seed)
    if ns.command == "bench":
        if ns.jobs < 1:
            parser.error("--jobs must be at least 1")
        plan.options = {"sizes": ns.sizes, "eps_list": ns.eps_list, "algos": ns.algos, "k": ns.k, "jobs": ns.jobs}
        plan.outputs = {"out": ns.out}
        return plan
    has_params = any(getattr(ns, name) is not None for name in FAMILY_PARAMS)
    if ns.infile and ns.family:
        parser.error("--in and --family are conflicting graph sources; give one")
    if ns.infile:
        if has_params:
            parser.error("generator parameters need --family, not --in")
        plan.source = {"file": ns.infile}
    elif ns.family:
        names = FAMILIES[ns.family][1]
        missing = [n for n in names if getattr(ns, n) is None]
        if missing:
            parser.error(f"--family {ns.family} needs " + ", ".join(f"--{n}" for n in missing))
        extra = [n for n in FAMILY_PARAMS if n not in names and getattr(ns, n) is not None]
        if extra:
            parser.error(f"--family {ns.family} does not take " + ", ".join(f"--{n}" for n in extra))
        params = {n: getattr(ns, n) for n in names}
        plan.source = {"family": ns.family, "params": params, "seed": seed if ns.family in SEEDED else 0}
    else:
        parser.error("a graph source is required: --in FILE or --family NAME")
    plan.eps = getattr(ns, "eps", None)
    plan.outputs = {"out": ns.out, "ledger": ns.ledger}
    opts: dict = {}
    if ns.command == "decompose":
        plan.algo = ns.algo
        plan.strategy = ns.strategy
        plan.overrides = dict(ns.override)
        opts = {"diameter": ns.diameter, "a_bound": ns.a_bound, "max_colors": ns.max_colors,
                "max_diameter": ns.max_diameter, "check_pre": not ns.no_precondition_check}
        if ns.algo == "exhaustive" and ns.max_colors is None:
            parser.error("--algo exhaustive needs --max-colors")
    elif ns.command == "star":
        plan.algo = ns.mode
        opts = {"palettes": ns.palettes, "universe": ns.universe, "palette_size": ns.palette_size,
                "a_bound": ns.a_bound, "test_mode": ns.test_mode, "leaf_prob": ns.leaf_prob}
        if ns.mode == "lsfd" and not (ns.palettes or ns.universe):
            parser.error("--mode lsfd needs --palettes or --universe")
    elif ns.command == "lfd":
        plan.algo = f"mode{ns.mode}"
        plan.overrides = dict(ns.override)
        opts = {"palettes": ns.palettes, "universe": ns.universe, "palette_size": ns.palette_size,
                "mode": ns.mode, "a_bound": ns.a_bound, "check_pre": not ns.no_precondition_check}
    elif ns.command == "verify":
        plan.algo = ns.kind
        if ns.kind == "orientation":
            if not ns.orientation or ns.bound is None:
                parser.error("--kind orientation needs --orientation and --bound")
        elif not ns.coloring:
            parser.error(f"--kind {ns.kind} needs --coloring")
        opts = {"coloring": ns.coloring, "orientation": ns.orientation, "palettes": ns.palettes, "bound": ns.bound,
                "max_diameter": ns.max_diameter}
    elif ns.command == "oracle":
        plan.algo = ns.kind
    plan.options = opts
    return plan


# ---------------------------------------------------------------- execution


def load_graph(plan: RunPlan) -> MultiGraph:
    if "file" in plan.source:
        with open(plan.source["file"]) as fh:
            return MultiGraph.from_edge_list(fh.read())
    return generate(GeneratorSpec(plan.source["family"], dict(plan.source["params"]), plan.source["seed"]))


def _read_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w") as fh:
        fh.write(text)


def _palettes(plan: RunPlan, g: MultiGraph, default_size: int, default_universe: int, stream) -> PaletteSet:
    opts = plan.options
    if opts.get("palettes"):
        doc = _read_json(opts["palettes"])
        pal = PaletteSet.from_json(doc.get("palettes", doc))
        if len(pal) != g.m:
            raise ValueError(f"palette file has {len(pal)} lists for {g.m} edges")
        return pal
    universe = opts.get("universe") or default_universe
    size = opts.get("palette_size") or default_size
    return PaletteSet.random(g.m, universe, size, stream.derive("palettes").generator())


def _diameter_report(g, coloring) -> tuple[int | None, str | None]:
    from .verify import CyclicColorClassError, max_diameter
    try:
        return max_diameter(g, coloring), None
    except CyclicColorClassError as err:
        return None, str(err)


def _run_orient(plan, g, ledger, stream) -> tuple[dict, bool]:
    from .orientation import low_outdegree_orientation
    from .verify import check_orientation
    run = low_outdegree_orientation(g, frac(plan.eps), stream, ledger)
    report = check_orientation(g, run.orientation, run.threshold.threshold)
    result = {"orientation": run.orientation.to_json(), "threshold": run.threshold.threshold,
              "a_star": run.threshold.a_star_bound, "reversals": run.reversals, "longest_path": run.longest_path,
              "R": run.R}
    return {"result": result, "report": report.to_json()}, report.ok


def _exhaustive_min(g, k):
    from .verify import BudgetExceededError, exhaustive_min_diameter_fd
    try:
        return exhaustive_min_diameter_fd(g, k, budget=EXHAUSTIVE_BUDGET)
    except BudgetExceededError:
        return "budget exceeded"


def _run_decompose(plan, g, ledger, stream) -> tuple[dict, bool]:
    from .basic import greedy_lfd, star_forest_3t
    from .forest import combine_fd
    from .oracles import arboricity_bound, pseudo_arboricity
    from .verify import ValidityReport, check_forest_decomposition, check_star_forest
    opts = plan.options
    eps = frac(plan.eps)
    result: dict = {"algo": plan.algo}
    if plan.algo == "exhaustive":
        k = opts["max_colors"]
        best = _exhaustive_min(g, k)
        report = ValidityReport("exhaustive")
        result["min_max_diameter"] = best
        if best is None:
            report.add("coloring", f"no {k}-forest decomposition exists")
        elif best == "budget exceeded":
            report.add("coloring", "exhaustive search budget exceeded")
        elif opts.get("max_diameter") is not None and best > opts["max_diameter"]:
            report.add("diameter", f"every {k}-forest decomposition has a tree of diameter >= {best}")
        return {"result": result, "report": report.to_json()}, report.ok
    if plan.algo == "combine-fd":
        overrides = {k: (Fraction(v) if isinstance(v, str) else v) for k, v in plan.overrides.items()}
        run = combine_fd(g, eps, stream, ledger, a_bound=opts.get("a_bound"), strategy=plan.strategy,
                         diameter=opts.get("diameter"), overrides=overrides or None,
                         check_pre=opts.get("check_pre", True))
        coloring = run.coloring
        result.update(run.to_json())
        result["a_bound"] = run.a_bound
        result["params"] = run.main.params.to_json()
        result["retry_log"] = run.log
        report = check_forest_decomposition(g, coloring)
    elif plan.algo == "greedy-fd":
        a_star = pseudo_arboricity(g)[0].value if g.m else 0
        size = math.floor((2 + eps) * a_star)
        coloring = greedy_lfd(g, eps, PaletteSet.uniform(g.m, max(size, 1)), ledger, a_star)
        report = check_forest_decomposition(g, coloring)
    else:
        coloring = star_forest_3t(g, eps, ledger)
        report = check_star_forest(g, coloring)
    diam, err = _diameter_report(g, coloring)
    report.metrics["max_diameter"] = diam if diam is not None else -1
    if err:
        report.add("diameter", err)
    if opts.get("max_colors") is not None and coloring.num_colors() > opts["max_colors"]:
        report.add("colors", f"{coloring.num_colors()} colors exceed --max-colors {opts['max_colors']}")
    if opts.get("max_diameter") is not None and diam is not None and diam > opts["max_diameter"]:
        report.add("diameter", f"diameter {diam} exceeds --max-diameter {opts['max_diameter']}")
    if not report.ok and opts.get("max_colors") is not None:
        # tell infeasible demands apart from algorithm slack on small inputs
        result["exhaustive_min_max_diameter"] = _exhaustive_min(g, opts["max_colors"])
    result["colors"] = coloring.num_colors()
    result["coloring"] = coloring.to_json()
    if g.m and plan.algo != "combine-fd":
        result["a_bound"] = arboricity_bound(g)
    return {"result": result, "report": report.to_json()}, report.ok


def _run_star(plan, g, ledger, stream) -> tuple[dict, bool]:
    from .oracles import arboricity_bound
    from .star import star_forest_decomposition
    from .verify import check_star_forest
    opts = plan.options
    eps = frac(plan.eps)
    a = opts.get("a_bound") or (arboricity_bound(g) if g.m else 1)
    palettes = None
    if plan.algo == "lsfd":
        palettes = _palettes(plan, g, math.ceil((1 + eps) * a), 3 * a, stream)
    run = star_forest_decomposition(g, eps, plan.algo, palettes, stream, ledger, a, opts.get("test_mode", False),
                                    opts.get("leaf_prob"))
    report = check_star_forest(g, run.coloring, palettes)
    result = run.to_json()
    result["coloring"] = run.coloring.to_json()
    result["centers"] = run.centers.to_json()
    return {"result": result, "report": report.to_json()}, report.ok


def _run_lfd(plan, g, ledger, stream) -> tuple[dict, bool]:
    from .forest import combine_lfd
    from .oracles import arboricity_bound
    opts = plan.options
    eps = frac(plan.eps)
    a = opts.get("a_bound") or (arboricity_bound(g) if g.m else 1)
    palettes = _palettes(plan, g, math.ceil((1 + eps) * a), 3 * a, stream)
    overrides = {k: (Fraction(v) if isinstance(v, str) else v) for k, v in plan.overrides.items()}
    run = combine_lfd(g, palettes, eps, stream, ledger, mode=opts.get("mode", 1), a=a,
                      overrides=overrides or None, check_pre=opts.get("check_pre", True))
    result = {"colors": run.coloring.num_colors(), "coloring": run.coloring.to_json(), "stages": run.stages,
              "good": run.main.good, "retries": run.main.retries, "retry_log": run.log,
              "palettes": palettes.to_json()}
    return {"result": result, "report": run.report.to_json()}, run.report.ok


def _load_doc(path, key):
    doc = _read_json(path)
    if isinstance(doc, dict) and "result" in doc:
        doc = doc["result"]
    if isinstance(doc, dict) and key in doc:
        doc = doc[key]
    return doc


def _run_verify(plan, g, ledger, stream) -> tuple[dict, bool]:
    from .structures import Orientation
    from .verify import check_forest_decomposition, check_orientation, check_star_forest
    opts = plan.options
    if plan.algo == "orientation":
        bits = _load_doc(opts["orientation"], "orientation")
        psi = Orientation(g, [bool(b) for b in bits]) if len(bits) == g.m else None
        if psi is None:
            from .verify import ValidityReport
            report = ValidityReport("orientation")
            report.add("orientation", f"has {len(bits)} entries for {g.m} edges")
        else:
            report = check_orientation(g, psi, opts["bound"])
        return {"report": report.to_json()}, report.ok
    coloring = PartialColoring.from_json(_load_doc(opts["coloring"], "coloring"))
    palettes = None
    if opts.get("palettes"):
        doc = _read_json(opts["palettes"])
        if isinstance(doc, dict) and "result" in doc:
            doc = doc["result"]
        palettes = PaletteSet.from_json(doc.get("palettes", doc))
    checker = check_star_forest if plan.algo == "star" else check_forest_decomposition
    report = checker(g, coloring, palettes)
    if report.ok:
        diam, _ = _diameter_report(g, coloring)
        report.metrics["max_diameter"] = diam
        if opts.get("max_diameter") is not None and diam > opts["max_diameter"]:
            report.add("diameter", f"diameter {diam} exceeds {opts['max_diameter']}")
    return {"report": report.to_json()}, report.ok


def _run_oracle(plan, g, ledger, stream) -> tuple[dict, bool]:
    from .oracles import EXACT_LIMIT, arboricity_bound, degeneracy, nash_williams_arboricity, pseudo_arboricity
    result: dict = {"kind": plan.algo}
    if plan.algo == "arboricity":
        if g.n <= EXACT_LIMIT:
            cert = nash_williams_arboricity(g)
            result.update({"value": cert.value, "exact": True, "witness": cert.witness_vertices})
        else:
            result.update({"value": arboricity_bound(g), "exact": False})
    elif plan.algo == "pseudo-arboricity":
        cert, psi = pseudo_arboricity(g)
        result.update({"value": cert.value, "exact": True, "witness": cert.witness_vertices,
                       "orientation": psi.to_json()})
    else:
        value, order = degeneracy(g)
        result.update({"value": value, "exact": True, "order": order})
    return {"result": result}, True


RUNNERS = {"orient": _run_orient, "decompose": _run_decompose, "star": _run_star, "lfd": _run_lfd,
           "verify": _run_verify, "oracle": _run_oracle}


def _bench_row(job) -> dict:
    n, eps_text, algo, k, seed = job
    from .basic import greedy_lfd, star_forest_3t
    from .forest import combine_fd
    from .generators import random_forest_union
    from .oracles import pseudo_arboricity
    from .orientation import low_outdegree_orientation
    from .verify import max_diameter
    g = random_forest_union(n, k, seed=seed)
    eps = frac(eps_text)
    ledger = RoundLedger()
    stream = as_stream(seed).derive("bench", n)
    start = time.perf_counter()
    if algo == "orient":
        run = low_outdegree_orientation(g, eps, stream, ledger)
        colors, diam = run.orientation.max_outdegree(), ""
    else:
        if algo == "combine-fd":
            coloring = combine_fd(g, eps, stream, ledger, a_bound=k, check_pre=False).coloring
        elif algo == "star-3t":
            coloring = star_forest_3t(g, eps, ledger)
        else:
            a_star = pseudo_arboricity(g)[0].value
            coloring = greedy_lfd(g, eps, PaletteSet.uniform(g.m, math.floor((2 + eps) * a_star)), ledger, a_star)
        colors, diam = coloring.num_colors(), max_diameter(g, coloring)
    wall = time.perf_counter() - start
    return {"n": n, "eps": eps_text, "algorithm": algo, "colors": colors, "max_diameter": diam,
            "rounds": ledger.total_rounds, "wall_time": f"{wall:.4f}"}


def _run_bench(plan: RunPlan) -> int:
    opts = plan.options
    jobs = [(n, e, algo, opts["k"], plan.seed) for n in opts["sizes"] for e in opts["eps_list"] for algo in opts["algos"]]
    if opts["jobs"] > 1:
        with ProcessPoolExecutor(max_workers=opts["jobs"]) as pool:
            rows = list(pool.map(_bench_row, jobs))
    else:
        rows = [_bench_row(j) for j in jobs]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["n", "eps", "algorithm", "colors", "max_diameter", "rounds", "wall_time"],
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _write(plan.outputs.get("out"), buf.getvalue())
    return 0


def execute(plan: RunPlan) -> int:
    """Run a plan and write its artifacts. Returns 0 iff the run succeeded and verification passed."""
    if plan.command == "bench":
        return _run_bench(plan)
    g = load_graph(plan)
    if plan.command == "gen":
        _write(plan.outputs.get("out"), g.to_edge_list())
        return 0
    ledger = RoundLedger()
    stream = as_stream(plan.seed)
    doc, ok = RUNNERS[plan.command](plan, g, ledger, stream)
    doc["plan"] = plan.replay_key()
    doc["graph"] = {"n": g.n, "m": g.m}
    doc["ok"] = ok
    if plan.command not in ("verify", "oracle"):
        doc["rounds"] = ledger.to_json()
    _write(plan.outputs.get("out"), _dump(doc))
    if plan.outputs.get("ledger"):
        _write(plan.outputs["ledger"], _dump(ledger.to_json()))
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    plan = parse(sys.argv[1:] if argv is None else argv)
    try:
        return execute(plan)
    except (OSError, GraphFormatError, ValueError, RuntimeError) as err:
        print(f"arbor {plan.command}: {type(err).__name__}: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

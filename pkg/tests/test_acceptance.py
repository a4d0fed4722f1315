"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are repeated in the
"acceptance criteria" section of the terminal summary.
"""
import hashlib
import math
import statistics
import time
from contextlib import contextmanager
from fractions import Fraction

import networkx as nx
import numpy as np

from arbor.augmentation import SearchRadiusExceeded, apply_augmentation, find_almost_augmenting, shortcut
from arbor.basic import C_DIAM, reduce_forest_diameter
from arbor.cli import main
from arbor.forest import combine_fd, combine_lfd, cross_component_violations
from arbor.generators import gnp, path_multigraph, random_forest_union
from arbor.graph import MultiGraph
from arbor.netdecomp import stochastic_decomposition
from arbor.oracles import hakimi_pseudo_arboricity, nash_williams_arboricity, pseudo_arboricity
from arbor.orientation import low_outdegree_orientation
from arbor.runtime import RoundLedger
from arbor.star import star_forest_decomposition
from arbor.structures import PaletteSet, PartialColoring
from arbor.verify import (check_forest_decomposition, check_star_forest, exhaustive_min_diameter_fd, max_diameter,
                          path_multigraph_color_bound)

from conftest import nx_color_classes_are_forests, record_acceptance

# [DERIVED] rounds / (ceil(log2 n)^3 / eps) peaked at 0.236 over the orientation corpus below (n = 128 .. 4096)
ROUND_CONSTANT = 0.25


@contextmanager
def criterion(number):
    state = {"bad": [], "detail": ""}
    try:
        yield state
    except Exception as exc:
        record_acceptance(number, False, f"{type(exc).__name__}: {exc}")
        raise
    bad = state["bad"]
    detail = state["detail"] + (f"; {len(bad)} violations, first: {bad[0]}" if bad else "")
    record_acceptance(number, not bad, detail)
    assert not bad, bad[:5]


def union_find_acyclic(g, coloring) -> bool:
    """Independent oracle: one union-find per color, any repeated root is a cycle."""
    parent: dict = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    for e in range(g.m):
        c = coloring[e]
        if c is None:
            continue
        u, v = g.edges[e]
        ru, rv = find((c, u)), find((c, v))
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def seeded_small_graph(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 19))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    simple = seed % 2 == 0
    if simple:
        m = int(rng.integers(0, len(pairs) + 1))
        chosen = [pairs[i] for i in sorted(rng.choice(len(pairs), size=m, replace=False))]
    else:
        m = int(rng.integers(0, 3 * n + 1))
        chosen = [pairs[i] for i in rng.integers(0, len(pairs), size=m)]
    return MultiGraph(n, chosen), simple


def test_criterion_1_oracle_soundness():
    start = time.perf_counter()
    with criterion(1) as st:
        for seed in range(200):
            g, simple = seeded_small_graph(seed)
            a = nash_williams_arboricity(g).value
            cert, orient = pseudo_arboricity(g)
            a_star = cert.value
            if hakimi_pseudo_arboricity(g).value != a_star:
                st["bad"].append((seed, "flow and subset pseudo-arboricity differ"))
            if not a_star <= a <= 2 * a_star:
                st["bad"].append((seed, f"a*={a_star} a={a}"))
            if simple and a > a_star + 1:
                st["bad"].append((seed, f"simple graph with a={a} > a*+1={a_star + 1}"))
            if orient.max_outdegree() != a_star:
                st["bad"].append((seed, f"orientation outdegree {orient.max_outdegree()} != {a_star}"))
        elapsed = time.perf_counter() - start
        if elapsed >= 60:
            st["bad"].append(("runtime", f"{elapsed:.1f}s"))
        st["detail"] = f"200 graphs, n <= 18, {elapsed:.1f}s"


def orientation_corpus():
    """25 (n, 2n) pairs over five families: 50 graphs, n up to 4096."""
    families = {
        "forests3": lambda n, s: random_forest_union(n, 3, s),
        "forests6": lambda n, s: random_forest_union(n, 6, s),
        "gnp6": lambda n, s: gnp(n, 6 / n, s),
        "gnp10": lambda n, s: gnp(n, 10 / n, s),
        "forests12": lambda n, s: random_forest_union(n, 12, s),
    }
    for name, make in families.items():
        for i, n in enumerate((128, 256, 512, 1024, 2048)):
            yield name, n, make(n, i), make(2 * n, i)


def test_criterion_2_orientation():
    eps_list = (Fraction(1), Fraction(1, 2), Fraction(1, 4))
    allowance_peak = 0.0
    c_peak = 0.0
    with criterion(2) as st:
        graphs = 0
        for name, n, small, large in orientation_corpus():
            rounds = {}
            for g in (small, large):
                graphs += 1
                a_star = pseudo_arboricity(g)[0].value
                for eps in eps_list:
                    led = RoundLedger()
                    run = low_outdegree_orientation(g, eps, g.n + graphs, led, a_star=a_star)
                    out = run.orientation.max_outdegree()
                    if out > math.ceil(a_star * (1 + eps)):
                        st["bad"].append((name, g.n, str(eps), f"outdegree {out}"))
                    scale = math.ceil(math.log2(g.n)) ** 3 / float(eps)
                    c_peak = max(c_peak, led.total_rounds / scale)
                    if led.total_rounds > ROUND_CONSTANT * scale:
                        st["bad"].append((name, g.n, str(eps), f"rounds {led.total_rounds}"))
                    rounds[g.n, eps] = led.total_rounds
            allowance = (math.log(2 * n) / math.log(n)) ** 3 * 1.25
            for eps in eps_list:
                ratio = rounds[2 * n, eps] / rounds[n, eps]
                allowance_peak = max(allowance_peak, ratio / allowance)
                if ratio > allowance:
                    st["bad"].append((name, n, str(eps), f"doubling ratio {ratio:.2f} > {allowance:.2f}"))
        st["detail"] = (f"{graphs} graphs x 3 eps; rounds <= {ROUND_CONSTANT} log^3 n / eps (peak {c_peak:.3f}); "
                        f"doubling ratio peak {allowance_peak:.2f} of allowance")


def test_criterion_3_augmentation():
    eps = Fraction(1, 2)
    applications = discoveries = 0
    seed = 0
    with criterion(3) as st:
        while applications < 10_000:
            rng = np.random.default_rng(seed)
            g = gnp(18, 0.6, seed) if seed % 2 == 0 else MultiGraph(
                16, [tuple(sorted(rng.choice(16, size=2, replace=False).tolist())) for _ in range(70)])
            seed += 1
            a = nash_williams_arboricity(g).value
            size = math.ceil((1 + eps) * a)
            pal = PaletteSet.random(g.m, 2 * size, size, rng)
            # random greedy start, then every uncolored edge is augmented in a random order
            col = PartialColoring.empty(g.m)
            for e in rng.permutation(g.m):
                for c in rng.permutation(list(pal[int(e)])):
                    col[int(e)] = int(c)
                    if union_find_acyclic(g, col):
                        break
                    col[int(e)] = None
                if rng.random() < 0.4:
                    col[int(e)] = None
            layer_bound = math.ceil(math.log(g.n) / math.log(1 + eps)) + 1
            for e in rng.permutation(col.uncolored()):
                try:
                    P = find_almost_augmenting(g, col, pal, int(e), eps=eps)
                except SearchRadiusExceeded as exc:
                    st["bad"].append((seed, int(e), f"search failed: {exc}"))
                    continue
                discoveries += 1
                if len(P.layers) > layer_bound:
                    st["bad"].append((seed, int(e), f"{len(P.layers)} layers > {layer_bound}"))
                col = apply_augmentation(g, col, shortcut(g, col, P, pal), pal)
                applications += 1
                if col[int(e)] is None or not union_find_acyclic(g, col):
                    st["bad"].append((seed, int(e), "augmentation broke a forest"))
                if any(col[f] is not None and col[f] not in pal[f] for f in range(g.m)):
                    st["bad"].append((seed, int(e), "color outside palette"))
        if discoveries < 1000:
            st["bad"].append(("discoveries", discoveries))
        st["detail"] = f"{applications} applications, {discoveries} discoveries on {seed} graphs"


def test_criterion_4_main_forest_decomposition():
    eps = Fraction(1, 2)
    a_bound = 6  # a union of 6 random spanning trees has arboricity at most 6
    retries = []
    with criterion(4) as st:
        for seed in range(30):
            g = random_forest_union(300, a_bound, seed)
            res = combine_fd(g, eps, seed, a_bound=a_bound)
            retries.append(res.main.retries)
            if res.colors > math.ceil((1 + eps) * a_bound):
                st["bad"].append((seed, f"{res.colors} colors"))
            if not (res.report.ok and res.coloring.is_total() and nx_color_classes_are_forests(g, res.coloring.colors)):
                st["bad"].append((seed, "not a forest decomposition"))
            if not res.main.good:
                st["bad"].append((seed, "main pass not good"))
            left = 0
            if res.main.leftover:
                sub, _ = g.edge_subgraph(sorted(res.main.leftover))
                left = pseudo_arboricity(sub)[0].value
            if left > math.ceil(eps * a_bound / 10):
                st["bad"].append((seed, f"leftover pseudo-arboricity {left}"))
        mean = statistics.mean(retries)
        if mean > 1:
            st["bad"].append(("retries", mean))
        st["detail"] = (f"30 seeds, colors <= {math.ceil((1 + eps) * a_bound)}, {res.main.clusters} cluster(s), "
                        f"mean retries {mean:.2f}")


def natural_coloring(g, k):
    # copy j of every bundle gets color j: k monochromatic paths through every vertex
    return PartialColoring([e % k for e in range(g.m)])


def merged(red, top):
    out = red.coloring0.copy()
    for e in range(len(out)):
        if red.coloring1[e] is not None:
            out[e] = top + red.coloring1[e]
    return out


def test_criterion_5_diameter_reduction():
    inputs = [(1000, 16, Fraction(1)), (1000, 32, Fraction(1)), (600, 8, Fraction(1)), (800, 16, Fraction(1, 2))]
    peak = 0.0
    with criterion(5) as st:
        cases = []
        for seed in range(30):
            l, k, eps = inputs[seed % len(inputs)]
            g = path_multigraph(l, k)
            cases.append((seed, g, natural_coloring(g, k), k, eps))
        for seed in range(5):
            g = random_forest_union(512, 8, seed)
            fd = combine_fd(g, Fraction(1), seed, a_bound=8)
            cases.append((100 + seed, g, fd.coloring, 8, Fraction(1)))
        for seed, g, col, a, eps in cases:
            red = reduce_forest_diameter(g, col, eps, seed, a=a)
            out = merged(red, max(col.used_colors()) + 1)
            e1_colors = len({red.coloring1[e] for e in range(g.m)} - {None})
            if e1_colors > math.ceil(eps * a):
                st["bad"].append((seed, f"E1 uses {e1_colors} colors > {math.ceil(eps * a)}"))
            if not (out.is_total() and check_forest_decomposition(g, out).ok):
                st["bad"].append((seed, "merged coloring is not a forest decomposition"))
            diam = max_diameter(g, out)
            bound = C_DIAM * math.ceil(math.log2(g.n)) / eps
            peak = max(peak, float(diam / bound))
            if diam > bound:
                st["bad"].append((seed, f"diameter {diam} > {float(bound):.0f}"))
        st["detail"] = f"{len(cases)} runs, c_diam = {C_DIAM}, peak diameter / bound {peak:.2f}"


def test_criterion_6_diameter_lower_bound():
    k = 2
    with criterion(6) as st:
        for l in range(2, 6):
            g = path_multigraph(l, k)
            exact = exhaustive_min_diameter_fd(g, k)
            if exact != l - 1:
                st["bad"].append((l, f"k colors: minimum diameter {exact} != {l - 1}"))
            for eps in (Fraction(1, 2), Fraction(1)):
                colors = k + math.ceil(eps * k)
                d = exhaustive_min_diameter_fd(g, colors)
                if d is None or not path_multigraph_color_bound(l, k, float(k * (1 + eps)), d):
                    st["bad"].append((l, str(eps), f"d = {d} violates the counting inequality"))
        st["detail"] = "path multigraphs l = 2..5, k = 2, extra colors for eps in {1/2, 1}"


def test_criterion_7_list_forest_decomposition():
    a = 400
    eps = Fraction(1, 2)
    g = path_multigraph(5, a)  # parallel edges inflate a so that eps * a >= log n
    size = math.ceil((1 + eps) * a)
    with criterion(7) as st:
        passed = 0
        for seed in range(30):
            pal = PaletteSet.random(g.m, 3 * a, size, np.random.default_rng(seed))
            res = combine_lfd(g, pal, eps, seed, a=a)
            ok = True
            if not (res.report.ok and res.coloring.is_total() and union_find_acyclic(g, res.coloring)):
                st["bad"].append((seed, "classes not acyclic or edges uncolored"))
                ok = False
            if any(res.coloring[e] not in pal[e] for e in range(g.m)):
                st["bad"].append((seed, "color outside its palette"))
                ok = False
            part_of = [1 if e in res.second_part else 0 for e in range(g.m)]
            if cross_component_violations(g, res.coloring, part_of):
                st["bad"].append((seed, "a color class joins both parts"))
                ok = False
            passed += ok
        st["detail"] = f"{passed}/30 seeds, palettes of size {size} over {3 * a} colors"


def star_inputs():
    for seed in range(10):
        yield f"gnp{seed}", gnp(60, 0.2, seed), "sfd", None
    for seed in range(3):
        toy = nx.random_regular_graph(6, 40, seed=seed)
        yield f"regular{seed}", MultiGraph(40, sorted(toy.edges())), "sfd", None
    for seed in range(3):
        g = gnp(50, 0.15, 10 + seed)
        size = 3 * math.ceil(Fraction(3, 2) * (pseudo_arboricity(g)[0].value + 1))
        yield f"lsfd{seed}", g, "lsfd", PaletteSet.random(g.m, 4 * size, size, np.random.default_rng(seed))


def test_criterion_8_star_forests():
    eps = Fraction(1, 2)
    with criterion(8) as st:
        runs = 0
        for name, g, mode, pal in star_inputs():
            a = pseudo_arboricity(g)[0].value + 1
            run = star_forest_decomposition(g, eps, mode, pal, stream=runs, a=a, test_mode=True,
                                            leaf_prob=0.5 if mode == "lsfd" else None)
            runs += 1
            if not check_star_forest(g, run.coloring, pal).ok:
                st["bad"].append((name, "not a star-forest decomposition"))
            # list colorings draw from the palettes, so only the plain mode has a color budget
            if mode == "sfd" and run.colors > (1 + run.c_bound * float(eps)) * run.a + 1e-9:
                st["bad"].append((name, f"{run.colors} colors, c = {run.c_bound:.2f}"))
            if run.max_deficit > run.delta:
                st["bad"].append((name, f"deficit {run.max_deficit} > {run.delta}"))
        st["detail"] = f"{runs} runs (sfd and lsfd, test-mode thresholds)"


def test_criterion_9_stochastic_cut_rate():
    g = gnp(256, 3 / 256, 0)
    beta = 0.2
    trials = 10_000
    cut = np.zeros(g.m)
    for s in range(trials):
        kept = stochastic_decomposition(g, beta, s).kept_edges
        cut += [e not in kept for e in range(g.m)]
    limit = beta + 3 * math.sqrt(beta * (1 - beta) / trials)
    with criterion(9) as st:
        rates = cut / trials
        st["bad"] = [(int(e), float(rates[e])) for e in np.flatnonzero(rates > limit)]
        st["detail"] = f"{g.m} edges, beta = {beta}, max cut frequency {rates.max():.4f} <= {limit:.4f}"


CLI_PLANS = [
    ["gen", "--family", "random_forest_union", "--n", 80, "--k", 4, "--seed", 1],
    ["gen", "--family", "gnp", "--n", 60, "--p", 0.1, "--seed", 2],
    ["orient", "--family", "gnp", "--n", 120, "--p", 0.08, "--eps", "1/2", "--seed", 3],
    ["orient", "--family", "random_forest_union", "--n", 200, "--k", 5, "--eps", "1", "--seed", 4],
    ["orient", "--family", "path_multigraph", "--l", 40, "--k", 6, "--eps", "1/4", "--seed", 5],
    ["decompose", "--family", "random_forest_union", "--n", 120, "--k", 6, "--eps", "1/2", "--a-bound", 6,
     "--seed", 6],
    ["decompose", "--family", "random_forest_union", "--n", 120, "--k", 6, "--eps", "3/5", "--a-bound", 6,
     "--diameter", "log", "--seed", 7],
    ["decompose", "--family", "random_forest_union", "--n", 120, "--k", 6, "--eps", "3/5", "--a-bound", 6,
     "--diameter", "inverse", "--seed", 8],
    ["decompose", "--family", "path_multigraph", "--l", 40, "--k", 20, "--eps", "1/2", "--a-bound", 20,
     "--strategy", "random_outedge", "--override", "R=6", "--override", "R_prime=2", "--override", "p=0.5",
     "--no-precondition-check", "--seed", 9],
    ["decompose", "--family", "gnp", "--n", 80, "--p", 0.1, "--eps", "1/2", "--algo", "greedy-fd", "--seed", 10],
    ["decompose", "--family", "gnp", "--n", 80, "--p", 0.1, "--eps", "1/2", "--algo", "star-3t", "--seed", 11],
    ["decompose", "--family", "path_multigraph", "--l", 4, "--k", 2, "--eps", "1", "--algo", "exhaustive",
     "--max-colors", 3, "--seed", 12],
    ["star", "--family", "gnp", "--n", 60, "--p", 0.2, "--eps", "1/2", "--test-mode", "--seed", 13],
    ["star", "--family", "gnp", "--n", 50, "--p", 0.15, "--eps", "1/2", "--mode", "lsfd", "--universe", 80,
     "--palette-size", 20, "--test-mode", "--leaf-prob", 0.5, "--seed", 14],
    ["lfd", "--family", "path_multigraph", "--l", 5, "--k", 400, "--eps", "1/2", "--a-bound", 400, "--seed", 15],
    ["oracle", "--family", "complete", "--n", 7, "--kind", "arboricity", "--seed", 16],
    ["oracle", "--family", "gnp", "--n", 200, "--p", 0.05, "--kind", "pseudo-arboricity", "--seed", 17],
    ["oracle", "--family", "gnp", "--n", 200, "--p", 0.05, "--kind", "degeneracy", "--seed", 18],
    ["orient", "--family", "cycle", "--n", 50, "--eps", "1", "--seed", 19],
    ["decompose", "--family", "complete", "--n", 3, "--eps", "1/2", "--algo", "greedy-fd", "--max-colors", 2,
     "--max-diameter", 1, "--seed", 20],
]


def test_criterion_10_cli_replay(tmp_path):
    def digest(path):
        return hashlib.sha256(path.read_bytes()).hexdigest()

    with criterion(10) as st:
        identical = 0
        for i, plan in enumerate(CLI_PLANS):
            digests = []
            for rep in range(2):
                out, led = tmp_path / f"{i}-{rep}.out", tmp_path / f"{i}-{rep}.ledger"
                argv = [str(x) for x in plan] + ["-o", str(out)]
                if plan[0] != "gen":
                    argv += ["--ledger", str(led)]
                code = main(argv)
                if code not in (0, 1):
                    st["bad"].append((i, f"exit code {code}"))
                digests.append((digest(out), digest(led) if led.exists() else None))
            if digests[0] == digests[1]:
                identical += 1
            else:
                st["bad"].append((i, plan[0], "artifacts differ between replays"))
        st["detail"] = f"{identical}/{len(CLI_PLANS)} plans byte-identical (artifact and round ledger)"

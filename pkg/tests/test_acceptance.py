"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -s` to see the lines on success;
pytest always shows them for failing criteria.
"""

import itertools
import time

import numpy as np

from beliefnet.agents import init_confidence_random, init_understanding
from beliefnet.cli import main as cli_main
from beliefnet.config import SimConfig
from beliefnet.dynamics import advance, initial_state, oracle_step
from beliefnet.experiments import run_config, run_trial, seed_mean, sweep
from beliefnet.graphs import (
    Graph,
    NotScalableError,
    generate_er,
    generate_two_community,
    giant_component_fraction,
    sinkhorn_normalize,
)
from beliefnet.rng import substream

SEEDS = list(range(10))


def report(number: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"criterion {number}: {status} ({detail})")
    assert ok, f"criterion {number} failed: {detail}"


def connected_er_seed(k: float = 10.0, n: int = 400) -> int:
    for seed in range(50):
        if giant_component_fraction(generate_er(n, k, seed)) == 1.0:
            return seed
    raise AssertionError("no connected ER graph found in 50 seeds")


def test_criterion_1_random_init_trial():
    start = time.perf_counter()
    stds, widths, late_max = [], [], []
    for seed in SEEDS:
        out, res = run_trial("random_giant", seed=seed)
        final = out.trajectory[-1].beliefs
        stds.append(res.final_belief_std)
        widths.append(float(final.max() - final.min()))
        late_max.append(max(s.pressure.max() for s in out.trajectory if s.step > 5))
    elapsed = time.perf_counter() - start
    mean_std = float(np.mean(stds))
    mean_width = float(np.mean(widths))
    worst_late = float(np.max(late_max))
    ok = mean_std <= 0.01 and mean_width <= 0.05 and worst_late <= 0.02 and elapsed <= 5.0
    report(1, ok,
           f"seed-mean final std={mean_std:.5f} (<=0.01), "
           f"mean range width={mean_width:.4f} (<=0.05), "
           f"max late pressure={worst_late:.4f} (<=0.02), runtime={elapsed:.2f}s (<=5s)")


def test_criterion_2_zero_self_confidence_reduction():
    seed = connected_er_seed()
    cfg = SimConfig(c=0.0, seed=seed)
    out = run_config(cfg)
    final = out.trajectory[-1].beliefs
    initial_mean = float(out.trajectory[0].beliefs.mean())
    std = float(np.std(final))
    drift = abs(float(final.mean()) - initial_mean)
    ok = std < 1e-6 and drift < 1e-6
    report(2, ok, f"connected seed={seed}, final std={std:.2e} (<1e-6), "
                  f"|consensus - initial mean|={drift:.2e} (<1e-6)")


def test_criterion_3_full_self_confidence_collapse():
    out = run_config(SimConfig(c=1.0, seed=0))
    beliefs_track_reasoning = all(
        np.array_equal(s.beliefs, s.self_reasoning) for s in out.trajectory
    )
    pressure_zero = all((s.pressure == 0.0).all() for s in out.trajectory)
    ok = beliefs_track_reasoning and pressure_zero
    report(3, ok, f"beliefs==self_reasoning at all steps: {beliefs_track_reasoning}, "
                  f"pressure exactly 0 at all steps: {pressure_zero}")


def test_criterion_4_pressure_zero_at_origin():
    configs = [
        SimConfig(seed=1),
        SimConfig(seed=2, network_kind="communities", confidence_mode="polarized",
                  polarization_index=0.8),
        SimConfig(seed=3, confidence_mode="polarized", c=0.9),
        SimConfig(seed=4, n=7, m=1, k=2.0, steps=1),
        SimConfig(seed=5, n=50, k=0.5, steps=2),  # mostly isolated agents
    ]
    worst = max(float(run_config(cfg).trajectory[0].pressure.max()) for cfg in configs)
    report(4, worst == 0.0, f"max step-0 pressure over {len(configs)} configurations = {worst}")


def test_criterion_5_complement_pair_invariant():
    worst = 0.0
    for kind in ("polarized_giant", "polarized_communities"):
        out, _ = run_trial(kind, seed=0)
        m = out.config.m
        for state in out.trajectory:
            gap = np.abs(state.confidence[:, m:] - (1.0 - state.confidence[:, :m]))
            worst = max(worst, float(gap.max()))
    report(5, worst <= 1e-12, f"max |b_neg - (1 - b_pos)| over 40 steps = {worst:.2e} (<=1e-12)")


def test_criterion_6_doubly_stochastic_weights():
    worst = 0.0
    graphs = [generate_er(400, 10, s) for s in SEEDS]
    graphs += [generate_two_community(400, 10, 0.5, s) for s in SEEDS]
    graphs += [generate_er(100, 4, 0), generate_er(800, 10, 1)]
    graphs += [Graph(n=4, edges=np.array([[0, 1], [1, 2], [2, 3], [0, 3]]))]
    for g in graphs:
        w = sinkhorn_normalize(g)
        worst = max(worst,
                    float(np.max(np.abs(w.row_sums() - 1.0))),
                    float(np.max(np.abs(w.col_sums() - 1.0))))
    path = Graph(n=3, edges=np.array([[0, 1], [1, 2]]))
    try:
        sinkhorn_normalize(path, add_self_loops=False)
        raised = False
    except NotScalableError:
        raised = True
    ok = worst <= 1e-9 and raised
    report(6, ok, f"worst row/col sum deviation over {len(graphs)} networks = {worst:.2e} "
                  f"(<=1e-9), path-without-self-loops raises: {raised}")


def test_criterion_7_oracle_equivalence():
    worst = 0.0
    for seed in range(100):
        rng = substream(seed, "acceptance-oracle")
        n = int(rng.integers(2, 7))
        m = int(rng.integers(1, 4))
        g = generate_er(n, float(rng.uniform(0.5, n - 1)) if n > 1 else 0.0, seed)
        w = sinkhorn_normalize(g)
        u = init_understanding(n, m, float(rng.uniform(0, 1)), seed + 1)
        b = init_confidence_random(n, m, seed + 2)
        c = float(rng.uniform(0, 1))
        state = initial_state(w, u, b, c)
        for _ in range(3):
            fast = advance(state, w, u, c)
            slow = oracle_step(state, w, u, c)
            worst = max(
                worst,
                float(np.max(np.abs(fast.confidence - slow.confidence))),
                float(np.max(np.abs(fast.beliefs - slow.beliefs))),
                float(np.max(np.abs(fast.self_reasoning - slow.self_reasoning))),
                float(np.max(np.abs(fast.pressure - slow.pressure))),
            )
            state = fast
    report(7, worst <= 1e-12, f"max engine/oracle deviation over 100 instances = {worst:.2e} (<=1e-12)")


def test_criterion_8_polarized_comparison():
    stats = {}
    for kind in ("polarized_giant", "polarized_communities"):
        stds, mean_p, max_p = [], [], []
        for seed in SEEDS:
            _, res = run_trial(kind, seed=seed)
            stds.append(res.final_belief_std)
            mean_p.append(res.mean_pressure)
            max_p.append(res.max_pressure)
        stats[kind] = (float(np.mean(stds)), float(np.mean(mean_p)), float(np.mean(max_p)))
    g_std, g_meanp, g_maxp = stats["polarized_giant"]
    c_std, c_meanp, c_maxp = stats["polarized_communities"]
    std_ok = g_std < c_std
    pressure_ok = g_meanp > c_meanp
    range_ok = 0.05 <= g_maxp <= 0.3 and 0.05 <= c_maxp <= 0.3
    ok = std_ok and pressure_ok and range_ok
    report(8, ok,
           f"final std giant={g_std:.5f} < communities={c_std:.5f}: {std_ok}; "
           f"mean pressure giant={g_meanp:.5f} > communities={c_meanp:.5f}: {pressure_ok}; "
           f"max pressure giant={g_maxp:.3f}, communities={c_maxp:.3f} in [0.05,0.3]: {range_ok}")


def test_criterion_9_sweep_monotonicity():
    start = time.perf_counter()
    base = SimConfig()

    by_c = seed_mean(sweep("connectivity", [10], [0, 0.25, 0.5, 0.75, 1.0], SEEDS, base))
    c_curve = [by_c[(10.0, c)] for c in (0, 0.25, 0.5, 0.75, 1.0)]
    c_ok = all(b >= a - 1e-12 for a, b in itertools.pairwise(c_curve))

    by_n = seed_mean(sweep("population", [100, 200, 400, 800], [0.5], SEEDS, base))
    n_curve = [by_n[(n, 0.5)] for n in (100, 200, 400, 800)]
    n_ok = all(b < a for a, b in itertools.pairwise(n_curve))

    ks = [10, 15, 20, 25, 30, 35, 40]
    by_k = seed_mean(sweep("connectivity", ks, [0.5], SEEDS, base))
    k_curve = [by_k[(float(k), 0.5)] for k in ks]
    k_rel = (max(k_curve) - min(k_curve)) / float(np.mean(k_curve))
    k_ok = k_rel < 0.30

    by_m = seed_mean(sweep("evidence_count", [2, 5, 10, 20], [0.5], SEEDS, base))
    m_curve = [by_m[(m, 0.5)] for m in (2, 5, 10, 20)]
    m_ok = all(b <= a + 1e-12 for a, b in itertools.pairwise(m_curve))

    elapsed = time.perf_counter() - start
    ok = c_ok and n_ok and k_ok and m_ok and elapsed <= 300.0
    report(9, ok,
           f"std nondecreasing in c {['%.5f' % v for v in c_curve]}: {c_ok}; "
           f"decreasing in n {['%.5f' % v for v in n_curve]}: {n_ok}; "
           f"k relative variation={k_rel:.3f} (<0.30): {k_ok}; "
           f"nonincreasing in m {['%.5f' % v for v in m_curve]}: {m_ok}; "
           f"runtime={elapsed:.1f}s (<=300s)")


def test_criterion_10_byte_identical_trial_outputs(tmp_path):
    args = ["trial", "random_giant", "--seed", "7"]
    dir1, dir2 = tmp_path / "run1", tmp_path / "run2"
    assert cli_main(args + ["--out", str(dir1)]) == 0
    assert cli_main(args + ["--out", str(dir2)]) == 0
    names1 = sorted(p.name for p in dir1.iterdir())
    names2 = sorted(p.name for p in dir2.iterdir())
    identical = names1 == names2 and all(
        (dir1 / name).read_bytes() == (dir2 / name).read_bytes() for name in names1
    )
    report(10, identical, f"files {names1} byte-identical across repeated invocations: {identical}")

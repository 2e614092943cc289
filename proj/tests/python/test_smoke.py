"""Smoke tests for the python bindings."""

import math

import pytest

import neurosa as ns


def reference_config(iters, seed, c=800.0):
    cfg = ns.SolverConfig()
    cfg.max_iter = iters
    cfg.seed = seed
    cfg.schedule.t0 = 0.3125
    cfg.schedule.c = c
    cfg.record_spikes = False
    return cfg


def test_energy_and_delta():
    p = ns.IsingProblem(2, ns.Domain.Spin, [(0, 1, 1.0), (1, 0, 1.0)])
    assert p.energy([1, -1]) == -1.0
    assert p.energy([1, 1]) == 1.0
    assert p.delta_energy([1, 1], 0) == -2.0


def test_schedule_values():
    sched = ns.AnnealSchedule()
    sched.t0 = 0.3125
    sched.c = 8.0e4
    assert sched.temperature(80000) == pytest.approx(0.3125 / math.log(2.0))
    seq = ns.fn_integrate(sched, 100)
    assert seq[0] == pytest.approx(0.3125, rel=1e-9)


def test_solver_reaches_oracle_optimum():
    g = ns.gen_random_graph(12, 0.4, 7, True)
    problem = ns.maxcut_encode(g)
    oracle = ns.brute_force(problem)
    trace = ns.run(problem, reference_config(300000, 3))
    assert trace.best_energy == oracle.best_value
    assert ns.maxcut_decode(g, trace.best_state) == (
        g.total_weight() - oracle.best_value
    ) / 2


def test_determinism_and_replicas():
    g = ns.gen_random_graph(16, 0.3, 11, True)
    problem = ns.maxcut_encode(g)
    cfg = reference_config(20000, 5)
    assert ns.run(problem, cfg) == ns.run(problem, cfg)
    traces = ns.run_parallel(problem, cfg, 3, 3)
    assert len(traces) == 3
    assert traces[0] == ns.run(problem, cfg)


def test_network_matches_reference_sa():
    g = ns.gen_random_graph(14, 0.3, 21, True)
    problem = ns.maxcut_encode(g)
    cfg = reference_config(20000, 9)
    cfg.record_spikes = True
    net = ns.run(problem, cfg)
    ref = ns.reference_sa(problem, cfg.schedule, cfg.noise, cfg.seed, cfg.max_iter)
    assert net.spike_count == ref.spike_count
    assert [s.iteration for s in net.spikes] == [s.iteration for s in ref.spikes]
    assert net.best_energy == ref.best_energy


def test_mis_pipeline():
    g = ns.gen_random_graph(14, 0.25, 33)
    problem = ns.mis_encode(g, 0.75)
    trace = ns.run(problem, reference_config(200000, 2))
    size, feasible, members = ns.mis_decode(g, trace.best_state, True)
    assert feasible
    assert size == ns.max_independent_set_size(g)


def test_gset_round_trip():
    text = "3 2\n1 2 1\n2 3 -1\n"
    g = ns.parse_gset(text, "toy")
    assert g.n == 3
    assert g.edges == [(0, 1, 1), (1, 2, -1)]
    assert ns.write_gset(g) == text


def test_analyze_trace():
    g = ns.gen_random_graph(10, 0.4, 8, True)
    problem = ns.maxcut_encode(g)
    cfg = reference_config(20000, 13)
    cfg.record_spikes = True
    trace = ns.run(problem, cfg)
    pca = ns.analyze_trace(trace, 2000, 1000, 3)
    assert not pca.degenerate
    assert pca.windows == 19
    assert 0.0 < pca.captured_fraction() <= 1.0 + 1e-12

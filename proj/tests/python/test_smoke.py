"""Smoke tests for the wsnsim python module (built by CMake/pybind11)."""

import math

import wsnsim


def table_params():
    p = wsnsim.EnergyParams()
    p.e_elec = 50e-9
    p.e_amp = 0.659e-9
    p.e_amp_far = 0.659e-9
    p.e_cpu = 7e-9
    p.e_da = 5e-9
    p.d0 = 87.7
    p.packet_bits = 4000
    return p


def test_radio_formulas():
    p = table_params()
    assert math.isclose(wsnsim.tx_cost(4000, 10.0, p), 4.636e-4, rel_tol=1e-12)
    assert math.isclose(wsnsim.rx_cost(4000, p), 2.0e-4, rel_tol=1e-12)
    assert math.isclose(wsnsim.cpu_cost(4000, p), 2.8e-5, rel_tol=1e-12)
    assert math.isclose(wsnsim.total_cost(4000, 10.0, p), 6.916e-4, rel_tol=1e-12)
    assert wsnsim.path_loss_exponent(10.0, 87.7) == 2
    assert wsnsim.path_loss_exponent(150.0, 87.7) == 4


def test_build_network_and_distance():
    cfg = wsnsim.NetworkConfig()
    cfg.seed = 11
    nodes = wsnsim.build_network(cfg)
    assert len(nodes) == 100
    assert all(n.alive and n.eligible for n in nodes)
    assert wsnsim.distance(wsnsim.Position(0, 0), wsnsim.Position(3, 4)) == 5.0


def test_simulation_is_deterministic_and_monotone():
    cfg = wsnsim.NetworkConfig()
    cfg.node_count = 30
    cfg.initial_energy = 0.01
    cfg.max_rounds = 200
    cfg.seed = 3
    cfg.protocol = wsnsim.Protocol.PROPOSED

    a = wsnsim.run_simulation(cfg)
    b = wsnsim.run_simulation(cfg)
    assert [r.alive_after for r in a.rounds] == [r.alive_after for r in b.rounds]

    alive = [r.alive_after for r in a.rounds]
    assert all(x >= y for x, y in zip(alive, alive[1:]))

    report = wsnsim.summarize(a)
    assert report.rounds_simulated == len(a.rounds)
    if report.first_death_round is not None and report.half_dead_round is not None:
        assert report.first_death_round <= report.half_dead_round


def test_cluster_capacity_and_thresholds():
    assert wsnsim.cluster_capacity(100, 5) == 19
    node = wsnsim.SensorNode()
    node.id = 0
    node.pos = wsnsim.Position(50, 100)
    node.energy = 0.5
    node.initial_energy = 0.5
    ctx = wsnsim.ElectionContext()
    ctx.round_index = 0
    ctx.p = 0.05
    ctx.alive_count = 100
    ctx.bs_pos = wsnsim.Position(50, 200)
    assert math.isclose(wsnsim.leach_threshold(node, ctx), 0.05, rel_tol=1e-12)
    lay = wsnsim.Layering()
    lay.d1, lay.d2, lay.boundary_l = 200.0, 100.0, 150.0
    ctx.layering = lay
    assert wsnsim.proposed_threshold(node, ctx) == wsnsim.leach_threshold(node, ctx)


def test_aggregate():
    cfg = wsnsim.NetworkConfig()
    cfg.node_count = 20
    cfg.initial_energy = 0.005
    cfg.max_rounds = 100
    reports = []
    for seed in (1, 2, 3):
        cfg.seed = seed
        reports.append(wsnsim.summarize(wsnsim.run_simulation(cfg)))
    summary = wsnsim.aggregate(reports)
    assert summary.first_death.count + summary.first_death.missing == 3
    if summary.first_death.count:
        assert summary.first_death.min <= summary.first_death.median <= summary.first_death.max


def test_trace_csv(tmp_path):
    cfg = wsnsim.NetworkConfig()
    cfg.node_count = 10
    cfg.initial_energy = 0.005
    cfg.max_rounds = 50
    trace = wsnsim.run_simulation(cfg)
    dest = tmp_path / "trace.csv"
    bytes_written = wsnsim.write_trace_csv(trace, dest)
    text = dest.read_text()
    assert bytes_written == len(text)
    assert text.startswith("round,alive,total_energy_j,heads,deaths,bs_x,bs_y\n")
    assert len(text.splitlines()) == len(trace.rounds) + 1

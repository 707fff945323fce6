"""Smoke tests for the python bindings."""

import math

import pytest

import graphonlab as gl


def test_graph_basics():
    g = gl.Graph(3, [(0, 1), (1, 2)])
    assert g.order == 3
    assert g.edge_count == 2
    assert g.adjacent(1, 0)
    assert gl.automorphism_count(gl.Graph.triangle()) == 6
    assert gl.are_isomorphic(gl.Graph.cherry(), gl.Graph.path(3))
    num, den = gl.induced_density_finite(gl.Graph.single_edge(), gl.Graph.path(3))
    assert (num, den) == (2, 3)


def test_graphon_eval_and_degree():
    w = gl.rademacher_graphon()
    assert w(0.7, 0.4) == w(0.4, 0.7)
    deg = gl.degree(w, 0.95)  # a vertex of D
    assert abs(deg.value - 8 / 45) < 1e-6
    assert w.partition is not None
    assert len(w.partition.sizes) == 8

    half = gl.half_graphon()
    assert half(0.7, 0.4) == 1.0
    assert half(0.2, 0.4) == 0.0


def test_densities():
    est = gl.graphon_density(gl.Graph.single_edge(), gl.constant_graphon(0.5))
    assert est.method == "exact-step"
    assert est.value == pytest.approx(0.5)

    w = gl.rademacher_graphon()
    nonedge = gl.DecoratedGraph(gl.Graph.empty(2), [0, 0])
    est = gl.decorated_density(nonedge, w)
    assert est.value == pytest.approx(1 / 243, abs=1e-6)

    mc = gl.graphon_density(gl.Graph.triangle(), gl.half_graphon(), method="mc", budget=200_000, seed=5)
    assert abs(mc.value - 0.25) < 3 * mc.stderr + 1e-3


def test_sampling_is_deterministic():
    w = gl.half_graphon()
    g1 = gl.sample_w_random_graph(w, 60, seed=9)
    g2 = gl.sample_w_random_graph(w, 60, seed=9)
    assert g1 == g2
    emp = gl.empirical_density(gl.Graph.single_edge(), g1)
    assert 0.2 < emp.value < 0.8


def test_vertex_space_witnesses():
    g = gl.witness_g()
    gi = gl.witness_g_i_delta(3, 0.1)
    dist = gl.l1_distance(gi, g)
    assert dist.value == pytest.approx(((4 + 0.2) * 2**-3 + 0.2) / 9, abs=1e-9)
    assert gl.check_separation(3, 0.1, 5, 0.1)

    diag = gl.packing_diagnostic(2**-6, 4)
    assert diag["certified"]
    assert [w[0] for w in diag["witnesses"]] == [7, 8, 9, 10]

    y = gl.wr_witness_root_point(3, 0.1)
    section = gl.rademacher_graphon().section(y)
    assert gl.l1_distance(section, gi).value <= 2 * 2**-12


def test_constraints_and_verification():
    w = gl.rademacher_graphon()
    rows = gl.verify_wr_identities(w, budget=20_000, filter="eq2")
    assert rows and all(r[4] == "satisfied" for r in rows)

    spec = gl.wr_partition_spec()
    zeros = gl.zero_constraints_wr(spec)
    assert len(zeros) == 16
    result = gl.check_constraint(zeros[0], w, tol=1e-8)
    assert result["verdict"] == "satisfied"


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        gl.constant_graphon(1.5)
    with pytest.raises(ValueError):
        gl.witness_g_i_delta(0, 0.5)


def test_run_cli():
    assert gl.run_cli(["degree", "--graphon", "builtin:half", "--x", "0.5", "--out", "/tmp/gl_py_cli.csv"]) == 0
    with open("/tmp/gl_py_cli.csv") as fh:
        assert fh.readline().strip() == "x,value,stderr,method"

# SPDX-License-Identifier: Apache-2.0
"""End-to-end smoke tests for the Python bindings and the installed CLI."""

import importlib.util
import json
import os
import pathlib
import subprocess

import pytest

import mbbp

EDGES = [
    (1, 6), (1, 7), (2, 7), (2, 8), (2, 9), (3, 7), (3, 8), (3, 9),
    (4, 6), (4, 9), (4, 10), (5, 8), (5, 10),
]

CLI = os.environ.get("MBBP_CLI")
LP_SCRIPT = pathlib.Path(__file__).resolve().parents[2] / "tools" / "lp_relax.py"


def sample():
    return mbbp.BipartiteGraph.build(5, 5, EDGES)


def test_graph_queries():
    g = sample()
    assert (g.u_count, g.v_count, g.edge_count) == (5, 5, 13)
    assert g.neighbors(2) == [7, 8, 9]
    assert g.has_edge(1, 6) and not g.has_edge(1, 8)
    assert g.side_of(3) == mbbp.Side.U and g.side_of(8) == mbbp.Side.V
    assert len(g.non_edges()) == 12


def test_build_rejects_bad_input():
    with pytest.raises(mbbp.InvalidVertexError):
        mbbp.BipartiteGraph.build(2, 2, [(1, 1)])
    with pytest.raises(mbbp.DuplicateEdgeError):
        mbbp.BipartiteGraph.build(2, 2, [(1, 3), (1, 3)])


def test_bounds_pipeline():
    g = sample()
    bounds = mbbp.run_ubp(g)
    assert bounds.ub == [1, 2, 2, 1, 1, 1, 2, 2, 2, 1]
    assert bounds.iterations == 1
    assert all(bounds.of(v) == mbbp.vertex_bound(g, v) for v in range(1, 11))
    assert mbbp.h_index([3, 1, 3, 2]) == 2


def test_solvers_and_oracle_agree():
    g = sample()
    ref = mbbp.brute_force_max_balanced(g)
    assert ref.half_size == 2 and ref.subsets == 32
    for algo in ("bbclq", "extbbclq", "extunibbclq", "oracle"):
        res = mbbp.solve(g, algo)
        assert res.half_size == 2
        assert g.verify_balanced_biclique(res.best)
    with pytest.raises(mbbp.UnknownAlgorithmError):
        mbbp.solve(g, "simplex")


def test_random_instances_match_oracle():
    for seed in range(1, 6):
        g = mbbp.gen_random(7, 0.4, seed)
        want = mbbp.brute_force_max_balanced(g).half_size
        assert mbbp.solve(g, "extunibbclq").half_size == want


def test_zero_time_limit_reports_timeout():
    res = mbbp.solve(sample(), "extbbclq", time_limit_seconds=0.0)
    assert res.stats.status == mbbp.SolveStatus.TimeLimit


def test_mip_models():
    g = sample()
    orig = mbbp.build_original(g)
    assert orig.var_count == 10 and len(orig.constraints) == 13
    tight = mbbp.with_tightening(g, mbbp.run_ubp(g))
    assert len(tight.constraints) == 17
    assert (tight.ell_u, tight.ell_v) == (2, 2)
    assert mbbp.check_inequalities(g, orig)
    assert mbbp.check_inequalities(g, tight)
    text = tight.to_lp()
    assert text.splitlines()[0] == "\\ mbbp model"
    assert "2 x1 + x2 + x3 + x4 + 2 x5 <= 2" in text
    assert tight.to_lp() == text


def test_native_and_konect_round_trips(tmp_path):
    g = mbbp.gen_random(9, 0.35, 11)
    text = mbbp.write_native(g)
    assert mbbp.write_native(mbbp.read_native(text)) == text
    path = str(tmp_path / "g.mbbp")
    mbbp.write_native_file(g, path)
    assert mbbp.write_native(mbbp.read_native_file(path)) == text
    with pytest.raises(mbbp.ParseFormatError):
        mbbp.read_native("p wrong 1 1 0\n")

    k = mbbp.parse_konect("% bipartite\n1 2\n2 1\n2 2\n2 2\n")
    assert (k.u_count, k.v_count, k.edge_count) == (2, 2, 3)
    assert k.has_edge(1, 4) and k.has_edge(2, 3) and k.has_edge(2, 4)


def test_generator_determinism():
    a = mbbp.gen_random(20, 0.5, 99)
    b = mbbp.gen_random(20, 0.5, 99)
    assert mbbp.write_native(a) == mbbp.write_native(b)


@pytest.mark.skipif(
    importlib.util.find_spec("scipy") is None, reason="scipy not installed"
)
def test_lp_relaxation_objectives():
    g = sample()
    cmd = f"python3 '{LP_SCRIPT}' {{}}"
    assert mbbp.lp_relaxation(mbbp.build_original(g), cmd) == pytest.approx(2.5, abs=1e-6)
    tight = mbbp.with_tightening(g, mbbp.run_ubp(g))
    assert mbbp.lp_relaxation(tight, cmd) == pytest.approx(2.0, abs=1e-6)
    assert mbbp.lp_relaxation(mbbp.build_original(g), "") is None


@pytest.mark.skipif(CLI is None, reason="MBBP_CLI not set")
def test_cli_solve_record(tmp_path):
    g = mbbp.gen_random(8, 0.4, 3)
    inst = tmp_path / "g.mbbp"
    mbbp.write_native_file(g, str(inst))
    out = subprocess.run(
        [CLI, "solve", "--algo", "extbbclq", "--json", str(inst)],
        capture_output=True, text=True, check=True,
    )
    rec = json.loads(out.stdout)
    assert list(rec) == [
        "instance", "algo", "half_size", "nodes", "time_ms", "status",
        "ubp_iters", "ubp_time_ms",
    ]
    assert rec["half_size"] == mbbp.brute_force_max_balanced(g).half_size
    assert rec["status"] == "optimal"


@pytest.mark.skipif(CLI is None, reason="MBBP_CLI not set")
def test_cli_verify_round_trip(tmp_path):
    inst = tmp_path / "g.mbbp"
    sol = tmp_path / "g.sol"
    g = sample()
    mbbp.write_native_file(g, str(inst))
    res = mbbp.solve(g, "extunibbclq")
    sol.write_text(
        " ".join(map(str, res.best.side_a)) + "\n"
        + " ".join(map(str, res.best.side_b)) + "\n"
    )
    out = subprocess.run(
        [CLI, "verify", str(inst), "--solution", str(sol)],
        capture_output=True, text=True,
    )
    assert out.returncode == 0
    assert "verified optimal" in out.stdout

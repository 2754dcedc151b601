"""Smoke test for the pathfactor extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`,
then run `python3 python/smoke_test.py`.
"""

import pathfactor as pf


def check_k34():
    g = pf.Graph.fixture("k34")
    assert g.k() == 1 and g.is_simple
    assert pf.Graph.from_text(g.to_text()) == g
    factor = pf.solve(g)
    assert factor.paths == [["y2", "x2", "y0", "x0", "y1", "x1", "y3"]]
    assert pf.validate_path_factor(g, factor.paths) == []


def check_counterexample():
    g = pf.Graph.fixture("counterexample")
    assert not g.is_simple
    assert pf.brute_force_factor(g) is None
    try:
        pf.solve(g)
    except ValueError as e:
        assert "not simple" in str(e)
    else:
        raise AssertionError("solve accepted a multigraph")


def check_random():
    for k, seed in [(2, 7), (10, 1), (50, 3)]:
        g = pf.Graph.generate(k, seed)
        assert g.k() == k
        paths, uncovered = pf.build_pseudo_factor(g)
        assert all(v.startswith("y") for v in uncovered)
        for policy in ["lex", "random:5"]:
            factor = pf.solve(g, policy, checked=True)
            assert len(factor) == k
            assert sum(factor.lengths) == 6 * k
            assert pf.validate_path_factor(g, factor.paths) == []
        factor, trace = pf.solve_traced(g)
        assert trace[0].startswith("step 0 case 0 ")
        assert sum(line.startswith("augment ") for line in trace) == len(uncovered)
    witness = pf.brute_force_factor(pf.Graph.generate(2, 7))
    assert witness is not None and len(witness) == 2


def check_rejections():
    bad = pf.validate_path_factor(pf.Graph.fixture("k34"), [["y2", "x2", "y0", "x0", "y1", "x1"]])
    assert "endpoint-degree" in [rule for rule, _ in bad]
    for call in [
        lambda: pf.Graph.generate(0, 1),
        lambda: pf.Graph.fixture("nope"),
        lambda: pf.Graph.from_text("p bbg 4 3 1\n"),
        lambda: pf.brute_force_factor(pf.Graph.generate(3, 0)),
        lambda: pf.solve(pf.Graph.fixture("k34"), "best"),
    ]:
        try:
            call()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")


def check_experiment():
    s = pf.run_experiment(1, 5)
    assert s["path_length_histogram"] == {6: 5}
    assert s["pct_all_paths_le_8"] == 100.0
    a = pf.run_experiment(5, 40, seed=1)
    b = pf.run_experiment(5, 40, seed=1, jobs=4)
    for key in ["path_length_histogram", "max_path_seen", "pct_all_paths_le_8"]:
        assert a[key] == b[key]
    assert sum(a["path_length_histogram"].values()) == 5 * 40


if __name__ == "__main__":
    check_k34()
    check_counterexample()
    check_random()
    check_rejections()
    check_experiment()
    print("smoke test passed")

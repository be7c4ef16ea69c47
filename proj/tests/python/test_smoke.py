import pytest

import spgraph


def k2n(n):
    mids = [f"m{i}" for i in range(n)]
    edges = [("a", m) for m in mids] + [(m, "b") for m in mids]
    return spgraph.Instance(spgraph.Graph(["a", "b"] + mids, edges), "a", "b")


def test_complete_bipartite_gives_complete_graph():
    h = spgraph.build_spg(k2n(4))
    assert h.order() == 4
    assert h.size() == 6
    assert h.distance == 2
    assert {index for _, _, index in h.edges()} == {1}


def test_geodesics_and_counts():
    inst = k2n(3)
    paths = spgraph.enumerate_geodesics(inst)
    assert paths == [["a", "m0", "b"], ["a", "m1", "b"], ["a", "m2", "b"]]
    assert spgraph.count_geodesics(inst) == 3
    assert spgraph.sequence_count([12, 12, 12, 12]) == 235809301462142612780721600


def test_phi_round_trip():
    point = spgraph.phi([3, 3, 2], "32121231")
    assert point == [3, 2, 1, 3, 1, 3, 0]
    assert spgraph.phi_inverse([3, 3, 2], point) == "32121231"


def test_constructions_and_checks():
    assert spgraph.check_construction("hypercube", [3])["passed"]
    assert spgraph.check_construction("oddhost", [3])["passed"]
    inst = spgraph.construct("hypercube", [3])
    h = spgraph.build_spg(inst)
    assert h.order() == 8
    for name in ["p3c4", "noc5", "claw", "oddcycle", "girth5"]:
        assert spgraph.check(name, h)["passed"]
    assert spgraph.check_decomposition(inst, 1)["stats"]["components"] == 2


def test_cayley_and_staircase():
    hexagon = spgraph.Graph([str(i) for i in range(6)], [(str(i), str((i + 1) % 6)) for i in range(6)])
    assert spgraph.is_isomorphic(spgraph.cayley(3), hexagon)
    assert spgraph.staircase(2, 2).order() == 6
    assert spgraph.check_grid_embedding([2, 1, 1])["passed"]


def test_reduce_and_errors():
    g = spgraph.Graph(["a", "x", "b"], [("a", "x"), ("x", "b")])
    red = spgraph.reduce(spgraph.Instance(g, "a", "b"))
    assert red["collapsed"]
    with pytest.raises(spgraph.LimitExceededError):
        spgraph.build_spg(k2n(10), limit=5)
    with pytest.raises(spgraph.Error):
        spgraph.Graph(["a"], [("a", "a")])
    with pytest.raises(spgraph.PreconditionError):
        spgraph.phi_inverse([2, 2], [0, 1])


def test_cli_entry():
    code, out, err = spgraph.run_cli(["grid", "count", "--dims", "3,3,2"])
    assert code == 0
    assert out == "560\n"
    assert "seed=1" in err

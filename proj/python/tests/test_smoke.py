import os
import tempfile

import pytest

import localsep
from localsep import generators


def test_cycle_cutvertices():
    g = generators.cycle(8)
    assert localsep.find_local_cutvertices(g, 4) == list(range(8))
    assert localsep.find_local_cutvertices(g, 8) == []
    b = localsep.ball(g, 0, 4)
    assert b.vertices == [0, 1, 2, 6, 7]
    assert b.size == 9


def test_graph_from_edges():
    g = localsep.Graph(3, [(0, 1), (1, 2, 5)], labels=["a", "b", "c"])
    assert g.vertex_count == 3 and g.edge_count == 2
    assert g.max_weight == 5
    assert g.label(2) == "c"
    assert g.neighbors(1) == [0, 2]
    with pytest.raises(ValueError):
        localsep.Graph(2, [(0, 1), (1, 0)])


def test_k4_ring_decomposition():
    g = generators.k4_ring(6)
    records = localsep.find_local_2separators(g, 4)
    nested = localsep.filter_totally_nested(records)
    assert len(nested) == 6
    assert all(r.verdict == localsep.Verdict.NestedByEdge for r in nested)
    dg = localsep.suppress_degree_two_nodes(localsep.build_from_2separators(g, 4, nested))
    assert dg.bag_count == 6
    assert sorted(len(n.vertices) for n in dg.nodes) == [4] * 6
    assert "graph decomposition {" in dg.to_dot(g)


def test_connectivity_graph():
    c = localsep.connectivity_graph(generators.cycle(8), 0, 4, 8)
    assert c.nodes == [1, 3, 5, 7]
    assert c.disconnected()


def test_precondition_error():
    with pytest.raises(localsep.PreconditionError):
        localsep.find_local_2separators(generators.cycle(8), 1)


def test_cli_round_trip():
    with tempfile.TemporaryDirectory() as tmp:
        code, _, _ = localsep.run_cli(["generate", "--kind", "cycle", "--vertices", "8", "--out", tmp])
        assert code == 0
        code, out, _ = localsep.run_cli(["onesep", "--edges", os.path.join(tmp, "edges.csv"), "--d", "4", "--quiet"])
        assert code == 0
        assert out.splitlines() == ["vertex"] + [str(i) for i in range(8)]
        g = localsep.load(os.path.join(tmp, "edges.csv"))
        assert g.edge_count == 8
    assert localsep.run_cli(["onesep"])[0] == 1

import json

import pytest

import oddminor as om


def test_graph_roundtrip():
    g = om.complete_bipartite(3, 3)
    assert g.vertex_count() == 6 and g.edge_count() == 9
    assert om.parse_graph(om.write_graph(g, "edgelist"), "edgelist") == g
    assert om.write_graph(g) == "EFz_\n"


def test_odd_triangle_iff_not_bipartite():
    for n in range(3, 9):
        c = om.cycle_graph(n)
        cert = om.detect_odd_clique(c, 3)
        assert (cert is not None) == (n % 2 == 1)
        if cert is not None:
            assert om.verify_certificate(c, cert) == (True, "")
    assert om.detect_odd_clique(om.complete_bipartite(4, 4), 3) is None


def test_color_k44():
    g = om.complete_bipartite(4, 4)
    r = om.color(g, 3)
    assert r["outcome"] == "colored"
    assert r["palette_used"] <= 9 == r["palette_bound"]
    assert om.verify_certificate(g, r["certificate"])[0]
    doc = om.load_certificate(r["certificate"])
    assert doc["kind"] == "coloring"
    assert sorted(doc["payload"]["colors"], key=int) == [str(v) for v in range(8)]

    r = om.color(g, 3, mode="clustered")
    assert r["palette_used"] <= 17 == r["palette_bound"]


def test_color_c5_gives_certificate():
    r = om.color(om.cycle_graph(5), 3)
    assert r["outcome"] == "odd-minor"
    assert json.loads(r["certificate"])["kind"] == "odd-minor-model"


def test_odd_s_paths():
    g = om.cycle_graph(5)
    doc = json.loads(om.odd_s_paths(g, [0, 2], 1))
    assert doc["kind"] == "packing"
    assert len(doc["payload"]["paths"]) == 1


def test_errors_and_bounds():
    with pytest.raises(om.InputError):
        om.color(om.cycle_graph(4), 3, mode="nope")
    with pytest.raises(om.SizeLimitExceeded):
        om.detect_odd_clique(om.complete_graph(8), 5, limit=4)
    with pytest.raises(om.InputError):
        om.verify_certificate(om.cycle_graph(4), om.color(om.cycle_graph(6), 3)["certificate"])
    assert om.bound_M(3, 2, 5, 3) == 14
    assert om.bound_N(2, 1, 1) == 90

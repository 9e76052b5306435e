import pytest

import planar_cayley as pc

A4 = "group A4 { gens: k r; rels: k^2, r^3, (k*r)^3; involutions: k; }"


def test_a4_order_and_graph():
    assert pc.group_order(A4) == 12
    g = pc.cayley_graph(A4, "k,r")
    assert g["schema"] == "pcl/1"
    assert len(g["vertices"]) == 12
    assert len(g["edges"]) == 18


def test_truncated_tetrahedron():
    res = pc.planarity(A4, "k,r")
    assert res["planar"]
    lengths = sorted(len(f) for f in res["embedding"]["faces"])
    assert lengths == [3] * 4 + [6] * 4
    assert pc.vertex_connectivity(A4, "k,r") == 3
    assert all(cls == "preserving" for _, cls in pc.orientation_table(A4, "k,r"))


def test_prism_and_k44():
    table = dict(pc.orientation_table("@Z4xZ2", "(1,0),(0,1)"))
    assert table["b"] == "reversing"
    res = pc.planarity("@Z4xZ2", "(1,0),(1,1)")
    assert not res["planar"]
    assert res["witness"]["kind"] == "K3,3"


def test_ends():
    assert pc.classify_ends("z-cross-z3", 2, 6)["end_class"] == "2"
    r, R = pc.default_radii("f2")
    assert pc.classify_ends("f2", r, R)["end_class"] == "cantor"
    assert len(pc.ball("f2", 2)["vertices"]) == 17


def test_cut_space_and_catalog():
    assert "A4" in pc.catalog()
    rank, expected = pc.cut_space_rank("@A4", "k,r")
    assert rank == expected == 11


def test_corpus():
    rep = pc.corpus_verify()
    assert rep["pass"]
    assert [c["name"] for c in rep["cases"]] == sorted(c["name"] for c in rep["cases"])


def test_errors():
    with pytest.raises(pc.PclError):
        pc.group_order("group { gens: a; rels: b^2; }")
    with pytest.raises(pc.PclError):
        pc.classify_ends("nope", 1, 4)

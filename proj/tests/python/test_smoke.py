import pytest

import pathgraph as pg


def test_lettered_graph_is_a_path_graph():
    g = pg.lettered_graph()
    assert pg.is_chordal(g)
    assert pg.is_path_graph(g)
    assert not pg.is_directed_path_graph(g)
    assert pg.clique_separators(g) == [[1, 2, 4], [1, 4, 6]]
    cliques, edges = pg.realize(g)
    assert len(cliques) == 6 and len(edges) == 5
    assert pg.oracle_clique_path_tree(g) is not None


def test_k4_hub_certificate():
    g = pg.k4_hub_graph()
    assert not pg.is_path_graph(g)
    assert pg.oracle_clique_path_tree(g) is None
    doc = pg.certify(g)
    sep = doc["separators"][doc["failing_separator"]]
    assert sep["obstruction"]["family"] == "full_antipodal_triangle"
    assert sep["obstruction"]["witness"] == 1
    plus = pg.certify(g, gplus=True)
    assert plus["separators"][plus["failing_separator"]]["induced_obstruction"]["family"] == "w0"
    with pytest.raises(pg.RealizationError):
        pg.realize(g)


def test_parsing_and_errors():
    k4 = pg.parse_graph("C~", "graph6")
    assert k4.vertex_count == 4 and k4.edge_count == 6
    assert pg.to_graph6(k4) == "C~"
    assert pg.parse_graph(pg.to_edgelist(k4)) == k4
    with pytest.raises(pg.InputError, match="line 2"):
        pg.parse_graph("0 1\n2 2\n")
    assert pg.hole(pg.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])) == [0, 1, 2, 3]
    assert pg.hole(k4) is None


def test_generated_graphs():
    for seed in range(20):
        g = pg.gen_path_graph(6, 6, seed)
        assert pg.is_path_graph(g)
        assert len(pg.host_paths(g)) == g.vertex_count
        assert pg.is_chordal(pg.gen_chordal(9, seed))


def test_family_dot():
    assert pg.family_dot("w0", 1).count("style=dotted") == 3

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from stablehit.errors import GraphFormatError
from stablehit.formats import (
    dumps,
    from_edgelist,
    from_graph6,
    from_json,
    loads,
    read_graph,
    sniff_format,
    to_edgelist,
    to_graph6,
    write_graph,
)
from stablehit.graph import build_graph, complete_graph, cycle_graph, petersen_graph, strong_product


@pytest.mark.parametrize("fmt", ["edgelist", "graph6", "json"])
@given(g=graphs(max_n=12))
def test_round_trip(fmt, g):
    assert loads(dumps(g, fmt), fmt) == g


def test_edgelist_layout():
    assert to_edgelist(cycle_graph(3)) == "p 3 3\ne 0 1\ne 0 2\ne 1 2\n"


def test_edgelist_comments_and_dimacs_header():
    g = from_edgelist("c hello\np edge 3 1\n\ne 2 0\n")
    assert g.edges() == [(0, 2)]


@pytest.mark.parametrize(
    "text",
    ["e 0 1\n", "p 2 1\ne 0 5\n", "p 2 2\ne 0 1\n", "p 2 1\nx 0 1\n", "p 2 1\ne 0 1 3\n", "p a b\n", ""],
)
def test_edgelist_rejects(text):
    with pytest.raises(GraphFormatError):
        from_edgelist(text)


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert to_graph6(g) == nx.to_graph6_bytes(h, header=False).decode().strip()


def test_graph6_known_strings():
    # reference encodings from the graph6 format description
    assert to_graph6(petersen_graph()) == nx.to_graph6_bytes(nx.petersen_graph(), header=False).decode().strip()
    assert to_graph6(complete_graph(1)) == "@"
    assert from_graph6(">>graph6<<Bw") == complete_graph(3)


def test_graph6_large_n():
    g = build_graph(70, [(0, 69), (3, 4)])
    assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("text", ["", "B", "Bww", "B\x01"])
def test_graph6_rejects(text):
    with pytest.raises(GraphFormatError):
        from_graph6(text)


def test_json_layout():
    assert from_json('{"n": 3, "edges": [[0, 1], [1, 2]]}').edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text", ["{", '{"n": 2}', '{"n": 2, "edges": [[0, 0]]}', '{"n": 2, "edges": [[0]]}'])
def test_json_rejects(text):
    with pytest.raises(GraphFormatError):
        from_json(text)


def test_files(tmp_path):
    g = strong_product(cycle_graph(5), complete_graph(3))
    for name in ["g.txt", "g.g6", "g.json"]:
        write_graph(g, tmp_path / name)
        assert read_graph(tmp_path / name) == g
    write_graph(g, tmp_path / "g.dat", "json")
    assert read_graph(tmp_path / "g.dat", "json") == g
    with pytest.raises(GraphFormatError):
        sniff_format("g.dat")
    with pytest.raises(GraphFormatError):
        dumps(g, "dot")

import random

import networkx as nx
import pytest

from conftest import random_connected_graph
from oracles import hand_graph6, to_nx
from trimetric.errors import Graph6ParseError, GraphInputError, UnsupportedFormError
from trimetric.graph import from_edge_list, generate_family, is_connected
from trimetric.graph.io import (
    parse_edge_list,
    parse_graph6,
    read_graph6_file,
    read_graphs,
    to_edge_list,
    to_graph6,
    write_graph6_file,
)


def _nx_encode(g) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode("ascii").strip()


@pytest.mark.parametrize(
    "word,n,edges",
    [
        ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
        ("A_", 2, [(0, 1)]),
        ("B?", 3, []),
        ("@", 1, []),
    ],
)
def test_known_words(word, n, edges):
    # both oracles must agree with the frozen word before we trust it
    assert hand_graph6(n, edges) == word
    assert _nx_encode(from_edge_list(n, edges)) == word
    g = parse_graph6(word)
    assert g == from_edge_list(n, edges)
    assert to_graph6(g) == word


def test_empty_triple_is_disconnected():
    assert not is_connected(parse_graph6("B?"))


def test_header_and_whitespace_tolerated():
    assert parse_graph6(">>graph6<<Bw\n") == generate_family("complete:3")


def test_random_round_trip_1000():
    rng = random.Random(62)
    for _ in range(1000):
        n = rng.randint(1, 62)
        p = rng.random()
        edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < p]
        g = from_edge_list(n, edges)
        word = to_graph6(g)
        assert word == hand_graph6(n, edges)
        assert parse_graph6(word) == g
        assert to_graph6(parse_graph6(word)) == word


def test_networkx_agreement_on_families():
    for spec in ["petersen", "grid:4,7", "bistar:3,4", "spider:2,2,3", "cycle:17"]:
        g = generate_family(spec)
        word = to_graph6(g)
        assert word == _nx_encode(g)
        assert nx.utils.graphs_equal(nx.from_graph6_bytes(word.encode()), to_nx(g))


class TestErrors:
    def test_bad_character_offset(self):
        with pytest.raises(Graph6ParseError) as info:
            parse_graph6("B w")
        assert info.value.offset == 1

    def test_short_input(self):
        with pytest.raises(Graph6ParseError) as info:
            parse_graph6("C")
        assert info.value.offset == 1

    def test_too_long(self):
        with pytest.raises(Graph6ParseError):
            parse_graph6("Bww")

    def test_nonzero_padding(self):
        # K_3 uses 3 of 6 bits; "Bx" sets a padding bit
        with pytest.raises(Graph6ParseError, match="padding") as info:
            parse_graph6("Bx")
        assert info.value.offset == 1

    def test_empty(self):
        with pytest.raises(Graph6ParseError):
            parse_graph6("")

    def test_long_form_rejected(self):
        with pytest.raises(UnsupportedFormError):
            parse_graph6("~??~")

    def test_encode_too_large(self):
        with pytest.raises(UnsupportedFormError):
            to_graph6(from_edge_list(63, []))


class TestFiles:
    def test_graph6_file_round_trip(self, tmp_path, rng):
        graphs = [random_connected_graph(rng, rng.randint(3, 20), 0.2) for _ in range(25)]
        path = tmp_path / "g.g6"
        write_graph6_file(path, graphs)
        assert read_graph6_file(path) == graphs
        assert read_graphs(path) == graphs

    def test_edge_list(self, tmp_path):
        g = generate_family("bistar:2,1")
        text = to_edge_list(g)
        assert text.splitlines()[0] == "5 4"
        assert parse_edge_list(text) == g
        path = tmp_path / "g.txt"
        path.write_text(text)
        assert read_graphs(path) == [g]

    @pytest.mark.parametrize(
        "text", ["", "3\n0 1\n", "3 2\n0 1\n", "3 1\n0 x\n", "3 1\n0 1 2\n", "3 1\n0 5\n"]
    )
    def test_edge_list_errors(self, text):
        with pytest.raises(GraphInputError):
            parse_edge_list(text)

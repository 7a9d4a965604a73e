import itertools
import random

import networkx as nx
import pytest

from factorkit.errors import Graph6Error, UnsupportedSizeError
from factorkit.graph import Graph, complete_graph, cycle_graph, empty_graph
from factorkit.graph6 import (
    MAX_SHORT_N,
    graph_to_mask,
    mask_to_graph,
    parse_graph6,
    parse_graph6_mask,
    roundtrip_mask_range,
    write_graph6,
    write_graph6_mask,
)

# hand-verified corpus, independently confirmed against networkx below
CORPUS = [
    (complete_graph(1), "@"),
    (complete_graph(2), "A_"),
    (complete_graph(3), "Bw"),
    (empty_graph(2), "A?"),
]


@pytest.mark.parametrize("g,text", CORPUS)
def test_corpus_encode(g, text):
    assert write_graph6(g) == text


@pytest.mark.parametrize("g,text", CORPUS)
def test_corpus_decode(g, text):
    assert parse_graph6(text) == g


@pytest.mark.parametrize("g,text", CORPUS)
def test_corpus_matches_networkx(g, text):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    ref = nx.to_graph6_bytes(G, header=False).strip().decode("ascii")
    assert ref == text


def test_exhaustive_roundtrip_small():
    for n in range(6):
        nbits = n * (n - 1) // 2
        for mask in range(1 << nbits):
            text = write_graph6_mask(n, mask)
            assert parse_graph6_mask(text) == (n, mask)
            g = mask_to_graph(n, mask)
            assert graph_to_mask(g) == mask
            assert parse_graph6(write_graph6(g)) == g


def test_roundtrip_mask_range_helper():
    for n in (4, 6):
        nbits = n * (n - 1) // 2
        assert roundtrip_mask_range(n, 0, 1 << nbits) == -1


def test_networkx_cross_reference_random():
    rng = random.Random(2024)
    for _ in range(100):
        n = rng.randint(0, 20)
        edges = [
            e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4
        ]
        g = Graph(n, edges)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        ref = nx.to_graph6_bytes(G, header=False).strip().decode("ascii")
        assert write_graph6(g) == ref
        assert parse_graph6(ref) == g


def test_size_limits():
    assert write_graph6(empty_graph(MAX_SHORT_N)).startswith(chr(63 + 62))
    with pytest.raises(UnsupportedSizeError):
        write_graph6(empty_graph(MAX_SHORT_N + 1))


class TestParseErrors:
    def _offset(self, text):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6_mask(text)
        return exc.value.offset

    def test_empty(self):
        assert self._offset("") == 0

    def test_bad_byte(self):
        assert self._offset("B\x01w") == 1
        assert self._offset("\x1f") == 0

    def test_long_form_rejected(self):
        assert self._offset("~??") == 0

    def test_truncated(self):
        # K5 needs ceil(10/6) = 2 group bytes
        assert self._offset("D~") == 2

    def test_trailing_garbage(self):
        assert self._offset("A__") == 2
        assert self._offset("@@") == 1

    def test_nonzero_padding(self):
        # n=2: one data bit, five padding bits; 'w' sets some of them
        assert self._offset("Aw") == 1

    def test_message_mentions_offset(self):
        with pytest.raises(Graph6Error, match=r"byte offset"):
            parse_graph6("")


def test_known_graphs():
    # C5 is "Dhc" in standard tooling output
    assert write_graph6(cycle_graph(5)) == "Dhc"
    assert parse_graph6("Dhc") == cycle_graph(5)

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kended.errors import ParseError, SizeError
from kended.graph import FamilySpec, Graph, build_family
from kended.graph6 import parse_graph6, read_graph6_file, to_graph6_str, write_graph6

from conftest import graph_from_pairs


def test_known_encodings():
    assert write_graph6(build_family(FamilySpec("complete", (3,)))) == b"Bw"
    assert to_graph6_str(Graph(1, (0,))) == "@"
    assert to_graph6_str(Graph(0, ())) == "?"
    # P_3 0-1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 -> 40 + 63
    assert to_graph6_str(Graph.from_edges(3, [(0, 1), (1, 2)])) == "Bg"


def test_parse_accepts_str_bytes_and_newline():
    k3 = build_family(FamilySpec("complete", (3,)))
    assert parse_graph6("Bw") == k3
    assert parse_graph6(b"Bw\n") == k3
    assert parse_graph6("Bw\r\n") == k3


def test_padding_bits_are_ignored():
    # K_3 uses 3 of the 6 bits; setting the padding must not matter
    assert parse_graph6("B~") == parse_graph6("Bw")


@pytest.mark.parametrize(
    "text, offset",
    [
        ("B!", 1),
        ("", 0),
        ("~", 0),
        ("D", 1),
        ("Bww", 2),
        ("Bwé", None),
    ],
)
def test_parse_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(text)
    if offset is not None:
        assert info.value.offset == offset
        assert f"byte offset {offset}" in str(info.value)


def test_write_rejects_large_graphs():
    with pytest.raises(SizeError):
        write_graph6(Graph(63, (0,) * 63))
    assert len(write_graph6(Graph(62, (0,) * 62))) == 1 + (62 * 61 // 2 + 5) // 6


def test_read_file_reports_line(tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_text("Bw\n\nBg\nB!\n")
    it = read_graph6_file(path)
    assert next(it) == parse_graph6("Bw")
    assert next(it) == parse_graph6("Bg")
    with pytest.raises(ParseError) as info:
        next(it)
    assert f"{path}:4" in str(info.value)


def test_roundtrip_all_graphs_up_to_4():
    for n in range(5):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = graph_from_pairs(n, mask)
            assert parse_graph6(write_graph6(g)) == g


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 62).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1))))
def test_roundtrip_property(arg):
    n, mask = arg
    g = graph_from_pairs(n, mask)
    data = write_graph6(g)
    assert all(63 <= b <= 126 for b in data)
    assert parse_graph6(data) == g

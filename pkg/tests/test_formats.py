from __future__ import annotations

import pytest
from hypothesis import given

from conftest import digraphs
from hhdigraph.digraph import Digraph, make_complete, make_cycle
from hhdigraph.formats import (
    DigraphFormatError,
    parse_digraph,
    parse_digraph_stream,
    write_digraph,
    write_digraph_stream,
)


def test_parse_matrix():
    assert parse_digraph("3\n010\n001\n100\n") == make_cycle(3)


def test_parse_edge_list():
    assert parse_digraph("n=2\n0 1\n1 0\n") == make_complete(2)
    assert parse_digraph("n=1\n0 0\n") == Digraph(1, (1,))


@pytest.mark.parametrize(
    "text, line",
    [
        ("2\n01\n0\n", 3),
        ("x\n", 1),
        ("-1\n", 1),
        ("2\n01\n0a\n", 3),
        ("3\n010\n001\n", 4),
        ("2\n01\n10\n11\n", 4),
        ("n=2\n0 1\n0 1\n", 3),
        ("n=2\n0 2\n", 2),
        ("n=2\n0\n", 2),
        ("n=\n", 1),
        ("", 1),
    ],
)
def test_errors_carry_line(text, line):
    with pytest.raises(DigraphFormatError) as info:
        parse_digraph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_writer_output():
    assert write_digraph(make_cycle(3)) == "3\n010\n001\n100\n"
    assert write_digraph(Digraph(0, ())) == "0\n"


@given(digraphs(max_n=6))
def test_roundtrip(d):
    text = write_digraph(d)
    assert parse_digraph(text) == d
    assert write_digraph(parse_digraph(text)) == text


def test_edge_list_reserialises_as_matrix():
    text = write_digraph(parse_digraph("n=3\n0 1\n1 2\n2 0\n"))
    assert text == "3\n010\n001\n100\n"
    assert write_digraph(parse_digraph(text)) == text


def test_stream_roundtrip():
    ds = [make_cycle(3), make_complete(2), Digraph(1, (1,))]
    text = "".join(write_digraph_stream(ds))
    assert text.count("\n\n") == 2
    assert list(parse_digraph_stream(text)) == ds


def test_stream_error_line():
    with pytest.raises(DigraphFormatError) as info:
        list(parse_digraph_stream("1\n0\n\n2\n01\n1\n"))
    assert info.value.line == 6

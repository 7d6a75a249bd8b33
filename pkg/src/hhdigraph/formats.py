"""Plain-text digraph formats.

Adjacency matrix::

    3
    010
    001
    100

Edge list (first line ``n=<count>``, then ``u v`` per edge, 0-indexed)::

    n=2
    0 1
    1 0

The reader auto-detects the format from the first line; the writer always
emits the adjacency matrix.  Streams hold several matrices separated by
blank lines.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .digraph import Digraph


class DigraphFormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _is_number(text: str) -> bool:
    return text.isascii() and text.isdigit()


def _parse_count(text: str, line: int) -> int:
    text = text.strip()
    if not _is_number(text):
        raise DigraphFormatError(line, f"expected a nonnegative vertex count, got {text!r}")
    return int(text)


def _parse_edge_list(lines: list[str], start: int) -> Digraph:
    n = _parse_count(lines[0].strip()[2:], start)
    seen: set[tuple[int, int]] = set()
    for offset, raw in enumerate(lines[1:], start=start + 1):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2 or not all(_is_number(p) for p in parts):
            raise DigraphFormatError(offset, f"expected 'u v', got {raw.strip()!r}")
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise DigraphFormatError(offset, f"edge {u} {v} out of range for n={n}")
        if (u, v) in seen:
            raise DigraphFormatError(offset, f"duplicate edge {u} {v}")
        seen.add((u, v))
    return Digraph.from_edges(n, seen)


def _parse_matrix(lines: list[str], start: int) -> Digraph:
    n = _parse_count(lines[0], start)
    rows = []
    for i in range(n):
        lineno = start + 1 + i
        if 1 + i >= len(lines):
            raise DigraphFormatError(lineno, f"missing row {i} of {n}")
        row = lines[1 + i].strip()
        if len(row) != n:
            raise DigraphFormatError(lineno, f"row has length {len(row)}, expected {n}")
        if set(row) - {"0", "1"}:
            raise DigraphFormatError(lineno, "row may contain only 0 and 1")
        rows.append(int(row[::-1], 2))
    for offset, extra in enumerate(lines[1 + n:], start=start + 1 + n):
        if extra.strip():
            raise DigraphFormatError(offset, "unexpected content after the last row")
    return Digraph(n, tuple(rows))


def _parse_block(lines: list[str], start: int) -> Digraph:
    if lines[0].strip().startswith("n="):
        return _parse_edge_list(lines, start)
    return _parse_matrix(lines, start)


def parse_digraph(text: str) -> Digraph:
    lines = text.splitlines()
    first = 0
    while first < len(lines) and not lines[first].strip():
        first += 1
    if first == len(lines):
        raise DigraphFormatError(1, "empty input")
    return _parse_block(lines[first:], first + 1)


def parse_digraph_stream(text: str) -> Iterator[Digraph]:
    """Digraphs from blank-line separated blocks."""
    block: list[str] = []
    start = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            if not block:
                start = lineno
            block.append(raw)
        elif block:
            yield _parse_block(block, start)
            block = []
    if block:
        yield _parse_block(block, start)


def write_digraph(d: Digraph) -> str:
    rows = ("".join("1" if d.out[i] >> j & 1 else "0" for j in range(d.n)) for i in range(d.n))
    return "".join(line + "\n" for line in (str(d.n), *rows))


def write_digraph_stream(digraphs: Iterable[Digraph]) -> Iterator[str]:
    for k, d in enumerate(digraphs):
        yield ("\n" if k else "") + write_digraph(d)

"""Canonical forms and isomorphism for small digraphs.

A vertex ordering ``p`` is encoded as the bit string made of one block per
position ``j``::

    adj(p_j, p_j), adj(p_0, p_j), adj(p_j, p_0), ..., adj(p_{j-1}, p_j), adj(p_j, p_{j-1})

read most significant bit first.  The canonical form is the relabelling with
the least code.  Because the code of the first ``m`` positions is a prefix of
the whole code, deleting the last vertex of a canonical digraph leaves a
canonical digraph; the orderly generator in :mod:`hhdigraph.enumeration`
relies on this.

The search is exact.  Candidates are extended position by position and only
those whose prefix equals the least prefix seen at that depth survive, so the
work is bounded by the number of prefix-minimal partial orderings rather than
``n!``.
"""
from __future__ import annotations

from typing import Sequence

from .digraph import Digraph

CANON_MAX_N = 8


def _block(d: Digraph, placed: Sequence[int], v: int) -> int:
    out, inn = d.out, d.inn
    bits = out[v] >> v & 1
    for u in placed:
        bits = (bits << 2) | ((out[u] >> v & 1) << 1) | (inn[u] >> v & 1)
    return bits


def encode(d: Digraph, order: Sequence[int] | None = None) -> int:
    """Code of ``d`` under the vertex ordering ``order`` (identity by default)."""
    if order is None:
        order = range(d.n)
    code = 0
    placed: list[int] = []
    for j, v in enumerate(order):
        code = (code << (2 * j + 1)) | _block(d, placed, v)
        placed.append(v)
    return code


def decode(n: int, code: int) -> Digraph:
    """Inverse of :func:`encode` under the identity ordering."""
    rows = [0] * n
    shift = n * n
    for j in range(n):
        shift -= 2 * j + 1
        block = code >> shift & ((1 << (2 * j + 1)) - 1)
        for i in range(j - 1, -1, -1):
            if block & 1:  # j -> i
                rows[j] |= 1 << i
            if block & 2:  # i -> j
                rows[i] |= 1 << j
            block >>= 2
        if block & 1:
            rows[j] |= 1 << j
    return Digraph(n, tuple(rows))


def _check_size(d: Digraph) -> None:
    if d.n > CANON_MAX_N:
        raise ValueError(
            f"canonical form is limited to {CANON_MAX_N} vertices, got {d.n}"
        )


def canonical_labelling(d: Digraph) -> tuple[int, tuple[int, ...]]:
    """Least code over all orderings and the first ordering achieving it."""
    _check_size(d)
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(d.n):
        best = None
        survivors: list[tuple[int, ...]] = []
        for placed in frontier:
            for v in range(d.n):
                if v in placed:
                    continue
                b = _block(d, placed, v)
                if best is None or b < best:
                    best = b
                    survivors = [placed + (v,)]
                elif b == best:
                    survivors.append(placed + (v,))
        frontier = survivors
    order = frontier[0] if d.n else ()
    return encode(d, order), order


def canonical_code(d: Digraph) -> int:
    return canonical_labelling(d)[0]


def canonical_form(d: Digraph) -> Digraph:
    _, order = canonical_labelling(d)
    return d.relabel(order)


def is_canonical(d: Digraph) -> bool:
    """True iff the identity ordering already gives the least code."""
    _check_size(d)
    frontier: list[tuple[int, ...]] = [()]
    out, inn = d.out, d.inn
    for j in range(d.n):
        own = _block(d, range(j), j)
        survivors: list[tuple[int, ...]] = []
        for placed in frontier:
            for v in range(d.n):
                if v in placed:
                    continue
                bits = out[v] >> v & 1
                for u in placed:
                    bits = (bits << 2) | ((out[u] >> v & 1) << 1) | (inn[u] >> v & 1)
                if bits < own:
                    return False
                if bits == own:
                    survivors.append(placed + (v,))
        frontier = survivors
    return True


def degree_signature(d: Digraph) -> tuple[tuple[int, int, int, int], ...]:
    """Sorted per-vertex (loop, out-degree, in-degree, double-degree) tuples."""
    return tuple(sorted(
        (d.out[v] >> v & 1, d.out[v].bit_count(), d.inn[v].bit_count(), d.double[v].bit_count())
        for v in range(d.n)
    ))


def is_isomorphic(a: Digraph, b: Digraph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if degree_signature(a) != degree_signature(b):
        return False
    return canonical_code(a) == canonical_code(b)

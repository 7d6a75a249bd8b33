"""Finite digraphs (binary relational systems) on the vertex set 0..n-1.

Adjacency is stored as one out-neighbour bitmask per vertex, so ``adj(i, j)``
is bit ``j`` of ``out[i]``.  Loops live on the diagonal and are representable
everywhere; irreflexivity is a property, not a restriction of the type.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class EdgeKind(enum.Enum):
    NONE = "none"
    FORWARD = "single-forward"
    BACKWARD = "single-backward"
    DOUBLE = "double"


@dataclass(frozen=True)
class Digraph:
    n: int
    out: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.out) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.out)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.out):
            if row < 0 or row & ~full:
                raise ValueError(f"row {i} refers to vertices outside 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}->{v} out of range for n={n}")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int | bool]]) -> Digraph:
        n = len(matrix)
        rows = []
        for i, row in enumerate(matrix):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            rows.append(sum(1 << j for j, bit in enumerate(row) if bit))
        return cls(n, tuple(rows))

    def adj(self, i: int, j: int) -> bool:
        return bool(self.out[i] >> j & 1)

    @cached_property
    def inn(self) -> tuple[int, ...]:
        """In-neighbour bitmasks: bit ``i`` of ``inn[j]`` is set iff i -> j."""
        rows = [0] * self.n
        for i, row in enumerate(self.out):
            for j in _bits(row):
                rows[j] |= 1 << i
        return tuple(rows)

    @cached_property
    def double(self) -> tuple[int, ...]:
        """Partners of each vertex along double edges (loops excluded)."""
        return tuple(
            self.out[i] & self.inn[i] & ~(1 << i) for i in range(self.n)
        )

    @cached_property
    def touching(self) -> tuple[int, ...]:
        """Vertices joined to each vertex by an edge in either direction."""
        return tuple(
            (self.out[i] | self.inn[i]) & ~(1 << i) for i in range(self.n)
        )

    @cached_property
    def loop_mask(self) -> int:
        return sum(1 << i for i in range(self.n) if self.out[i] >> i & 1)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.out):
            for j in _bits(row):
                yield i, j

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.out)

    def has_loop(self, v: int) -> bool:
        return bool(self.loop_mask >> v & 1)

    def edge_kind(self, i: int, j: int) -> EdgeKind:
        if i == j:
            raise ValueError("edge kind is defined for distinct vertices only")
        forward, backward = self.adj(i, j), self.adj(j, i)
        if forward and backward:
            return EdgeKind.DOUBLE
        if forward:
            return EdgeKind.FORWARD
        if backward:
            return EdgeKind.BACKWARD
        return EdgeKind.NONE

    def is_incident_with_double_edge(self, v: int) -> bool:
        return self.double[v] != 0

    def double_edges(self) -> Iterator[tuple[int, int]]:
        """Unordered double edges as pairs ``(x, y)`` with ``x < y``."""
        for x in range(self.n):
            for y in _bits(self.double[x] >> (x + 1) << (x + 1)):
                yield x, y

    def single_edges(self) -> Iterator[tuple[int, int]]:
        """Ordered pairs ``x -> y`` with ``x != y`` and no edge back."""
        for x in range(self.n):
            for y in _bits(self.out[x] & ~self.inn[x] & ~(1 << x)):
                yield x, y

    def matrix(self) -> list[list[int]]:
        return [[self.out[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def relabel(self, perm: Sequence[int]) -> Digraph:
        """Digraph whose vertex ``k`` is the old vertex ``perm[k]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the vertices")
        pos = [0] * self.n
        for k, old in enumerate(perm):
            pos[old] = k
        rows = [0] * self.n
        for k, old in enumerate(perm):
            rows[k] = sum(1 << pos[j] for j in _bits(self.out[old]))
        return Digraph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, edges={list(self.edges())})"


EMPTY = Digraph(0, ())


# ---------------------------------------------------------------- constructors

def make_complete(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"K_n needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Digraph(n, tuple(full & ~(1 << i) for i in range(n)))


def make_cycle(n: int) -> Digraph:
    if n < 3:
        raise ValueError(f"oriented cycle needs n >= 3, got {n}")
    return Digraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_trivial() -> Digraph:
    return make_complete(1)


def make_loop_vertex() -> Digraph:
    return Digraph(1, (1,))


def disjoint_union(a: Digraph, b: Digraph) -> Digraph:
    return Digraph(a.n + b.n, a.out + tuple(row << a.n for row in b.out))


def k_copies(k: int, d: Digraph) -> Digraph:
    if k < 0:
        raise ValueError(f"copy count must be nonnegative, got {k}")
    result = EMPTY
    for _ in range(k):
        result = disjoint_union(result, d)
    return result


def induced(d: Digraph, w: Iterable[int]) -> Digraph:
    """The subdigraph induced on ``w``, relabelled in ascending vertex order."""
    verts = sorted(set(w))
    if not verts:
        raise ValueError("induced subdigraph needs a nonempty vertex set")
    if verts[0] < 0 or verts[-1] >= d.n:
        raise ValueError(f"vertex set {verts} not contained in 0..{d.n - 1}")
    rows = []
    for u in verts:
        row = d.out[u]
        rows.append(sum(1 << k for k, v in enumerate(verts) if row >> v & 1))
    return Digraph(len(verts), tuple(rows))


# ----------------------------------------------------------------- predicates

def is_irreflexive(d: Digraph) -> bool:
    return d.loop_mask == 0


def is_reflexive(d: Digraph) -> bool:
    return d.loop_mask == (1 << d.n) - 1


def is_symmetric(d: Digraph) -> bool:
    return d.out == d.inn


def is_antisymmetric(d: Digraph) -> bool:
    return not any(d.double)


@dataclass(frozen=True)
class Kind:
    shape: str  # "graph" | "proper" | "improper"
    reflexivity: str  # "reflexive" | "irreflexive" | "neither"

    @property
    def is_graph(self) -> bool:
        return self.shape == "graph"

    @property
    def is_proper(self) -> bool:
        return self.shape == "proper"

    @property
    def is_improper(self) -> bool:
        return self.shape == "improper"

    @property
    def irreflexive(self) -> bool:
        return self.reflexivity == "irreflexive"


def classify_kind(d: Digraph) -> Kind:
    """Graph/proper/improper trichotomy plus reflexivity.

    A relation that is both symmetric and antisymmetric off the diagonal (no
    edges between distinct vertices) is reported as a graph.  The empty
    digraph and every loopless digraph count as irreflexive.
    """
    if is_symmetric(d):
        shape = "graph"
    elif is_antisymmetric(d):
        shape = "proper"
    else:
        shape = "improper"
    if is_irreflexive(d):
        refl = "irreflexive"
    elif is_reflexive(d):
        refl = "reflexive"
    else:
        refl = "neither"
    return Kind(shape, refl)


# ----------------------------------------------------------- connectivity

def _closure_classes(n: int, neighbours: Sequence[int]) -> tuple[frozenset[int], ...]:
    seen = 0
    classes = []
    for start in range(n):
        if seen >> start & 1:
            continue
        members = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= neighbours[v]
            frontier = nxt & ~members
            members |= frontier
        seen |= members
        classes.append(frozenset(_bits(members)))
    return tuple(classes)


@dataclass(frozen=True)
class ThetaPartition:
    classes: tuple[frozenset[int], ...]
    components: tuple[frozenset[int], ...]

    @property
    def omega(self) -> int:
        return len(self.components)

    @property
    def theta_connected(self) -> bool:
        return self.omega == len(self.classes)

    def class_of(self, v: int) -> frozenset[int]:
        for cls in self.classes:
            if v in cls:
                return cls
        raise ValueError(f"vertex {v} not in the partition")


def weak_components(d: Digraph) -> tuple[frozenset[int], ...]:
    """Weakly connected components, ordered by least vertex."""
    return _closure_classes(d.n, d.touching)


def theta_partition(d: Digraph) -> ThetaPartition:
    return ThetaPartition(_closure_classes(d.n, d.double), weak_components(d))


def is_theta_connected(d: Digraph) -> bool:
    return theta_partition(d).theta_connected

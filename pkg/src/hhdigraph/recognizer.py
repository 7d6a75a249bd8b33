"""Closed-form HH classification of irreflexive digraphs, and refutations.

A finite irreflexive digraph is HH exactly when it is a disjoint union of
copies of one complete graph K_n, or of copies of the oriented triangle C_3.
Improper digraphs (some double edge and some single edge) are never HH; the
witness constructors below build the concrete non-extendable homomorphisms
that show it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digraph import Digraph, classify_kind, is_irreflexive, theta_partition, weak_components, _bits
from .homs import PartialHom, Witness, extend_to_endomorphism, is_homomorphism, one_point_extendable


class ScopeError(ValueError):
    """Input lies outside the irreflexive setting the classification covers."""


@dataclass(frozen=True)
class Family:
    name: str  # "kKn" | "kC3" | "none"
    k: int | None = None
    n: int | None = None

    @property
    def is_hh(self) -> bool:
        return self.name != "none"

    def to_dict(self) -> dict:
        if self.name == "kKn":
            return {"family": "kKn", "k": self.k, "n": self.n}
        if self.name == "kC3":
            return {"family": "kC3", "k": self.k}
        return {"family": "none"}


NONE = Family("none")


def _require_irreflexive(d: Digraph) -> None:
    if not is_irreflexive(d):
        raise ScopeError("classification applies to irreflexive digraphs only")


def _require_improper(d: Digraph) -> None:
    _require_irreflexive(d)
    if not classify_kind(d).is_improper:
        raise ValueError("construction needs an improper digraph")


def _is_clique(d: Digraph, verts: frozenset[int]) -> bool:
    mask = sum(1 << v for v in verts)
    return all(d.out[v] & mask == mask & ~(1 << v) for v in verts)


def _is_triangle(d: Digraph, verts: frozenset[int]) -> bool:
    if len(verts) != 3:
        return False
    mask = sum(1 << v for v in verts)
    # out-degree 1, in-degree 1, no double edge: the only option is a 3-cycle
    return all(
        (d.out[v] & mask).bit_count() == 1
        and (d.inn[v] & mask).bit_count() == 1
        and not d.double[v]
        for v in verts
    )


def classify_hh_irreflexive(d: Digraph) -> Family:
    _require_irreflexive(d)
    if d.n == 0:
        raise ValueError("the empty digraph has no family")
    comps = weak_components(d)
    sizes = {len(c) for c in comps}
    if len(sizes) == 1 and all(_is_clique(d, c) for c in comps):
        return Family("kKn", len(comps), sizes.pop())
    if all(_is_triangle(d, c) for c in comps):
        return Family("kC3", len(comps))
    return NONE


# ------------------------------------------------------------- witnesses

def lemma1_witness(d: Digraph) -> Witness | None:
    """Map one end of a double edge onto a vertex that has no double edge.

    Any extension must send the other end to a double-edge partner of that
    vertex, and there is none.  Returns None when every vertex lies on a
    double edge.
    """
    _require_improper(d)
    x, y = next(d.double_edges())
    for v in range(d.n):
        if not d.double[v]:
            return Witness(PartialHom((x,), (v,)), blocked_vertex=y)
    return None


@dataclass(frozen=True)
class Lemma2Certificate:
    theta_class: frozenset[int]
    chain: tuple[int, ...]
    seed: PartialHom


def _double_path(d: Digraph, z1: int, z3: int) -> tuple[int, ...]:
    """Lexicographically least shortest double-edge path from z1 to z3."""
    prev = {z1: None}
    frontier = [z1]
    while frontier and z3 not in prev:
        nxt = []
        for u in frontier:  # frontier stays sorted, so first parent is least
            for w in _bits(d.double[u]):
                if w not in prev:
                    prev[w] = u
                    nxt.append(w)
        frontier = sorted(nxt)
    path = [z3]
    while path[-1] != z1:
        path.append(prev[path[-1]])
    return tuple(reversed(path))


def lemma2_check(d: Digraph) -> Lemma2Certificate | None:
    """Find a double-edge class that does not induce a complete graph.

    Returns the class, the least shortest double-edge chain joining two of its
    members that do not form a double edge, and the seed hom
    ``z1 -> z2, z3 -> z3`` for :func:`clique_growth_refuter`.
    """
    _require_improper(d)
    for cls in theta_partition(d).classes:
        if _is_clique(d, cls):
            continue
        members = sorted(cls)
        pairs = [
            (u, v) for i, u in enumerate(members) for v in members[i + 1:]
            if not d.double[u] >> v & 1
        ]
        chains = [_double_path(d, u, v) for u, v in pairs]
        shortest = min(len(c) for c in chains)
        chain = min(c for c in chains if len(c) == shortest)
        z1, z2, z3 = chain[:3]
        return Lemma2Certificate(cls, chain, PartialHom.from_mapping({z1: z2, z3: z3}))
    return None


def _check_chain(d: Digraph, chain: Sequence[int]) -> None:
    if len(chain) < 3 or len(set(chain)) != len(chain):
        raise ValueError("chain needs at least three distinct vertices")
    if any(not 0 <= z < d.n for z in chain):
        raise ValueError("chain vertex out of range")
    for a, b in zip(chain, chain[1:]):
        if not d.double[a] >> b & 1:
            raise ValueError(f"{a} and {b} are not joined by a double edge")
    if d.double[chain[0]] >> chain[2] & 1:
        raise ValueError("first and third chain vertices must not form a double edge")


@dataclass(frozen=True)
class CliqueGrowth:
    witness: Witness
    harvested: tuple[int, ...]
    attempts: int


def clique_growth(d: Digraph, chain: Sequence[int]) -> CliqueGrowth:
    """Grow fixed points until the seeded hom stops extending.

    Starting from ``z1 -> z2, z3 -> z3``, each successful extension ``e``
    yields a vertex ``x = e(z2)`` that is doubly joined to ``z2``, ``z3`` and
    every earlier ``x``; it is added as a fixed point and the search repeats.
    The harvested vertices are distinct, so a finite digraph runs out of them.
    """
    _require_irreflexive(d)
    _check_chain(d, chain)
    z1, z2, z3 = chain[:3]
    mapping = {z1: z2, z3: z3}
    harvested: list[int] = []
    for attempt in range(1, d.n + 1):
        if not is_homomorphism(d, mapping):
            raise AssertionError(f"grown map {mapping} is not a homomorphism")
        ext = extend_to_endomorphism(d, mapping)
        if ext is None:
            hom = PartialHom.from_mapping(mapping)
            return CliqueGrowth(Witness(hom, _blocked(d, hom, z2)), tuple(harvested), attempt)
        x = ext[z2]
        if x in mapping or x in harvested:
            raise AssertionError(f"harvested vertex {x} is not fresh")
        harvested.append(x)
        mapping[x] = x
    raise AssertionError("clique growth did not terminate within |V| attempts")


def _blocked(d: Digraph, hom: PartialHom, preferred: int) -> int | None:
    if preferred not in hom.domain and one_point_extendable(d, hom, preferred) is None:
        return preferred
    return None


def clique_growth_refuter(d: Digraph, chain: Sequence[int]) -> Witness:
    return clique_growth(d, chain).witness


def _first_single_edge(d: Digraph) -> tuple[int, int] | None:
    return next(d.single_edges(), None)


def proposition_witness(d: Digraph) -> Witness | None:
    """Send the tail of a single edge x -> y onto y, fixing the rest of y's class.

    An extension would permute y's class (a complete graph, so no two members
    may merge) while fixing all members but y, hence fix y, and x -> y would
    demand the loop y -> y.
    """
    _require_improper(d)
    if any(not d.double[v] for v in range(d.n)):
        raise ValueError("some vertex lies on no double edge")
    part = theta_partition(d)
    if not all(_is_clique(d, cls) for cls in part.classes):
        raise ValueError("some double-edge class is not a complete graph")
    edge = _first_single_edge(d)
    if edge is None:
        return None
    x, y = edge
    others = sorted(part.class_of(y) - {y})
    mapping = {x: y, **{t: t for t in others}}
    return Witness(PartialHom.from_mapping(mapping), blocked_vertex=y)


def refute_improper(d: Digraph) -> Witness:
    """A non-extendable hom for an irreflexive improper digraph.

    Tries the double-edge-free vertex construction, then clique growth from a
    non-complete class, then the single-edge construction.
    """
    w = lemma1_witness(d)
    if w is not None:
        return w
    cert = lemma2_check(d)
    if cert is not None:
        return clique_growth_refuter(d, cert.chain)
    w = proposition_witness(d)
    if w is None:
        raise AssertionError("improper digraph without a single edge")
    return w

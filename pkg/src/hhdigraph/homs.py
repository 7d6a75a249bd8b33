"""Homomorphisms, endomorphism extension and the homomorphism-homogeneity test.

A digraph is homomorphism-homogeneous (HH) when every homomorphism from a
nonempty induced subdigraph ``d[W]`` into ``d`` extends to an endomorphism.
All searches here are exact backtracking over bitmask candidate sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping, Sequence

from .digraph import Digraph, _bits

UNSET = -1


@dataclass(frozen=True)
class PartialHom:
    domain: tuple[int, ...]
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.domain) != len(self.images):
            raise ValueError("domain and images differ in length")
        if list(self.domain) != sorted(set(self.domain)):
            raise ValueError("domain must be strictly increasing")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> PartialHom:
        dom = tuple(sorted(mapping))
        return cls(dom, tuple(mapping[v] for v in dom))

    @property
    def mapping(self) -> dict[int, int]:
        return dict(zip(self.domain, self.images))

    def __len__(self) -> int:
        return len(self.domain)

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def extended(self, v: int, image: int) -> PartialHom:
        m = self.mapping
        if v in m:
            raise ValueError(f"vertex {v} already in the domain")
        m[v] = image
        return PartialHom.from_mapping(m)

    def to_dict(self) -> dict:
        return {"domain": list(self.domain), "map": {str(v): i for v, i in zip(self.domain, self.images)}}


@dataclass(frozen=True)
class Witness:
    hom: PartialHom
    blocked_vertex: int | None = None

    def to_dict(self) -> dict:
        data = self.hom.to_dict()
        data["blocked_vertex"] = self.blocked_vertex
        return data


@dataclass(frozen=True)
class Verdict:
    hh: bool
    witness: Witness | None = None

    def __post_init__(self) -> None:
        if self.hh == (self.witness is not None):
            raise ValueError("a verdict carries a witness exactly when it is negative")

    def __bool__(self) -> bool:
        return self.hh

    def to_dict(self) -> dict:
        if self.hh:
            return {"hh": True}
        return {"hh": False, "witness": self.witness.to_dict()}


def _as_mapping(h: PartialHom | Mapping[int, int]) -> dict[int, int]:
    return h.mapping if isinstance(h, PartialHom) else dict(h)


def _validate(d: Digraph, mapping: Mapping[int, int]) -> None:
    for v, img in mapping.items():
        if not 0 <= v < d.n:
            raise ValueError(f"domain vertex {v} out of range for n={d.n}")
        if not 0 <= img < d.n:
            raise ValueError(f"image {img} of vertex {v} out of range for n={d.n}")


def _candidates(d: Digraph, f: Sequence[int], v: int, source: Digraph | None = None) -> int:
    """Images for ``v`` compatible with every assigned vertex of ``f``.

    ``source`` is the digraph ``v`` lives in; it defaults to ``d`` (partial
    endomorphisms).
    """
    src = d if source is None else source
    mask = (1 << d.n) - 1
    if src.out[v] >> v & 1:
        mask &= d.loop_mask
    s_out, s_in = src.out[v], src.inn[v]
    for u in _bits(src.touching[v]):
        fu = f[u]
        if fu == UNSET:
            continue
        if s_in >> u & 1:  # u -> v
            mask &= d.out[fu]
        if s_out >> u & 1:  # v -> u
            mask &= d.inn[fu]
    return mask


def is_homomorphism(d: Digraph, h: PartialHom | Mapping[int, int]) -> bool:
    """Whether ``h`` maps ``d[W]`` into ``d`` preserving every edge, loops included."""
    mapping = _as_mapping(h)
    _validate(d, mapping)
    for x, fx in mapping.items():
        row = d.out[x]
        for y, fy in mapping.items():
            if row >> y & 1 and not d.out[fx] >> fy & 1:
                return False
    return True


def _search(
    d: Digraph,
    f: list[int],
    order: Sequence[int],
    source: Digraph | None = None,
) -> Iterator[list[int]]:
    """Complete ``f`` on ``order``; yields in lexicographic order of the images.

    The same list object is yielded and mutated; copy before keeping it.
    """
    k = len(order)
    if k == 0:
        yield f
        return
    stack = [_candidates(d, f, order[0], source)]
    depth = 0
    while depth >= 0:
        mask = stack[depth]
        v = order[depth]
        if not mask:
            f[v] = UNSET
            stack.pop()
            depth -= 1
            continue
        low = mask & -mask
        stack[depth] = mask ^ low
        f[v] = low.bit_length() - 1
        if depth + 1 == k:
            yield f
            continue
        depth += 1
        stack.append(_candidates(d, f, order[depth], source))


def enumerate_homs(a: Digraph, d: Digraph, limit: int | None = None) -> list[tuple[int, ...]]:
    """All homomorphisms a -> d as image tuples, in lexicographic order."""
    found: list[tuple[int, ...]] = []
    if limit is not None and limit <= 0:
        return found
    for f in _search(d, [UNSET] * a.n, range(a.n), source=a):
        found.append(tuple(f))
        if limit is not None and len(found) >= limit:
            break
    return found


def homs_on(d: Digraph, w: Sequence[int]) -> Iterator[PartialHom]:
    """Homomorphisms d[w] -> d, lexicographic in the images of sorted ``w``."""
    dom = tuple(sorted(w))
    f = [UNSET] * d.n
    for g in _search(d, f, dom):
        yield PartialHom(dom, tuple(g[v] for v in dom))


def _extension_order(d: Digraph, dom: Sequence[int]) -> list[int]:
    # static most-constrained-first: neighbours already fixed, then degree, then index
    fixed = sum(1 << v for v in dom)
    rest = [v for v in range(d.n) if not fixed >> v & 1]
    order: list[int] = []
    while rest:
        best = min(
            rest,
            key=lambda v: (-(d.touching[v] & fixed).bit_count(), -d.touching[v].bit_count(), v),
        )
        order.append(best)
        rest.remove(best)
        fixed |= 1 << best
    return order


def _require_hom(d: Digraph, mapping: Mapping[int, int]) -> None:
    if not is_homomorphism(d, mapping):
        raise ValueError(f"{mapping} is not a homomorphism of the induced subdigraph")


def extend_to_endomorphism(d: Digraph, h: PartialHom | Mapping[int, int]) -> tuple[int, ...] | None:
    """An endomorphism of ``d`` agreeing with ``h``, or None if there is none.

    Unassigned vertices are filled most-constrained-first in a fixed order and
    images are tried in ascending order, so the result is the least extension
    in that order.
    """
    mapping = _as_mapping(h)
    _require_hom(d, mapping)
    f = [UNSET] * d.n
    for v, img in mapping.items():
        f[v] = img
    for g in _search(d, f, _extension_order(d, sorted(mapping))):
        return tuple(g)
    return None


def one_point_extendable(d: Digraph, h: PartialHom | Mapping[int, int], v: int) -> PartialHom | None:
    mapping = _as_mapping(h)
    _validate(d, mapping)
    if v in mapping:
        raise ValueError(f"vertex {v} is already in the domain")
    if not 0 <= v < d.n:
        raise ValueError(f"vertex {v} out of range for n={d.n}")
    f = [UNSET] * d.n
    for u, img in mapping.items():
        f[u] = img
    mask = _candidates(d, f, v)
    if not mask:
        return None
    mapping[v] = (mask & -mask).bit_length() - 1
    return PartialHom.from_mapping(mapping)


def blocking_vertex(d: Digraph, h: PartialHom) -> int | None:
    """Least vertex outside the domain to which ``h`` has no one-point extension."""
    f = [UNSET] * d.n
    for u, img in zip(h.domain, h.images):
        f[u] = img
    for v in range(d.n):
        if f[v] == UNSET and not _candidates(d, f, v):
            return v
    return None


def _domains(n: int) -> Iterator[tuple[int, ...]]:
    for size in range(1, n + 1):
        yield from combinations(range(n), size)


def hh_by_extension(d: Digraph) -> Verdict:
    """Reference HH test: run the endomorphism-extension search on every hom.

    Domains are visited by ascending size and then lexicographically, homs
    lexicographically, so a returned witness has a smallest possible domain.
    """
    for dom in _domains(d.n):
        for h in homs_on(d, dom):
            if extend_to_endomorphism(d, h) is None:
                return Verdict(False, Witness(h, blocking_vertex(d, h)))
    return Verdict(True)


def hh_by_one_point(d: Digraph) -> Verdict:
    """HH test through one-point extensions.

    Every partial hom extending by each single outside vertex is equivalent to
    every partial hom extending to an endomorphism: a one-point extension of
    a hom is again a hom, so repeating it fills all of ``d``.  The witness is
    a hom with a blocked vertex, which need not have a minimum domain.
    """
    for dom in _domains(d.n):
        for h in homs_on(d, dom):
            blocked = blocking_vertex(d, h)
            if blocked is not None:
                return Verdict(False, Witness(h, blocked))
    return Verdict(True)


def endomorphisms(d: Digraph) -> list[tuple[int, ...]]:
    return enumerate_homs(d, d)


def minimal_witness(d: Digraph) -> Witness | None:
    """First non-extendable hom by (domain size, domain, images), or None.

    Extendability is read off the restrictions of the full endomorphism list,
    which is computed once.
    """
    endos = endomorphisms(d)
    for dom in _domains(d.n):
        restrictions = {tuple(e[v] for v in dom) for e in endos}
        for h in homs_on(d, dom):
            if h.images not in restrictions:
                return Witness(h, blocking_vertex(d, h))
    return None


def is_hh(d: Digraph) -> Verdict:
    """Decide HH; a negative verdict carries a minimum-domain witness."""
    if hh_by_one_point(d).hh:
        return Verdict(True)
    witness = minimal_witness(d)
    if witness is None:
        raise AssertionError("one-point and full extension tests disagree")
    return Verdict(False, witness)


def verify_witness(d: Digraph, w: Witness) -> bool:
    """Independently confirm that ``w`` certifies ``d`` is not HH."""
    if not w.hom.domain or not is_homomorphism(d, w.hom):
        return False
    if extend_to_endomorphism(d, w.hom) is not None:
        return False
    if w.blocked_vertex is not None:
        if w.blocked_vertex in w.hom.domain:
            return False
        if one_point_extendable(d, w.hom, w.blocked_vertex) is not None:
            return False
    return True


def compose(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """``f`` after ``g`` for total maps given as image tuples."""
    return tuple(f[x] for x in g)

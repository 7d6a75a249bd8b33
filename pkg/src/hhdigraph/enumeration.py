"""Digraphs up to isomorphism and the HH census.

Generation is orderly: every canonical digraph on ``n`` vertices arises from
exactly one canonical digraph on ``n - 1`` vertices by appending a last
vertex, and a candidate is kept only when it is its own canonical form.  Each
isomorphism class is therefore produced once, with no global dedup set.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

from .canonical import decode, encode, is_canonical
from .digraph import Digraph, classify_kind, is_antisymmetric, is_symmetric, weak_components
from .homs import Verdict, is_hh
from .recognizer import Family, classify_hh_irreflexive

log = logging.getLogger(__name__)

ENUM_MAX_N = 6
# n = 6 runs for a long time in pure Python and must be asked for explicitly
DEFAULT_MAX_N = 5
WORKERS_ENV = "HHDIGRAPH_WORKERS"

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}") from None
        if value < 1:
            raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}")
        return value
    return os.cpu_count() or 1


def _parallel_map(fn: Callable[[T], R], items: Sequence[T], workers: int | None) -> list[R]:
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (workers * 16))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _children(args: tuple[int, int, bool]) -> list[int]:
    """Canonical codes of the one-vertex extensions of a canonical parent."""
    m, parent_code, loops = args
    parent = decode(m, parent_code)
    n = m + 1
    new = 1 << m
    kept = []
    for loop in ((0, 1) if loops else (0,)):
        for to_new in range(1 << m):  # i -> new
            rows = [parent.out[i] | (new if to_new >> i & 1 else 0) for i in range(m)]
            for from_new in range(1 << m):  # new -> i
                child = Digraph(n, (*rows, from_new | (new if loop else 0)))
                if is_canonical(child):
                    kept.append(encode(child))
    return kept


_LEVELS: dict[tuple[int, bool], tuple[int, ...]] = {(0, False): (0,), (0, True): (0,)}


def _level(n: int, loops: bool, workers: int | None) -> tuple[int, ...]:
    # parents are the shared prefix of the code, so each one is an independent job
    key = (n, loops)
    if key not in _LEVELS:
        parents = _level(n - 1, loops, workers)
        jobs = [(n - 1, code, loops) for code in parents]
        codes: list[int] = []
        for batch in _parallel_map(_children, jobs, workers):
            codes.extend(batch)
        codes.sort()
        log.info("n=%d: %d classes from %d parents", n, len(codes), len(parents))
        _LEVELS[key] = tuple(codes)
    return _LEVELS[key]


def canonical_codes(n: int, loops: bool = False, workers: int | None = None) -> tuple[int, ...]:
    """Sorted canonical codes of all digraphs on ``n`` vertices."""
    if not 0 <= n <= ENUM_MAX_N:
        raise ValueError(f"enumeration is limited to 0..{ENUM_MAX_N} vertices, got {n}")
    return _level(n, loops, workers)


@dataclass(frozen=True)
class EnumFilter:
    """Conjunctive filter; ``graphs``/``proper``/``improper`` test the relation off the diagonal."""

    irreflexive_only: bool = False
    graphs: bool = False
    proper: bool = False
    improper: bool = False
    connected_only: bool = False
    max_n: int = ENUM_MAX_N

    def accepts(self, d: Digraph) -> bool:
        if self.irreflexive_only and d.loop_mask:
            return False
        if self.graphs and not is_symmetric(d):
            return False
        if self.proper and not is_antisymmetric(d):
            return False
        if self.improper and (is_symmetric(d) or is_antisymmetric(d)):
            return False
        if self.connected_only and len(weak_components(d)) > 1:
            return False
        return True


def enumerate_digraphs(n: int, filt: EnumFilter = EnumFilter(), workers: int | None = None) -> Iterator[Digraph]:
    """One canonical representative per isomorphism class, in code order."""
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    if n > min(filt.max_n, ENUM_MAX_N):
        raise ValueError(f"n={n} exceeds the enumeration cap {min(filt.max_n, ENUM_MAX_N)}")
    for code in canonical_codes(n, loops=not filt.irreflexive_only, workers=workers):
        d = decode(n, code)
        if filt.accepts(d):
            yield d


# ------------------------------------------------------------------ census

@dataclass(frozen=True)
class Disagreement:
    digraph: Digraph
    checker: Verdict
    recognizer: Family

    def to_dict(self) -> dict:
        return {
            "n": self.digraph.n,
            "matrix": ["".join(map(str, row)) for row in self.digraph.matrix()],
            "checker": self.checker.to_dict(),
            "recognizer": self.recognizer.to_dict(),
        }


@dataclass
class CensusRow:
    n: int
    total: int = 0
    by_kind: dict[str, int] = field(default_factory=lambda: {"graph": 0, "proper": 0, "improper": 0})
    hh_checker: int | None = None
    hh_recognizer: int | None = None
    disagreements: list[Disagreement] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "by_kind": dict(self.by_kind),
            "hh_checker": self.hh_checker,
            "hh_recognizer": self.hh_recognizer,
            "disagreements": [x.to_dict() for x in self.disagreements],
        }


@dataclass
class CensusReport:
    rows: list[CensusRow]

    @property
    def disagreements(self) -> list[Disagreement]:
        return [x for row in self.rows for x in row.disagreements]

    def hh_counts(self) -> dict[int, int | None]:
        return {row.n: row.hh_checker for row in self.rows}

    def to_dict(self) -> dict:
        return {"rows": [row.to_dict() for row in self.rows], "disagreements": len(self.disagreements)}

    def summary_table(self) -> str:
        header = f"{'n':>2} {'total':>8} {'graph':>7} {'proper':>7} {'improper':>8} {'HH(check)':>9} {'HH(class)':>9} {'disagree':>8}"
        lines = [header, "-" * len(header)]
        for r in self.rows:
            hc = "-" if r.hh_checker is None else str(r.hh_checker)
            hr = "-" if r.hh_recognizer is None else str(r.hh_recognizer)
            lines.append(
                f"{r.n:>2} {r.total:>8} {r.by_kind['graph']:>7} {r.by_kind['proper']:>7} "
                f"{r.by_kind['improper']:>8} {hc:>9} {hr:>9} {len(r.disagreements):>8}"
            )
        return "\n".join(lines)


def _check_max_n(max_n: int) -> None:
    if not 1 <= max_n <= ENUM_MAX_N:
        raise ValueError(f"max_n must be in 1..{ENUM_MAX_N}, got {max_n}")


def census_by_kind(max_n: int, workers: int | None = None) -> CensusReport:
    _check_max_n(max_n)
    rows = []
    for n in range(1, max_n + 1):
        row = CensusRow(n)
        for d in enumerate_digraphs(n, EnumFilter(irreflexive_only=True), workers):
            row.total += 1
            row.by_kind[classify_kind(d).shape] += 1
        rows.append(row)
    return CensusReport(rows)


def _verify_one(job: tuple[int, int]) -> tuple[str, Verdict, Family]:
    n, code = job
    d = decode(n, code)
    return classify_kind(d).shape, is_hh(d), classify_hh_irreflexive(d)


def verify_corollary(
    max_n: int = DEFAULT_MAX_N,
    workers: int | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> CensusReport:
    """Run the brute-force HH checker and the classifier on every class.

    ``progress`` is called as ``progress(n, done)`` after each vertex count.
    """
    _check_max_n(max_n)
    rows = []
    for n in range(1, max_n + 1):
        codes = canonical_codes(n, loops=False, workers=workers)
        results = _parallel_map(_verify_one, [(n, c) for c in codes], workers)
        row = CensusRow(n, hh_checker=0, hh_recognizer=0)
        for code, (shape, verdict, family) in zip(codes, results):
            row.total += 1
            row.by_kind[shape] += 1
            row.hh_checker += verdict.hh
            row.hh_recognizer += family.is_hh
            if verdict.hh != family.is_hh:
                row.disagreements.append(Disagreement(decode(n, code), verdict, family))
        rows.append(row)
        log.info("verified n=%d: %d digraphs, %d HH", n, row.total, row.hh_checker)
        if progress is not None:
            progress(n, row.total)
    return CensusReport(rows)


def labelled_digraphs(n: int, loops: bool = False) -> Iterable[Digraph]:
    """Every labelled digraph on ``n`` vertices (small ``n`` only)."""
    pairs = [(i, j) for i in range(n) for j in range(n) if loops or i != j]
    for mask in range(1 << len(pairs)):
        yield Digraph.from_edges(n, (p for k, p in enumerate(pairs) if mask >> k & 1))

from __future__ import annotations

import json

import pytest

from oracles import burnside_count
from hhdigraph.canonical import canonical_code, canonical_form, is_isomorphic
from hhdigraph.digraph import classify_kind
from hhdigraph.enumeration import (
    ENUM_MAX_N,
    EnumFilter,
    canonical_codes,
    census_by_kind,
    enumerate_digraphs,
    labelled_digraphs,
    verify_corollary,
)

IRR = EnumFilter(irreflexive_only=True)


def test_small_counts():
    assert len(list(enumerate_digraphs(1, IRR))) == 1
    two = list(enumerate_digraphs(2, IRR))
    assert [d.edge_count for d in two] == [0, 1, 2]
    assert [len(list(enumerate_digraphs(n, IRR))) for n in (3, 4)] == [16, 218]


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_match_burnside(n):
    assert len(canonical_codes(n)) == burnside_count(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_counts_with_loops_match_burnside(n):
    assert len(canonical_codes(n, loops=True)) == burnside_count(n, loops=True)


@pytest.mark.parametrize("loops", [False, True])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_complete_and_unique_against_labelled(n, loops):
    emitted = list(enumerate_digraphs(n, EnumFilter(irreflexive_only=not loops)))
    codes = {canonical_code(d) for d in labelled_digraphs(n, loops=loops)}
    assert sorted(codes) == [canonical_code(d) for d in emitted]
    assert all(canonical_form(d) == d for d in emitted)


def test_no_two_emitted_isomorphic_n4():
    reps = list(enumerate_digraphs(4, IRR))
    for i, a in enumerate(reps[::5]):
        for b in reps[i * 5 + 1::9]:
            assert not is_isomorphic(a, b)


def test_filters_compose():
    graphs = list(enumerate_digraphs(4, EnumFilter(irreflexive_only=True, graphs=True)))
    assert len(graphs) == 11
    proper = list(enumerate_digraphs(4, EnumFilter(irreflexive_only=True, proper=True)))
    assert len(proper) == 42  # oriented graphs, edgeless one included
    both = list(enumerate_digraphs(4, EnumFilter(irreflexive_only=True, graphs=True, proper=True)))
    assert [d.edge_count for d in both] == [0]
    conn = list(enumerate_digraphs(3, EnumFilter(irreflexive_only=True, connected_only=True)))
    assert len(conn) == 13
    improper = list(enumerate_digraphs(3, EnumFilter(irreflexive_only=True, improper=True)))
    assert len(improper) == 6 and all(classify_kind(d).is_improper for d in improper)


def test_cap():
    with pytest.raises(ValueError):
        list(enumerate_digraphs(ENUM_MAX_N + 1, IRR))
    with pytest.raises(ValueError):
        list(enumerate_digraphs(4, EnumFilter(irreflexive_only=True, max_n=3)))
    with pytest.raises(ValueError):
        verify_corollary(ENUM_MAX_N + 1)


def test_census_by_kind():
    report = census_by_kind(3)
    assert report.rows[1].by_kind == {"graph": 2, "proper": 1, "improper": 0}
    assert report.rows[2].total == sum(report.rows[2].by_kind.values()) == 16
    assert report.rows[0].by_kind["improper"] == report.rows[1].by_kind["improper"] == 0


def test_verify_small():
    report = verify_corollary(3)
    assert report.hh_counts() == {1: 1, 2: 2, 3: 3}
    assert report.disagreements == []
    data = json.loads(json.dumps(report.to_dict()))
    assert data["disagreements"] == 0
    assert [r["total"] for r in data["rows"]] == [1, 3, 16]
    assert "HH(check)" in report.summary_table()


def test_parallel_matches_serial():
    serial = verify_corollary(4, workers=1)
    parallel = verify_corollary(4, workers=2)
    assert serial.to_dict() == parallel.to_dict()

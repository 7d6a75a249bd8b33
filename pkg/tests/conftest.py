from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import strategies as st

from hhdigraph.digraph import Digraph

sys.path.insert(0, str(Path(__file__).parent))


@st.composite
def digraphs(draw, min_n: int = 0, max_n: int = 5, loops: bool = True) -> Digraph:
    n = draw(st.integers(min_n, max_n))
    rows = []
    for i in range(n):
        row = draw(st.integers(0, (1 << n) - 1))
        if not loops:
            row &= ~(1 << i)
        rows.append(row)
    return Digraph(n, tuple(rows))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from pathlib import Path

import pytest

from specmatch.graph6 import parse_graph6

DATA = Path(__file__).parent / "data"
CORPUS_LE8 = DATA / "connected_le8.g6"


def corpus_lines(max_n: int = 8) -> list[str]:
    lines = [ln.strip() for ln in CORPUS_LE8.read_text().splitlines() if ln.strip()]
    return [ln for ln in lines if ord(ln[0]) - 63 <= max_n]


@pytest.fixture(scope="session")
def corpus_le6():
    return [parse_graph6(s) for s in corpus_lines(6)]


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

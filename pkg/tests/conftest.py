import json
from pathlib import Path

import numpy as np
import pytest

from chaoslut import pgm

DATA = Path(__file__).parent / "data"
CORPUS = DATA / "corpus"

_acceptance_lines = []


@pytest.fixture(scope="session")
def golden():
    return json.loads((DATA / "golden.json").read_text())


@pytest.fixture(scope="session")
def corpus():
    return {p.stem: pgm.load(p) for p in sorted(CORPUS.glob("*.pgm"))}


@pytest.fixture(scope="session")
def camera(corpus):
    return corpus["camera"]


@pytest.fixture(scope="session")
def astronaut(corpus):
    return corpus["astronaut"]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def report_line():
    """Record a one-line acceptance verdict, printed in the terminal summary."""

    def record(criterion: str, ok: bool, detail: str):
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        print(_acceptance_lines[-1])

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)

import functools

import pytest

from polyham.audit import fixture_text, load_fixture
from polyham.dual import build_dual, read_label_table
from polyham.generate import generate_equivelar_torus


@functools.lru_cache(maxsize=None)
def fixture_map(name):
    return load_fixture(name)


@functools.lru_cache(maxsize=None)
def torus(p_q, rows, cols, shift=0):
    return generate_equivelar_torus(p_q, rows, cols, shift)


def q9():
    return torus((4, 4), 3, 3)


def t12():
    return torus((3, 6), 3, 4)


@pytest.fixture
def m1():
    return fixture_map("m1.map")


@pytest.fixture
def k1():
    return fixture_map("k1.map")


@pytest.fixture
def k2():
    return fixture_map("k2.map")


@pytest.fixture
def tet():
    return fixture_map("tet.map")


@pytest.fixture
def m1_corr(m1):
    return build_dual(m1, read_label_table(fixture_text("m1_k1.tsv")))[1]


def pytest_terminal_summary(terminalreporter):
    rows = []
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion_" in rep.nodeid:
                name = rep.nodeid.split("test_criterion_")[1]
                number, _, label = name.partition("_")
                rows.append((int(number), status, label.replace("_", " "), rep.duration))
    if rows:
        terminalreporter.section("acceptance criteria")
        for number, status, label, duration in sorted(rows):
            verdict = "PASS" if status == "passed" else "FAIL"
            terminalreporter.write_line(f"criterion {number}: {verdict}  {label} ({duration:.2f}s)")

from __future__ import annotations

import itertools

import pytest

_CRITERIA: list[tuple[str, bool, str]] = []


def naive_enumerator(n: int, q: int, m: int, a, b: int) -> list[int]:
    """Pure-Python count over Z_q^n, independent of every package code path."""
    hist = [0] * (n + 1)
    for x in itertools.product(range(q), repeat=n):
        if sum(ai * xi for ai, xi in zip(a, x)) % m == b % m:
            hist[sum(1 for xi in x if xi)] += 1
    return hist


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    label = request.node.get_closest_marker("criterion").args[0]
    state = {"detail": ""}
    yield state
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    _CRITERIA.append((label, not failed, state["detail"]))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _CRITERIA:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)

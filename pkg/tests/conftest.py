import itertools

import pytest


def brute_adjacent(v, w, k, s):
    """The overlap rule written out position by position, independent of aoglab."""
    t = k - s
    if v == w:
        return False
    forward = all(v[s + i] == w[i] for i in range(t))
    backward = all(w[s + i] == v[i] for i in range(t))
    return forward or backward


def brute_words(k, d):
    return list(itertools.product(range(d), repeat=k))


def brute_edges(k, d, s):
    words = brute_words(k, d)
    return [(v, w) for v, w in itertools.combinations(words, 2) if brute_adjacent(v, w, k, s)]


@pytest.fixture
def adjacent():
    return brute_adjacent


_ACCEPTANCE: dict[str, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    criterion = name.split("[")[0]
    _ACCEPTANCE.setdefault(criterion, []).append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, cases in sorted(_ACCEPTANCE.items()):
        failed = [name for name, outcome in cases if outcome != "passed"]
        status = "PASS" if not failed else "FAIL"
        line = f"{status}  {criterion}"
        if failed:
            line += "  (failing: " + ", ".join(n[len(criterion):] or n for n in failed) + ")"
        terminalreporter.write_line(line)

import pytest

CRITERIA = {
    1: "free nilpotent dimension formulas",
    2: "Witt oracle and Jacobi on N(3,4)",
    3: "Heisenberg derivations and Levi factor",
    4: "filiform no-go and sl2 glue onto h1",
    5: "characteristically nilpotent Dl8",
    6: "CN extension of Dl8",
    7: "sl2 decompositions of small examples",
    8: "Table 1 dimension audit",
    9: "Table 2 verification and repair",
    10: "non quasi-cyclic reconstruction",
    11: "Heisenberg algebras as quotients",
    12: "property suites",
}

_results: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        ok = rep.passed
        _results.setdefault(n, []).append((item.name, ok))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(CRITERIA):
        runs = _results.get(n)
        if not runs:
            continue
        failed = [name for name, ok in runs if not ok]
        verdict = "PASS" if not failed else "FAIL"
        extra = f"  (failing: {', '.join(failed)})" if failed else ""
        tr.write_line(f"criterion {n:2d} {verdict}  {CRITERIA[n]}  [{len(runs) - len(failed)}/{len(runs)}]{extra}")

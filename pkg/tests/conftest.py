
CRITERIA = {
    1: "order formula for FG-type vectors, p = 3, n = 2..4",
    2: "series of G_2 has maximal class, p = 3 and 5",
    3: "series of G_3 and its generators, p = 3 and 5",
    4: "psi(gamma_i(G_3)) = gamma_{i+1}(W(G_2)), p = 3",
    5: "series of G_4 follows the interval schedule, p = 3",
    6: "order of a^eps b and the uniserial chain below St(n-1)",
    7: "section and position lemmas, p = 3 and p = 5",
    8: "large index below p for non-FG vectors",
    9: "wreath-product algebra suite",
    10: "max observed index exponent is 2 across the envelope",
}

_outcomes = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    ok = call.excinfo is None
    n = marker.args[0]
    _outcomes[n] = _outcomes.get(n, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        if n in _outcomes:
            verdict = "PASS" if _outcomes[n] else "FAIL"
            terminalreporter.write_line(f"criterion {n:>2}: {verdict}  {title}")

import pytest

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        number, text = marker.args
        _criteria.append((number, item.name, rep.outcome, text))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, outcome, text in sorted(_criteria, key=lambda c: (c[0], c[1])):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"C{number:<2} {verdict}  {name}: {text}")

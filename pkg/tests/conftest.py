import pytest

from .helpers import named

ACCEPTANCE = {}


@pytest.fixture
def k2():
    return named("k2")


@pytest.fixture
def k3():
    return named("k3")


@pytest.fixture
def sh():
    return named("shannon2")


@pytest.fixture
def star():
    return named("star3")


@pytest.fixture
def petersen():
    return named("petersen")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        previous = ACCEPTANCE.get(marker.args[0], (True, None))[0]
        ACCEPTANCE[marker.args[0]] = (previous and rep.passed, marker.args[1])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}")

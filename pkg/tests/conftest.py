import pytest

from oracles import BATTERY, SMALL_PRIMES


@pytest.fixture(params=list(BATTERY), ids=list(BATTERY))
def field(request):
    return BATTERY[request.param]


@pytest.fixture(params=SMALL_PRIMES)
def prime(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import REPORT

    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in sorted(REPORT, key=lambda line: line.split("criterion ", 1)[1]):
            terminalreporter.write_line(line)

import pytest

from cmhodge.serialize import fixture_datum


SMALL = ["c2.json", "c4.json", "biquadratic.json", "d4.json", "c6.json", "sextic-s3.json"]


@pytest.fixture(scope="session")
def c2():
    return fixture_datum("c2.json")


@pytest.fixture(scope="session")
def c4():
    return fixture_datum("c4.json")


@pytest.fixture(scope="session")
def d4():
    return fixture_datum("d4.json")


@pytest.fixture(scope="session")
def biquad():
    return fixture_datum("biquadratic.json")


@pytest.fixture(scope="session")
def small_data():
    return [fixture_datum(n) for n in SMALL]


_CRITERIA: dict[int, list[tuple[str, bool]]] = {}


def pytest_runtest_logreport(report):
    # one line per acceptance criterion, printed at the end of the session
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        num = int(name.split("_")[2])
        _CRITERIA.setdefault(num, []).append((name, report.outcome == "passed"))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        parts = _CRITERIA[num]
        ok = all(p for _, p in parts)
        failed = [n for n, p in parts if not p]
        extra = f" ({', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}{extra}")

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[str, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.fixture(scope="session")
def oracle_report():
    from time import perf_counter

    from shadowcalc.verify import oracle_suite

    start = perf_counter()
    report = oracle_suite(5)
    return report, perf_counter() - start


@pytest.fixture
def note(request):
    """Attach a one-line detail to the criterion summary."""
    marker = request.node.get_closest_marker("criterion")

    def _note(text):
        _criteria.setdefault(str(marker.args[0]), {}).setdefault("notes", []).append(text)

    return _note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and rep.passed:
        return
    entry = _criteria.setdefault(str(marker.args[0]), {})
    entry["title"] = marker.args[1]
    entry.setdefault("outcomes", []).append(rep.passed)
    entry["seconds"] = entry.get("seconds", 0.0) + rep.duration


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=int):
        entry = _criteria[key]
        outcomes = entry.get("outcomes", [])
        status = "PASS" if outcomes and all(outcomes) else "FAIL"
        line = f"criterion {key:>2} {status}  {entry.get('title', '')}  ({entry.get('seconds', 0):.1f}s)"
        terminalreporter.write_line(line)
        for text in entry.get("notes", []):
            terminalreporter.write_line(f"              {text}")

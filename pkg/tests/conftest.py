from collections import defaultdict

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_criteria: dict[int, list[bool]] = defaultdict(list)
_titles: dict[int, str] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None:
        return
    number, title = marker
    _titles[number] = title
    if report.when == "call" or report.outcome == "failed":
        _criteria[number].append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is not None:
        report.acceptance = (mark.args[0], mark.kwargs.get("title", ""))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        ok = all(_criteria[number])
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}"
        if _titles.get(number):
            line += f"  {_titles[number]}"
        terminalreporter.write_line(line)

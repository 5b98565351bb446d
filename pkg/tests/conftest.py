"""Collects the acceptance outcomes and prints one line per criterion."""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)")
_results = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    number = int(m.group(1))
    if report.when == "call" or report.failed:
        if report.failed or number not in _results:
            _results[number] = (report.outcome.upper(), report.nodeid)


def pytest_collection_modifyitems(items):
    for item in items:
        m = _CRITERION.search(item.nodeid)
        if m:
            doc = (item.function.__doc__ or "").strip().splitlines()
            item.user_properties.append(("summary", doc[0] if doc else ""))
            _summaries[int(m.group(1))] = doc[0] if doc else ""


_summaries = {}


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        outcome, _ = _results[number]
        terminalreporter.write_line("criterion %2d: %-6s %s" % (number, outcome, _summaries.get(number, "")))

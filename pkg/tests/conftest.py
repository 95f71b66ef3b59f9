import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call" and not rep.failed:
        return
    number, title = marker.args
    prev = _RESULTS.get(number, (title, True, ""))
    ok = prev[1] and rep.passed
    note = prev[2]
    extra = getattr(item, "acceptance_note", "")
    if extra:
        note = extra
    _RESULTS[number] = (title, ok, note)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok, note = _RESULTS[number]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}"
        if note:
            line += f" ({note})"
        terminalreporter.write_line(line)

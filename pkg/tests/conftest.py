from collections import defaultdict

import pytest

_checks = defaultdict(list)


class CriterionRecorder:
    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title
        _checks[(number, title)]  # register even if no check runs

    def check(self, label: str, ok: bool, detail: str = "") -> bool:
        _checks[(self.number, self.title)].append((label, bool(ok), detail))
        return ok

    def assert_all(self):
        failed = [f"{label}: {detail}" for label, ok, detail in _checks[(self.number, self.title)] if not ok]
        assert not failed, "; ".join(failed)


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    return CriterionRecorder(number, title)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion reported in the summary")


def pytest_terminal_summary(terminalreporter):
    if not _checks:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for (number, title), checks in sorted(_checks.items()):
        ok = bool(checks) and all(c[1] for c in checks)
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")
        for label, passed, detail in checks:
            tr.write_line(f"        {'ok  ' if passed else 'FAIL'} {label}  {detail}")

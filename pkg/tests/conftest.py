import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a named acceptance line; marked FAIL unless the test finishes."""
    record = {}

    def declare(label, detail=""):
        record["label"] = label
        record["detail"] = detail

    yield declare
    if "label" in record:
        rep = getattr(request.node, "rep_call", None)
        ok = rep is not None and rep.passed
        _ACCEPTANCE[request.node.nodeid] = (("PASS" if ok else "FAIL"), f"{record['label']} {record['detail']}".rstrip())


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for status, line in _ACCEPTANCE.values():
        terminalreporter.write_line(f"[{status}] {line}")

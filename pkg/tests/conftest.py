import contextlib
import time

import pytest

_ACCEPTANCE: list[str] = []


class _Criterion:
    def __init__(self, number: int, title: str) -> None:
        self.number = number
        self.title = title
        self.elapsed = 0.0

    @contextlib.contextmanager
    def timed(self):
        start = time.perf_counter()
        yield
        self.elapsed = time.perf_counter() - start


@pytest.fixture
def criterion(request):
    holder: dict = {}

    def make(number: int, title: str) -> _Criterion:
        holder["c"] = _Criterion(number, title)
        return holder["c"]

    yield make
    c = holder.get("c")
    if c is None:
        return
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    status = "FAIL" if failed else "PASS"
    _ACCEPTANCE.append(f"[{status}] criterion {c.number}: {c.title} ({c.elapsed:.3f}s)")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)

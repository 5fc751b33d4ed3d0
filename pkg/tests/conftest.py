import contextlib
import time

import pytest

_RESULTS = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion as PASS/FAIL with its wall time."""

    @contextlib.contextmanager
    def record(number, title):
        t0 = time.perf_counter()
        try:
            yield
        except BaseException:
            _RESULTS.append((number, title, "FAIL", time.perf_counter() - t0))
            raise
        _RESULTS.append((number, title, "PASS", time.perf_counter() - t0))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, secs in sorted(_RESULTS):
        terminalreporter.write_line(f"[{status}] {number:>2}. {title} ({secs:.2f}s)")

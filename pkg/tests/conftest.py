import time
from contextlib import contextmanager

import pytest

SUITE_LIMIT_SECONDS = 60.0

# criterion number -> (title, passed, detail)
_RESULTS = {}


def pytest_sessionstart(session):
    session.config._suite_start = time.perf_counter()


@pytest.fixture
def criterion():
    """Record one acceptance criterion's outcome for the end-of-run table."""

    @contextmanager
    def record(number, title):
        detail = {}
        start = time.perf_counter()
        passed = False
        try:
            yield detail
            passed = True
        finally:
            detail.setdefault("seconds", round(time.perf_counter() - start, 2))
            _RESULTS[number] = (title, passed, detail)
            print(_line(number, title, passed, detail))

    return record


def _line(number, title, passed, detail):
    facts = ", ".join(f"{k}={v}" for k, v in detail.items())
    return f"criterion {number:>2} {'PASS' if passed else 'FAIL'}: {title} ({facts})"


@pytest.hookimpl(tryfirst=True)
def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - session.config._suite_start
    session.config._suite_elapsed = elapsed
    if 10 in _RESULTS and elapsed >= SUITE_LIMIT_SECONDS:
        title, _, detail = _RESULTS[10]
        _RESULTS[10] = (title, False, detail)
        session.exitstatus = pytest.ExitCode.TESTS_FAILED


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    elapsed = getattr(config, "_suite_elapsed", time.perf_counter() - config._suite_start)
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, passed, detail = _RESULTS[number]
        if number == 10:
            detail = dict(detail, suite_seconds=round(elapsed, 1), limit=SUITE_LIMIT_SECONDS)
        terminalreporter.write_line(_line(number, title, passed, detail))

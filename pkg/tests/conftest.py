"""Shared fixtures and the acceptance-check reporting hook.

Acceptance tests record one verdict line each through :func:`record` (usually
via the ``criterion`` decorator); the collected lines are printed in their own
section after the regular pytest summary, so a plain ``pytest -v`` run ends
with one PASS/FAIL line per acceptance check.
"""

from __future__ import annotations

import functools

import pytest

import hdakit

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def record(name: str, passed: bool, detail: str = "") -> None:
    """Add one line to the acceptance summary."""
    _ACCEPTANCE.append((name, bool(passed), detail))


def criterion(name: str):
    """Wrap an acceptance test so it always emits exactly one summary line.

    The wrapped test runs as usual; any failure (assertion or error) is
    recorded as FAIL with the exception text, success as PASS with the
    string the test returns.
    """

    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:  # re-raised below, pytest reports it
                record(name, False, f"{type(exc).__name__}: {exc}")
                raise
            record(name, True, detail or "")

        return wrapper

    return deco


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.ensure_newline()
    tr.section("acceptance checks")
    for name, passed, detail in _ACCEPTANCE:
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        if detail:
            line += f" -- {detail}"
        tr.write_line(line)


@pytest.fixture(scope="session")
def docs() -> dict[str, hdakit.HdaDocument]:
    """All bundled example documents, keyed by example name."""
    return hdakit.example_documents()


def pair_of(docs, left: str, right: str):
    """(hda, labeling) tuples for two named examples."""
    a, b = docs[left], docs[right]
    return (a.to_hda(), a.labeling()), (b.to_hda(), b.labeling())

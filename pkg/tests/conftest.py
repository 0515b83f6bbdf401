"""Shared fixtures and the acceptance summary printed at the end of a run."""

from __future__ import annotations

import pytest

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[number] = (title, ok, detail)


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[number]
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}"
        tr.write_line(line + (f"  [{detail}]" if detail else ""))

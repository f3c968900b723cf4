from pathlib import Path

import numpy as np
import pytest

from dcfreg.regression import Dataset

DATA = Path(__file__).parent / "data"

HOUSE_SIZE = [800, 1200, 1500, 1800, 2100, 2400, 2700, 3000, 3300, 3600]
HOUSE_PRICE = [180, 240, 310, 350, 400, 450, 520, 580, 620, 680]

# Frozen from the closed-form simple-regression sums:
# Sxx = 7_704_000, Sxy = 1_385_800, Syy = 249_810 (x_bar = 2240, y_bar = 433).
HOUSE_SLOPE = 1_385_800 / 7_704_000
HOUSE_INTERCEPT = 433 - HOUSE_SLOPE * 2240
HOUSE_R2 = 1_385_800**2 / (7_704_000 * 249_810)


@pytest.fixture
def house() -> Dataset:
    return Dataset(np.array(HOUSE_SIZE, dtype=float)[:, None], HOUSE_PRICE, feature_names=("size",), target_name="price")


@pytest.fixture
def data_dir() -> Path:
    return DATA


def simple_regression(x, y):
    """Slope and intercept from centred sums, pure Python."""
    n = len(x)
    xb = sum(x) / n
    yb = sum(y) / n
    sxx = sum((a - xb) ** 2 for a in x)
    sxy = sum((a - xb) * (b - yb) for a, b in zip(x, y))
    slope = sxy / sxx
    return slope, yb - slope * xb


# ---------------------------------------------------------------------------
# acceptance bookkeeping: one pass/fail line per criterion in the summary

ACCEPTANCE_LINES: list[str] = []
SUITE_BUDGET_S = 60.0
_session_start = [0.0]


def record_criterion(number, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_sessionstart(session):
    import time

    _session_start[0] = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    import time

    elapsed = time.perf_counter() - _session_start[0]
    if ACCEPTANCE_LINES:
        ok = elapsed < SUITE_BUDGET_S
        ACCEPTANCE_LINES.append(
            f"[{'PASS' if ok else 'FAIL'}] criterion 10: full suite runtime {elapsed:.1f} s < {SUITE_BUDGET_S:.0f} s"
        )
        if not ok:
            session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

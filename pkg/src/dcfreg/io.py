"""CSV readers for the command-line inputs.

Every file has a mandatory header row, comma separators and plain decimal
numbers. Errors carry the file name and 1-based line number.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import Callable, Iterator, Sequence, TypeVar

from .criteria import AWSRecord, CriteriaObservation
from .discounting import ContinuousFlow, CostProfile, OneTimeEvent
from .errors import InputError
from .regression import Dataset

T = TypeVar("T")

EVENTS_HEADER = ("amount", "time")
FLOWS_HEADER = ("rate", "start", "end")
PROFILE_HEADER = ("time", "rate")
AWS_HEADER = ("label", "aws1", "aws2", "aws3")
CRITERIA_HEADER = ("r_bar", "csr", "lr", "ir", "cfr")


def _rows(path: Path) -> Iterator[tuple[int, list[str]]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            yield reader.line_num, [cell.strip() for cell in row]


def _number(path: Path, line: int, column: str, text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise InputError(f"{path.name} line {line}: column '{column}': cannot parse {text!r} as a number") from None
    if not math.isfinite(value):
        raise InputError(f"{path.name} line {line}: column '{column}': value must be finite, got {text!r}")
    return value


def _read_header(path: Path, rows: Iterator[tuple[int, list[str]]], expected: Sequence[str] | None) -> list[str]:
    try:
        line, header = next(rows)
    except StopIteration:
        raise InputError(f"{path.name}: file is empty (a header row is required)") from None
    if expected is not None and tuple(header) != tuple(expected):
        raise InputError(
            f"{path.name} line {line}: expected header {','.join(expected)!r}, got {','.join(header)!r}"
        )
    return header


def read_records(path, header: Sequence[str], build: Callable[..., T], text_columns: Sequence[str] = ()) -> list[T]:
    """Parse ``path`` against ``header`` and build one object per data row.

    ``build`` receives the row as keyword arguments; a ``ValueError`` it
    raises is reported against the offending line.
    """
    path = Path(path)
    rows = _rows(path)
    _read_header(path, rows, header)
    out = []
    for line, cells in rows:
        if len(cells) != len(header):
            raise InputError(f"{path.name} line {line}: expected {len(header)} columns, got {len(cells)}")
        kw = {
            col: cell if col in text_columns else _number(path, line, col, cell)
            for col, cell in zip(header, cells)
        }
        try:
            out.append(build(**kw))
        except ValueError as exc:
            raise InputError(f"{path.name} line {line}: {exc}") from None
    return out


def read_events(path) -> list[OneTimeEvent]:
    return read_records(path, EVENTS_HEADER, OneTimeEvent)


def read_flows(path) -> list[ContinuousFlow]:
    return read_records(path, FLOWS_HEADER, ContinuousFlow)


def read_profile(path) -> CostProfile:
    """Cost profile whose duration is the last sample time."""
    pairs = read_records(path, PROFILE_HEADER, lambda time, rate: (time, rate))
    try:
        return CostProfile.from_arrays([t for t, _ in pairs], [r for _, r in pairs])
    except ValueError as exc:
        raise InputError(f"{Path(path).name}: {exc}") from None


def read_aws(path) -> list[AWSRecord]:
    return read_records(path, AWS_HEADER, AWSRecord, text_columns=("label",))


def read_criteria(path) -> list[CriteriaObservation]:
    return read_records(path, CRITERIA_HEADER, CriteriaObservation)


def read_dataset(path) -> Dataset:
    """Features in all but the last column; the last column is the target."""
    path = Path(path)
    rows = _rows(path)
    header = _read_header(path, rows, None)
    if len(header) < 2:
        raise InputError(f"{path.name} line 1: need at least one feature column and a target column")
    values = []
    for line, cells in rows:
        if len(cells) != len(header):
            raise InputError(f"{path.name} line {line}: expected {len(header)} columns, got {len(cells)}")
        values.append([_number(path, line, col, cell) for col, cell in zip(header, cells)])
    if len(values) < 2:
        raise InputError(f"{path.name}: need at least 2 data rows, got {len(values)}")
    return Dataset(
        [row[:-1] for row in values],
        [row[-1] for row in values],
        feature_names=tuple(header[:-1]),
        target_name=header[-1],
    )

"""Dated series containers and the transformations the daily pipeline needs.

A :class:`DatedSeries` is the universal carrier for prices, earnings,
yields, and premia: calendar dates paired with float values.  Dates are
plain ``datetime.date`` objects; no business-day or holiday logic is
applied anywhere, and series combine by exact date intersection.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from datetime import date
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CalendarPrecedesDataError,
    EmptyIntersectionError,
    InvalidParametersError,
    NonPositivePriceError,
    TooShortError,
)

PERIOD_LABELS = ("daily", "quarterly", "annual")


def _freeze_values(obj, values) -> None:
    arr = np.array(values, dtype=float)
    arr.flags.writeable = False
    object.__setattr__(obj, "values", arr)


def _check_dates(dates: tuple) -> None:
    if len(dates) == 0:
        raise ValueError("series must contain at least one observation")
    for i in range(1, len(dates)):
        if not dates[i] > dates[i - 1]:
            raise ValueError(
                f"dates must be strictly increasing: {dates[i - 1]} !< {dates[i]}"
            )


@dataclass(frozen=True)
class DatedSeries:
    """Ordered (date, value) observations with strictly increasing dates.

    Invariants enforced at construction: non-empty, dates strictly
    increasing (hence no duplicates), all values finite.  The value array
    is read-only after construction.
    """

    dates: tuple[date, ...]
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dates", tuple(self.dates))
        _freeze_values(self, self.values)
        _check_dates(self.dates)
        if len(self.dates) != len(self.values):
            raise ValueError("dates and values must have equal length")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("values must be finite (no NaN or infinity)")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[date, float]]) -> "DatedSeries":
        pairs = list(pairs)
        return cls(tuple(d for d, _ in pairs), np.array([v for _, v in pairs], dtype=float))

    def as_pairs(self) -> list[tuple[date, float]]:
        return [(d, float(v)) for d, v in zip(self.dates, self.values)]

    def __len__(self) -> int:
        return len(self.dates)


@dataclass(frozen=True)
class ReturnSeries:
    """Per-period simple returns, tagged with the period length.

    Each return must exceed -1 (prices are positive); ``period`` is one of
    ``daily``, ``quarterly``, ``annual``.
    """

    dates: tuple[date, ...]
    values: np.ndarray
    period: str

    def __post_init__(self):
        object.__setattr__(self, "dates", tuple(self.dates))
        _freeze_values(self, self.values)
        _check_dates(self.dates)
        if len(self.dates) != len(self.values):
            raise ValueError("dates and values must have equal length")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("returns must be finite")
        if np.any(self.values <= -1.0):
            raise ValueError("simple returns must be > -1")
        if self.period not in PERIOD_LABELS:
            raise ValueError(f"period must be one of {PERIOD_LABELS}, got {self.period!r}")

    def __len__(self) -> int:
        return len(self.dates)


def infer_period(dates: Sequence[date]) -> str:
    """Classify a date grid as daily, quarterly, or annual by median spacing."""
    if len(dates) < 2:
        return "daily"
    gaps = [(dates[i] - dates[i - 1]).days for i in range(1, len(dates))]
    median = float(np.median(gaps))
    if median >= 300:
        return "annual"
    if median >= 60:
        return "quarterly"
    return "daily"


def align(a, b) -> tuple[tuple[date, ...], np.ndarray, np.ndarray]:
    """Pair two series over their common dates.

    Accepts any mix of :class:`DatedSeries` and :class:`ReturnSeries`.
    Returns ``(dates, a_values, b_values)`` restricted to dates present in
    both inputs, in ascending order.

    Raises
    ------
    EmptyIntersectionError
        If the two series share no dates.
    """
    b_index = {d: i for i, d in enumerate(b.dates)}
    common = [(d, i, b_index[d]) for i, d in enumerate(a.dates) if d in b_index]
    if not common:
        raise EmptyIntersectionError("series share no common dates")
    dates = tuple(d for d, _, _ in common)
    a_vals = a.values[[i for _, i, _ in common]]
    b_vals = b.values[[j for _, _, j in common]]
    return dates, a_vals, b_vals


def align_many(series: Sequence) -> tuple[tuple[date, ...], list[np.ndarray]]:
    """Intersect any number of series on their common dates.

    Returns the common dates and one value array per input series, all in
    the same ascending order.  Raises :class:`EmptyIntersectionError` when
    the intersection is empty.
    """
    if not series:
        raise InvalidParametersError("align_many needs at least one series")
    common = set(series[0].dates)
    for s in series[1:]:
        common &= set(s.dates)
    if not common:
        raise EmptyIntersectionError("series share no common dates")
    dates = tuple(sorted(common))
    columns = []
    for s in series:
        index = {d: i for i, d in enumerate(s.dates)}
        columns.append(s.values[[index[d] for d in dates]])
    return dates, columns


def simple_returns(prices: DatedSeries, period: str | None = None) -> ReturnSeries:
    """Per-period simple returns ``p[i+1]/p[i] - 1``, dated at the later day.

    All prices must be positive and the series needs at least two
    observations.  ``period`` defaults to a classification of the price
    grid's median spacing (see :func:`infer_period`).
    """
    if len(prices) < 2:
        raise TooShortError("need at least two prices to form a return")
    if np.any(prices.values <= 0.0):
        bad = prices.dates[int(np.argmax(prices.values <= 0.0))]
        raise NonPositivePriceError(f"non-positive price at {bad}")
    rets = prices.values[1:] / prices.values[:-1] - 1.0
    return ReturnSeries(prices.dates[1:], rets, period or infer_period(prices.dates))


def ema(series: DatedSeries, period_days: int) -> DatedSeries:
    """Exponential moving average with smoothing factor 2/(period+1).

    Seeded with the first observation and computed recursively:

        out[0] = in[0]
        out[i] = out[i-1] + alpha * (in[i] - out[i-1])

    The incremental form makes constant inputs exact fixed points.  With
    ``period_days == 1`` the output equals the input.
    """
    if period_days < 1:
        raise InvalidParametersError("period_days must be >= 1")
    alpha = 2.0 / (period_days + 1.0)
    out = np.empty_like(series.values)
    acc = series.values[0]
    out[0] = acc
    for i in range(1, len(out)):
        acc = acc + alpha * (series.values[i] - acc)
        out[i] = acc
    return DatedSeries(series.dates, out)


def step_interpolate(sparse: DatedSeries, calendar: Sequence[date]) -> DatedSeries:
    """Carry sparse observations forward onto a finer calendar.

    Each calendar date takes the most recent sparse value at or before it
    (last observation carried forward).  The calendar must be non-empty,
    strictly increasing, and start no earlier than the first sparse date.

    Raises
    ------
    CalendarPrecedesDataError
        If a calendar date precedes every sparse observation.
    """
    calendar = tuple(calendar)
    if not calendar:
        raise InvalidParametersError("calendar must be non-empty")
    for i in range(1, len(calendar)):
        if not calendar[i] > calendar[i - 1]:
            raise InvalidParametersError("calendar must be strictly increasing")
    if calendar[0] < sparse.dates[0]:
        raise CalendarPrecedesDataError(
            f"calendar starts {calendar[0]}, before first observation {sparse.dates[0]}"
        )
    out = np.empty(len(calendar))
    for i, d in enumerate(calendar):
        out[i] = sparse.values[bisect_right(sparse.dates, d) - 1]
    return DatedSeries(calendar, out)

"""Historical premium estimation over configurable windows.

The premium is measured against a chosen riskfree instrument over an
inclusive calendar-year window.  Estimates average each leg with the
chosen scheme and then difference (average-then-difference); for the
arithmetic scheme this coincides with differencing first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .averaging import AveragingMethod
from .errors import EmptyInputError, EmptyIntersectionError, EmptyWindowError
from .io import format_cell
from .timeseries import ReturnSeries, align

YearWindow = tuple[int, int]


@dataclass(frozen=True)
class ErpEstimate:
    """One premium estimate with full provenance.

    ``premium`` is a decimal fraction and may be negative; ``window`` is
    an inclusive (start_year, end_year) pair; ``sample_size`` counts the
    aligned periods the averages ran over.
    """

    premium: float
    window: YearWindow
    riskfree_label: str
    method: AveragingMethod
    sample_size: int

    def __post_init__(self):
        if self.sample_size < 1:
            raise ValueError("sample_size must be >= 1")
        if self.window[0] > self.window[1]:
            raise ValueError(f"window start {self.window[0]} after end {self.window[1]}")


def premium_series(equity: ReturnSeries, riskfree: ReturnSeries) -> ReturnSeries:
    """Per-date excess return: equity minus riskfree on common dates.

    A uniform shift applied to both inputs (inflation moving every
    nominal return) cancels in the subtraction, so the premium does not
    depend on working in nominal or real terms.
    """
    dates, eq, rf = align(equity, riskfree)
    return ReturnSeries(dates, eq - rf, equity.period)


def historical_erp(
    equity: ReturnSeries,
    riskfree: ReturnSeries,
    window: YearWindow,
    method: AveragingMethod,
    riskfree_label: str = "riskfree",
) -> ErpEstimate:
    """Premium over an inclusive year window under one averaging scheme.

    Both series are paired on common dates, restricted to observations
    whose year falls inside the window, averaged per leg with ``method``,
    and differenced.  Under arithmetic or exponential weighting the
    estimate is exactly invariant to a uniform shift of both legs;
    under geometric averaging only approximately so.

    Raises
    ------
    EmptyIntersectionError
        The series share no dates at all.
    EmptyWindowError
        No common observation falls inside the window.
    """
    start, end = window
    dates, eq, rf = align(equity, riskfree)
    mask = [start <= d.year <= end for d in dates]
    if not any(mask):
        raise EmptyWindowError(f"no aligned observations in {start}-{end}")
    eq_in = eq[mask]
    rf_in = rf[mask]
    premium = method.apply(eq_in) - method.apply(rf_in)
    return ErpEstimate(premium, (start, end), riskfree_label, method, len(eq_in))


@dataclass(frozen=True)
class ReportCell:
    """One report cell: an estimate, or a flagged gap with a reason."""

    estimate: ErpEstimate | None
    note: str = ""

    @property
    def missing(self) -> bool:
        return self.estimate is None


@dataclass(frozen=True)
class ErpReport:
    """Grid of premium estimates: windows down, (riskfree x method) across."""

    windows: tuple[YearWindow, ...]
    columns: tuple[tuple[str, AveragingMethod], ...]
    cells: tuple[tuple[ReportCell, ...], ...]

    def column_labels(self) -> list[str]:
        return [f"{label} {method.label}" for label, method in self.columns]

    def to_csv(self) -> str:
        """One row per window; missing cells render as NA."""
        lines = ["window," + ",".join(self.column_labels())]
        for window, row in zip(self.windows, self.cells):
            rendered = [
                "NA" if cell.missing else format_cell(cell.estimate.premium)
                for cell in row
            ]
            lines.append(f"{window[0]}-{window[1]}," + ",".join(rendered))
        return "\n".join(lines) + "\n"


def erp_report(
    equity: ReturnSeries,
    riskfree_variants: list[tuple[str, ReturnSeries]],
    windows: list[YearWindow],
    methods: list[AveragingMethod],
) -> ErpReport:
    """Cartesian grid of estimates over windows, instruments, and methods.

    Cells whose window holds no data are flagged with the reason instead
    of failing the whole report: the report is a diagnostic artifact.
    """
    if not riskfree_variants or not windows or not methods:
        raise EmptyInputError("need at least one riskfree variant, window, and method")
    columns = tuple((label, method) for label, _ in riskfree_variants for method in methods)
    rows = []
    for window in windows:
        row = []
        for label, riskfree in riskfree_variants:
            for method in methods:
                try:
                    row.append(ReportCell(historical_erp(
                        equity, riskfree, window, method, riskfree_label=label)))
                except (EmptyWindowError, EmptyIntersectionError) as exc:
                    row.append(ReportCell(None, note=str(exc)))
        rows.append(tuple(row))
    return ErpReport(tuple(windows), columns, tuple(rows))

"""Command-line front end.

Subcommands: ``implied`` (daily implied-premium pipeline), ``historical``
(windowed premium report), ``capm`` (market-model regression), and
``simulate`` (diversification experiment).  Exit status: 0 success
(possibly with warnings), 1 input/parse error, 2 numerical failure.

A plain ``key=value`` config file can pre-fill any flag (``--config`` or
the ERP_LAB_CONFIG environment variable); explicit flags win.
"""

from __future__ import annotations

import argparse
import os
import sys
from contextlib import contextmanager
from pathlib import Path

from .averaging import AveragingMethod
from .capm import fit_market_model, risk_decomposition, simulate_diversification
from .charts import write_line_chart
from .errors import ErpLabError, NumericalError
from .historical import erp_report
from .implied import implied_erp_series
from .io import ISO_DATE, SeriesFileSpec, format_cell, parse_series
from .timeseries import (
    DatedSeries,
    ReturnSeries,
    align,
    ema,
    infer_period,
    simple_returns,
    step_interpolate,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2

_CAUGHT = (ErpLabError, OSError, ValueError)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # surface usage problems as exit status 1, not argparse's default 2
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _fail(exc: BaseException) -> int:
    print(f"erp-lab: {exc}", file=sys.stderr)
    return EXIT_NUMERICAL if isinstance(exc, NumericalError) else EXIT_INPUT


@contextmanager
def _stage(name: str):
    """Re-raise pipeline errors with the failing stage named."""
    try:
        yield
    except _CAUGHT as exc:
        raise type(exc)(f"{name}: {exc}") from exc


def _to_returns(series: DatedSeries, kind: str) -> ReturnSeries:
    if kind == "levels":
        return simple_returns(series)
    return ReturnSeries(series.dates, series.values, infer_period(series.dates))


# -- commands -----------------------------------------------------------------

def run_implied(prices_spec: SeriesFileSpec, eps_spec: SeriesFileSpec,
                yields_spec: SeriesFileSpec, ema_period: int, output: str,
                svg_path: str | None = None) -> int:
    """Daily pipeline: parse, carry EPS to the price calendar, smooth,
    compute eps/price - yield, write CSV and SVG."""
    try:
        with _stage("parsing prices"):
            prices = parse_series(prices_spec)
        with _stage("parsing eps"):
            eps_sparse = parse_series(eps_spec)
        with _stage("parsing yields"):
            yields = parse_series(yields_spec)
        with _stage("interpolating eps to the price calendar"):
            eps_daily = step_interpolate(eps_sparse, prices.dates)
        with _stage("smoothing eps"):
            eps_smooth = ema(eps_daily, ema_period)
        with _stage("computing the premium"):
            erp = implied_erp_series(prices, eps_smooth, yields)
        with _stage("writing output"):
            price_at = dict(zip(prices.dates, prices.values))
            eps_at = dict(zip(eps_smooth.dates, eps_smooth.values))
            yield_at = dict(zip(yields.dates, yields.values))
            lines = ["date,price,eps_smoothed,yield,erp"]
            for d, v in zip(erp.dates, erp.values):
                lines.append(",".join([
                    d.isoformat(),
                    format_cell(price_at[d]),
                    format_cell(eps_at[d]),
                    format_cell(yield_at[d]),
                    format_cell(v),
                ]))
            with open(output, "w", encoding="utf-8", newline="") as fh:
                fh.write("\n".join(lines) + "\n")
            svg = svg_path or str(Path(output).with_suffix(".svg"))
            write_line_chart(erp, svg, title="Implied equity risk premium",
                             y_label="premium")
    except _CAUGHT as exc:
        return _fail(exc)
    return EXIT_OK


def run_historical(equity_spec: SeriesFileSpec,
                   riskfree_specs: list[tuple[str, SeriesFileSpec]],
                   windows: list[tuple[int, int]],
                   methods: list[AveragingMethod],
                   output: str,
                   equity_values: str = "returns",
                   riskfree_values: str = "returns") -> int:
    """Windowed premium report across riskfree instruments and averaging
    methods, written as CSV (windows down, instrument x method across)."""
    try:
        with _stage("parsing equity"):
            equity = _to_returns(parse_series(equity_spec), equity_values)
        variants = []
        for label, spec in riskfree_specs:
            with _stage(f"parsing riskfree {label!r}"):
                variants.append((label, _to_returns(parse_series(spec), riskfree_values)))
        with _stage("building report"):
            report = erp_report(equity, variants, windows, methods)
        for window, row in zip(report.windows, report.cells):
            for (label, method), cell in zip(report.columns, row):
                if cell.missing:
                    print(
                        f"erp-lab: warning: {window[0]}-{window[1]} "
                        f"{label} {method.label}: {cell.note}",
                        file=sys.stderr,
                    )
        with _stage("writing output"):
            with open(output, "w", encoding="utf-8", newline="") as fh:
                fh.write(report.to_csv())
    except _CAUGHT as exc:
        return _fail(exc)
    return EXIT_OK


def run_capm(asset_spec: SeriesFileSpec, market_spec: SeriesFileSpec,
             values: str = "returns") -> int:
    """Fit the market model and print the estimate and risk split."""
    try:
        with _stage("parsing asset"):
            asset = _to_returns(parse_series(asset_spec), values)
        with _stage("parsing market"):
            market = _to_returns(parse_series(market_spec), values)
        with _stage("fitting market model"):
            fit = fit_market_model(asset, market)
            _, _, market_aligned = align(asset, market)
            sigma_m = float(market_aligned.std())
            systematic, unsystematic = risk_decomposition(fit, sigma_m)
    except _CAUGHT as exc:
        return _fail(exc)
    print(f"n_obs           {fit.n_obs}")
    print(f"beta            {format_cell(fit.beta)}")
    print(f"intercept       {format_cell(fit.intercept)}")
    print(f"residual_sigma  {format_cell(fit.residual_sigma)}")
    print(f"sigma_m         {format_cell(sigma_m)}")
    print(f"systematic      {format_cell(systematic)}")
    print(f"unsystematic    {format_cell(unsystematic)}")
    return EXIT_OK


def run_simulate(n_assets: int, beta: float, sigma_m: float, sigma_eps: float,
                 n_periods: int, seed: int) -> int:
    """Print sample systematic/unsystematic risk of an equal-weight portfolio."""
    try:
        systematic, unsystematic = simulate_diversification(
            n_assets, beta, sigma_m, sigma_eps, n_periods, seed)
    except _CAUGHT as exc:
        return _fail(exc)
    print(f"n_assets        {n_assets}")
    print(f"systematic      {format_cell(systematic)}")
    print(f"unsystematic    {format_cell(unsystematic)}")
    return EXIT_OK


# -- argument plumbing --------------------------------------------------------

def _add_series_flags(sub, prefix: str) -> None:
    sub.add_argument(f"--{prefix}", required=True, help=f"{prefix} CSV file")
    sub.add_argument(f"--{prefix}-date-column", default="date")
    sub.add_argument(f"--{prefix}-value-column", default="value")
    sub.add_argument(f"--{prefix}-date-format", default=ISO_DATE)
    sub.add_argument(f"--{prefix}-scale", type=float, default=1.0,
                     help="multiplier applied to values (0.01 for percent quotes)")


def _spec_from(args, prefix: str) -> SeriesFileSpec:
    return SeriesFileSpec(
        path=getattr(args, prefix),
        date_column=getattr(args, f"{prefix}_date_column"),
        value_column=getattr(args, f"{prefix}_value_column"),
        date_format=getattr(args, f"{prefix}_date_format"),
        value_scale=getattr(args, f"{prefix}_scale"),
    )


def _parse_window(text: str) -> tuple[int, int]:
    start, _, end = text.partition("-")
    try:
        return int(start), int(end)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like 1928-2008, got {text!r}")


def _parse_riskfree(text: str) -> tuple[str, str]:
    label, sep, path = text.partition("=")
    if not sep:
        return Path(text).stem, text
    return label, path


def build_parser() -> tuple[_Parser, list]:
    parser = _Parser(prog="erp-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key=value file pre-filling flags "
                        "(default: $ERP_LAB_CONFIG); explicit flags win")
    commands = parser.add_subparsers(dest="command", required=True)
    subs = []

    implied = commands.add_parser(
        "implied", help="daily implied-premium pipeline from prices, EPS, and yields")
    for prefix in ("prices", "eps", "yields"):
        _add_series_flags(implied, prefix)
    implied.add_argument("--ema-period", type=int, default=50,
                         help="EPS smoothing period in days (default 50)")
    implied.add_argument("--output", required=True, help="output CSV path")
    implied.add_argument("--svg", help="output SVG path (default: output with .svg)")
    implied.set_defaults(func=_cmd_implied)
    subs.append(implied)

    historical = commands.add_parser(
        "historical", help="windowed historical premium report")
    _add_series_flags(historical, "equity")
    historical.add_argument("--equity-kind", choices=("returns", "levels"),
                            default="returns",
                            help="whether the equity file holds returns or price levels")
    historical.add_argument("--riskfree", action="append", required=True,
                            type=_parse_riskfree, metavar="LABEL=PATH",
                            help="riskfree instrument file; repeatable")
    historical.add_argument("--riskfree-date-column", default="date")
    historical.add_argument("--riskfree-value-column", default="value")
    historical.add_argument("--riskfree-date-format", default=ISO_DATE)
    historical.add_argument("--riskfree-scale", type=float, default=1.0)
    historical.add_argument("--riskfree-kind", choices=("returns", "levels"),
                            default="returns")
    historical.add_argument("--window", action="append", required=True,
                            type=_parse_window, metavar="START-END",
                            help="inclusive year window, e.g. 1928-2008; repeatable")
    historical.add_argument("--method", action="append", required=True,
                            type=AveragingMethod.from_string, metavar="METHOD",
                            help="arithmetic | geometric | blume:N | exp:DECAY; repeatable")
    historical.add_argument("--output", required=True, help="output CSV path")
    historical.set_defaults(func=_cmd_historical)
    subs.append(historical)

    capm = commands.add_parser("capm", help="market-model regression of asset on market")
    _add_series_flags(capm, "asset")
    _add_series_flags(capm, "market")
    capm.add_argument("--kind", choices=("returns", "levels"), default="returns",
                      help="whether both files hold returns or price levels")
    capm.set_defaults(func=_cmd_capm)
    subs.append(capm)

    simulate = commands.add_parser(
        "simulate", help="diversification experiment for an equal-weight portfolio")
    simulate.add_argument("--n-assets", type=int, required=True)
    simulate.add_argument("--beta", type=float, default=1.0)
    simulate.add_argument("--sigma-m", type=float, default=0.15)
    simulate.add_argument("--sigma-eps", type=float, default=0.30)
    simulate.add_argument("--n-periods", type=int, default=10000)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.set_defaults(func=_cmd_simulate)
    subs.append(simulate)

    return parser, subs


def _cmd_implied(args) -> int:
    return run_implied(
        _spec_from(args, "prices"),
        _spec_from(args, "eps"),
        _spec_from(args, "yields"),
        args.ema_period,
        args.output,
        svg_path=args.svg,
    )


def _cmd_historical(args) -> int:
    riskfree_specs = [
        (label, SeriesFileSpec(
            path=path,
            date_column=args.riskfree_date_column,
            value_column=args.riskfree_value_column,
            date_format=args.riskfree_date_format,
            value_scale=args.riskfree_scale,
        ))
        for label, path in args.riskfree
    ]
    return run_historical(
        _spec_from(args, "equity"),
        riskfree_specs,
        args.window,
        args.method,
        args.output,
        equity_values=args.equity_kind,
        riskfree_values=args.riskfree_kind,
    )


def _cmd_capm(args) -> int:
    return run_capm(_spec_from(args, "asset"), _spec_from(args, "market"),
                    values=args.kind)


def _cmd_simulate(args) -> int:
    return run_simulate(args.n_assets, args.beta, args.sigma_m, args.sigma_eps,
                        args.n_periods, args.seed)


def _load_config(path: str) -> dict[str, str]:
    config: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path} line {lineno}: expected key=value, got {line!r}")
            config[key.strip().replace("-", "_")] = value.strip()
    return config


def _apply_config(sub, config: dict[str, str]) -> None:
    for action in sub._actions:
        if action.dest not in config:
            continue
        raw = config[action.dest]
        if isinstance(action, argparse._AppendAction):
            items = [p for p in (s.strip() for s in raw.split(",")) if p]
            value = [action.type(p) if action.type else p for p in items]
        else:
            value = action.type(raw) if action.type else raw
        sub.set_defaults(**{action.dest: value})
        action.required = False


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        pre = _Parser(add_help=False)
        pre.add_argument("--config")
        known, _ = pre.parse_known_args(argv)
        config_path = known.config or os.environ.get("ERP_LAB_CONFIG")
        parser, subs = build_parser()
        if config_path:
            config = _load_config(config_path)
            for sub in subs:
                _apply_config(sub, config)
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"erp-lab: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _CAUGHT as exc:
        return _fail(exc)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Regenerates the bundled synthetic datasets.

Deliberately independent of the library: everything here is plain Python
so the files double as fixtures for oracle-style tests.

Annual files: 10 years of two-decimal returns.  Values are chosen so that
adding 0.01 or 0.05 to an equity/riskfree pair leaves the float
subtraction bit-identical (the shift-invariance tests assert exact
equality, which generic doubles only satisfy to 1 ulp).

Daily files: two calendar years of prices, quarterly EPS, and
percent-quoted ten-year yields, shaped so the smoothed earnings yield
crosses the bond yield and back (one clearly negative premium episode,
no near-zero days).
"""

import csv
import math
from datetime import date, timedelta
from pathlib import Path

HERE = Path(__file__).parent


def exact_shift(e: float, r: float) -> bool:
    return all((e + c) - (r + c) == e - r for c in (0.01, 0.05))


def nudge(e: float, target: float) -> float:
    """Closest two-decimal value to target forming exact-shift pairs with e."""
    candidates = sorted(
        (round(target + 0.01 * d, 2) for d in range(-6, 7)),
        key=lambda v: abs(v - target),
    )
    for v in candidates:
        if exact_shift(e, v):
            return v
    raise SystemExit(f"no exact-shift partner near {target} for equity {e}")


def write_csv(name, header, rows):
    with open(HERE / name, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def annual_files():
    equity = [0.11, -0.09, 0.21, 0.07, -0.15, 0.26, 0.04, 0.11, -0.31, 0.19]
    tbill_targets = [0.06, 0.03, 0.02, 0.01, 0.01, 0.03, 0.05, 0.05, 0.02, 0.01]
    tbond_targets = [0.08, 0.05, 0.09, 0.04, 0.08, 0.03, 0.02, 0.07, 0.12, -0.05]
    years = range(2000, 2010)
    tbills = [nudge(e, t) for e, t in zip(equity, tbill_targets)]
    tbonds = [nudge(e, t) for e, t in zip(equity, tbond_targets)]
    for e, b, t in zip(equity, tbills, tbonds):
        assert exact_shift(e, b) and exact_shift(e, t)
    fmt = lambda v: f"{v:.2f}"
    write_csv("annual_equity.csv", ["date", "return"],
              [[date(y, 12, 31).isoformat(), fmt(e)] for y, e in zip(years, equity)])
    write_csv("annual_tbills.csv", ["date", "return"],
              [[date(y, 12, 31).isoformat(), fmt(b)] for y, b in zip(years, tbills)])
    write_csv("annual_tbonds.csv", ["date", "return"],
              [[date(y, 12, 31).isoformat(), fmt(t)] for y, t in zip(years, tbonds)])
    print("tbills:", tbills)
    print("tbonds:", tbonds)


def daily_files():
    start = date(2005, 1, 1)
    days = [start + timedelta(days=i) for i in range(730)]

    def price(i: int) -> float:
        return round(1000.0 + 0.25 * i + 40.0 * math.sin(i / 45.0), 2)

    # quarterly EPS: starts above the yield in earnings-yield terms,
    # dips well below mid-sample, recovers
    eps_quarters = [
        (date(2005, 1, 1), 58.0),
        (date(2005, 4, 1), 54.0),
        (date(2005, 7, 1), 40.0),
        (date(2005, 10, 1), 34.0),
        (date(2006, 1, 1), 33.0),
        (date(2006, 4, 1), 48.0),
        (date(2006, 7, 1), 62.0),
        (date(2006, 10, 1), 66.0),
    ]

    def yield_pct(i: int) -> float:
        return round(4.2 + 0.4 * math.sin(i / 120.0), 2)

    write_csv("daily_prices.csv", ["date", "close"],
              [[d.isoformat(), f"{price(i):.2f}"] for i, d in enumerate(days)])
    write_csv("quarterly_eps.csv", ["date", "eps"],
              [[d.isoformat(), f"{v:.2f}"] for d, v in eps_quarters])
    write_csv("daily_yields.csv", ["date", "rate"],
              [[d.isoformat(), f"{yield_pct(i):.2f}"] for i, d in enumerate(days)])

    # sanity: run an independent mini-pipeline and check the sign pattern
    alpha = 2.0 / (50 + 1)
    q_dates = [d for d, _ in eps_quarters]
    q_vals = [v for _, v in eps_quarters]
    smoothed = []
    acc = None
    for i, d in enumerate(days):
        j = max(idx for idx, qd in enumerate(q_dates) if qd <= d)
        x = q_vals[j]
        acc = x if acc is None else acc + alpha * (x - acc)
        smoothed.append(acc)
    erp = [smoothed[i] / price(i) - yield_pct(i) / 100.0 for i in range(730)]
    n_neg = sum(1 for v in erp if v < 0)
    print(f"daily: {n_neg} negative days of {len(erp)}, min |erp| = {min(abs(v) for v in erp):.3e}")
    assert 100 < n_neg < 630, "need a real negative episode"
    assert min(abs(v) for v in erp) > 1e-6, "no near-zero premium days allowed"


if __name__ == "__main__":
    annual_files()
    daily_files()

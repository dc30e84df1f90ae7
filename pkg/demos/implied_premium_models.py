"""Backing the required return out of prices, three ways.

A price is a forecast in disguise: given a dividend or earnings model,
the observed price pins down the return the market must be demanding.
Subtract the riskfree yield from that and you have an implied premium
that needs no historical window at all.
"""

from erp_lab import (
    GordonInputs,
    TwoStageInputs,
    earnings_implied_k,
    gordon_implied_k,
    gordon_price,
    two_stage_implied_k,
    two_stage_price,
)

RISKFREE = 0.04


def main() -> None:
    print("Constant growth (Gordon)")
    print("------------------------")
    inputs = GordonInputs(dividend_now=2.0, growth=0.04, required_k=0.09)
    price = gordon_price(inputs)
    print(f"D = 2.00 growing at 4%, k = 9%  =>  price {price:.2f}")
    k = gordon_implied_k(price, dividend_now=2.0, growth=0.04)
    print(f"inverting at that price recovers k = {k:.4f}")
    print(f"implied premium over a {RISKFREE:.0%} yield: {k - RISKFREE:+.4f}\n")

    print("Two growth stages, solved by bisection")
    print("--------------------------------------")
    two = TwoStageInputs(dividend_now=2.0, short_growth=0.12, short_years=5,
                         long_growth=0.03)
    for observed in (60.0, 90.0, 140.0):
        k = two_stage_implied_k(observed, two)
        check = two_stage_price(two, k)
        print(f"price {observed:6.1f}  =>  k = {k:.4f}  "
              f"premium {k - RISKFREE:+.4f}  (reprices to {check:.1f})")
    print("Higher prices mean the market accepts a lower required return.\n")

    print("Earnings yield")
    print("--------------")
    # the payout assumption cancels: retained earnings are presumed to
    # earn the required return itself, so EPS/P is all that matters
    k = earnings_implied_k(price=900.0, eps=45.0)
    print(f"index at 900 with EPS 45  =>  k = {k:.4f}, "
          f"premium {k - RISKFREE:+.4f}")
    k = earnings_implied_k(price=1400.0, eps=45.0)
    print(f"index at 1400, same EPS   =>  k = {k:.4f}, "
          f"premium {k - RISKFREE:+.4f}")
    print("At rich enough prices the implied premium goes negative:")
    print("the market is pricing in performance earnings cannot yet back.")


if __name__ == "__main__":
    main()

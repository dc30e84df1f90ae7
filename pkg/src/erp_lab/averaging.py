"""Averaging schemes for per-period returns.

Four ways to collapse a return sample into one rate: plain arithmetic
mean, compound (geometric) mean, a horizon-weighted blend of the two, and
an exponentially weighted mean that favours recent periods.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DecayOutOfRangeError,
    EmptyInputError,
    HorizonExceedsSampleError,
    InvalidParametersError,
    ReturnBelowMinusOneError,
)

KINDS = ("arithmetic", "geometric", "blume", "exp_weighted")


def _as_returns(returns) -> np.ndarray:
    arr = np.asarray(returns, dtype=float)
    if arr.size == 0:
        raise EmptyInputError("no returns to average")
    return arr


def arithmetic_mean(returns) -> float:
    """Sum of returns divided by their count."""
    return float(np.mean(_as_returns(returns)))


def geometric_mean(returns) -> float:
    """Compound mean: ``(prod(1 + r))**(1/n) - 1``.

    Every return must exceed -1.  Computed as ``expm1(mean(log1p(r)))``
    for numerical stability on long samples.
    """
    arr = _as_returns(returns)
    if np.any(arr <= -1.0):
        raise ReturnBelowMinusOneError("geometric mean undefined for returns <= -1")
    return float(np.expm1(np.mean(np.log1p(arr))))


def blume_blend(returns, horizon_n: int) -> float:
    """Horizon-weighted blend of arithmetic and geometric means.

    With sample length T and horizon N, the weights are (T-N)/(T-1) on the
    arithmetic mean and (N-1)/(T-1) on the geometric mean, so N=1 gives
    the pure arithmetic mean and N=T the pure geometric mean.  A sample of
    length one returns its single element.
    """
    arr = _as_returns(returns)
    if horizon_n < 1:
        raise InvalidParametersError("blend horizon must be >= 1")
    t = arr.size
    if horizon_n > t:
        raise HorizonExceedsSampleError(f"horizon {horizon_n} exceeds sample length {t}")
    if t == 1:
        return float(arr[0])
    w_arith = (t - horizon_n) / (t - 1)
    w_geom = (horizon_n - 1) / (t - 1)
    return w_arith * arithmetic_mean(arr) + w_geom * geometric_mean(arr)


def exp_weighted_mean(returns, decay: float) -> float:
    """Exponentially weighted mean with per-period decay in (0, 1].

    The most recent observation gets weight proportional to 1, the one
    before it ``decay``, then ``decay**2``, and so on; weights are
    normalized to sum to one.  ``decay == 1`` reduces to the arithmetic
    mean.
    """
    arr = _as_returns(returns)
    if not 0.0 < decay <= 1.0:
        raise DecayOutOfRangeError(f"decay must lie in (0, 1], got {decay}")
    weights = np.power(decay, np.arange(arr.size - 1, -1, -1, dtype=float))
    return float(np.dot(weights, arr) / weights.sum())


@dataclass(frozen=True)
class AveragingMethod:
    """One of the four averaging schemes, with its parameter if any."""

    kind: str
    horizon: int | None = None
    decay: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.kind == "blume":
            if self.horizon is None or self.horizon < 1:
                raise ValueError("blume requires an integer horizon >= 1")
        elif self.kind == "exp_weighted":
            if self.decay is None or not 0.0 < self.decay <= 1.0:
                raise ValueError("exp_weighted requires decay in (0, 1]")
        elif self.horizon is not None or self.decay is not None:
            raise ValueError(f"{self.kind} takes no parameters")

    @classmethod
    def arithmetic(cls) -> "AveragingMethod":
        return cls("arithmetic")

    @classmethod
    def geometric(cls) -> "AveragingMethod":
        return cls("geometric")

    @classmethod
    def blume(cls, horizon: int) -> "AveragingMethod":
        return cls("blume", horizon=horizon)

    @classmethod
    def exp_weighted(cls, decay: float) -> "AveragingMethod":
        return cls("exp_weighted", decay=decay)

    @classmethod
    def from_string(cls, text: str) -> "AveragingMethod":
        """Parse ``arithmetic``, ``geometric``, ``blume:N``, or ``exp:DECAY``."""
        name, _, param = text.partition(":")
        if name == "arithmetic" and not param:
            return cls.arithmetic()
        if name == "geometric" and not param:
            return cls.geometric()
        if name == "blume" and param:
            return cls.blume(int(param))
        if name in ("exp", "exp_weighted") and param:
            return cls.exp_weighted(float(param))
        raise ValueError(f"unrecognized averaging method {text!r}")

    @property
    def label(self) -> str:
        if self.kind == "blume":
            return f"blume({self.horizon})"
        if self.kind == "exp_weighted":
            return f"exp({self.decay:g})"
        return self.kind

    def apply(self, returns) -> float:
        if self.kind == "arithmetic":
            return arithmetic_mean(returns)
        if self.kind == "geometric":
            return geometric_mean(returns)
        if self.kind == "blume":
            return blume_blend(returns, self.horizon)
        return exp_weighted_mean(returns, self.decay)

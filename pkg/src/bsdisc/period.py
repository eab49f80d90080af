"""Period and pre-period of u_q modulo d: closed form and simulation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .modarith import mult_order, valuation
from .sequence import SequenceSpec, terms_mod_array

__all__ = ["PeriodInfo", "PeriodSearchError", "period_closed", "period_brute", "default_horizon"]


class PeriodSearchError(RuntimeError):
    """The simulation horizon was too short to confirm a period."""


@dataclass(frozen=True)
class PeriodInfo:
    period: int
    pre_period: int
    pure: bool

    def __post_init__(self):
        if self.period < 1 or self.pre_period < 1:
            raise ValueError("period and pre-period must be positive")
        if self.pure != (self.pre_period == 1):
            raise ValueError("pure must coincide with pre_period == 1")


def period_closed(spec: SequenceSpec, d: int) -> PeriodInfo:
    """Closed-form period data of u_q mod d.

    With d = 3**alpha * delta, 3 not dividing delta, the period is
    ord_{4 delta}(9), doubled unless d == q and ord_q(3) is odd; the
    pre-period is max(1, alpha).
    """
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    alpha = valuation(3, d)
    delta = d // 3**alpha
    base = mult_order(9, 4 * delta)
    if d == spec.q and mult_order(3, spec.q) % 2 == 1:
        period = base
    else:
        period = 2 * base
    pre = max(1, alpha)
    return PeriodInfo(period, pre, pre == 1)


def default_horizon(spec: SequenceSpec, d: int) -> int:
    info = period_closed(spec, d)
    return info.pre_period + 2 * info.period + 8


def period_brute(spec: SequenceSpec, d: int, horizon: int | None = None) -> PeriodInfo:
    """Period data found by simulating u_q mod d for `horizon` terms.

    A shift k is accepted when the last two simulated terms recur k
    places earlier. Two equal consecutive terms fix the whole future of a
    second-order recurrence, so the accepted k is a genuine period and the
    first such k is the minimal one. The pre-period is then one past the
    last index n with u(n) != u(n+k).
    """
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    if horizon is None:
        horizon = default_horizon(spec, d)
    if horizon > 4 * d * d:
        raise PeriodSearchError(f"horizon {horizon} exceeds cap 4*d^2 = {4 * d * d}")
    if horizon < 4:
        raise PeriodSearchError("horizon too short")
    r = terms_mod_array(spec, horizon, d)  # r[i] = u(i + 1)
    last, prev = r[-1], r[-2]
    ks = np.arange(1, horizon - 1)
    hits = np.flatnonzero((r[horizon - 1 - ks] == last) & (r[horizon - 2 - ks] == prev))
    if hits.size == 0:
        raise PeriodSearchError(f"no period confirmed for d={d} within horizon {horizon}")
    k = int(ks[hits[0]])
    mismatch = np.flatnonzero(r[:-k] != r[k:])
    pre = 1 if mismatch.size == 0 else int(mismatch[-1]) + 2
    return PeriodInfo(k, pre, pre == 1)

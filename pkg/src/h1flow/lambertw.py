"""Principal-branch Lambert W and the exact shrinking-circle radius.

Two evaluators: lambert_w0(x) solves w*e^w = x by Halley iteration, and
lambert_w0_of_exp(y) solves w + log w = y, which is W(e^y) without ever
forming e^y. The second form is what the circle solution needs for very
negative times, where e^{c-2t} overflows long before the radius does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import OutOfDomain

_INV_E = -math.exp(-1.0)


def lambert_w0(x: float) -> float:
    """W_0(x) for x >= -1/e, to relative residual ~1e-15."""
    x = float(x)
    if x < _INV_E:
        if x > _INV_E * (1.0 + 1e-12):  # rounding slop at the branch point
            return -1.0
        raise OutOfDomain(f"lambert_w0 requires x >= -1/e, got {x}")
    if x == 0.0:
        return 0.0
    if x > 1e300:
        # Halley's denominator overflows up here; solve in log space instead
        return lambert_w0_of_exp(math.log(x))
    if x >= 0.0:
        w = math.log1p(x)
    else:
        # series about the branch point in p = sqrt(2(ex + 1))
        arg = 2.0 * (math.e * x + 1.0)
        if arg <= 0.0:
            return -1.0
        p = math.sqrt(arg)
        w = -1.0 + p - p * p / 3.0 + 11.0 * p ** 3 / 72.0
        if w > 0.0:
            w = -1e-12
    for _ in range(50):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        if denom == 0.0:
            break
        step = f / denom
        w -= step
        if abs(step) <= 1e-16 * (1.0 + abs(w)):
            break
    return w


def lambert_w0_of_exp(y: float) -> float:
    """The unique w > 0 with w + log w = y; equals W_0(e^y) for all real y."""
    y = float(y)
    if y <= -500.0:
        # w = e^y (1 + o(1)); the correction is below double precision here
        return math.exp(y)
    if y > 1.0:
        w = y  # overshoots from the right; Newton is monotone from there
    else:
        w = math.exp(min(y - 1.0, 0.0))
    for _ in range(100):
        f = w + math.log(w) - y
        step = f * w / (w + 1.0)  # Newton step for f(w) = w + log w - y
        w_new = w - step
        if w_new <= 0.0:
            w_new = 0.5 * w
        # relative test: w spans ~1e-217 .. 7e2 over the useful y range
        if abs(w_new - w) <= 1e-15 * w_new:
            w = w_new
            break
        w = w_new
    return w


@dataclass(frozen=True)
class CircleSolution:
    """Homothetic circle solution r(t) = sqrt(W(e^{c - 2t})), c = r0^2 + log r0^2."""

    r0: float
    c: float = field(init=False)

    def __post_init__(self):
        if not self.r0 > 0.0:
            raise ValueError("r0 must be positive")
        r0sq = self.r0 * self.r0
        object.__setattr__(self, "c", r0sq + math.log(r0sq))

    def radius(self, t: float) -> float:
        return math.sqrt(lambert_w0_of_exp(self.c - 2.0 * t))


def circle_radius(sol: CircleSolution, t: float) -> float:
    """Radius of the exact circle solution at time t (t < 0 allowed)."""
    return sol.radius(t)

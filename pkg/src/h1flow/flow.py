"""Time integration of the flow, trajectory bookkeeping, profile rescaling.

The kernel depends on the evolving arclengths, so it is rebuilt at every step
and every RK stage; nothing is cached across steps. Forward runs shrink, and
the continuum solution exists for all time in both directions, so negative
steps are ordinary.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .curves import PolyCurve, total_length
from .diagnostics import DiagnosticsRecord, record
from .errors import DegenerateCurve
from .gradient import VelocityField, flow_velocity


class Termination(enum.Enum):
    COMPLETED = "completed"
    LENGTH_GUARD = "length_guard"
    NUMERICAL_FAILURE = "numerical_failure"


@dataclass(frozen=True)
class FlowConfig:
    dt: float
    t1: float
    t0: float = 0.0
    method: str = "euler"
    min_length_guard: float = 1e-8
    record_every: int = 1
    rescale_profile: bool = False

    def __post_init__(self):
        if not self.dt > 0.0:
            raise ValueError("dt must be positive")
        if self.dt > 2.0:
            raise ValueError(f"dt = {self.dt} is unstable (the linearization has unit rate)")
        if self.dt > 0.5:
            warnings.warn(f"dt = {self.dt} is large for forward Euler; expect drift", stacklevel=2)
        if self.method not in ("euler", "rk4"):
            raise ValueError(f"unknown method {self.method!r}")
        if abs(self.t1 - self.t0) / self.dt > 1e8:
            raise ValueError("horizon / dt exceeds the step-count sanity bound")
        if not (isinstance(self.record_every, int) and self.record_every >= 1):
            raise ValueError("record_every must be a positive integer")
        if not self.min_length_guard >= 0.0:
            raise ValueError("min_length_guard must be non-negative")

    @property
    def steps(self) -> int:
        return int(round(abs(self.t1 - self.t0) / self.dt))

    @property
    def signed_step(self) -> float:
        return math.copysign(self.dt, self.t1 - self.t0)


@dataclass(frozen=True)
class Trajectory:
    times: tuple
    states: tuple
    records: tuple
    termination: Termination

    def __len__(self) -> int:
        return len(self.times)


def step_euler(curve: PolyCurve, h: float) -> PolyCurve:
    """X + h V(X). h may be negative."""
    vf = flow_velocity(curve)
    return PolyCurve(curve.vertices + h * vf.velocity)


def step_rk4(curve: PolyCurve, h: float) -> PolyCurve:
    """Classical 4-stage step; each stage rebuilds the kernel for its own curve."""
    X = curve.vertices
    k1 = flow_velocity(curve).velocity
    k2 = flow_velocity(PolyCurve(X + 0.5 * h * k1)).velocity
    k3 = flow_velocity(PolyCurve(X + 0.5 * h * k2)).velocity
    k4 = flow_velocity(PolyCurve(X + h * k3)).velocity
    return PolyCurve(X + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4))


def _advance(X: np.ndarray, h: float, method: str) -> np.ndarray:
    """One raw step on bare vertex arrays; no validation, so that non-finite
    results surface as data instead of exceptions."""
    if method == "euler":
        vf = flow_velocity(PolyCurve(X))
        return X + h * vf.velocity
    k1 = flow_velocity(PolyCurve(X)).velocity
    k2 = flow_velocity(PolyCurve(X + 0.5 * h * k1)).velocity
    k3 = flow_velocity(PolyCurve(X + 0.5 * h * k2)).velocity
    k4 = flow_velocity(PolyCurve(X + h * k3)).velocity
    return X + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def run_flow(initial: PolyCurve, cfg: FlowConfig) -> Trajectory:
    """Integrate from t0 toward t1, recording every record_every steps plus the
    endpoints. Stops early when the length falls under the guard (LengthGuard)
    or a step produces non-finite coordinates (NumericalFailure).
    """
    if total_length(initial) <= cfg.min_length_guard:
        raise DegenerateCurve("initial length at or below the guard")
    h = cfg.signed_step
    nsteps = cfg.steps

    times = [cfg.t0]
    states = [initial]
    recs = [record(initial, cfg.t0)]
    termination = Termination.COMPLETED

    X = initial.vertices
    t = cfg.t0
    for k in range(1, nsteps + 1):
        try:
            X_new = _advance(X, h, cfg.method)
        except (FloatingPointError, ValueError):
            # rk4 stage states can reject non-finite velocities at construction;
            # DegenerateCurve (collapsed edges mid-step) is a ValueError too
            termination = Termination.NUMERICAL_FAILURE
            break
        t_new = cfg.t0 + k * h
        if not np.isfinite(X_new).all():
            termination = Termination.NUMERICAL_FAILURE
            break
        state = PolyCurve(X_new)
        L = total_length(state)
        if not math.isfinite(L):
            # finite coordinates can still overflow the edge norms; the
            # next velocity would be NaN, so the run has already failed
            termination = Termination.NUMERICAL_FAILURE
            break
        if L <= cfg.min_length_guard:
            termination = Termination.LENGTH_GUARD
            if L >= 1e-12:
                try:
                    rec = record(state, t_new)
                except DegenerateCurve:
                    break
                times.append(t_new)
                states.append(state)
                recs.append(rec)
            break
        X, t = X_new, t_new
        if k % cfg.record_every == 0 or k == nsteps:
            try:
                rec = record(state, t)
            except DegenerateCurve:
                # recorded states must be immersed; a cusp here means the
                # discrete step has left the well-posed regime
                termination = Termination.NUMERICAL_FAILURE
                break
            times.append(t)
            states.append(state)
            recs.append(rec)

    traj = Trajectory(
        times=tuple(times),
        states=tuple(states),
        records=tuple(recs),
        termination=termination,
    )
    if cfg.rescale_profile:
        return asymptotic_profile(traj)
    return traj


def asymptotic_profile(traj: Trajectory) -> Trajectory:
    """Replace each state X(t) by Y(t) = e^t (X(t) - X(t, vertex 0)) and
    recompute its diagnostics. Vertex 0 of every profile state is the origin."""
    states = []
    recs = []
    for t, state in zip(traj.times, traj.states):
        Y = math.exp(t) * (state.vertices - state.vertices[0])
        prof = PolyCurve(Y)
        states.append(prof)
        recs.append(record(prof, t))
    return Trajectory(
        times=traj.times,
        states=tuple(states),
        records=tuple(recs),
        termination=traj.termination,
    )


def trajectory_h1ds_length(traj: Trajectory, return_partials: bool = False):
    """Left-endpoint quadrature of the H1(ds) speed over the recorded times:
    sum_k |V(t_k)|_H1(ds) (t_{k+1} - t_k). The speed is sqrt(grad_sq_h1ds)."""
    times = np.asarray(traj.times)
    speeds = np.array([math.sqrt(r.grad_sq_h1ds) for r in traj.records])
    if len(times) < 2:
        raise ValueError("need at least 2 recorded times")
    increments = speeds[:-1] * np.abs(np.diff(times))
    partials = np.cumsum(increments)
    total = float(partials[-1])
    if return_partials:
        return total, partials
    return total

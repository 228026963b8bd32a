"""Command-line entry point.

Subcommands: `flow` runs the curve flow from a generated or loaded shape and
emits CSV/SVG/JSON; `oracle` prints the exact circle radius at a time;
`distance` runs the shape-space path demos (shrink, reparam, zigzag).

Exit codes: 0 success, 1 usage error, 2 runtime failure (guards, overflow,
unreadable files). Errors print to stderr with an "error:" prefix.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .curves import PolyCurve, total_length
from .errors import (
    ConstantMapGuard,
    DegenerateCurve,
    MismatchedFrames,
    NonMonotoneTwist,
    OutOfDomain,
)
from .flow import FlowConfig, Termination, run_flow
from .lambertw import CircleSolution
from .output import write_diagnostics_csv, write_svg, write_trajectory_json
from .paths import (
    as_mode,
    path_length_l2ds,
    path_to_json,
    reparam_path,
    shrink_path,
    zigzag_path,
    CurvePath,
)
from .shapes import GeneratorSpec, circle, generate


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="h1flow", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("flow", help="run the flow from a shape or input file")
    f.add_argument("--shape", default="circle",
                   choices=["circle", "square", "ellipse", "barbell", "star", "file"])
    f.add_argument("--size", type=float, default=1.0)
    f.add_argument("--size-b", type=float, default=None, help="ellipse semi-minor axis")
    f.add_argument("--neck", type=float, default=0.25, help="barbell neck half-width")
    f.add_argument("--amplitude", type=float, default=0.3, help="star modulation")
    f.add_argument("--lobes", type=int, default=5, help="star lobe count")
    f.add_argument("--n", type=int, default=200)
    f.add_argument("--input", default=None, help="curve file for --shape file")
    f.add_argument("--dt", type=float, required=True)
    f.add_argument("--steps", type=int, default=None)
    f.add_argument("--t1", type=float, default=None)
    f.add_argument("--t0", type=float, default=0.0)
    f.add_argument("--method", choices=["euler", "rk4"], default="euler")
    f.add_argument("--record-every", type=int, default=1)
    f.add_argument("--rescale", action="store_true", help="emit the asymptotic profile")
    f.add_argument("--guard", type=float, default=1e-8, help="minimum length guard")
    f.add_argument("--out-csv", default=None)
    f.add_argument("--out-svg", default=None)
    f.add_argument("--out-json", default=None)

    o = sub.add_parser("oracle", help="exact circle radius sqrt(W(e^{c-2t}))")
    o.add_argument("--r0", type=float, default=1.0)
    o.add_argument("--t", type=float, required=True)

    d = sub.add_parser("distance", help="shape-space path length demos")
    d.add_argument("--demo", choices=["shrink", "reparam", "zigzag"], required=True)
    d.add_argument("--lambda", dest="lam", type=float, default=0.5)
    d.add_argument("--teeth", type=int, default=4)
    d.add_argument("--frames", type=int, default=33)
    d.add_argument("--n", type=int, default=256)
    d.add_argument("--out-json", default=None)
    return p


def _cmd_flow(args) -> int:
    spec = GeneratorSpec(
        kind=args.shape,
        n=args.n,
        size=args.size,
        size_b=args.size_b,
        neck=args.neck,
        amplitude=args.amplitude,
        lobes=args.lobes,
        path=args.input,
    )
    initial = generate(spec)
    if (args.steps is None) == (args.t1 is None):
        raise _UsageError("exactly one of --steps and --t1 is required")
    t1 = args.t1 if args.t1 is not None else args.t0 + args.steps * args.dt
    cfg = FlowConfig(
        dt=args.dt,
        t0=args.t0,
        t1=t1,
        method=args.method,
        min_length_guard=args.guard,
        record_every=args.record_every,
        rescale_profile=args.rescale,
    )
    traj = run_flow(initial, cfg)
    if args.out_csv:
        write_diagnostics_csv(traj, args.out_csv)
    if args.out_svg:
        write_svg(traj, args.out_svg)
    if args.out_json:
        write_trajectory_json(traj, args.out_json)
    last = traj.records[-1]
    print(f"termination={traj.termination.value} t={last.t:.17g} length={last.length:.17g}")
    if traj.termination is not Termination.COMPLETED:
        print(f"error: flow stopped early: {traj.termination.value}", file=sys.stderr)
        return 2
    return 0


def _cmd_oracle(args) -> int:
    sol = CircleSolution(r0=args.r0)
    print("%.17g" % sol.radius(args.t))
    return 0


def _cmd_distance(args) -> int:
    base = circle(1.0, args.n)
    if args.demo == "shrink":
        path = shrink_path(base, args.lam, args.frames)
        label = f"shrink lambda={args.lam:g} frames={args.frames}"
    elif args.demo == "reparam":
        # one smooth twist bump, a quarter period wide
        delta = args.lam * args.n / (2.0 * np.pi) * np.sin(2.0 * np.pi * np.arange(args.n) / args.n)
        path = reparam_path(base, delta, args.frames)
        label = f"reparam lambda={args.lam:g} frames={args.frames}"
    else:
        m = max(2, (args.frames - 1) // 4 + 1)
        t = np.linspace(0.0, 1.0, m)
        frames = tuple(PolyCurve(base.vertices + np.array([3.0 * tk, 0.0])) for tk in t)
        path = zigzag_path(CurvePath(frames=frames, mode="full"), args.teeth)
        label = f"zigzag teeth={args.teeth} frames={len(path.frames)}"
    full = path_length_l2ds(as_mode(path, "full"))
    quot = path_length_l2ds(as_mode(path, "quotient"))
    print(f"{label} full={full:.17g} quotient={quot:.17g}")
    if args.out_json:
        with open(args.out_json, "w", newline="\n") as fh:
            json.dump(path_to_json(path), fh)
            fh.write("\n")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        if args.command == "flow":
            return _cmd_flow(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        return _cmd_distance(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConstantMapGuard, DegenerateCurve, OSError, OverflowError) as exc:
        # guards and I/O failures are runtime errors; these subclass ValueError,
        # so they must be tried before the generic usage-error branch
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OutOfDomain, NonMonotoneTwist, MismatchedFrames) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

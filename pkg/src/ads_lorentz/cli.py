"""Command-line interface for the anti-de Sitter plane toolkit.

Exit codes: 0 success, 1 usage error or failed self-test, 2 when ``traj``
is asked for a target without an optimal trajectory.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from .errors import DomainError, NoOptimalTrajectory
from .expmap import classify
from .geometry import Point
from .killing import KillingField, stream_samples, transport_distance
from .synthesis import lorentz_distance_from_origin, reachable_from, synthesis_trajectory

TRAJ_SCHEMA = "ads-lorentz/traj/1"
EXIT_OK, EXIT_USAGE, EXIT_NO_TRAJECTORY = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad input; 2 is reserved for "no optimal trajectory"
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _finite(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return x


def _grid_size(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 2:
        raise argparse.ArgumentTypeError(f"grid size must be >= 2, got {n}")
    return n


def _sample_count(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 2:
        raise argparse.ArgumentTypeError(f"need at least 2 samples, got {n}")
    return n


def _num(x: float) -> str:
    # repr round-trips doubles exactly (up to 17 significant digits)
    return repr(float(x) + 0.0)  # +0.0 folds -0.0


def _json_num(x: float):
    return x if math.isfinite(x) else ("inf" if x > 0 else "-inf")


def _writer(out):
    return csv.writer(out, lineterminator="\n")


def cmd_traj(args, out) -> int:
    p = Point(args.theta1, args.phi1)
    try:
        traj = synthesis_trajectory(p, args.samples)
    except NoOptimalTrajectory as exc:
        print(f"{exc.region.tag.value}: distance={exc.distance}", file=sys.stderr)
        return EXIT_NO_TRAJECTORY
    except DomainError:
        print("LowerBoundary: target is the base point", file=sys.stderr)
        return EXIT_NO_TRAJECTORY
    columns = ("t", "theta", "phi", "u1", "u2")
    rows = zip(traj.t, traj.theta, traj.phi, traj.u1, traj.u2)
    if args.format == "csv":
        w = _writer(out)
        w.writerow(columns)
        for row in rows:
            w.writerow([_num(x) for x in row])
    else:
        doc = {
            "schema": TRAJ_SCHEMA,
            "class": classify(p).tag.value,
            "kind": traj.kind.value,
            "continuum": traj.continuum,
            "columns": list(columns),
            "rows": [[float(x) for x in row] for row in rows],
        }
        out.write(json.dumps(doc) + "\n")
    return EXIT_OK


def cmd_dist(args, out) -> int:
    p = Point(args.theta1, args.phi1)
    if args.base is None:
        res = lorentz_distance_from_origin(p)
    else:
        res = transport_distance(Point(*args.base), p)
    doc = {
        "class": res.region.tag.value,
        "side": res.region.side.value,
        "distance": _json_num(res.value),
        "time_attained": res.time,
    }
    out.write(json.dumps(doc) + "\n")
    return EXIT_OK


def _axis(lo, hi, n):
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def cmd_grid(args, out) -> int:
    w = _writer(out)
    base = Point(*args.base) if args.base is not None else None
    if args.what == "dist":
        w.writerow(("theta", "phi", "class", "distance"))
    else:
        w.writerow(("theta", "phi", "class", "reachable"))
    for phi in _axis(*args.phi_range, args.ny):
        for theta in _axis(*args.theta_range, args.nx):
            p = Point(theta, phi)
            if args.what == "dist":
                res = lorentz_distance_from_origin(p) if base is None else transport_distance(base, p)
                w.writerow((_num(theta), _num(phi), res.region.tag.value, _num(res.value)))
            else:
                q0 = base or Point(0.0, 0.0)
                w.writerow((_num(theta), _num(phi), classify(p).tag.value,
                            int(reachable_from(q0, p))))
    return EXIT_OK


def cmd_stream(args, out) -> int:
    w = _writer(out)
    w.writerow(("theta", "phi", "v_theta", "v_phi"))
    field = KillingField(args.field)
    for p, v in stream_samples(field, args.theta_range, args.phi_range, args.nx, args.ny):
        w.writerow((_num(p.theta), _num(p.phi), _num(v.d_theta), _num(v.d_phi)))
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    from .acceptance import run_all
    from ._backend import BACKEND

    out.write(f"backend: {BACKEND}\n")
    results = run_all()
    for r in results:
        out.write(r.line() + "\n")
    failed = [r.number for r in results if not r.passed]
    out.write(f"{len(results) - len(failed)}/{len(results)} passed\n")
    return EXIT_USAGE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ads-lorentz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ranges(p):
        p.add_argument("--theta-range", nargs=2, type=_finite, default=(-2.0, 2.0),
                       metavar=("MIN", "MAX"))
        p.add_argument("--phi-range", nargs=2, type=_finite, default=(0.0, math.pi),
                       metavar=("MIN", "MAX"))
        p.add_argument("--nx", type=_grid_size, default=41)
        p.add_argument("--ny", type=_grid_size, default=41)

    p = sub.add_parser("traj", help="optimal trajectory from the origin")
    p.add_argument("theta1", type=_finite)
    p.add_argument("phi1", type=_finite)
    p.add_argument("--samples", type=_sample_count, default=101)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_traj)

    p = sub.add_parser("dist", help="Lorentzian distance as a JSON object")
    p.add_argument("theta1", type=_finite)
    p.add_argument("phi1", type=_finite)
    p.add_argument("--from", dest="base", nargs=2, type=_finite, metavar=("THETA0", "PHI0"))
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("grid", help="classification/distance over a grid (CSV)")
    p.add_argument("--what", choices=("dist", "reach"), default="dist")
    p.add_argument("--from", dest="base", nargs=2, type=_finite, metavar=("THETA0", "PHI0"))
    ranges(p)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("stream", help="Killing field samples for phase portraits (CSV)")
    p.add_argument("--field", type=int, choices=(1, 2, 3), required=True)
    ranges(p)
    p.set_defaults(func=cmd_stream)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return args.func(args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())

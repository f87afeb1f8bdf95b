"""Command-line front end.

    ptcubic zeta --method closed|quad|wkb|hybrid [--n N] [--digits D]
    ptcubic eigen --n N [--x-max X] [--tol T] [--format json|csv]
    ptcubic greens --x X --y Y
    ptcubic greens --sweep FROM TO STEP

Every number is written as decimal text with 12 significant digits. Exit
codes: 0 success, 2 usage error, 3 computational failure.
"""

import argparse
import json
import math
import sys

from . import __version__

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3


def fmt(value):
    """Decimal text with 12 significant digits."""
    return "%.12g" % value


def _record(command, inputs, results):
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "provenance": f"ptcubic {__version__}",
    }


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def cmd_zeta(args):
    from . import closedform

    inputs = {"method": args.method}
    if args.method == "closed":
        results = {"zeta1": fmt(closedform.zeta1_exact())}
    elif args.method == "wkb":
        results = {"zeta1": fmt(closedform.wkb_zeta1())}
    elif args.method == "quad":
        from .greens import trace_quadrature

        value = trace_quadrature()
        results = {
            "zeta1": fmt(value),
            "closed_form": fmt(closedform.zeta1_exact()),
            "difference": fmt(value - closedform.zeta1_exact()),
        }
    else:
        from .audit import run_audit
        from .shooting import ShootingConfig

        inputs["n"] = str(args.n)
        if args.digits is not None:
            inputs["digits"] = str(args.digits)
        audit = run_audit(args.n, ShootingConfig(), digits=args.digits)
        results = {
            "zeta1": fmt(audit.hybrid_sum),
            "closed_form": fmt(audit.closed_form),
            "quadrature_value": fmt(audit.quadrature_value),
            "wkb_sum": fmt(audit.wkb_sum),
            "hybrid_sum": fmt(audit.hybrid_sum),
            "n_numeric": str(audit.n_numeric),
            "discrepancy": fmt(audit.discrepancy),
            "pair_bound": fmt(audit.pair_bound),
            "pair_bound_per_member": fmt(audit.pair_bound_per_member),
            "energies": [fmt(e) for e in audit.energies],
        }
    return _record("zeta", inputs, results)


def cmd_eigen(args):
    from .shooting import ShootingConfig, spectrum

    config = ShootingConfig(
        x_cutoff=args.x_max, step_tolerance=args.tol, newton_tolerance=args.tol
    )
    rows = [
        {
            "j": str(est.index),
            "energy": fmt(est.energy.real),
            "residual": fmt(est.residual),
            "wkb_seed": fmt(est.wkb_seed),
        }
        for est in spectrum(args.n, config)
    ]
    inputs = {"n": str(args.n), "x_max": fmt(args.x_max), "tol": fmt(args.tol)}
    return _record("eigen", inputs, {"eigenvalues": rows})


def sweep_grid(start, stop, step):
    """Points start, start + step, ... up to stop (inclusive within rounding)."""
    count = int(math.floor((stop - start) / step + 1e-9))
    return [start + k * step for k in range(count + 1)]


def cmd_greens(args):
    from .greens import greens0

    if args.sweep is None:
        sample = greens0(args.x, args.y)
        inputs = {"x": fmt(args.x), "y": fmt(args.y)}
        results = {"re": fmt(sample.value.real), "im": fmt(sample.value.imag)}
        return _record("greens", inputs, results)

    start, stop, step = args.sweep
    xs = sweep_grid(start, stop, step)
    values = [greens0(x, x).value for x in xs]
    # trapezoid rule for -integral of G0(x, x) over the sweep
    partial = 0.0
    for k in range(1, len(xs)):
        partial -= 0.5 * (xs[k] - xs[k - 1]) * (values[k].real + values[k - 1].real)
    # -Re G0(x, x) ~ |x|^(-3/2) / (2 sqrt 2) beyond the sweep
    tail = 0.0
    if xs[-1] > 0.0:
        tail += 1.0 / math.sqrt(2.0 * xs[-1])
    if xs[0] < 0.0:
        tail += 1.0 / math.sqrt(-2.0 * xs[0])
    inputs = {"from": fmt(start), "to": fmt(stop), "step": fmt(step)}
    results = {
        "diagonal": [
            {"x": fmt(x), "re": fmt(v.real), "im": fmt(v.imag)} for x, v in zip(xs, values)
        ],
        "trace_partial": fmt(partial),
        "trace_tail": fmt(tail),
        "trace": fmt(partial + tail),
    }
    return _record("greens", inputs, results)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ptcubic", description="Spectral data of H = -d^2/dx^2 + i x^3."
    )
    parser.add_argument("--version", action="version", version=f"ptcubic {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeta", help="sum of inverse eigenvalues")
    p.add_argument("--method", choices=("closed", "quad", "wkb", "hybrid"), default="closed")
    p.add_argument("--n", type=_positive_int, default=5, help="numeric eigenvalues (hybrid)")
    p.add_argument(
        "--digits", type=_positive_int, default=None,
        help="round eigenvalues to this many significant digits (hybrid)",
    )
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_zeta)

    p = sub.add_parser("eigen", help="lowest eigenvalues by shooting")
    p.add_argument("--n", type=_positive_int, default=5)
    p.add_argument("--x-max", type=float, default=15.0)
    p.add_argument("--tol", type=_positive_float, default=1e-10)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_eigen)

    p = sub.add_parser("greens", help="resolvent kernel G0(x, y)")
    p.add_argument("--x", type=float)
    p.add_argument("--y", type=float)
    p.add_argument("--sweep", type=float, nargs=3, metavar=("FROM", "TO", "STEP"))
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_greens)
    return parser


def _check_usage(parser, args):
    if args.command == "eigen" and args.x_max < 5.0:
        parser.error("--x-max must be >= 5")
    if args.command == "greens":
        if args.sweep is None:
            if args.x is None or args.y is None:
                parser.error("greens needs --x and --y, or --sweep FROM TO STEP")
        else:
            if args.x is not None or args.y is not None:
                parser.error("--sweep cannot be combined with --x/--y")
            start, stop, step = args.sweep
            if not all(math.isfinite(v) for v in args.sweep):
                parser.error("sweep bounds must be finite")
            if not step > 0.0 or not stop > start:
                parser.error("sweep needs FROM < TO and STEP > 0")


def render(record, fmt_name="json"):
    if fmt_name == "csv":
        lines = ["j,energy,residual,wkb_seed"]
        for row in record["results"]["eigenvalues"]:
            lines.append(",".join(row[k] for k in ("j", "energy", "residual", "wkb_seed")))
        return "\n".join(lines) + "\n"
    return json.dumps(record, indent=2) + "\n"


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_usage(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    from .errors import QuadratureError, ShootingError

    try:
        record = args.handler(args)
    except (ShootingError, QuadratureError, ArithmeticError) as exc:
        index = getattr(exc, "index", None)
        where = f" (eigenvalue index {index})" if index is not None else ""
        print(f"ptcubic: computation failed{where}: {exc}", file=sys.stderr)
        return EXIT_FAILURE

    text = render(record, getattr(args, "format", "json"))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK

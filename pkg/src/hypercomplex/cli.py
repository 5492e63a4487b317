"""Command-line front door.

Values are entered as comma-separated numbers: ``r,theta2,...,thetaN`` in
radians for ``--form spherical`` (the default) or ``x1,...,xN`` for
``--form cartesian``; results come back in the same form.  Text output
prints 9 significant digits; ``--format json-lines`` carries full binary
precision; ``--format csv`` adds a header row.

Exit codes: 0 success, 1 domain error (division by zero, missing degenerate
longitude, unwritable file), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys

from . import checks, extensions, fractal, relativity
from .core import (
    CartesianVec,
    DegenerateArgs,
    SphericalForm,
    add,
    divide,
    inverse,
    mul_cartesian,
    mul_geometric,
    pow_int,
    to_cartesian,
    to_spherical,
)

ENV_FORMAT = "HYPERCOMPLEX_FORMAT"
_FORMATS = ("text", "json-lines", "csv")


# -- parsing helpers ---------------------------------------------------------

def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated number list: {text!r}")


def _region(text: str) -> tuple[tuple[float, float], ...]:
    try:
        spans = []
        for part in text.split(","):
            lo, hi = part.split(":")
            spans.append((float(lo), float(hi)))
        if len(spans) != 3:
            raise ValueError
        return tuple(spans)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"region must look like x0:x1,y0:y1,z0:z1, got {text!r}"
        )


def _slice_spec(text: str) -> tuple[str, float]:
    try:
        axis, value = text.split("=")
        if axis not in ("x", "y", "z"):
            raise ValueError
        return axis, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"slice must look like z=0, got {text!r}")


def _resolution(text: str) -> tuple[int, int, int]:
    try:
        rx, ry, rz = (int(p) for p in text.split(","))
        return rx, ry, rz
    except ValueError:
        raise argparse.ArgumentTypeError(f"resolution must be rx,ry,rz, got {text!r}")


def _load_config(path: str) -> dict:
    conf = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, value = line.split("=", 1)
            conf[key.strip()] = value.strip()
    return conf


def _resolve_format(args) -> str:
    fmt = args.format
    if fmt is None and args.config:
        fmt = _load_config(args.config).get("format")
    if fmt is None:
        fmt = os.environ.get(ENV_FORMAT)
    if fmt is None:
        fmt = "text"
    if fmt not in _FORMATS:
        raise ValueError(f"unknown output format {fmt!r}, expected one of {_FORMATS}")
    return fmt


def _parse_value(values: tuple[float, ...], form: str, dim):
    if dim is not None and len(values) != dim:
        raise ValueError(f"--dim {dim} expects {dim} numbers, got {len(values)}")
    if form == "spherical":
        return SphericalForm(values[0], values[1:])
    return CartesianVec(values)


def _fallback_for(args, position: int):
    fbs = args.fallback or []
    if position < len(fbs):
        return DegenerateArgs(fbs[position])
    return None


# -- output ------------------------------------------------------------------

def fmt_significant(v: float) -> str:
    """The documented text precision: 9 significant digits."""
    return "%.9g" % v


def emit_value(value, fmt: str, out=None) -> None:
    """Print one result value in the requested format (used verbatim by the
    round-trip fidelity contract: CLI bytes == library result + this)."""
    out = out or sys.stdout
    spherical = isinstance(value, SphericalForm)
    seq = (value.modulus, *value.args) if spherical else value.components
    if fmt == "text":
        print(",".join(fmt_significant(v) for v in seq), file=out)
    elif fmt == "json-lines":
        if spherical:
            obj = {"form": "spherical", "modulus": value.modulus, "args": list(value.args)}
        else:
            obj = {"form": "cartesian", "components": list(value.components)}
        print(json.dumps(obj), file=out)
    else:
        if spherical:
            header = "r," + ",".join(f"theta{k}" for k in range(2, value.dim + 1))
        else:
            header = ",".join(f"x{k}" for k in range(1, value.dim + 1))
        print(header, file=out)
        print(",".join("%.17g" % v for v in seq), file=out)


# -- value subcommands --------------------------------------------------------

def _cmd_mul(args) -> int:
    fmt = _resolve_format(args)
    a = _parse_value(args.values[0], args.form, args.dim)
    b = _parse_value(args.values[1], args.form, args.dim)
    if args.form == "spherical":
        emit_value(mul_geometric(a, b), fmt)
    else:
        emit_value(mul_cartesian(a, b, _fallback_for(args, 0), _fallback_for(args, 1)), fmt)
    return 0


def _cmd_add(args) -> int:
    fmt = _resolve_format(args)
    a = _parse_value(args.values[0], args.form, args.dim)
    b = _parse_value(args.values[1], args.form, args.dim)
    if args.form == "spherical":
        total = add(to_cartesian(a), to_cartesian(b))
        emit_value(to_spherical(total, _fallback_for(args, 0)), fmt)
    else:
        emit_value(add(a, b), fmt)
    return 0


def _unary_spherical(args, value):
    if args.form == "spherical":
        return value
    return to_spherical(value, _fallback_for(args, 0))


def _emit_like_input(args, fmt, result: SphericalForm) -> None:
    emit_value(result if args.form == "spherical" else to_cartesian(result), fmt)


def _cmd_inv(args) -> int:
    fmt = _resolve_format(args)
    h = _unary_spherical(args, _parse_value(args.values[0], args.form, args.dim))
    _emit_like_input(args, fmt, inverse(h))
    return 0


def _cmd_div(args) -> int:
    fmt = _resolve_format(args)
    a = _unary_spherical(args, _parse_value(args.values[0], args.form, args.dim))
    bv = _parse_value(args.values[1], args.form, args.dim)
    b = bv if args.form == "spherical" else to_spherical(bv, _fallback_for(args, 1))
    _emit_like_input(args, fmt, divide(a, b))
    return 0


def _cmd_pow(args) -> int:
    fmt = _resolve_format(args)
    h = _unary_spherical(args, _parse_value(args.values[0], args.form, args.dim))
    _emit_like_input(args, fmt, pow_int(h, args.exponent))
    return 0


def _cmd_convert(args) -> int:
    fmt = _resolve_format(args)
    value = _parse_value(args.values[0], args.form, args.dim)
    if args.to == args.form:
        emit_value(value, fmt)
    elif args.to == "cartesian":
        emit_value(to_cartesian(value), fmt)
    else:
        emit_value(to_spherical(value, _fallback_for(args, 0)), fmt)
    return 0


def _cmd_roots(args) -> int:
    fmt = _resolve_format(args)
    h = _unary_spherical(args, _parse_value(args.values[0], args.form, args.dim))
    rs = extensions.nth_roots(h, args.degree)
    for root in rs.roots:
        _emit_like_input(args, fmt, root)
    return 0


def _cmd_conjugate(args) -> int:
    fmt = _resolve_format(args)
    h = _unary_spherical(args, _parse_value(args.values[0], args.form, args.dim))
    _emit_like_input(args, fmt, extensions.conjugate(h, args.variant))
    return 0


# -- reporting subcommands -----------------------------------------------------

def _cmd_property_check(args) -> int:
    fmt = _resolve_format(args)
    results = checks.run_property_checks(seed=args.seed, trials=args.trials)
    failed = False
    for res in results:
        failed |= not res.passed
        if fmt == "json-lines":
            print(json.dumps({"name": res.name, "passed": res.passed, "detail": res.detail}))
        elif fmt == "csv":
            print(f"{res.name},{'pass' if res.passed else 'fail'},{res.detail!r}")
        else:
            print(f"{'PASS' if res.passed else 'FAIL'} {res.name}: {res.detail}")
    return 1 if failed else 0


def _cmd_relativity_check(args) -> int:
    fmt = _resolve_format(args)
    pairs = []
    deltas = [relativity.EventDelta(*d) for d in (args.delta or [])]
    betas = args.beta or []
    if deltas:
        if not betas:
            betas = [0.0]
        pairs = [(d, b) for d in deltas for b in betas]
    else:
        rng = random.Random(args.seed)
        for _ in range(args.trials):
            d = relativity.EventDelta(*(rng.uniform(-3, 3) for _ in range(4)))
            pairs.append((d, rng.uniform(-0.99, 0.99)))

    if fmt == "csv":
        print("dx,dy,dz,cdt,beta,spatial_modulus,abs_ds2,residual")
    elif fmt == "text":
        print(f"{'delta':>36} {'beta':>7} {'spatial_mod':>14} {'|ds^2|':>14} {'residual':>10}")
    for d, beta in pairs:
        boosted = relativity.lorentz_boost(d, beta)
        spatial, _ = relativity.square_and_project(boosted)
        target = abs(relativity.interval_sq(d))
        residual = abs(spatial - target)
        if fmt == "json-lines":
            print(json.dumps({
                "delta": [d.dx, d.dy, d.dz, d.cdt], "beta": beta,
                "spatial_modulus": spatial, "abs_ds2": target, "residual": residual,
            }))
        elif fmt == "csv":
            row = (d.dx, d.dy, d.dz, d.cdt, beta, spatial, target, residual)
            print(",".join("%.17g" % v for v in row))
        else:
            dtxt = ",".join(fmt_significant(v) for v in (d.dx, d.dy, d.dz, d.cdt))
            print(f"{dtxt:>36} {beta:>7.4f} {spatial:>14.9g} {target:>14.9g} {residual:>10.3e}")
    return 0


def _cmd_fractal(args) -> int:
    cfg = fractal.FractalConfig(
        approach=args.approach,
        n_max=args.nmax,
        region=args.region,
        resolution=args.res,
        slice_spec=args.slice,
    )
    save_as = args.save_as
    if save_as is None:
        if args.out.endswith(".pgm"):
            save_as = "pgm_slice"
        elif args.out.endswith(".csv"):
            save_as = "csv"
        else:
            save_as = "voxel_raw"
    grid = fractal.render_grid(cfg, workers=args.workers)
    fractal.export_grid(grid, save_as, args.out)
    print(f"wrote {args.out} ({save_as}, {'x'.join(map(str, cfg.resolution))}, n_max={cfg.n_max})")
    return 0


# -- parser ---------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=_FORMATS, default=None,
                        help=f"output format (default from config file, then ${ENV_FORMAT}, then text)")
    common.add_argument("--config", default=None, help="key=value defaults file")

    value = argparse.ArgumentParser(add_help=False, parents=[common])
    value.add_argument("--form", choices=("spherical", "cartesian"), default="spherical",
                       help="how the value arguments are encoded (default spherical)")
    value.add_argument("--dim", type=int, default=None, help="validate the value dimension")
    value.add_argument("--fallback", type=_floats, action="append", default=None,
                       metavar="L2,L3,...",
                       help="degenerate longitudes per operand, repeat per value")

    parser = argparse.ArgumentParser(
        prog="hypercomplex",
        description="spherical/hyperspherical number calculator, fractal renderer, interval check",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def val_cmd(name, helptext, nvalues, fn):
        p = sub.add_parser(name, parents=[value], help=helptext)
        p.add_argument("values", type=_floats, nargs=nvalues, metavar="VALUE")
        p.set_defaults(func=fn)
        return p

    val_cmd("mul", "multiply two values", 2, _cmd_mul)
    val_cmd("add", "add two values", 2, _cmd_add)
    val_cmd("inv", "multiplicative inverse", 1, _cmd_inv)
    val_cmd("div", "divide two values", 2, _cmd_div)
    p = val_cmd("pow", "integer power", 1, _cmd_pow)
    p.add_argument("--exponent", "-m", type=int, required=True)
    p = val_cmd("convert", "convert between forms", 1, _cmd_convert)
    p.add_argument("--to", choices=("spherical", "cartesian"), required=True)
    p = val_cmd("roots", "all distinct m-th roots, one per line", 1, _cmd_roots)
    p.add_argument("--degree", "-m", type=int, required=True)
    p = val_cmd("conjugate", "conjugate value", 1, _cmd_conjugate)
    p.add_argument("--variant", choices=("full", "second", "third"), default="full")

    p = sub.add_parser("property-check", parents=[common],
                       help="run the seeded invariant suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=_cmd_property_check)

    p = sub.add_parser("fractal", parents=[common], help="render an escape-time lattice")
    p.add_argument("--approach", choices=("first", "second"), default="first")
    p.add_argument("--nmax", type=int, default=100)
    p.add_argument("--region", type=_region, default=((-2.0, 2.0),) * 3,
                   metavar="x0:x1,y0:y1,z0:z1")
    p.add_argument("--res", type=_resolution, default=(64, 64, 64), metavar="rx,ry,rz")
    p.add_argument("--slice", type=_slice_spec, default=None, metavar="AXIS=VALUE")
    p.add_argument("--out", required=True)
    p.add_argument("--save-as", choices=("pgm_slice", "csv", "voxel_raw"), default=None,
                   help="default: inferred from --out extension (.pgm, .csv, else voxel)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_fractal)

    p = sub.add_parser("relativity-check", parents=[common],
                       help="interval-invariance table for boosted displacements")
    p.add_argument("--delta", type=_floats, action="append", metavar="dx,dy,dz,cdt")
    p.add_argument("--beta", type=float, action="append")
    p.add_argument("--trials", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_relativity_check)

    # values like "-1,0,0" and regions like "-2:2,..." must parse as
    # arguments, not flags; no option here starts with a digit, so widen
    # argparse's negative-number detection to any "-<digit>" token
    matcher = re.compile(r"^-\d")
    for sp in [parser] + list(sub.choices.values()):
        sp._negative_number_matcher = matcher

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

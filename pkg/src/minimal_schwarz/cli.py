"""Command-line front end: ``minimal-schwarz <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad input or I/O error,
3 quadrature did not converge.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import __version__
from .boundary import (
    QuadratureError,
    QuadratureSpec,
    circle_length,
    mean_ratio_profile,
    schwarz_report,
)
from .catalog import CATALOG, get_surface
from .equality import equality_certificate
from .mesh import MeshSpec, write_obj
from .mobius import DiskMobius, precompose, pullback_identity_residual
from .subharmonic import DEFAULT_STEP, SingularPointError, riesz_balance
from .surface import PolarGrid, load_surface
from .validation import DiskDomainError, parse_complex

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_QUADRATURE = 0, 1, 2, 3

PULLBACK_TOL = 1e-12
INVARIANCE_TOL = 1e-7


class InputError(Exception):
    pass


def _surface(spec: str):
    if spec in CATALOG:
        return get_surface(spec)
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        try:
            return load_surface(path)
        except OSError as exc:
            raise InputError(f"cannot read surface file {spec!r}: {exc.strerror or exc}") from None
        except (ValueError, TypeError) as exc:
            raise InputError(f"invalid surface file {spec!r}: {exc}") from None
    raise InputError(f"unknown surface {spec!r}; choose from {', '.join(CATALOG)} or pass a .json file")


def _complex(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _floats(text: str, count: int | None, what: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise InputError(f"malformed {what} {text!r}") from None
    if count is not None and len(values) != count:
        raise InputError(f"{what} needs {count} comma-separated values, got {text!r}")
    if not all(math.isfinite(v) for v in values):
        raise InputError(f"non-finite value in {what} {text!r}")
    return values


def _int(value: float, what: str) -> int:
    if value != int(value):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return int(value)


def _grid(text: str) -> PolarGrid:
    nr, nt, rmax = _floats(text, 3, "grid")
    try:
        return PolarGrid(_int(nr, "grid n_r"), _int(nt, "grid n_theta"), rmax)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _point(z: complex) -> list[float]:
    return [z.real, z.imag]


def _envelope(command: str, surface, inputs: dict, result: dict) -> dict:
    return {
        "tool": "minimal-schwarz",
        "version": __version__,
        "command": command,
        "input": {"surface": surface.to_json(), **inputs},
        "result": result,
    }


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, allow_nan=False) + "\n"
    if out:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {out!r}: {exc.strerror or exc}") from None
    else:
        sys.stdout.write(text)


def _quad(args) -> QuadratureSpec:
    try:
        return QuadratureSpec(rel_tol=args.rel_tol, abs_tol=args.abs_tol, max_panels=args.max_panels)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_catalog(args) -> int:
    entries = [
        {"name": e.name, "description": e.description, **e.surface.to_json()} for e in CATALOG.values()
    ]
    _emit({"tool": "minimal-schwarz", "version": __version__, "catalog": entries}, None)
    return EXIT_OK


def cmd_eval(args) -> int:
    s = _surface(args.surface)
    z = _complex(args.z)
    pos = s.position(z)
    fx, fy = s.tangents(z)
    result = {
        "position": [float(c) for c in pos],
        "lambda": float(s.conformal_density(z)),
        "F_x": [float(c) for c in fx],
        "F_y": [float(c) for c in fy],
    }
    _emit(_envelope("eval", s, {"z": _point(z)}, result), args.out)
    return EXIT_OK


def cmd_length(args) -> int:
    s = _surface(args.surface)
    quad = _quad(args)
    length = circle_length(s, args.r, quad)
    _emit(
        _envelope("length", s, {"r": args.r, "quadrature": quad.to_json()}, {"circle_length": length}),
        args.out,
    )
    return EXIT_OK


def cmd_profile(args) -> int:
    s = _surface(args.surface)
    radii = _floats(args.radii, None, "radii")
    rows = mean_ratio_profile(s, radii, _quad(args))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["r", "mean_ratio"])
    for r, v in rows:
        writer.writerow([f"{r:.17g}", f"{v:.17g}"])
    if args.out:
        try:
            Path(args.out).write_text(buf.getvalue(), encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {args.out!r}: {exc.strerror or exc}") from None
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_verify(args) -> int:
    s = _surface(args.surface)
    grid = _grid(args.grid)
    quad = _quad(args)
    report = schwarz_report(s, grid, quad, args.eq_tol)
    result = {"schwarz": report.to_json()}
    if args.certify_equality:
        result["equality"] = equality_certificate(s, grid, quad, args.eq_tol).to_json()
    inputs = {"grid": grid.to_json(), "quadrature": quad.to_json(), "eq_tol": args.eq_tol}
    _emit(_envelope("verify", s, inputs, result), args.out)
    return EXIT_OK if report.holds else EXIT_FAILED


def cmd_mobius(args) -> int:
    s = _surface(args.surface)
    a = _complex(args.a)
    try:
        m = DiskMobius(a)
    except DiskDomainError as exc:
        raise InputError(str(exc)) from None
    h = precompose(s, m)
    result = {
        "lambda_H_at_0": float(h.conformal_density(0j)),
        "position_H_at_0": [float(c) for c in h.position(0j)],
    }
    ok = True
    if args.verify:
        quad = _quad(args)
        residual = pullback_identity_residual(s, a)
        l_base = circle_length(s, 1.0, quad)
        l_derived = circle_length(h, 1.0, quad)
        result.update(
            {
                "pullback_residual": residual,
                "pullback_tol": PULLBACK_TOL,
                "length_base": l_base,
                "length_derived": l_derived,
                "length_gap": abs(l_base - l_derived),
                "length_tol": INVARIANCE_TOL,
            }
        )
        ok = residual < PULLBACK_TOL and abs(l_base - l_derived) < INVARIANCE_TOL
        result["passed"] = ok
    _emit(_envelope("mobius", s, {"a": _point(a), "verify": args.verify}, result), args.out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_riesz(args) -> int:
    s = _surface(args.surface)
    nr, nt = _floats(args.grid, 2, "grid")
    grid = PolarGrid(_int(nr, "grid n_r"), _int(nt, "grid n_theta"), 0.5)
    try:
        report = riesz_balance(s, args.r, grid, args.step, _quad(args))
    except (DiskDomainError, ValueError) as exc:
        raise InputError(str(exc)) from None
    result = report.to_json()
    result["tol"] = args.tol
    result["passed"] = report.residual <= args.tol
    inputs = {"r": args.r, "step": args.step, "grid": [grid.n_r, grid.n_theta], "tol": args.tol}
    _emit(_envelope("riesz", s, inputs, result), args.out)
    return EXIT_OK if result["passed"] else EXIT_FAILED


def cmd_export(args) -> int:
    s = _surface(args.surface)
    nr, nt, rmax = _floats(args.mesh, 3, "mesh")
    try:
        spec = MeshSpec(_int(nr, "mesh n_r"), _int(nt, "mesh n_theta"), rmax)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    header = f"minimal-schwarz {__version__}\nsurface {json.dumps(s.to_json())}\nmesh {json.dumps(spec.to_json())}"
    try:
        write_obj(s, spec, args.out, header)
    except OSError as exc:
        raise InputError(f"cannot write {args.out!r}: {exc.strerror or exc}") from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minimal-schwarz",
        description="Evaluate Weierstrass-Enneper surfaces and certify the Schwarz-type bound.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_surface(p):
        p.add_argument("--surface", required=True, help="catalog name or path to a surface JSON file")
        p.add_argument("--out", help="write output to this file instead of stdout")
        return p

    def with_quad(p):
        p.add_argument("--rel-tol", type=float, default=1e-10)
        p.add_argument("--abs-tol", type=float, default=1e-12)
        p.add_argument("--max-panels", type=int, default=2**16)
        return p

    sub.add_parser("catalog", help="list built-in surfaces").set_defaults(func=cmd_catalog)

    p = with_surface(sub.add_parser("eval", help="position, density and tangents at a point"))
    p.add_argument("--z", required=True, help="point as re,im")
    p.set_defaults(func=cmd_eval)

    p = with_quad(with_surface(sub.add_parser("length", help="length of the image of |z| = r")))
    p.add_argument("--r", type=float, required=True)
    p.set_defaults(func=cmd_length)

    p = with_quad(with_surface(sub.add_parser("profile", help="CSV of mean ratios l_r / (2 pi r)")))
    p.add_argument("--radii", required=True, help="comma-separated increasing radii in (0, 1]")
    p.set_defaults(func=cmd_profile)

    p = with_quad(with_surface(sub.add_parser("verify", help="certify the Schwarz-type bound")))
    p.add_argument("--grid", default="200,256,0.99", help="n_r,n_theta,r_max")
    p.add_argument("--eq-tol", type=float, default=1e-6)
    p.add_argument("--certify-equality", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = with_quad(with_surface(sub.add_parser("mobius", help="precompose with a disk automorphism")))
    p.add_argument("--a", required=True, help="Mobius parameter as re,im with |a| < 1")
    p.add_argument("--verify", action="store_true", help="check pullback and length invariance")
    p.set_defaults(func=cmd_mobius)

    p = with_quad(with_surface(sub.add_parser("riesz", help="Riesz representation balance")))
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--step", type=float, default=DEFAULT_STEP)
    p.add_argument("--grid", default="200,256", help="n_r,n_theta of the polar midpoint rule")
    p.add_argument("--tol", type=float, default=5e-4)
    p.set_defaults(func=cmd_riesz)

    p = with_surface(sub.add_parser("export", help="write a triangulated OBJ mesh"))
    p.add_argument("--mesh", default="32,64,1.0", help="n_r,n_theta,r_max")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "export" and not args.out:
        parser.error("export requires --out")
    try:
        return args.func(args)
    except QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DiskDomainError, SingularPointError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

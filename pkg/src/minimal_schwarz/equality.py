"""Equality case of the Schwarz-type bound.

Equality at a point forces constant ``h'`` and ``g'``: the surface is an
affine image of the disk. Under the isothermal constraints
``|F_x| = |F_y|`` and ``F_x . F_y = 0`` that image is a round planar disk
in R^3 (a degenerate ellipse), reported here as ``affine/planar-disk``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boundary import QuadratureSpec, mean_ratio_profile, schwarz_report
from .mobius import DiskMobius, precompose
from .surface import PolarGrid, Surface, from_pq

__all__ = [
    "AffineCoefficients",
    "EqualityVerdict",
    "affine_surface",
    "affine_coefficients",
    "conformality_check",
    "boundary_speed",
    "is_affine_data",
    "equality_certificate",
]

AFFINE_TOL = 1e-10
PROFILE_RADII = (0.1, 0.3, 0.5, 0.7, 0.9)


@dataclass(frozen=True)
class AffineCoefficients:
    """``H(x, y) = (a x + b y, c x + d y, e x + f y)``."""

    a: float
    b: float
    c: float
    d: float
    e: float
    f: float

    @property
    def column_x(self) -> np.ndarray:
        return np.array([self.a, self.c, self.e])

    @property
    def column_y(self) -> np.ndarray:
        return np.array([self.b, self.d, self.f])


def affine_surface(p0, q0, name: str | None = None) -> Surface:
    return from_pq([p0], [q0], name=name)


def affine_coefficients(p0, q0) -> AffineCoefficients:
    """Linear map of the affine surface with constant data ``(p0, q0)``.

    Its columns are ``F_x`` and ``F_y``, i.e. the real and minus imaginary
    parts of ``(phi1, phi2, phi3)``.
    """
    fx, fy = affine_surface(p0, q0).tangents(0j)
    return AffineCoefficients(fx.u, fy.u, fx.v, fy.v, fx.t, fy.t)


def conformality_check(c: AffineCoefficients, tol: float = 1e-12) -> tuple[bool, float, float]:
    """Equal column lengths and orthogonal columns, within ``tol``."""
    residual1 = abs(c.a**2 + c.c**2 + c.e**2 - (c.b**2 + c.d**2 + c.f**2))
    residual2 = abs(c.a * c.b + c.c * c.d + c.e * c.f)
    return residual1 <= tol and residual2 <= tol, residual1, residual2


def boundary_speed(c: AffineCoefficients, t, tol: float = 1e-12):
    """``|d/dt H(cos t, sin t)|``; constant ``sqrt(a^2 + c^2 + e^2)`` when conformal."""
    ok, r1, r2 = conformality_check(c, tol)
    if not ok:
        raise ValueError(f"coefficients are not conformal (residuals {r1:.3g}, {r2:.3g})")
    t = np.asarray(t, dtype=float)
    vel = -np.sin(t)[..., None] * c.column_x + np.cos(t)[..., None] * c.column_y
    speed = np.linalg.norm(vel, axis=-1)
    return float(speed) if speed.ndim == 0 else speed


def is_affine_data(s: Surface, tol: float = AFFINE_TOL) -> bool:
    """True when every coefficient of ``p`` and ``q`` past the constant is below ``tol``."""
    return all(np.all(np.abs(series.coeffs[1:]) <= tol) for series in (s.p, s.q))


@dataclass(frozen=True)
class EqualityVerdict:
    kind: str
    witness: complex | None
    margin: float
    affine_detected: bool
    R: float
    sup_value: float
    profile_residual: float | None = None
    recentered_density_spread: float | None = None

    @property
    def image(self) -> str:
        return "affine/planar-disk" if self.kind == "equality" else "non-affine"

    def to_json(self) -> dict:
        w = self.witness
        return {
            "kind": self.kind,
            "witness": None if w is None else [w.real, w.imag],
            "margin": self.margin,
            "affine_detected": self.affine_detected,
            "image": self.image,
            "R": self.R,
            "sup_value": self.sup_value,
            "profile_residual": self.profile_residual,
            "recentered_density_spread": self.recentered_density_spread,
        }


def equality_certificate(
    s: Surface,
    g: PolarGrid = PolarGrid(200, 256, 0.99),
    quad: QuadratureSpec = QuadratureSpec(),
    eq_tol: float = 1e-6,
    affine_tol: float = AFFINE_TOL,
) -> EqualityVerdict:
    """Decide between strict inequality and equality for ``s``.

    On equality the witness is moved to the origin by a disk automorphism
    and two further checks are recorded: the circle means of the density
    stay equal to its central value, and the recentered density is
    constant over the grid.
    """
    report = schwarz_report(s, g, quad, eq_tol)
    affine = is_affine_data(s, affine_tol)
    margin = report.R - report.sup_value
    if not report.equality_within_tol:
        return EqualityVerdict("strict", None, margin, affine, report.R, report.sup_value)

    witness = report.argmax
    h = precompose(s, DiskMobius(witness))
    center = float(h.conformal_density(0j))
    profile = mean_ratio_profile(h, PROFILE_RADII, quad)
    profile_residual = float(max(abs(v - center) for _, v in profile))
    lam = h.conformal_density(g.points())
    spread = float(np.max(np.abs(lam - center)))
    return EqualityVerdict(
        "equality",
        witness,
        margin,
        affine,
        report.R,
        report.sup_value,
        profile_residual=profile_residual,
        recentered_density_spread=spread,
    )

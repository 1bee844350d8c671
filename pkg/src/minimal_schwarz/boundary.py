"""Circle lengths, mean-ratio growth and the sharp Schwarz-type bound.

The bound certified here is ``|F_x(z)| <= R / (1 - |z|**2)`` where ``2 pi R``
is the length of the boundary curve ``F(T)``. ``R`` is always obtained by
quadrature of the conformal density on the unit circle.

Any object exposing ``conformal_density(z)`` (a :class:`Surface` or a
Mobius-precomposed surface) can be passed where a surface is expected.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .surface import PolarGrid
from .validation import check_increasing_radii, check_radius

__all__ = [
    "QuadratureSpec",
    "QuadratureError",
    "SchwarzReport",
    "circle_length",
    "circle_mean",
    "mean_ratio_profile",
    "boundary_speed_crosscheck",
    "schwarz_report",
    "golden_section_max",
]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_panels: int = 2**16
    nodes_per_panel: int = 16

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("quadrature tolerances must be positive")
        if int(self.max_panels) != self.max_panels or self.max_panels < 1:
            raise ValueError("max_panels must be a positive integer")
        if int(self.nodes_per_panel) != self.nodes_per_panel or self.nodes_per_panel < 1:
            raise ValueError("nodes_per_panel must be a positive integer")

    def to_json(self) -> dict:
        return {
            "rel_tol": self.rel_tol,
            "abs_tol": self.abs_tol,
            "max_panels": self.max_panels,
            "nodes_per_panel": self.nodes_per_panel,
        }


class QuadratureError(RuntimeError):
    """Panel doubling hit ``max_panels`` before two estimates agreed."""

    def __init__(self, message, previous: float, last: float, panels: int):
        super().__init__(f"{message} (previous={previous!r}, last={last!r}, panels={panels})")
        self.previous = previous
        self.last = last
        self.panels = panels


def _periodic_gauss_legendre(f, panels: int, nodes: int) -> float:
    x, w = np.polynomial.legendre.leggauss(nodes)
    width = 2.0 * np.pi / panels
    left = width * np.arange(panels)
    t = (left[:, None] + 0.5 * width * (x[None, :] + 1.0)).ravel()
    vals = f(t).reshape(panels, nodes)
    return float(0.5 * width * np.sum(vals @ w))


def integrate_periodic(f, quad: QuadratureSpec = QuadratureSpec()) -> float:
    """Adaptive composite Gauss-Legendre integral of ``f`` over ``[0, 2 pi]``.

    ``f`` takes an array of angles. Panels are doubled until two successive
    estimates differ by less than ``max(abs_tol, rel_tol * (1 + |value|))``.
    """
    panels = min(2, quad.max_panels)
    value = previous = _periodic_gauss_legendre(f, panels, quad.nodes_per_panel)
    while 2 * panels <= quad.max_panels:
        panels *= 2
        value = _periodic_gauss_legendre(f, panels, quad.nodes_per_panel)
        if abs(value - previous) < max(quad.abs_tol, quad.rel_tol * (1.0 + abs(value))):
            return value
        previous = value
    raise QuadratureError("circle quadrature did not converge", previous, value, panels)


def circle_length(s, r: float, quad: QuadratureSpec = QuadratureSpec()) -> float:
    """Length ``l_r`` of the image of the circle ``|z| = r``."""
    r = check_radius(r)
    return integrate_periodic(lambda t: s.conformal_density(r * np.exp(1j * t)) * r, quad)


def circle_mean(u, r: float, quad: QuadratureSpec = QuadratureSpec()) -> float:
    """Average of a scalar field ``u`` over the circle ``|z| = r``."""
    r = check_radius(r)
    return integrate_periodic(lambda t: u(r * np.exp(1j * t)), quad) / (2.0 * np.pi)


def mean_ratio_profile(s, radii, quad: QuadratureSpec = QuadratureSpec()) -> list[tuple[float, float]]:
    radii = check_increasing_radii(radii)
    return [(float(r), circle_length(s, r, quad) / (2.0 * np.pi * r)) for r in radii]


def boundary_speed_crosscheck(s, n: int = 256) -> float:
    """Max deviation between ``|F_t(e^{it})|`` from tangents and ``lambda``.

    On the unit circle ``F_t = -sin(t) F_x + cos(t) F_y``.
    """
    t = 2.0 * np.pi * np.arange(n) / n
    z = np.exp(1j * t)
    fx, fy = s.tangents(z)
    speed = np.sqrt(sum((-np.sin(t) * a + np.cos(t) * b) ** 2 for a, b in zip(fx, fy)))
    return float(np.max(np.abs(speed - s.conformal_density(z))))


def golden_section_max(f, lo: float, hi: float, tol: float = 1e-12, max_iter: int = 200):
    """Maximise a unimodal scalar function on ``[lo, hi]``; returns ``(x, f(x))``."""
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


@dataclass(frozen=True)
class SchwarzReport:
    R: float
    sup_value: float
    argmax: complex
    ratio: float
    holds: bool
    equality_within_tol: bool
    eq_tol: float = 1e-6
    grid: PolarGrid | None = field(default=None, compare=False)
    quad: QuadratureSpec | None = field(default=None, compare=False)

    @property
    def degenerate(self) -> bool:
        return self.R == 0.0

    def to_json(self) -> dict:
        data = {
            "R": self.R,
            "sup_value": self.sup_value,
            "argmax": [self.argmax.real, self.argmax.imag],
            "ratio": self.ratio,
            "holds": self.holds,
            "equality_within_tol": self.equality_within_tol,
            "degenerate": self.degenerate,
            "eq_tol": self.eq_tol,
        }
        if self.grid is not None:
            data["grid"] = self.grid.to_json()
        if self.quad is not None:
            data["quadrature"] = self.quad.to_json()
        return data


def _bound_profile(s):
    def value(z):
        z = np.asarray(z, dtype=complex)
        return s.conformal_density(z) * (1.0 - np.abs(z) ** 2)

    return value


def _polish(value, z0: complex, f0: float, dr: float, dtheta: float, r_max: float):
    """One ray search then one angular search around the best grid sample."""
    rho0, theta0 = abs(z0), float(np.angle(z0))
    best_z, best_f = z0, f0

    lo, hi = max(0.0, rho0 - dr), min(r_max, rho0 + dr)
    rho, f = golden_section_max(lambda r: float(value(r * np.exp(1j * theta0))), lo, hi)
    if f > best_f:
        best_z, best_f = rho * np.exp(1j * theta0), f
    rho = abs(best_z)
    if rho > 0.0:
        th, f = golden_section_max(
            lambda t: float(value(rho * np.exp(1j * t))), theta0 - dtheta, theta0 + dtheta
        )
        if f > best_f:
            best_z, best_f = rho * np.exp(1j * th), f
    return complex(best_z), float(best_f)


def schwarz_report(
    s,
    g: PolarGrid = PolarGrid(200, 256, 0.99),
    quad: QuadratureSpec = QuadratureSpec(),
    eq_tol: float = 1e-6,
) -> SchwarzReport:
    """Certify ``lambda(z) (1 - |z|**2) <= R`` over a polar grid.

    The grid maximum is refined by golden-section searches along the ray and
    the circle through the best sample. Ties go to the smallest ``|z|``
    (the center comes first in grid order).
    """
    R = circle_length(s, 1.0, quad) / (2.0 * np.pi)
    value = _bound_profile(s)
    pts = g.points()
    vals = value(pts)
    i = int(np.argmax(vals))
    z_best, f_best = _polish(
        value, complex(pts[i]), float(vals[i]), g.r_max / g.n_r, 2.0 * np.pi / g.n_theta, g.r_max
    )
    if R == 0.0:
        ratio, holds, equal = 0.0, True, False
    else:
        ratio = f_best / R
        holds = bool(f_best <= R * (1.0 + quad.rel_tol))
        equal = bool(abs(f_best - R) <= R * eq_tol)
    return SchwarzReport(
        R=R,
        sup_value=f_best,
        argmax=z_best,
        ratio=ratio,
        holds=holds,
        equality_within_tol=equal,
        eq_tol=eq_tol,
        grid=g,
        quad=quad,
    )

"""Numerical checks on the subharmonic density ``u = |h'| + |g'|``.

Two identities are verified:

* the Laplacian of ``u`` away from zeros of ``h'`` and ``g'``::

      Delta u = |h''|**2 / |h'| + |g''|**2 / |g'|

* the Riesz balance between circle means and the logarithmic potential of
  the measure ``Delta u dm``::

      mean_{|z|=r} u - u(0) = (1 / 2 pi) * int_{|z|<r} log(r/|z|) Delta u dm
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boundary import QuadratureSpec, circle_mean
from .series import derivative, evaluate
from .surface import PolarGrid
from .validation import DiskDomainError, check_complex, check_radius

__all__ = [
    "SingularPointError",
    "RieszReport",
    "density_field",
    "fd_laplacian",
    "laplacian_identity_residual",
    "riesz_balance",
]

DEFAULT_STEP = 1e-3
# zeros of h' or g' closer than this many FD steps are treated as singular
_SINGULAR_STEPS = 4.0


class SingularPointError(ValueError):
    """Evaluation requested at (or next to) a zero of ``h'`` or ``g'``."""


def density_field(s):
    """The scalar field ``z -> |h'(z)| + |g'(z)|`` of a surface."""

    def u(z):
        return np.abs(evaluate(s.hprime, z)) + np.abs(evaluate(s.gprime, z))

    return u


def fd_laplacian(f, z, step: float = DEFAULT_STEP):
    """Five-point stencil Laplacian of ``f`` at ``z`` (scalar or array)."""
    if not step > 0:
        raise ValueError(f"step must be positive, got {step!r}")
    z = check_complex(z)
    if np.any(np.abs(z) + step >= 1.0):
        raise DiskDomainError("five-point stencil leaves the open unit disk")
    h = step
    return (f(z + h) + f(z - h) + f(z + 1j * h) + f(z - 1j * h) - 4.0 * f(z)) / h**2


def _singular_mask(w, z, step: float):
    """True where the holomorphic ``w`` has a zero within a few stencil steps.

    Uses the Newton distance ``|w/w'|`` as the distance-to-zero estimate.
    """
    if w.is_zero():
        return np.zeros(np.shape(z), dtype=bool)
    val = np.abs(evaluate(w, z))
    slope = np.abs(evaluate(derivative(w), z))
    return (val == 0.0) | (val < _SINGULAR_STEPS * step * slope)


def laplacian_identity_residual(s, z: complex, step: float = DEFAULT_STEP) -> float:
    z = check_complex(z)
    if not np.isscalar(z):
        raise TypeError("z must be a scalar")
    closed = 0.0
    for w in (s.hprime, s.gprime):
        if w.is_zero():
            continue
        if _singular_mask(w, z, step):
            raise SingularPointError(f"derivative vanishes near z = {z!r}")
        closed += abs(evaluate(derivative(w), z)) ** 2 / abs(evaluate(w, z))
    return float(abs(fd_laplacian(density_field(s), z, step) - closed))


@dataclass(frozen=True)
class RieszReport:
    r: float
    circle_mean_minus_center: float
    weighted_mass: float
    residual: float
    excluded_points: int = 0
    step: float = DEFAULT_STEP
    grid: PolarGrid | None = None

    def to_json(self) -> dict:
        data = {
            "r": self.r,
            "circle_mean_minus_center": self.circle_mean_minus_center,
            "weighted_mass": self.weighted_mass,
            "residual": self.residual,
            "excluded_points": self.excluded_points,
            "step": self.step,
        }
        if self.grid is not None:
            data["grid"] = {"n_r": self.grid.n_r, "n_theta": self.grid.n_theta}
        return data


def _fill_excluded(lap: np.ndarray, mask: np.ndarray) -> np.ndarray:
    """Replace excluded cells by the mean of the nearest ring with valid cells."""
    if not mask.any():
        return lap
    lap = lap.copy()
    valid_rings = np.flatnonzero((~mask).any(axis=1))
    for i in np.flatnonzero(mask.any(axis=1)):
        if valid_rings.size == 0:
            lap[i, mask[i]] = 0.0
            continue
        j = valid_rings[np.argmin(np.abs(valid_rings - i))]
        lap[i, mask[i]] = lap[j, ~mask[j]].mean()
    return lap


def riesz_balance(
    s,
    r: float,
    grid: PolarGrid = PolarGrid(200, 256, 0.5),
    step: float = DEFAULT_STEP,
    quad: QuadratureSpec = QuadratureSpec(),
) -> RieszReport:
    """Compare both sides of the Riesz representation on the disk ``|z| < r``.

    Only ``grid.n_r`` and ``grid.n_theta`` are used: the right-hand side is a
    midpoint rule in ``(rho, theta)`` on ``[0, r] x [0, 2 pi]``, which never
    samples ``rho = 0`` where the log weight blows up.
    """
    r = check_radius(r, allow_one=False)
    if r + step >= 1.0:
        raise DiskDomainError(f"r + step must stay below 1, got {r + step!r}")
    u = density_field(s)
    lhs = circle_mean(u, r, quad) - float(u(0j))

    drho = r / grid.n_r
    dtheta = 2.0 * np.pi / grid.n_theta
    rho = (np.arange(grid.n_r) + 0.5) * drho
    theta = (np.arange(grid.n_theta) + 0.5) * dtheta
    z = rho[:, None] * np.exp(1j * theta)[None, :]

    mask = _singular_mask(s.hprime, z, step) | _singular_mask(s.gprime, z, step)
    lap = np.zeros(z.shape)
    ok = ~mask
    lap[ok] = fd_laplacian(u, z[ok], step)
    lap = _fill_excluded(lap, mask)

    weights = np.log(r / rho) * rho * drho * dtheta
    rhs = float(np.sum(weights[:, None] * lap)) / (2.0 * np.pi)
    return RieszReport(
        r=r,
        circle_mean_minus_center=lhs,
        weighted_mass=rhs,
        residual=abs(lhs - rhs),
        excluded_points=int(mask.sum()),
        step=step,
        grid=grid,
    )

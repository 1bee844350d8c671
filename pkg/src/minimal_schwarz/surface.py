"""Weierstrass-Enneper surfaces built from polynomial data ``(p, q)``.

With ``h' = p`` and ``g' = p q**2`` the coordinate differentials are::

    phi1 = h' + g'      phi2 = -i (h' - g')      phi3 = 2 i p q

and the embedding is ``F = Re (Phi1, Phi2, Phi3)`` where ``Phi_k`` is the
primitive of ``phi_k`` vanishing at 0. The real part is used for all three
coordinates so that ``p = 1, q = 0`` gives the identity embedding of the disk.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .series import PowerSeries, antiderivative, evaluate, multiply
from .validation import check_in_disk

__all__ = [
    "Surface",
    "Point3",
    "PolarGrid",
    "IsothermalReport",
    "from_pq",
    "position",
    "conformal_density",
    "tangents",
    "isothermal_report",
    "sum_of_squares_residual",
    "load_surface",
]

_I = PowerSeries([1j])


class Point3(NamedTuple):
    u: float
    v: float
    t: float

    def norm(self):
        return np.sqrt(self.u**2 + self.v**2 + self.t**2)


def _dot(a: Point3, b: Point3):
    return a.u * b.u + a.v * b.v + a.t * b.t


@dataclass(frozen=True)
class Surface:
    """Minimal surface patch over the closed unit disk.

    Build with :func:`from_pq`; every derived series is computed exactly
    from ``p`` and ``q`` at construction time.
    """

    p: PowerSeries
    q: PowerSeries
    name: str | None = field(default=None, compare=False)
    hprime: PowerSeries = field(init=False, repr=False)
    gprime: PowerSeries = field(init=False, repr=False)
    phi1: PowerSeries = field(init=False, repr=False)
    phi2: PowerSeries = field(init=False, repr=False)
    phi3: PowerSeries = field(init=False, repr=False)
    Phi1: PowerSeries = field(init=False, repr=False)
    Phi2: PowerSeries = field(init=False, repr=False)
    Phi3: PowerSeries = field(init=False, repr=False)

    def __post_init__(self):
        p, q = self.p, self.q
        hprime = p
        gprime = multiply(p, multiply(q, q))
        phi1 = hprime + gprime
        phi2 = -_I * (hprime - gprime)
        phi3 = PowerSeries([2j]) * multiply(p, q)
        derived = dict(
            hprime=hprime,
            gprime=gprime,
            phi1=phi1,
            phi2=phi2,
            phi3=phi3,
            Phi1=antiderivative(phi1),
            Phi2=antiderivative(phi2),
            Phi3=antiderivative(phi3),
        )
        for key, value in derived.items():
            object.__setattr__(self, key, value)

    @property
    def is_affine(self) -> bool:
        return len(self.p.trimmed()) == 1 and len(self.q.trimmed()) == 1

    def position(self, z) -> Point3:
        z = check_in_disk(z)
        return Point3(
            np.real(evaluate(self.Phi1, z)),
            np.real(evaluate(self.Phi2, z)),
            np.real(evaluate(self.Phi3, z)),
        )

    def conformal_density(self, z):
        z = check_in_disk(z)
        return np.abs(evaluate(self.p, z)) * (1.0 + np.abs(evaluate(self.q, z)) ** 2)

    def tangents(self, z) -> tuple[Point3, Point3]:
        z = check_in_disk(z)
        values = [evaluate(phi, z) for phi in (self.phi1, self.phi2, self.phi3)]
        fx = Point3(*(np.real(w) for w in values))
        fy = Point3(*(-np.imag(w) for w in values))
        return fx, fy

    def to_json(self) -> dict:
        data = {"p": self.p.to_json(), "q": self.q.to_json()}
        if self.name is not None:
            data["name"] = self.name
        return data

    @classmethod
    def from_json(cls, data: dict) -> "Surface":
        if not isinstance(data, dict) or "p" not in data or "q" not in data:
            raise ValueError('surface JSON must be an object with "p" and "q" arrays')
        name = data.get("name")
        if name is not None and not isinstance(name, str):
            raise ValueError('surface "name" must be a string')
        return from_pq(PowerSeries.from_json(data["p"]), PowerSeries.from_json(data["q"]), name=name)


@dataclass(frozen=True)
class PolarGrid:
    """Center point plus ``n_r`` rings of ``n_theta`` points out to ``r_max``.

    Ring ``k`` (1-based) sits at radius ``r_max * k / n_r``; points are
    ordered center first, then ring-major with increasing angle.
    """

    n_r: int
    n_theta: int
    r_max: float

    def __post_init__(self):
        if int(self.n_r) != self.n_r or self.n_r < 1:
            raise ValueError(f"n_r must be a positive integer, got {self.n_r!r}")
        if int(self.n_theta) != self.n_theta or self.n_theta < 1:
            raise ValueError(f"n_theta must be a positive integer, got {self.n_theta!r}")
        if not 0.0 < self.r_max < 1.0:
            raise ValueError(f"r_max must lie in (0, 1), got {self.r_max!r}")

    @property
    def radii(self) -> np.ndarray:
        return self.r_max * np.arange(1, self.n_r + 1) / self.n_r

    @property
    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.n_theta) / self.n_theta

    def points(self) -> np.ndarray:
        rings = self.radii[:, None] * np.exp(1j * self.angles)[None, :]
        return np.concatenate([[0j], rings.ravel()])

    def to_json(self) -> dict:
        return {"n_r": self.n_r, "n_theta": self.n_theta, "r_max": self.r_max}


@dataclass(frozen=True)
class IsothermalReport:
    max_norm_gap: float
    max_dot: float
    max_lambda_gap: float

    def to_json(self) -> dict:
        return {
            "max_norm_gap": self.max_norm_gap,
            "max_dot": self.max_dot,
            "max_lambda_gap": self.max_lambda_gap,
        }


def from_pq(p, q, name: str | None = None) -> Surface:
    p = p if isinstance(p, PowerSeries) else PowerSeries(p)
    q = q if isinstance(q, PowerSeries) else PowerSeries(q)
    return Surface(p, q, name)


def position(s, z) -> Point3:
    return s.position(z)


def conformal_density(s, z):
    """``lambda(z) = |p(z)| (1 + |q(z)|**2)``; zero at branch points of ``p``."""
    return s.conformal_density(z)


def tangents(s, z) -> tuple[Point3, Point3]:
    return s.tangents(z)


def isothermal_report(s, g: PolarGrid) -> IsothermalReport:
    z = g.points()
    fx, fy = s.tangents(z)
    nx, ny = fx.norm(), fy.norm()
    lam = s.conformal_density(z)
    return IsothermalReport(
        max_norm_gap=float(np.max(np.abs(nx - ny))),
        max_dot=float(np.max(np.abs(_dot(fx, fy)))),
        max_lambda_gap=float(np.max(np.abs(nx - lam))),
    )


def sum_of_squares_residual(s: Surface) -> PowerSeries:
    """``phi1**2 + phi2**2 + phi3**2``, identically zero for valid data."""
    return multiply(s.phi1, s.phi1) + multiply(s.phi2, s.phi2) + multiply(s.phi3, s.phi3)


def load_surface(path) -> Surface:
    with Path(path).open(encoding="utf-8") as fh:
        return Surface.from_json(json.load(fh))

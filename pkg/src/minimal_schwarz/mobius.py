"""Disk automorphisms ``m_a(z) = (z + a) / (1 + conj(a) z)`` and precomposition.

A precomposed surface ``H = F o m_a`` is evaluated lazily: its density is
``lambda_F(m_a(z)) |m_a'(z)|`` and its tangents follow from the chain rule.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .series import PowerSeries
from .surface import Point3, Surface, from_pq
from .validation import DiskDomainError, check_complex, check_in_disk

__all__ = [
    "DiskMobius",
    "DerivedSurface",
    "mobius_apply",
    "mobius_derivative",
    "precompose",
    "pullback_identity_residual",
    "reexpand",
]


@dataclass(frozen=True)
class DiskMobius:
    a: complex = 0j

    def __post_init__(self):
        a = check_complex(self.a, "a")
        if not np.isscalar(a):
            raise TypeError("a must be a scalar")
        if abs(a) >= 1.0:
            raise DiskDomainError(f"Mobius parameter must satisfy |a| < 1, got |a| = {abs(a)!r}")
        object.__setattr__(self, "a", complex(a))

    def __call__(self, z):
        return mobius_apply(self, z)

    def inverse(self) -> "DiskMobius":
        return DiskMobius(-self.a)


def mobius_apply(m: DiskMobius, z):
    z = check_in_disk(z)
    return (z + m.a) / (1.0 + z * np.conj(m.a))


def mobius_derivative(m: DiskMobius, z):
    z = check_in_disk(z)
    return (1.0 - abs(m.a) ** 2) / (1.0 + z * np.conj(m.a)) ** 2


@dataclass(frozen=True)
class DerivedSurface:
    """``base o m`` with the same evaluation interface as :class:`Surface`."""

    base: Surface
    m: DiskMobius

    @property
    def name(self):
        a = self.m.a
        return f"{self.base.name or 'surface'}@mobius({a.real:g},{a.imag:g})"

    def position(self, z) -> Point3:
        return self.base.position(self.m(z))

    def conformal_density(self, z):
        w = self.m(z)
        return self.base.conformal_density(w) * np.abs(mobius_derivative(self.m, z))

    def tangents(self, z) -> tuple[Point3, Point3]:
        dm = mobius_derivative(self.m, z)
        fx, fy = self.base.tangents(self.m(z))
        c, s = np.real(dm), np.imag(dm)
        hx = Point3(*(c * a + s * b for a, b in zip(fx, fy)))
        hy = Point3(*(-s * a + c * b for a, b in zip(fx, fy)))
        return hx, hy

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "a": [self.m.a.real, self.m.a.imag]}


def precompose(s: Surface, m: DiskMobius) -> DerivedSurface:
    return DerivedSurface(s, m)


def pullback_identity_residual(s: Surface, a) -> float:
    """``| lambda_H(0) - lambda_F(a) (1 - |a|**2) |`` for ``H = F o m_a``."""
    m = DiskMobius(a)
    lhs = float(precompose(s, m).conformal_density(0j))
    rhs = float(s.conformal_density(m.a)) * (1.0 - abs(m.a) ** 2)
    return abs(lhs - rhs)


def _fourier_coefficients(f, rho: float, degree: int) -> list[complex]:
    n = 2 * (degree + 1)
    z = rho * np.exp(2j * np.pi * np.arange(n) / n)
    c = np.fft.fft(f(z)) / n
    return list(c[: degree + 1] / rho ** np.arange(degree + 1))


def reexpand(d: DerivedSurface, tol: float = 1e-12, max_degree: int = 400) -> Surface:
    """Approximate ``base o m`` by a polynomial surface.

    Returns Weierstrass data ``p_H = (p o m) m'`` and ``q_H = q o m`` sampled on
    the circle of radius ``rho = (1 + 1/|a|) / 2`` (inside the pole at
    ``-1/conj(a)``) and recovered by discrete Fourier inversion. The degree
    ``N`` is the smallest with ``rho**-N < tol``. The result agrees with
    ``d`` up to a translation by ``F(a)``.
    """
    a = d.m.a
    base = d.base
    if a == 0:
        return from_pq(base.p, base.q, name=d.name)
    rho = 0.5 * (1.0 + 1.0 / abs(a))
    degree = int(np.ceil(np.log(1.0 / tol) / np.log(rho)))
    if degree > max_degree:
        raise ValueError(f"re-expansion needs degree {degree} > max_degree={max_degree}")
    # the extra factor absorbs the polynomial growth of the Taylor coefficients
    degree = min(max_degree, degree + base.p.degree + 2 * base.q.degree + 8)

    def m(z):
        return (z + a) / (1.0 + z * np.conj(a))

    def dm(z):
        return (1.0 - abs(a) ** 2) / (1.0 + z * np.conj(a)) ** 2

    p_h = _fourier_coefficients(lambda z: base.p(m(z)) * dm(z), rho, degree)
    q_h = _fourier_coefficients(lambda z: base.q(m(z)), rho, degree)
    return from_pq(PowerSeries(p_h), PowerSeries(q_h), name=d.name)

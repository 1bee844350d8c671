"""scikit-learn style wrappers.

``fit`` takes a surface (a :class:`Surface`, a precomposed surface, a
``(p, q)`` pair or a surface JSON dict); ``transform``/``predict`` take
parameter-disk points, either as a complex 1-D array or a real ``(n, 2)``
array of ``(x, y)`` pairs.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .boundary import QuadratureSpec, schwarz_report
from .mobius import DerivedSurface
from .surface import PolarGrid, Surface, from_pq
from .validation import check_in_disk

__all__ = ["SurfaceEmbedding", "SchwarzBoundEstimator", "as_surface", "check_points"]


def as_surface(X):
    if isinstance(X, (Surface, DerivedSurface)):
        return X
    if isinstance(X, dict):
        return Surface.from_json(X)
    if isinstance(X, (tuple, list)) and len(X) == 2:
        return from_pq(*X)
    raise TypeError(f"expected a surface, (p, q) pair or surface dict, got {type(X).__name__}")


def check_points(Z, closed: bool = True) -> np.ndarray:
    """Return disk points as a 1-D complex array."""
    arr = np.asarray(Z)
    if np.iscomplexobj(arr):
        pts = arr.ravel()
    else:
        arr = np.atleast_2d(np.asarray(arr, dtype=float))
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError(f"real input must have shape (n, 2), got {arr.shape}")
        pts = arr[:, 0] + 1j * arr[:, 1]
    return np.atleast_1d(check_in_disk(pts, closed=closed))


class SurfaceEmbedding(TransformerMixin, BaseEstimator):
    """Map disk points to surface points ``(u, v, t)``; optionally append ``lambda``."""

    def __init__(self, with_density: bool = False):
        self.with_density = with_density

    def fit(self, X, y=None):
        self.surface_ = as_surface(X)
        return self

    def transform(self, Z):
        check_is_fitted(self, "surface_")
        z = check_points(Z)
        cols = [np.asarray(c, dtype=float) for c in self.surface_.position(z)]
        if self.with_density:
            cols.append(self.surface_.conformal_density(z))
        return np.column_stack(cols)


class SchwarzBoundEstimator(BaseEstimator):
    """Fit ``R`` for a surface and score points against ``R / (1 - |z|^2)``.

    After ``fit``: ``R_``, ``report_`` (a :class:`SchwarzReport`) and
    ``surface_``. ``transform`` returns ``lambda(z) (1 - |z|^2) / R`` as a
    column, which never exceeds 1 for a valid surface.
    """

    def __init__(
        self,
        n_r: int = 200,
        n_theta: int = 256,
        r_max: float = 0.99,
        rel_tol: float = 1e-10,
        abs_tol: float = 1e-12,
        max_panels: int = 2**16,
        nodes_per_panel: int = 16,
        eq_tol: float = 1e-6,
    ):
        self.n_r = n_r
        self.n_theta = n_theta
        self.r_max = r_max
        self.rel_tol = rel_tol
        self.abs_tol = abs_tol
        self.max_panels = max_panels
        self.nodes_per_panel = nodes_per_panel
        self.eq_tol = eq_tol

    def fit(self, X, y=None):
        self.surface_ = as_surface(X)
        grid = PolarGrid(self.n_r, self.n_theta, self.r_max)
        quad = QuadratureSpec(self.rel_tol, self.abs_tol, self.max_panels, self.nodes_per_panel)
        self.report_ = schwarz_report(self.surface_, grid, quad, self.eq_tol)
        self.R_ = self.report_.R
        return self

    def transform(self, Z):
        check_is_fitted(self, "R_")
        z = check_points(Z, closed=False)
        value = self.surface_.conformal_density(z) * (1.0 - np.abs(z) ** 2)
        if self.R_ == 0.0:
            return np.zeros((z.size, 1))
        return (value / self.R_)[:, None]

    def fit_transform(self, X, Z):
        return self.fit(X).transform(Z)

    def predict(self, Z):
        """Whether the bound holds at each point, up to ``rel_tol``."""
        return self.transform(Z)[:, 0] <= 1.0 + self.rel_tol

"""Input validation helpers shared by the evaluation routines and estimators."""
from __future__ import annotations

import numpy as np

__all__ = [
    "DiskDomainError",
    "check_complex",
    "check_in_disk",
    "check_radius",
    "check_increasing_radii",
    "parse_complex",
]

# slack for points generated as r * exp(i t) with r == 1
DISK_SLACK = 1e-12


class DiskDomainError(ValueError):
    """A point lies outside the admissible (closed or open) unit disk."""


def check_complex(z, name: str = "z"):
    """Return ``z`` as a complex scalar or complex ndarray, rejecting NaN/Inf."""
    arr = np.asarray(z)
    if arr.dtype == object:
        raise TypeError(f"{name} must be numeric, got {type(z).__name__}")
    arr = arr.astype(complex, copy=False)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    if arr.ndim == 0:
        return complex(arr)
    return arr


def check_in_disk(z, closed: bool = True, name: str = "z"):
    z = check_complex(z, name)
    mod = np.abs(z)
    if closed:
        bad = mod > 1.0 + DISK_SLACK
    else:
        bad = mod >= 1.0
    if np.any(bad):
        worst = float(np.max(mod))
        kind = "closed" if closed else "open"
        raise DiskDomainError(f"{name} has modulus {worst:.17g}, outside the {kind} unit disk")
    return z


def check_radius(r, *, allow_one: bool = True, name: str = "r") -> float:
    r = float(r)
    if not np.isfinite(r) or r <= 0.0 or r > 1.0 or (r == 1.0 and not allow_one):
        upper = "1]" if allow_one else "1)"
        raise ValueError(f"{name} must lie in (0, {upper}, got {r!r}")
    return r


def check_increasing_radii(radii) -> np.ndarray:
    radii = np.asarray(radii, dtype=float).ravel()
    if radii.size == 0:
        raise ValueError("radii must be non-empty")
    for r in radii:
        check_radius(r)
    if np.any(np.diff(radii) <= 0):
        raise ValueError("radii must be strictly increasing")
    return radii


def parse_complex(text: str) -> complex:
    """Parse a ``re,im`` literal such as ``0.3,-0.4``."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"malformed complex literal {text!r}; expected re,im")
    try:
        re, im = (float(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed complex literal {text!r}; expected re,im") from None
    z = complex(re, im)
    if not np.isfinite(z):
        raise ValueError(f"non-finite complex literal {text!r}")
    return z

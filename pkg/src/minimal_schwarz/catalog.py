"""Built-in surfaces with closed-form reference values."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .surface import Surface, from_pq

__all__ = ["CatalogEntry", "CATALOG", "get_surface"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    surface: Surface
    description: str
    closed_forms: dict[str, Callable | float] = field(default_factory=dict)


def _entries() -> dict[str, CatalogEntry]:
    entries = [
        CatalogEntry(
            "enneper",
            from_pq([1], [0, 1], name="enneper"),
            "Enneper surface, p = 1, q = z",
            {
                # lambda = 1 + |z|^2, so l_r = 2 pi r (1 + r^2) and R = l_1 / 2 pi = 2
                "R": 2.0,
                "density": lambda z: 1.0 + abs(z) ** 2,
                "circle_length": lambda r: 2.0 * math.pi * r * (1.0 + r * r),
                # lambda (1 - |z|^2) = 1 - |z|^4 peaks at the origin
                "sup": 1.0,
            },
        ),
        CatalogEntry(
            "planar",
            from_pq([1], [0], name="planar"),
            "identity embedding of the disk, p = 1, q = 0",
            {"R": 1.0, "density": lambda z: 1.0, "circle_length": lambda r: 2.0 * math.pi * r, "sup": 1.0},
        ),
        CatalogEntry(
            "affine-tilt",
            from_pq([1], [0.5j], name="affine-tilt"),
            "tilted planar disk, p = 1, q = 0.5i",
            {
                # lambda = |p0| (1 + |q0|^2) = 1.25 everywhere
                "R": 1.25,
                "density": lambda z: 1.25,
                "circle_length": lambda r: 2.5 * math.pi * r,
                "sup": 1.25,
            },
        ),
        CatalogEntry(
            "poly-demo",
            from_pq([1, 0.3], [0], name="poly-demo"),
            "non-affine conformal map z + 0.15 z^2, p = 1 + 0.3z, q = 0",
            {"density": lambda z: abs(1.0 + 0.3 * z)},
        ),
    ]
    return {e.name: e for e in entries}


CATALOG: dict[str, CatalogEntry] = _entries()


def get_surface(name: str) -> Surface:
    try:
        return CATALOG[name].surface
    except KeyError:
        raise KeyError(f"unknown surface {name!r}; choose from {', '.join(CATALOG)}") from None

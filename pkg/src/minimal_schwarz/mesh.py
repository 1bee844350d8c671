"""Triangulated OBJ export of a surface over a polar parameter grid."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["MeshSpec", "build_mesh", "write_obj", "obj_text"]


@dataclass(frozen=True)
class MeshSpec:
    n_r: int
    n_theta: int
    r_max: float = 1.0

    def __post_init__(self):
        if int(self.n_r) != self.n_r or self.n_r < 2:
            raise ValueError(f"mesh n_r must be an integer >= 2, got {self.n_r!r}")
        if int(self.n_theta) != self.n_theta or self.n_theta < 3:
            raise ValueError(f"mesh n_theta must be an integer >= 3, got {self.n_theta!r}")
        if not 0.0 < self.r_max <= 1.0:
            raise ValueError(f"mesh r_max must lie in (0, 1], got {self.r_max!r}")

    @property
    def n_vertices(self) -> int:
        return 1 + self.n_r * self.n_theta

    @property
    def n_faces(self) -> int:
        return self.n_theta + 2 * self.n_theta * (self.n_r - 1)

    def to_json(self) -> dict:
        return {"n_r": self.n_r, "n_theta": self.n_theta, "r_max": self.r_max}


def build_mesh(s, spec: MeshSpec) -> tuple[np.ndarray, list[tuple[int, int, int]]]:
    """Vertices (center, then ring-major) and 1-based counterclockwise faces."""
    radii = spec.r_max * np.arange(1, spec.n_r + 1) / spec.n_r
    angles = 2.0 * np.pi * np.arange(spec.n_theta) / spec.n_theta
    z = np.concatenate([[0j], (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()])
    pos = s.position(z)
    vertices = np.column_stack([np.asarray(c, dtype=float) for c in pos])

    n = spec.n_theta

    def idx(ring: int, j: int) -> int:
        # ring is 0-based, vertex 1 is the center
        return 2 + ring * n + (j % n)

    faces = [(1, idx(0, j), idx(0, j + 1)) for j in range(n)]
    for k in range(spec.n_r - 1):
        for j in range(n):
            a, b = idx(k, j), idx(k, j + 1)
            c, d = idx(k + 1, j + 1), idx(k + 1, j)
            faces.append((a, d, c))
            faces.append((a, c, b))
    return vertices, faces


def obj_text(s, spec: MeshSpec, header: str | None = None) -> str:
    vertices, faces = build_mesh(s, spec)
    lines = []
    if header:
        lines.extend(f"# {line}" for line in header.splitlines())
    lines.extend(f"v {x:.17g} {y:.17g} {t:.17g}" for x, y, t in vertices)
    lines.extend(f"f {i} {j} {k}" for i, j, k in faces)
    return "\n".join(lines) + "\n"


def write_obj(s, spec: MeshSpec, path, header: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(obj_text(s, spec, header))

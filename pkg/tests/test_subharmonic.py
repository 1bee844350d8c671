import numpy as np
import pytest

from conftest import random_disk_points, random_surface
from minimal_schwarz import (
    DiskDomainError,
    PolarGrid,
    SingularPointError,
    fd_laplacian,
    from_pq,
    laplacian_identity_residual,
    riesz_balance,
)
from minimal_schwarz.subharmonic import density_field


def test_fd_laplacian_examples(enneper):
    assert fd_laplacian(lambda z: np.abs(z) ** 2, 0.3 - 0.2j, 1e-3) == pytest.approx(4, abs=1e-6)
    assert fd_laplacian(lambda z: np.real(z), 0.1 + 0.5j, 1e-3) == pytest.approx(0, abs=1e-8)
    assert fd_laplacian(density_field(enneper), 0.5, 1e-3) == pytest.approx(4, abs=1e-6)


def test_fd_laplacian_rejects_stencil_outside(enneper):
    with pytest.raises(DiskDomainError):
        fd_laplacian(density_field(enneper), 0.9995, 1e-3)
    with pytest.raises(ValueError):
        fd_laplacian(density_field(enneper), 0.5, 0.0)


def test_identity_examples(enneper, planar):
    assert laplacian_identity_residual(enneper, 0.5, 1e-3) < 1e-4
    assert laplacian_identity_residual(planar, 0.3, 1e-3) < 1e-8
    s = from_pq([1, 1], [0])
    assert laplacian_identity_residual(s, 0j, 1e-3) < 1e-4
    # the closed form at 0 is |h''|^2 / |h'| = 1
    assert fd_laplacian(density_field(s), 0j, 1e-3) == pytest.approx(1, abs=1e-4)


def test_identity_rejects_zeros(enneper):
    with pytest.raises(SingularPointError):
        laplacian_identity_residual(enneper, 0j)
    with pytest.raises(SingularPointError):
        laplacian_identity_residual(from_pq([0.5, 1], [0]), -0.5)


def test_identity_on_random_surfaces(rng):
    checked = 0
    for _ in range(10):
        s = random_surface(rng, 4, min_degree=1)
        for z in random_disk_points(rng, 10, r_max=0.8):
            try:
                res = laplacian_identity_residual(s, z, 1e-3)
            except SingularPointError:
                continue
            u = density_field(s)
            scale = max(1.0, abs(float(fd_laplacian(u, z, 1e-3))))
            assert res < 1e-3 * scale
            checked += 1
    assert checked > 50


def test_numerical_subharmonicity(rng):
    for _ in range(10):
        s = random_surface(rng, 5)
        z = random_disk_points(rng, 200, r_max=0.9)
        lap = fd_laplacian(density_field(s), z, 1e-3)
        u = density_field(s)(z)
        # rounding noise of the stencil grows like eps * u / step^2
        assert np.all(lap >= -1e-6 * np.maximum(1.0, u))


def test_affine_density_is_harmonic(rng):
    for p0, q0 in [(1, 0), (2, 0.5j), (0.3 - 0.1j, 0.7 + 0.2j)]:
        s = from_pq([p0], [q0])
        lap = fd_laplacian(density_field(s), random_disk_points(rng, 50, r_max=0.9), 1e-3)
        assert np.all(np.abs(lap) <= 1e-8)


@pytest.mark.parametrize("r, tol", [(0.5, 1e-4), (0.9, 5e-4)])
def test_riesz_enneper(enneper, r, tol):
    rep = riesz_balance(enneper, r)
    assert rep.circle_mean_minus_center == pytest.approx(r * r, abs=1e-12)
    assert rep.weighted_mass == pytest.approx(r * r, abs=tol)
    assert rep.residual < tol


def test_riesz_planar_is_zero(planar):
    rep = riesz_balance(planar, 0.7, PolarGrid(20, 32, 0.5))
    assert rep.circle_mean_minus_center == pytest.approx(0, abs=1e-14)
    assert rep.weighted_mass == pytest.approx(0, abs=1e-8)
    assert rep.excluded_points == 0


def test_riesz_refinement_halves_residual(enneper):
    coarse = riesz_balance(enneper, 0.5, PolarGrid(100, 128, 0.5), 2e-3)
    fine = riesz_balance(enneper, 0.5, PolarGrid(200, 256, 0.5), 1e-3)
    assert fine.residual <= coarse.residual / 2


def test_riesz_random_surface(rng):
    s = from_pq([1, 0.4j, -0.2], [0.3, 0.5])
    rep = riesz_balance(s, 0.6)
    assert rep.residual < 1e-3


def test_riesz_excludes_zeros_near_origin():
    # g' = z^2 (1 + z) vanishes at 0; the log weight keeps the excluded mass small
    s = from_pq([1, 1], [0, 1])
    rep = riesz_balance(s, 0.5)
    assert rep.excluded_points > 0
    assert rep.residual < 1e-3


def test_riesz_rejects_bad_radius(enneper):
    with pytest.raises(ValueError):
        riesz_balance(enneper, 1.0)
    with pytest.raises(DiskDomainError):
        riesz_balance(enneper, 0.9995)

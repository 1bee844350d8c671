"""Exit criteria, one test each; every test prints a single PASS/FAIL line."""
import json
import math
import time

import jsonschema
import numpy as np
import pytest

from conftest import random_disk_points, random_surface
from minimal_schwarz import (
    AffineCoefficients,
    DiskMobius,
    PolarGrid,
    boundary_speed,
    circle_length,
    conformal_density,
    conformality_check,
    equality_certificate,
    fd_laplacian,
    from_pq,
    isothermal_report,
    laplacian_identity_residual,
    mean_ratio_profile,
    precompose,
    pullback_identity_residual,
    riesz_balance,
    schwarz_report,
    sum_of_squares_residual,
)
from minimal_schwarz.catalog import get_surface
from minimal_schwarz.cli import main
from minimal_schwarz.mesh import MeshSpec
from minimal_schwarz.subharmonic import density_field

pytestmark = pytest.mark.acceptance


def verdict(number: int, ok: bool, detail: str) -> None:
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    assert ok, detail


def test_criterion_1_enneper_benchmark():
    start = time.perf_counter()
    s = from_pq([1], [0, 1])
    rep = schwarz_report(s, PolarGrid(200, 256, 0.99))
    l_half = circle_length(s, 0.5)
    elapsed = time.perf_counter() - start
    checks = {
        "R": abs(rep.R - 2.0) < 1e-9,
        "l_0.5": abs(l_half - 1.25 * math.pi) < 1e-9,
        "sup": abs(rep.sup_value - 1.0) < 1e-9,
        "argmax": abs(rep.argmax) < 1e-3,
        "holds": rep.holds,
        "ratio": abs(rep.ratio - 0.5) <= 1e-6,
        "runtime": elapsed < 5.0,
    }
    verdict(
        1,
        all(checks.values()),
        f"R={rep.R!r} l_0.5={l_half!r} sup={rep.sup_value!r} argmax={rep.argmax!r} "
        f"ratio={rep.ratio!r} time={elapsed:.3f}s failed={[k for k, v in checks.items() if not v]}",
    )


def test_criterion_2_equality_cases():
    lines, ok = [], True
    for p, q in [([1], [0]), ([1], [0.5j])]:
        v = equality_certificate(from_pq(p, q))
        good = (
            v.kind == "equality"
            and v.witness == 0
            and abs(v.margin) <= v.R * 1e-6
            and v.affine_detected
        )
        ok &= good
        lines.append(f"q={q[0]!r}: kind={v.kind} witness={v.witness} margin={v.margin:.3g} affine={v.affine_detected}")
    verdict(2, ok, "; ".join(lines))


def test_criterion_3_mobius_machinery():
    rng = np.random.default_rng(3)
    worst_residual, worst_gap = 0.0, 0.0
    for _ in range(50):
        s = random_surface(rng, 5)
        a = complex(random_disk_points(rng, 1, r_max=0.7)[0])
        worst_residual = max(worst_residual, pullback_identity_residual(s, a))
        h = precompose(s, DiskMobius(a))
        worst_gap = max(worst_gap, abs(circle_length(h, 1.0) - circle_length(s, 1.0)))
    verdict(
        3,
        worst_residual < 1e-12 and worst_gap < 1e-7,
        f"max pullback residual={worst_residual:.3g} (<1e-12), max |l1(F o m) - l1(F)|={worst_gap:.3g} (<1e-7)",
    )


def test_criterion_4_riesz_balance():
    s = get_surface("enneper")
    parts, ok = [], True
    for r in (0.3, 0.5, 0.9):
        rep = riesz_balance(s, r)
        good = abs(rep.circle_mean_minus_center - r * r) < 5e-4 and abs(rep.weighted_mass - r * r) < 5e-4
        ok &= good
        parts.append(f"r={r}: LHS={rep.circle_mean_minus_center:.9f} RHS={rep.weighted_mass:.9f}")
    coarse = riesz_balance(s, 0.5)
    fine = riesz_balance(s, 0.5, PolarGrid(400, 512, 0.5), 5e-4)
    halves = fine.residual <= coarse.residual / 2
    parts.append(f"refinement residual {coarse.residual:.3g} -> {fine.residual:.3g}")
    verdict(4, ok and halves, "; ".join(parts))


def test_criterion_5_laplacian_identity():
    s = get_surface("enneper")
    rng = np.random.default_rng(5)
    radii = rng.uniform(0.2, 0.8, 20)
    z = radii * np.exp(2j * np.pi * rng.uniform(0, 1, 20))
    worst = max(laplacian_identity_residual(s, complex(w), 1e-3) for w in z)
    lap = fd_laplacian(density_field(s), z, 1e-3)
    verdict(
        5,
        worst < 1e-3 and np.allclose(lap, 4, atol=1e-3),
        f"max |FD - closed form| = {worst:.3g} over 20 points (<1e-3); FD range [{lap.min():.6f}, {lap.max():.6f}]",
    )


def test_criterion_6_theorem_property_suite():
    rng = np.random.default_rng(6)
    grid = PolarGrid(50, 64, 0.99)
    pts = grid.points()
    radii = [k / 10 for k in range(1, 10)]
    violations = nonmono = low_start = 0
    worst_ratio = 0.0
    for _ in range(200):
        s = random_surface(rng, 6)
        rep = schwarz_report(s, grid)
        vals = conformal_density(s, pts) * (1 - np.abs(pts) ** 2)
        violations += int(np.sum(vals > rep.R * (1 + 1e-9)))
        violations += int(rep.sup_value > rep.R * (1 + 1e-9))
        worst_ratio = max(worst_ratio, rep.ratio)
        prof = [v for _, v in mean_ratio_profile(s, radii)]
        nonmono += int(np.any(np.diff(prof) < -1e-10))
        low_start += int(prof[0] < float(conformal_density(s, 0j)) - 1e-10)
    verdict(
        6,
        violations == 0 and nonmono == 0 and low_start == 0,
        f"200 surfaces: bound violations={violations}, non-monotone profiles={nonmono}, "
        f"profile starts below lambda(0)={low_start}, worst ratio={worst_ratio:.6f}",
    )


def test_criterion_7_algebraic_identities():
    rng = np.random.default_rng(7)
    grid = PolarGrid(50, 64, 0.95)
    worst_coeff, worst_iso = 0.0, 0.0
    for _ in range(100):
        s = random_surface(rng, 5)
        worst_coeff = max(worst_coeff, float(np.max(np.abs(sum_of_squares_residual(s).coeffs))))
        rep = isothermal_report(s, grid)
        worst_iso = max(worst_iso, rep.max_norm_gap, rep.max_dot, rep.max_lambda_gap)
    verdict(
        7,
        worst_coeff < 1e-14 and worst_iso < 1e-10,
        f"max sum-of-squares coefficient={worst_coeff:.3g} (<1e-14), max isothermal residual={worst_iso:.3g} (<1e-10)",
    )


def test_criterion_8_remark_constraints():
    c = AffineCoefficients(1, 0, 0, 0.6, 0, 0.8)
    ok_conf, r1, r2 = conformality_check(c)
    t = 2 * np.pi * np.arange(256) / 256
    speed = boundary_speed(c, t)
    speed_ok = bool(np.max(np.abs(speed - 1.0)) <= 1e-12)
    v = equality_certificate(from_pq([1, 0.3], [0]))
    strict_ok = v.kind == "strict" and v.margin > 0.01 * v.R
    verdict(
        8,
        ok_conf and r1 <= 1e-15 and r2 == 0 and speed_ok and strict_ok,
        f"conformal={ok_conf} residuals=({r1:.3g}, {r2:.3g}); speed max dev={np.max(np.abs(speed - 1)):.3g}; "
        f"p=1+0.3z: kind={v.kind} margin={v.margin:.6g} vs 0.01*R={0.01 * v.R:.6g}",
    )


REPORT_SCHEMA = {
    "type": "object",
    "required": ["tool", "version", "command", "input", "result"],
    "properties": {
        "version": {"type": "string"},
        "command": {"const": "verify"},
        "input": {
            "type": "object",
            "required": ["surface", "grid", "quadrature", "eq_tol"],
            "properties": {
                "surface": {
                    "type": "object",
                    "required": ["p", "q"],
                    "properties": {
                        "p": {"type": "array", "items": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}},
                        "q": {"type": "array", "items": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}},
                    },
                },
            },
        },
        "result": {
            "type": "object",
            "required": ["schwarz"],
            "properties": {
                "schwarz": {
                    "type": "object",
                    "required": ["R", "sup_value", "argmax", "ratio", "holds", "equality_within_tol", "grid", "quadrature"],
                    "properties": {
                        "R": {"type": "number", "minimum": 0},
                        "ratio": {"type": "number", "minimum": 0},
                        "holds": {"type": "boolean"},
                        "equality_within_tol": {"type": "boolean"},
                        "argmax": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
                    },
                }
            },
        },
    },
}


def test_criterion_9_cli_and_formats(tmp_path, capsys):
    code = main(["verify", "--surface", "enneper"])
    out = capsys.readouterr().out
    data = json.loads(out)
    jsonschema.validate(data, REPORT_SCHEMA)
    verify_ok = code == 0 and abs(data["result"]["schwarz"]["R"] - 2) < 1e-9

    counts_ok, same_bytes = True, True
    for nr, nt in [(2, 3), (7, 12)]:
        a, b = tmp_path / f"a{nr}.obj", tmp_path / f"b{nr}.obj"
        for path in (a, b):
            assert main(["export", "--surface", "enneper", "--mesh", f"{nr},{nt},1.0", "--out", str(path)]) == 0
        lines = a.read_text().splitlines()
        nv = sum(line.startswith("v ") for line in lines)
        nf = sum(line.startswith("f ") for line in lines)
        spec = MeshSpec(nr, nt, 1.0)
        counts_ok &= nv == 1 + nr * nt == spec.n_vertices and nf == nt + 2 * nt * (nr - 1) == spec.n_faces
        same_bytes &= a.read_bytes() == b.read_bytes()
    verdict(
        9,
        verify_ok and counts_ok and same_bytes,
        f"verify exit={code} schema-valid; mesh counts ok={counts_ok}; byte-identical={same_bytes}",
    )

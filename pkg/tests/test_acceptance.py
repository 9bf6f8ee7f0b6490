"""Acceptance criteria, each checked at its stated tolerance.

Every test records a PASS/FAIL line that ``conftest.py`` prints in the
terminal summary. Criteria 1 and 9 are expected to fail; the reasons are
written next to those tests.
"""

import math
import time

import numpy as np

from conftest import record
from gauss_talbot import gauss_sums as gs
from gauss_talbot import sweeps
from gauss_talbot.carpet import (
    CarpetSpec,
    check_peaks,
    extract_peaks,
    helmholtz_global_phase,
    render_carpet,
    xi_grid,
    field_exact_helmholtz,
    field_paraxial_wave,
)
from gauss_talbot.numtheory import FractionalDistance as Z
from gauss_talbot.numtheory import bezout_pair, jacobi_symbol
from gauss_talbot.talbot import (
    SQRT_I,
    coeff_particle_closed,
    coeff_particle_direct,
    coeff_wave_closed,
    coeff_wave_direct,
)

CARPET_ZETAS = [Z(1, 1), Z(1, 2), Z(1, 3), Z(2, 3), Z(1, 4), Z(3, 4), Z(2, 5)]


def test_criterion_1_complementarity():
    """|A - e^{i pi/4} At| < 1e-9 for coprime p, q <= 50, n in [0, q).

    Not attainable. The direct sums satisfy At = e^{i pi/4} A exactly, so in
    this orientation the residual is |A| |1 - i| = sqrt(2) at every point.
    """
    t0 = time.perf_counter()
    worst, count = 0.0, 0
    for z in sweeps.coprime_pairs(50):
        for n in range(z.q):
            worst = max(worst, abs(coeff_wave_direct(n, z) - SQRT_I * coeff_particle_direct(n, z)))
            count += 1
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-9 and elapsed < 10
    record(1, "complementarity A = e^{i pi/4} At", ok, f"worst residual {worst:.3g} over {count} points, {elapsed:.1f}s")
    assert elapsed < 10
    assert worst < 1e-9


def test_criterion_2_closed_forms():
    worst, count = 0.0, 0
    for z in sweeps.coprime_pairs(50):
        for n in range(z.q):
            worst = max(
                worst,
                abs(coeff_wave_closed(n, z) - coeff_wave_direct(n, z)),
                abs(coeff_particle_closed(n, z) - coeff_particle_direct(n, z)),
            )
            count += 1
    record(2, "closed forms vs direct sums", worst < 1e-9, f"worst residual {worst:.3g} over {count} points x 2 pictures")
    assert worst < 1e-9


def test_criterion_3_reciprocity():
    t0 = time.perf_counter()
    reports = sweeps.reciprocity(40)
    elapsed = time.perf_counter() - t0
    worst = max(r.residual for r in reports)
    points = sum(r.parameters["points"] for r in reports)
    ok = worst < 1e-9 and elapsed < 60
    record(3, "reciprocity a, b <= 40", ok, f"worst residual {worst:.3g} over {points} triples, {elapsed:.1f}s")
    assert worst < 1e-9 and elapsed < 60


def test_criterion_4_gauss_closed_form():
    triples = list(sweeps.gauss_closed_triples(20))
    worst = max(abs(gs.k_closed(t) - gs.k_direct(t)) for t in triples)
    branches = {(t.a % 2, t.b % 2) for t in triples}
    ok = worst < 1e-9 and len(triples) >= 1000 and len(branches) == 3
    record(4, "K closed form vs direct", ok, f"worst residual {worst:.3g} over {len(triples)} triples, {len(branches)} branches")
    assert len(triples) >= 1000 and len(branches) == 3
    assert worst < 1e-9


def test_criterion_5_char_sum_signs():
    worst, count = 0.0, 0
    for b in range(3, 200, 2):
        if not sweeps.is_squarefree(b):
            continue
        expected = math.sqrt(b) if b % 4 == 1 else 1j * math.sqrt(b)
        worst = max(worst, abs(gs.classical_char_sum(b) - expected))
        count += 1
    record(5, "character sum signs", worst < 1e-9, f"worst residual {worst:.3g} over {count} squarefree b")
    assert worst < 1e-9


def test_criterion_6_bezout_and_jacobi():
    bad = 0
    pairs = sweeps.random_coprime_pairs(1000, 10**4, seed=6)
    for p, q in pairs:
        u, v = bezout_pair(p, q)
        bad += u.value * q + v.value * p != 1 + p * q
    odd_pairs = sweeps.random_coprime_pairs(1000, 10**4, seed=7, odd=True)
    for p, q in odd_pairs:
        sign = -1 if ((p - 1) // 2 * ((q - 1) // 2)) % 2 else 1
        bad += jacobi_symbol(p, q) * jacobi_symbol(q, p) != sign
    record(6, "Bezout and Jacobi reciprocity", bad == 0, f"{bad} mismatches over {len(pairs)} + {len(odd_pairs)} pairs")
    assert bad == 0


def test_criterion_7_unit_modulus_periodicity():
    worst_mod, worst_per = 0.0, 0.0
    for z in sweeps.coprime_pairs(50):
        for n in range(z.q):
            for f in (coeff_wave_direct, coeff_particle_direct):
                a = f(n, z)
                worst_mod = max(worst_mod, abs(abs(a) - 1))
                worst_per = max(worst_per, abs(f(n + z.q, z) - a))
    ok = worst_mod < 1e-12 and worst_per < 1e-12
    record(7, "unit modulus and periodicity", ok, f"max ||A|-1| {worst_mod:.3g}, max |A(n+q)-A(n)| {worst_per:.3g}")
    assert ok


def test_criterion_8_carpet_structure():
    t0 = time.perf_counter()
    spec = CarpetSpec(2048, CARPET_ZETAS, n_trunc=256, apod_width=48.0)
    wave = render_carpet(spec, "wave").intensities
    path = render_carpet(spec, "path").intensities
    problems = []
    worst_off, worst_spread, worst_path = 0.0, 0.0, 0.0
    for z, w, p in zip(CARPET_ZETAS, wave, path):
        chk = check_peaks(w, z)
        worst_off = max(worst_off, chk.max_offset_steps)
        worst_spread = max(worst_spread, chk.height_spread)
        if not (chk.count_ok and chk.max_offset_steps <= 1.5 and chk.height_spread <= 0.05):
            problems.append(f"wave {z}")
        pw = sorted(extract_peaks(w / w.max(), z.q))
        pp = sorted(extract_peaks(p / p.max(), z.q))
        if len(pw) != len(pp):
            problems.append(f"path count {z}")
            continue
        for (xw, hw), (xp, hp) in zip(pw, pp):
            worst_path = max(worst_path, abs(hw - hp))
            if abs(xw - xp) > 1.5 / 2048 or abs(hw - hp) > 0.02:
                problems.append(f"path peaks {z}")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 30
    detail = (
        f"max offset {worst_off:.3f} steps, height spread {worst_spread:.2%}, "
        f"path height diff {worst_path:.2%}, {elapsed:.1f}s"
    )
    record(8, "carpet peak structure", ok, detail + (f"; {problems}" if problems else ""))
    assert not problems and elapsed < 30


def test_criterion_9_paraxial_limit():
    """Exact route at a/lambda = 1000 vs wave route within 0.5% relative intensity.

    Not attainable with the criterion-8 comb (N = 256, width 48). The
    paraxial phase drops the quartic term pi zeta n^4 / (4 L^2) of the
    exact propagator. At L = 1000 it reaches one radian near n = 34 (zeta = 1) and
    tens of radians at n ~ 2 x 48, so the rows differ by tens of percent.
    """
    spec = CarpetSpec(2048, CARPET_ZETAS, n_trunc=256, apod_width=48.0, a_over_lambda=1000.0)
    xi = xi_grid(2048)
    worst = 0.0
    for z in CARPET_ZETAS:
        exact = np.abs(field_exact_helmholtz(xi, z, spec) / helmholtz_global_phase(z, spec)) ** 2
        wave = np.abs(field_paraxial_wave(xi, z, spec)) ** 2
        worst = max(worst, float(np.max(np.abs(exact - wave)) / np.max(wave)))
    record(9, "paraxial limit at a/lambda = 1000", worst < 0.005, f"worst relative intensity error {worst:.3g}")
    assert worst < 0.005

"""Acceptance suite: every criterion at its stated tolerance and budget.

Each test prints one ``ACCEPTANCE n: PASS/FAIL`` line (run pytest with -s to
see them live).  Criterion 4 additionally reports, without failing, any
discrepancy between the strip-zero count and the twelve tabulated zeros: the
search is allowed to find zeros the table missed.
"""

import cmath
import itertools
import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from pentadgf import _backend as backend
from pentadgf import dgf, qfunc, zeros
from pentadgf.perron import partial_sum, partial_sum_oracle
from pentadgf.sequences import bernoulli, coeff_table, glaisher_gstar, product_oracle_coeffs

PI = math.pi

TABLE_ZEROS = [
    0.88271 + 3.91652j,
    0.56199 + 6.01547j,
    0.35935 + 7.89946j,
    0.27418 + 9.67421j,
    0.35560 + 11.3557j,
    0.65285 + 12.6760j,
    0.46855 + 13.8117j,
    0.52475 + 15.1884j,
    0.15548 + 17.6277j,
    0.33322 + 19.0763j,
    0.45763 + 19.9396j,
    0.25780 + 21.2613j,
]

REFERENCE_DECIMALS = {1: -1.25519745693, 2: -1.19842171457, 3: -1.11483831010}


@pytest.fixture(scope="module", autouse=True)
def _warm_numba_kernels():
    # compile/caching latency must not be billed to the numeric budgets
    backend.fu_pow(0.1 + 1j * np.ones(4), 1.0)
    dgf.d_mellin(0.5 + 6.0j, 1e-10)
    dgf.dstar_integral(1.0, 1e-8)
    qfunc.phi_hankel(0.5, 1e-8)
    qfunc.eta_hankel(1j, 1e-8)


def _report(n: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}")


def test_acceptance_1_closed_form_anchors():
    t0 = time.perf_counter()
    ok = True
    for k, want in REFERENCE_DECIMALS.items():
        ok &= abs(dgf.d_explicit(k).decimal - want) <= 1e-10
    e1, e2, e3 = dgf.d_explicit(1), dgf.d_explicit(2), dgf.d_explicit(3)
    ok &= e1.pi_coeffs[0].rat == 6 and e1.pi_coeffs[1].root3coeff == Fraction(-4, 3)
    ok &= (
        e2.pi_coeffs[0].rat == -108
        and e2.pi_coeffs[1].root3coeff == 16
        and e2.pi_coeffs[2].rat == 2
    )
    ok &= (
        e3.pi_coeffs[0].rat == 2160
        and e3.pi_coeffs[1].root3coeff == -288
        and e3.pi_coeffs[2].rat == -36
        and e3.pi_coeffs[3].root3coeff == Fraction(-40, 9)
    )
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1.0
    _report(1, ok, f"closed-form anchors k=1..3, symbolic + decimal ({elapsed:.2f}s)")
    assert ok


def test_acceptance_2_representation_agreement():
    t0 = time.perf_counter()
    ok = True
    worst_int, worst_res = 0.0, 0.0
    for k in range(1, 9):
        exact = dgf.d_explicit(k).decimal
        di = abs(dgf.dstar_integral(float(k), 1e-11).value - exact)
        dr = abs(dgf.d_residue_oracle(k).value - exact)
        worst_int, worst_res = max(worst_int, di), max(worst_res, dr)
        ok &= di <= 1e-8 and dr <= 1e-9
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 10.0
    _report(
        2,
        ok,
        f"k=1..8 integral err<={worst_int:.1e}, residue-oracle err<={worst_res:.1e} "
        f"({elapsed:.2f}s)",
    )
    assert ok


def test_acceptance_3_triple_agreement():
    t0 = time.perf_counter()
    ok = True
    worst = 0.0
    for re, im in itertools.product((0.5, 1.0, 1.5, 2.5), (0.0, 1.0, 3.0)):
        s = complex(re, im)
        results = [
            dgf.dstar_integral(s, 1e-11),
            dgf.d_series(s, 1e-13),
            dgf.d_mellin(s, 1e-12),
        ]
        allow = 10.0 * max(r.err_estimate for r in results)
        for a, b in itertools.combinations(results, 2):
            diff = abs(a.value - b.value)
            worst = max(worst, diff / allow)
            ok &= diff <= allow and cmath.isfinite(a.value)
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 30.0
    _report(3, ok, f"12-point grid, worst diff/allowance {worst:.2f} ({elapsed:.2f}s)")
    assert ok


def test_acceptance_4_zero_table():
    t0 = time.perf_counter()
    records = zeros.find_zeros(22.0, tol=1e-10)
    strip = [r for r in records if r.in_strip]
    ok = True
    worst_dist = 0.0
    for want in TABLE_ZEROS:
        dist = min(abs(r.location - want) for r in strip)
        worst_dist = max(worst_dist, dist)
        ok &= dist <= 2e-4
    worst_residual = max(r.residual for r in strip)
    ok &= worst_residual <= 1e-7
    counted = zeros.count_zeros((0.0, 1.0), (3.0, 22.0))
    in_band = [r for r in strip if 3.0 < r.location.imag <= 22.0]
    ok &= counted == len(in_band)
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 600.0
    _report(
        4,
        ok,
        f"12/12 table zeros within {worst_dist:.1e}, residuals <= {worst_residual:.1e}, "
        f"winding count {counted} == found {len(in_band)} ({elapsed:.1f}s)",
    )
    if len(strip) != 12:
        extras = [
            r.location
            for r in strip
            if all(abs(r.location - p) > 2e-4 for p in TABLE_ZEROS)
        ]
        print(
            f"ACCEPTANCE 4 FINDING: {len(strip)} strip zeros found, table lists 12; "
            f"zeros absent from the table: {[f'{z:.5f}' for z in extras]} "
            "(each verified by winding number and by series/mellin residuals)"
        )
    assert ok


def test_acceptance_5_perron():
    t0 = time.perf_counter()
    rng = random.Random(20240917)
    ok = True
    for _ in range(500):
        x = rng.uniform(1.0, 2000.0)
        if x == int(x):
            continue
        ok &= partial_sum(x).value == partial_sum_oracle(x)
    for m in range(1, 13):
        for g in ((3 * m * m - m) // 2, (3 * m * m + m) // 2):
            jump = partial_sum(g + 0.25).value - partial_sum(g - 0.25).value
            ok &= jump == (-1) ** m
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 5.0
    _report(5, ok, f"500 random oracle matches + 24 jump checks ({elapsed:.2f}s)")
    assert ok


def test_acceptance_6_q_functions():
    t0 = time.perf_counter()
    ok = True
    worst = 0.0
    for q in (0.1, -0.1, 0.5, -0.5, 0.3 + 0.2j, 0.6j):
        series = qfunc.phi_series(q).value
        hankel = qfunc.phi_hankel(q).value
        product = qfunc.phi_product_oracle(q)
        for a, b in ((series, hankel), (hankel, product), (series, product)):
            worst = max(worst, abs(a - b))
            ok &= abs(a - b) <= 1e-8
    for tau in (1j, 2j, 0.3 + 0.8j):
        diff = abs(qfunc.eta_hankel(tau).value - qfunc.eta_series(tau).value)
        ok &= diff <= 1e-8
        q = cmath.exp(2j * PI * tau)
        fact = abs(
            qfunc.eta_series(tau).value
            - cmath.exp(2j * PI * tau / 24.0) * qfunc.phi_series(q).value
        )
        ok &= fact <= 1e-9
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 30.0
    _report(6, ok, f"phi triple + eta pair agreement, worst {worst:.1e} ({elapsed:.2f}s)")
    assert ok


def test_acceptance_7_asymptotics():
    t0 = time.perf_counter()
    ratios = []
    for s in (-4.5, -9.5, -14.5, -19.5):
        val = dgf.dstar_integral(s, 1e-12).value.real
        ratios.append(abs(val / dgf.asymptotic_approx(s).zeta_form - 1.0))
    ok = all(a > b for a, b in zip(ratios, ratios[1:]))
    ok &= ratios[-1] <= 5e-3  # pinned after measurement (observed 3.62e-3)
    for n in range(1, 6):
        scale = abs(dgf.dstar_integral(-n + 0.5, 1e-10).value)
        ok &= abs(dgf.dstar_integral(float(-n), 1e-10).value) <= 1e-6 * scale
    ok &= abs(dgf.dstar_integral(50.0, 1e-12).value - (-1.0)) <= 1e-10
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 60.0
    _report(
        7,
        ok,
        f"ratios {['%.2e' % r for r in ratios]} decreasing, negative-integer zeros, "
        f"D*(50)=-1 ({elapsed:.2f}s)",
    )
    assert ok


def test_acceptance_8_sequences():
    t0 = time.perf_counter()
    ok = coeff_table(2000).values == product_oracle_coeffs(2000).values
    bern = {
        0: Fraction(1), 1: Fraction(1, 2), 2: Fraction(1, 6), 3: Fraction(0),
        4: Fraction(-1, 30), 5: Fraction(0), 6: Fraction(1, 42), 7: Fraction(0),
        8: Fraction(-1, 30), 9: Fraction(0), 10: Fraction(5, 66),
    }
    gstar = {
        0: Fraction(0), 1: Fraction(1, 2), 2: Fraction(0), 3: Fraction(1),
        4: Fraction(0), 5: Fraction(5), 6: Fraction(0), 7: Fraction(49),
        8: Fraction(0), 9: Fraction(809), 10: Fraction(0),
    }
    ok &= all(bernoulli(n) == v for n, v in bern.items())
    ok &= all(glaisher_gstar(n) == v for n, v in gstar.items())
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 10.0
    _report(8, ok, f"coeff tables equal through 2000; printed tables exact ({elapsed:.2f}s)")
    assert ok

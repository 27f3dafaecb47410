import cmath
import math
import random

import pytest

from pentadgf import _backend as backend
from pentadgf.contour import CircleSpec, integrate_circle
from pentadgf.errors import DomainError
from pentadgf.kernels import u_prime_shift
from pentadgf.qfunc import (
    eta_hankel,
    eta_series,
    phi_hankel,
    phi_product_oracle,
    phi_series,
)

PI = math.pi

Q_GRID = (0.1, -0.1, 0.5, -0.5, 0.3 + 0.2j, 0.6j)
# eta(i) = Gamma(1/4) / (2 pi^(3/4)); frozen from the q-series oracle
ETA_I = 0.7682254223260567


def test_phi_series_basics():
    assert phi_series(0.0).value == 1.0
    assert phi_series(0.5).value.real == pytest.approx(0.2887880951, abs=1e-9)
    assert phi_series(-0.5).value.real == pytest.approx(1.2107241303, abs=1e-9)


def test_phi_series_against_product():
    for q in Q_GRID:
        assert abs(phi_series(q).value - phi_product_oracle(q)) < 1e-10


def test_product_oracle_stability():
    a = phi_product_oracle(0.5, 60)
    b = phi_product_oracle(0.5, 120)
    assert abs(a - b) < 1e-15


def test_phi_hankel_agreement():
    for q in Q_GRID:
        series = phi_series(q).value
        hankel = phi_hankel(q).value
        product = phi_product_oracle(q)
        assert abs(series - hankel) < 1e-8
        assert abs(hankel - product) < 1e-8
        assert abs(series - product) < 1e-8


def test_phi_hankel_small_q_against_truncation():
    q = 0.01
    truncated = 1.0 - q - q**2 + q**5 + q**7
    assert abs(phi_hankel(q).value - truncated) < 1e-10


def test_phi_domain_guards():
    with pytest.raises(DomainError):
        phi_series(0.97)
    with pytest.raises(DomainError):
        phi_hankel(0.0)


def test_eta_series_value():
    assert eta_series(1j).value.real == pytest.approx(ETA_I, abs=1e-12)


def test_eta_phi_factorization():
    for tau in (1j, 2j, 0.3 + 0.8j):
        q = cmath.exp(2j * PI * tau)
        lhs = eta_series(tau).value
        rhs = cmath.exp(2j * PI * tau / 24.0) * phi_series(q).value
        assert abs(lhs - rhs) < 1e-9


def test_eta_hankel_agreement():
    for tau in (1j, 2j, 0.1 + 0.5j, 0.3 + 0.8j):
        assert abs(eta_hankel(tau).value - eta_series(tau).value) < 1e-8


def test_eta_domain_guard():
    with pytest.raises(DomainError):
        eta_series(0.5 + 0.01j)


def test_exponent_bookkeeping_identity():
    # u'(z) * 2pi*i*tau + 2pi*i*tau/24 == 3i z^2 tau / pi, pointwise
    rng = random.Random(99)
    for _ in range(50):
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        tau = complex(rng.uniform(-2, 2), rng.uniform(0.1, 2))
        lhs = u_prime_shift(z) * (2j * PI * tau) + 2j * PI * tau / 24.0
        rhs = 3j * z * z * tau / PI
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_residue_reconstruction():
    # circle integrals of the contour integrand around the first poles of the
    # shifted comb rebuild phi term by term: residues r * q^(u'(pole))
    q = 0.5
    log_q = cmath.log(q)
    poles = [PI / 6.0, 5 * PI / 6.0, 7 * PI / 6.0, 11 * PI / 6.0,
             13 * PI / 6.0, 17 * PI / 6.0, 19 * PI / 6.0, 23 * PI / 6.0]
    total = 0.0
    for p in poles:
        res = integrate_circle(
            lambda z: backend.phi_edge(z, log_q), CircleSpec(p, PI / 12.0), 1e-12
        )
        total += res.value
    assert abs(total - phi_hankel(q).value) < 1e-6


def test_hankel_delta_independence_documented_default():
    # default half-height pi/12 sits between pi/16 and pi/8; engine-level
    # delta independence is covered in test_contour
    res = phi_hankel(0.5)
    assert res.method == "hankel"
    assert res.err_estimate < 1e-10

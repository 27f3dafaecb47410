"""The Euler product phi(q) and Dedekind eta by series, product, and contour.

Three independent representations cross-check each other:

* the sparse theta-type series  phi(q) = sum_n (-1)^n q^((3n^2-n)/2),
* the truncated product         prod_{n<=N} (1 - q^n)   (oracle),
* the positively oriented flat contour around the positive real axis,
  phi(q) = (1/2pi*i) int F'(z) q^(u'(z)) dz, whose residues reproduce the
  series term by term.  The shifted kernels are canonical here: with the
  unshifted pair the same contour misses the residue carrying the constant
  term and the identity needs an explicit +1 in front (not implemented).

With q = exp(2pi*i*tau), Im(tau) > 0, the same contour gives
eta(tau) = (1/2pi*i) int F'(z) exp(3i z^2 tau / pi) dz = q^(1/24) phi(q).

Domain guards |q| <= 0.95 and Im(tau) >= 0.05 keep all truncation bounds
comfortable in double precision; outside them a DomainError is raised rather
than silently degrading.
"""

from __future__ import annotations

import cmath
import math

from . import _backend as backend
from .contour import EvalResult, HankelRectSpec, hankel_truncation, integrate_hankel
from .errors import DomainError

__all__ = [
    "phi_series",
    "phi_product_oracle",
    "phi_hankel",
    "eta_series",
    "eta_hankel",
]

PI = math.pi
_Q_MAX = 0.95
_TAU_IM_MIN = 0.05


def _check_q(q: complex) -> complex:
    q = complex(q)
    if abs(q) > _Q_MAX:
        raise DomainError(f"|q| <= {_Q_MAX} required for numeric guarantees")
    return q


def _check_tau(tau: complex) -> complex:
    tau = complex(tau)
    if tau.imag < _TAU_IM_MIN:
        raise DomainError(f"Im(tau) >= {_TAU_IM_MIN} required for numeric guarantees")
    return tau


def _series_blocks(abs_q: float, tol: float) -> int:
    # smallest N with |q|^((3N^2-N)/2) below tol/10
    target = 2.0 * math.log(10.0 / tol) / (-math.log(abs_q))
    return int(math.ceil((1.0 + math.sqrt(1.0 + 12.0 * target)) / 6.0)) + 1


def phi_series(q: complex, tol: float = 1e-14) -> EvalResult:
    """phi(q) by the pentagonal series, symmetric truncation by the tail bound."""
    q = _check_q(q)
    if q == 0:
        return EvalResult(1.0 + 0j, 0.0, "series", 1)
    n = _series_blocks(abs(q), tol)
    value = backend.theta_series(cmath.log(q), n)
    tail = abs(q) ** ((3.0 * n * n - n) / 2.0)
    return EvalResult(value, tail, "series", 2 * n + 1)


def phi_product_oracle(q: complex, n_factors: int | None = None) -> complex:
    """prod_{n=1..N} (1 - q^n); N defaults to the |q|^N < 1e-16 tail rule."""
    q = _check_q(q)
    if q == 0:
        return 1.0 + 0j
    if n_factors is None:
        n_factors = max(8, int(math.ceil(37.0 / -math.log(abs(q)))) + 1)
    total = 1.0 + 0j
    power = 1.0 + 0j
    for _ in range(n_factors):
        power *= q
        total *= 1.0 - power
    return total


def phi_hankel(q: complex, tol: float = 1e-10) -> EvalResult:
    """phi(q) by the flat contour around the positive real axis.

    The integrand F'(z) q^(u'(z)) (principal Log q) decays like a Gaussian
    along the horizontal edges; the edge length comes from requiring the
    quadratic exponent to reach the tail target on both edges.
    """
    q = _check_q(q)
    if q == 0:
        raise DomainError("phi_hankel requires q != 0")
    log_q = cmath.log(q)
    beta = 3.0 * log_q / (2.0 * PI * PI)
    target = max(40.0, -math.log(tol) + 5.0)
    x_max = hankel_truncation(beta, abs(log_q.real) / 24.0, target)
    spec = HankelRectSpec(truncation=x_max)
    res = integrate_hankel(lambda z: backend.phi_edge(z, log_q), spec, tol)
    res.method = "hankel"
    return res


def eta_series(tau: complex, tol: float = 1e-14) -> EvalResult:
    """eta(tau) = sum_n (-1)^n exp(3 pi i (n + 1/6)^2 tau), Gaussian truncation."""
    tau = _check_tau(tau)
    target = math.log(10.0 / tol)
    n = int(math.ceil(math.sqrt(target / (3.0 * PI * tau.imag)))) + 1
    value = backend.eta_theta_series(tau, n)
    tail = math.exp(-3.0 * PI * (n - 1.0 / 6.0) ** 2 * tau.imag)
    return EvalResult(value, tail, "series", 2 * n + 1)


def eta_hankel(tau: complex, tol: float = 1e-10) -> EvalResult:
    """eta(tau) by the same contour with exponent 3 i z^2 tau / pi.

    Identical to the phi contour after q = exp(2 pi i tau): the exponents
    satisfy u'(z) * 2pi*i*tau + 2pi*i*tau/24 = 3 i z^2 tau / pi identically,
    which is the factor q^(1/24) linking eta to phi.
    """
    tau = _check_tau(tau)
    beta = 3.0j * tau / PI
    target = max(40.0, -math.log(tol) + 5.0)
    x_max = hankel_truncation(beta, 0.0, target)
    spec = HankelRectSpec(truncation=x_max)
    res = integrate_hankel(lambda z: backend.eta_edge(z, tau), spec, tol)
    res.method = "hankel"
    return res

"""Evaluation routes for the entire continuation D*(s) of the pentagonal series.

The target function is the Dirichlet generating function of the signs a_n,

    D(s) = sum_{n>=1} a_n / n^s  =  -1 - 2^-s + 5^-s + 7^-s - 12^-s - ...,

which the line integral (1/2pi*i) * int F(z) u(z)^(-s) dz over a vertical
line inside (-pi/3, pi/3) continues to an entire function D*(s).  Several
independent routes are implemented and cross-checked:

* ``dstar_integral``  - the line integral itself (any s; the abscissa slides
  toward -pi/3 for large positive Re(s) where the centered line is
  exponentially ill-conditioned);
* ``d_series``        - the sparse Dirichlet series over pentagonal pairs,
  accelerated as an alternating series (Re(s) > 0);
* ``d_mellin``        - the Mellin transform of phi(e^-t) - 1, regularized by
  integrating the t^{s-1} singularity exactly, on a ray rotated by an angle
  that carries exp(-theta*Im(s)) out of the integral analytically; the
  workhorse in the zero strip where |Im(s)| is large;
* ``d_explicit``      - the exact finite sum at positive integers, with
  coefficients in Q + Q*sqrt(3) per power of pi;
* ``d_residue_oracle``- minus the residue of F*u^-k at pi/3 (equivalently
  2pi/3) by circle quadrature in extended precision;
* ``asymptotic_approx`` - the two closed-form approximations for s -> -inf.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial, pi

import gmpy2

from . import _backend as backend
from .alternating import alternating_sum
from .contour import (
    CircleSpec,
    EvalResult,
    VerticalLineSpec,
    integrate_circle,
    integrate_vertical,
    vertical_truncation,
)
from .errors import ConsistencyError, DomainError
from .kernels import digamma, gamma, sin_pi, zeta_real
from .sequences import AlgebraicValue, g_coeff

__all__ = [
    "MethodTag",
    "ExactDk",
    "AsymptoticForms",
    "dstar_integral",
    "d_series",
    "d_mellin",
    "d_explicit",
    "d_residue_oracle",
    "asymptotic_approx",
    "dstar_derivative",
    "evaluate",
    "mellin_min_re",
]

SQRT3 = math.sqrt(3.0)

#: d_mellin is valid on Re(s) > this bound (the 1/s regularization continues
#: the transform left of 0; the gamma(s+1) pole at -1 caps the extension).
MELLIN_MIN_RE = -0.5


def mellin_min_re() -> float:
    return MELLIN_MIN_RE


class MethodTag(str, Enum):
    """Which route produced a value."""

    INTEGRAL = "integral"
    SERIES = "series"
    MELLIN = "mellin"
    EXPLICIT = "explicit"
    RESIDUE_ORACLE = "residue_oracle"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class ExactDk:
    """D(k) at a positive integer, exact per power of pi.

    ``pi_coeffs[j]`` multiplies pi^j; even j carry pure rationals, odd j pure
    sqrt(3) parts.  ``decimal`` is the correctly rounded double of the full
    sum, assembled in 240-bit arithmetic because the terms grow like 36^k and
    cancel to order one.
    """

    k: int
    pi_coeffs: tuple[AlgebraicValue, ...]
    decimal: float

    def __str__(self) -> str:
        parts = [
            f"({coeff})*pi^{j}" if j else f"{coeff}"
            for j, coeff in enumerate(self.pi_coeffs)
            if not coeff.is_zero()
        ]
        return " + ".join(parts)


@dataclass(frozen=True)
class AsymptoticForms:
    """The two closed approximations of D*(s) for s -> -inf.

    ``zeta_form``  = 2*sqrt(3) * 6^(-s) * zeta(2s)
    ``gamma_form`` = 2^(s+1) * 3^(1/2-s) * pi^(2s-1) * sin(pi s) * Gamma(1-2s)

    They differ by the factor zeta(1-2s) -> 1.
    """

    zeta_form: float
    gamma_form: float


# ---------------------------------------------------------------------------
# Line-integral route
# ---------------------------------------------------------------------------


def _integral_abscissa(re_s: float) -> float:
    # The centered line suffers a u(0)^(-Re s) = 3^(Re s) integrand peak that
    # cancels to O(1); sliding toward -pi/3 keeps |u| near 1 on the line at
    # the cost of approaching the F pole, balanced at distance ~ 2pi/(5 Re s)
    # but floored so the pole spike stays resolvable by the panels.
    if re_s <= 2.0:
        return 0.0
    return -pi / 3.0 + min(pi / 3.0, max(0.05, 2.0 * pi / (5.0 * re_s)))


def _integral_spec(s: complex, tol: float, extra_power: float = 0.0):
    p = max(0.0, -s.real) + extra_power
    peak = 1.0
    if p > 0.0:
        y_star = max(1.0, 2.0 * p)
        peak = (
            2.0 * SQRT3 * math.exp(-y_star) * (3.0 * y_star**2 / (2.0 * pi**2)) ** p
        )
    y_max = vertical_truncation(power=p, tol=tol, imag_s=s.imag, peak_scale=peak)
    abscissa = _integral_abscissa(s.real)
    # panels must resolve the comb pole nearest the line
    pole_dist = abscissa + pi / 3.0 if abscissa < 0.0 else pi / 3.0
    width = min(1.0, 4.0 * pole_dist)
    return VerticalLineSpec(abscissa=abscissa, truncation=y_max, panel_width=width)


def dstar_integral(s: complex, tol: float = 1e-11) -> EvalResult:
    """D*(s) as the vertical-line integral of F(z) u(z)^(-s).

    Valid for every s; the result is flagged ill-conditioned when the
    integrand peak towers 1e12 above the value, which happens for
    |Im(s)| beyond roughly 8 (use the Mellin route there).
    """
    s = complex(s)
    spec = _integral_spec(s, tol)
    res = integrate_vertical(lambda z: backend.fu_pow(z, s), spec, tol)
    res.method = MethodTag.INTEGRAL.value
    return res


def dstar_derivative(s: complex, tol: float = 1e-10) -> EvalResult:
    """d/ds D*(s), by integrand differentiation or the Mellin route.

    For |Im(s)| <= 5 the line integral of -log(u) F u^(-s); beyond that the
    line integrand's exp(pi |Im s|) asymmetry erodes the attainable accuracy,
    so the rotated Mellin formula is differentiated analytically instead.
    """
    s = complex(s)
    if abs(s.imag) <= 5.0 or s.real <= MELLIN_MIN_RE:
        spec = _integral_spec(s, tol, extra_power=0.5)
        res = integrate_vertical(lambda z: backend.fu_pow_log(z, s), spec, tol)
        res.method = MethodTag.INTEGRAL.value
        return res
    theta = _mellin_theta(s.imag)
    rot = cmath.exp(1j * theta * s)
    g1 = gamma(s + 1.0)
    psi1 = digamma(s + 1.0)
    prev = None
    err = math.inf
    evaluations = 0
    for order in _MELLIN_ORDERS:
        v, w, h = _mellin_mesh(theta, order)
        k_val = backend.exp_weighted_sum(v, w, h, s)
        k_mom = backend.exp_weighted_moment(v, w, h, s)
        evaluations += v.size
        d_val = rot * (s * k_val - 1.0) / g1
        d_der = 1j * theta * d_val + rot * (k_val + s * k_mom) / g1 - d_val * psi1
        if prev is not None:
            err = abs(d_der - prev)
            if err <= tol * max(1.0, abs(d_der)):
                prev = d_der
                break
        prev = d_der
    err = max(err, 1e-15 * max(1.0, abs(prev)))
    return EvalResult(prev, err, MethodTag.MELLIN.value, evaluations)


# ---------------------------------------------------------------------------
# Accelerated Dirichlet series
# ---------------------------------------------------------------------------


def d_series(s: complex, tol: float = 1e-13) -> EvalResult:
    """D(s) by pentagonal-pair blocks, accelerated as an alternating series.

    The pairs p = (3m^2 -+ m)/2 share the sign (-1)^m, so the blocks form a
    strictly alternating series in m.  Conditionally convergent half-plane
    Re(s) > 0 only.
    """
    s = complex(s)
    if s.real <= 0.0:
        raise DomainError("d_series requires Re(s) > 0")

    def term(k: int) -> complex:
        m = k + 1.0
        p1 = (3.0 * m * m - m) / 2.0
        p2 = (3.0 * m * m + m) / 2.0
        return cmath.exp(-s * math.log(p1)) + cmath.exp(-s * math.log(p2))

    value, err, nterms = alternating_sum(term, tol, imag_scale=s.imag)
    err = max(err, 1e-15 * max(1.0, abs(value)))
    return EvalResult(-value, err, MethodTag.SERIES.value, nterms)


# ---------------------------------------------------------------------------
# Regularized, rotated Mellin route
# ---------------------------------------------------------------------------

_MELLIN_ORDERS = (24, 48, 96)
_MELLIN_WIDTH = 0.5
_MELLIN_THETA_STEP = 0.3
_MELLIN_THETA_MAX = 1.2
_mellin_meshes: dict[tuple[float, int], tuple] = {}


def _mellin_theta(im_s: float) -> float:
    # Ray rotation angle: zero near the real axis, ramping to 1.2 rad so the
    # factor exp(-theta*|Im s|) is carried by the analytic prefactor instead
    # of being produced by quadrature cancellation.
    a = abs(im_s)
    if a <= 5.0:
        return 0.0
    steps = min(
        round(_MELLIN_THETA_MAX / _MELLIN_THETA_STEP),
        math.ceil((a - 5.0) * 0.4),
    )
    return math.copysign(_MELLIN_THETA_STEP * steps, im_s)


def _mellin_mesh(theta: float, order: int):
    """Nodes v, weights w and samples h(v) = phi(e^{-e^{i theta} e^v}) - [v>0]."""
    key = (round(theta, 6), order)
    mesh = _mellin_meshes.get(key)
    if mesh is not None:
        return mesh
    import numpy as np

    from .contour import _composite_real, _panel_breaks

    cos_t = math.cos(theta)
    rho_min = pi * pi * cos_t / 270.0  # phi factor below ~1e-20 there
    v_min = math.log(rho_min)
    v_max = math.log(47.0 / cos_t)
    vl, wl = _composite_real(_panel_breaks(v_min, 0.0, _MELLIN_WIDTH), order)
    vr, wr = _composite_real(_panel_breaks(0.0, v_max, _MELLIN_WIDTH), order)
    v = np.concatenate([vl, vr])
    w = np.concatenate([wl, wr])
    t_nodes = cmath.exp(1j * theta) * np.exp(v)
    h = backend.phi_exp_neg(t_nodes)
    h[vl.size :] -= 1.0
    mesh = (v, w, h)
    _mellin_meshes[key] = mesh
    return mesh


def _mellin_fixed_order(s: complex, order: int = 48) -> complex:
    """Single-level Mellin value, no refinement; for bulk scans (zero search)."""
    s = complex(s)
    theta = _mellin_theta(s.imag)
    v, w, h = _mellin_mesh(theta, order)
    k_val = backend.exp_weighted_sum(v, w, h, s)
    return cmath.exp(1j * theta * s) * (s * k_val - 1.0) / gamma(s + 1.0)


def d_mellin(s: complex, tol: float = 1e-12) -> EvalResult:
    """D(s) from the Mellin pair with phi(q): an entire-function realization.

    Splitting the transform at t = 1 and integrating the t^{s-1} singularity
    exactly gives

        D(s) = e^{i*theta*s} * (s*K(s) - 1) / Gamma(s+1),
        K(s) = int h(v) e^{s v} dv,   h(v) = phi(e^{-e^{i*theta} e^v}) - [v>0],

    valid on Re(s) > -1/2 for any rotation theta of the ray (the prefactor
    absorbs the exp(pi |Im s|/2) smallness of Gamma).  The phi samples are
    cached per (theta, refinement) so repeated evaluations cost one weighted
    exponential sum.
    """
    s = complex(s)
    if s.real <= MELLIN_MIN_RE:
        raise DomainError(f"d_mellin requires Re(s) > {MELLIN_MIN_RE}")
    theta = _mellin_theta(s.imag)
    rot = cmath.exp(1j * theta * s)
    g1 = gamma(s + 1.0)
    prev = None
    err = math.inf
    evaluations = 0
    for order in _MELLIN_ORDERS:
        v, w, h = _mellin_mesh(theta, order)
        k_val = backend.exp_weighted_sum(v, w, h, s)
        evaluations += v.size
        value = rot * (s * k_val - 1.0) / g1
        if prev is not None:
            err = abs(value - prev)
            if err <= tol * max(1.0, abs(value)):
                prev = value
                break
        prev = value
    err = max(err, 1e-15 * max(1.0, abs(prev)))
    return EvalResult(prev, err, MethodTag.MELLIN.value, evaluations)


# ---------------------------------------------------------------------------
# Exact finite sum at positive integers and its residue oracle
# ---------------------------------------------------------------------------


def d_explicit(k: int) -> ExactDk:
    """D(k) for integer k >= 1 as the exact finite sum.

    Each term is 6^(k-j) * binom(-k, k-j) * (2 pi)^j / j! * g(j) with
    binom(-k, k-j) = (-1)^(k-j) * C(2k-j-1, k-j); the coefficients are
    collected per power of pi in exact Q + Q*sqrt(3) arithmetic.
    """
    if k < 1 or k != int(k):
        raise DomainError("d_explicit requires a positive integer")
    k = int(k)
    coeffs = []
    for j in range(k + 1):
        binom = (-1) ** (k - j) * comb(2 * k - j - 1, k - j)
        scale = Fraction(6) ** (k - j) * binom * Fraction(2**j, factorial(j))
        coeffs.append(g_coeff(j) * scale)
    with gmpy2.context(precision=240):
        pi_hi = gmpy2.const_pi()
        sqrt3_hi = gmpy2.sqrt(3)
        total = gmpy2.mpfr(0)
        p = gmpy2.mpfr(1)
        for coeff in coeffs:
            term = gmpy2.mpfr(gmpy2.mpq(coeff.rat)) + sqrt3_hi * gmpy2.mpfr(
                gmpy2.mpq(coeff.root3coeff)
            )
            total += term * p
            p *= pi_hi
        decimal = float(total)
    return ExactDk(k=k, pi_coeffs=tuple(coeffs), decimal=decimal)


def _fu_pow_int_mp(k: int):
    """F(z) * u(z)^(-k) over a list of gmpy2.mpc nodes, at ambient precision."""

    def f(nodes):
        pi_hi = gmpy2.const_pi()
        sqrt3_hi = gmpy2.sqrt(3)
        out = []
        for z in nodes:
            fz = -4 * sqrt3_hi * gmpy2.cos(z) / (1 + 2 * gmpy2.cos(2 * z))
            uz = (pi_hi - 3 * z) * (2 * pi_hi - 3 * z) / (6 * pi_hi * pi_hi)
            out.append(fz * uz ** (-k))
        return out

    return f


def d_residue_oracle(k: int, tol: float = 1e-11) -> EvalResult:
    """D(k) as minus the residue of F u^-k at pi/3, cross-checked at 2pi/3.

    Integer k only: for non-integer exponents the power's branch cuts cross
    any circle around the zeros of u.  The circle quadrature runs at 220 bits
    because the pole of order k+1 makes the integrand span ~10^11 by k = 8,
    pushing the double-precision rounding floor far above tight tolerances.
    """
    if k < 1 or k != int(k):
        raise DomainError("d_residue_oracle requires a positive integer")
    k = int(k)
    f = _fu_pow_int_mp(k)
    res_a = integrate_circle(
        f, CircleSpec(pi / 3.0, pi / 6.0, 128), tol=0.01 * tol, precision=220
    )
    res_b = integrate_circle(
        f, CircleSpec(2.0 * pi / 3.0, pi / 6.0, 128), tol=0.01 * tol, precision=220
    )
    disagreement = abs(res_a.value - res_b.value)
    if disagreement > 1e-9:
        raise ConsistencyError(
            f"residue circles at pi/3 and 2pi/3 differ by {disagreement:.3e}"
        )
    return EvalResult(
        -res_a.value,
        max(res_a.err_estimate, disagreement),
        MethodTag.RESIDUE_ORACLE.value,
        res_a.evaluations + res_b.evaluations,
    )


# ---------------------------------------------------------------------------
# Asymptotics and dispatch
# ---------------------------------------------------------------------------


def asymptotic_approx(s: float) -> AsymptoticForms:
    """Both closed approximations of D*(s) for real s < 0.

    The quarter-period phase choice is baked in: it places the zeros of the
    approximation at the negative integers, where D* itself vanishes.
    """
    s = complex(s)
    if s.imag != 0.0:
        raise DomainError("asymptotic forms are evaluated on the real axis")
    if s.real >= 0.0:
        raise DomainError("asymptotic forms require s < 0")
    x = s.real
    zeta_form = 2.0 * SQRT3 * 6.0 ** (-x) * zeta_real(2.0 * x)
    gamma_form = (
        2.0 ** (x + 1.0)
        * 3.0 ** (0.5 - x)
        * pi ** (2.0 * x - 1.0)
        * sin_pi(x).real
        * gamma(1.0 - 2.0 * x).real
    )
    return AsymptoticForms(zeta_form=zeta_form, gamma_form=gamma_form)


def _is_positive_integer(s: complex) -> bool:
    return s.imag == 0.0 and s.real >= 1.0 and abs(s.real - round(s.real)) < 1e-12


def evaluate(s: complex, method: str | MethodTag = "auto", tol: float = 1e-11) -> EvalResult:
    """Facade: evaluate D*(s) by the requested or automatically chosen route.

    AUTO picks EXPLICIT at positive integers, MELLIN for Re(s) > 0 with
    |Im(s)| > 8, and INTEGRAL everywhere else.
    """
    s = complex(s)
    name = method.value if isinstance(method, MethodTag) else str(method).lower()
    if name == "auto":
        if _is_positive_integer(s):
            name = MethodTag.EXPLICIT.value
        elif s.real > 0.0 and abs(s.imag) > 8.0:
            name = MethodTag.MELLIN.value
        else:
            name = MethodTag.INTEGRAL.value
    if name == MethodTag.EXPLICIT.value:
        if not _is_positive_integer(s):
            raise DomainError("explicit method requires a positive integer s")
        exact = d_explicit(int(round(s.real)))
        return EvalResult(
            complex(exact.decimal),
            1e-14 * max(1.0, abs(exact.decimal)),
            MethodTag.EXPLICIT.value,
            exact.k + 1,
        )
    if name == MethodTag.INTEGRAL.value:
        return dstar_integral(s, tol)
    if name == MethodTag.SERIES.value:
        return d_series(s, min(tol, 1e-12))
    if name == MethodTag.MELLIN.value:
        return d_mellin(s, min(tol, 1e-12))
    if name == MethodTag.RESIDUE_ORACLE.value:
        if not _is_positive_integer(s):
            raise DomainError("residue oracle requires a positive integer s")
        return d_residue_oracle(int(round(s.real)), tol)
    raise DomainError(f"unknown method {method!r}")

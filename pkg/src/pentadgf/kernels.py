"""Closed-form complex kernels and the classical special functions they need.

The two meromorphic kernels at the heart of the library are

    F(z) = -4*sqrt(3)*cos(z) / (1 + 2*cos(2z)),
    u(z) = (pi - 3z)*(2pi - 3z) / (6*pi^2).

``F`` is even and 2pi-periodic with simple poles at z = k*pi/3 (k = 1, 2 mod 3,
all on the real axis) whose residues follow the period-6 pattern
``sequences.residue_r``; ``u`` is the quadratic that maps those poles on the
negative axis to the generalized pentagonal numbers.  The shifted pair

    F'(z) = F(z + pi/2) = 4*sqrt(3)*sin(z) / (1 - 2*cos(2z)),
    u'(z) = u(z + pi/2) = 3*z^2 / (2*pi^2) - 1/24,

moves the z = pi/3 pole into view for the Hankel-contour q-series formulas.
``E`` is the exponential generating function of the finite-sum coefficients
``sequences.g_coeff``.  Gamma and a real-axis zeta round out the toolkit for
the asymptotic formulas.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .alternating import alternating_sum
from .errors import DomainError, PoleError

__all__ = [
    "F",
    "u",
    "f_prime_shift",
    "u_prime_shift",
    "E",
    "principal_pow",
    "gamma",
    "digamma",
    "zeta_real",
    "sin_pi",
    "cos_pi",
    "KernelTag",
    "KernelFn",
    "kernel_fn",
]

PI = math.pi
SQRT3 = math.sqrt(3.0)
POLE_EPS = 1e-13  # denominator magnitude below which we refuse to divide


def F(z: complex) -> complex:
    """Pole-comb kernel -4*sqrt(3)*cos(z) / (1 + 2*cos(2z)).

    Even, 2pi-periodic, vanishing at odd multiples of pi/2; simple poles at
    k*pi/3 for k = 1, 2 (mod 3) with residues residue_r(k).
    """
    z = complex(z)
    den = 1.0 + 2.0 * cmath.cos(2.0 * z)
    if abs(den) < POLE_EPS:
        raise PoleError(f"F evaluated too close to a pole (z={z!r})")
    return -4.0 * SQRT3 * cmath.cos(z) / den


def u(z: complex) -> complex:
    """Pentagonal quadratic (pi - 3z)(2pi - 3z) / (6 pi^2); zeros at pi/3 and 2pi/3."""
    z = complex(z)
    return (PI - 3.0 * z) * (2.0 * PI - 3.0 * z) / (6.0 * PI * PI)


def f_prime_shift(z: complex) -> complex:
    """Shifted comb F(z + pi/2) = 4*sqrt(3)*sin(z) / (1 - 2*cos(2z))."""
    z = complex(z)
    den = 1.0 - 2.0 * cmath.cos(2.0 * z)
    if abs(den) < POLE_EPS:
        raise PoleError(f"shifted comb evaluated too close to a pole (z={z!r})")
    return 4.0 * SQRT3 * cmath.sin(z) / den


def u_prime_shift(z: complex) -> complex:
    """Shifted quadratic u(z + pi/2) = 3 z^2 / (2 pi^2) - 1/24."""
    z = complex(z)
    return 3.0 * z * z / (2.0 * PI * PI) - 1.0 / 24.0


def E(t: complex) -> complex:
    """Generating kernel -(3t cos 2t + sqrt(3) t sin 2t) / sin 3t.

    Removable singularity at t = 0 (value -1); genuine poles at the other
    multiples of pi/3.
    """
    t = complex(t)
    if t == 0:
        return complex(-1.0)
    den = cmath.sin(3.0 * t)
    if abs(den) < POLE_EPS:
        raise PoleError(f"E evaluated too close to a pole (t={t!r})")
    num = 3.0 * t * cmath.cos(2.0 * t) + SQRT3 * t * cmath.sin(2.0 * t)
    return -num / den


def principal_pow(w: complex, e: complex) -> complex:
    """w**e through the principal logarithm (argument in (-pi, pi])."""
    w = complex(w)
    e = complex(e)
    if w == 0:
        if e.real > 0:
            return 0j
        raise DomainError("principal_pow(0, e) is singular for Re(e) <= 0")
    return cmath.exp(e * cmath.log(w))


def sin_pi(z: complex) -> complex:
    """sin(pi*z) with exact argument reduction; exactly zero at integers."""
    z = complex(z)
    k = round(z.real)
    r = z - k
    if r == 0:
        return complex(0.0)
    val = cmath.sin(PI * r)
    return -val if k % 2 else val


def cos_pi(z: complex) -> complex:
    """cos(pi*z) with exact argument reduction."""
    z = complex(z)
    k = round(z.real)
    r = z - k
    val = cmath.cos(PI * r)
    return -val if k % 2 else val


# Lanczos approximation, g = 7, 9 terms: relative error below ~1e-13 on the
# right half-plane for the moduli used here (|z| <= 200).
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _gamma_right(z: complex) -> complex:
    # valid for Re(z) >= 0.5
    z = z - 1.0
    acc = complex(_LANCZOS[0])
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * PI) * t ** (z + 0.5) * cmath.exp(-t) * acc


def gamma(z: complex) -> complex:
    """Complex gamma function (Lanczos, reflection for Re(z) < 1/2)."""
    z = complex(z)
    if z.real < 0.5:
        if z.imag == 0.0 and z.real == round(z.real):
            raise PoleError(f"gamma pole at nonpositive integer {z.real}")
        s = sin_pi(z)
        if abs(s) == 0.0:
            raise PoleError(f"gamma pole at {z!r}")
        return PI / (s * _gamma_right(1.0 - z))
    return _gamma_right(z)


# psi asymptotic tail: -B_{2n} / (2n * z^{2n});  B_2 .. B_14
_PSI_TAIL = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def digamma(z: complex) -> complex:
    """Complex digamma psi(z): reflection, recurrence to |z| >= 10, Stirling tail."""
    z = complex(z)
    if z.imag == 0.0 and z.real == round(z.real) and z.real <= 0:
        raise PoleError(f"digamma pole at nonpositive integer {z.real}")
    acc = 0j
    if z.real < 0.5:
        s = sin_pi(z)
        c = cos_pi(z)
        acc -= PI * c / s
        z = 1.0 - z
    while abs(z) < 10.0:
        acc -= 1.0 / z
        z = z + 1.0
    acc += cmath.log(z) - 0.5 / z
    zi2 = 1.0 / (z * z)
    p = zi2
    for coeff in _PSI_TAIL:
        acc -= coeff * p
        p *= zi2
    return acc


class KernelTag(Enum):
    """Names for the five closed-form kernels."""

    F = "F"
    U = "U"
    FPRIME = "FPRIME"
    UPRIME = "UPRIME"
    E = "E"


@dataclass(frozen=True)
class KernelFn:
    """A tagged scalar kernel; the evaluator is pure and deterministic."""

    tag: KernelTag
    evaluator: Callable[[complex], complex]

    def __call__(self, z: complex) -> complex:
        return self.evaluator(z)


def kernel_fn(tag: KernelTag) -> KernelFn:
    """The kernel registered under ``tag``."""
    return _KERNELS[tag]


def zeta_real(x: float) -> float:
    """Riemann zeta on the real axis.

    For x > 0 the Dirichlet eta series is accelerated and rescaled by
    1/(1 - 2^(1-x)); for x <= 0 the functional equation

        zeta(x) = 2^x pi^(x-1) sin(pi x / 2) Gamma(1 - x) zeta(1 - x)

    maps back to the convergent side.  x = 1 is the pole.
    """
    x = float(x)
    if x == 1.0:
        raise PoleError("zeta pole at x = 1")
    if x == 0.0:
        return -0.5
    if x > 0.0:
        eta, _, _ = alternating_sum(lambda k: (k + 1.0) ** (-x), 1e-15)
        return eta.real / (1.0 - 2.0 ** (1.0 - x))
    s = sin_pi(x / 2.0).real
    if s == 0.0:  # trivial zeros at negative even integers
        return 0.0
    return (
        2.0**x * PI ** (x - 1.0) * s * _gamma_right(1.0 - x).real * zeta_real(1.0 - x)
    )


_KERNELS = {
    KernelTag.F: KernelFn(KernelTag.F, F),
    KernelTag.U: KernelFn(KernelTag.U, u),
    KernelTag.FPRIME: KernelFn(KernelTag.FPRIME, f_prime_shift),
    KernelTag.UPRIME: KernelFn(KernelTag.UPRIME, u_prime_shift),
    KernelTag.E: KernelFn(KernelTag.E, E),
}

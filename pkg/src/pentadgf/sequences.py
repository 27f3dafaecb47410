"""Exact integer and rational sequences used throughout the package.

Everything in this module is computed in exact arithmetic (Python ints and
``fractions.Fraction``); floating point only appears when a caller converts
a result at the evaluation boundary.  The sequences are:

* Bernoulli numbers ``B_n`` in the ``B_1 = +1/2`` convention, generated by
  ``x / (1 - exp(-x))``,
* the rescaled Glaisher numbers ``G*(n)`` generated by ``3x / (2 + 4 cos x)``,
  with ``G(n) = G*(2n+1)`` linking back to Glaisher's indexing,
* the finite-sum coefficients ``g(j)``, rationals for even ``j`` and rational
  multiples of ``sqrt(3)`` for odd ``j``,
* the sign coefficients ``a_n`` supported on the generalized pentagonal
  numbers, together with a truncated-product oracle for them,
* the residue pattern ``r(k)`` of the pole comb used by the contour modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

__all__ = [
    "AlgebraicValue",
    "CoeffTable",
    "bernoulli",
    "glaisher_gstar",
    "glaisher_g",
    "g_coeff",
    "coeff_a",
    "coeff_table",
    "product_oracle_coeffs",
    "residue_r",
]

SQRT3 = 3.0 ** 0.5


@dataclass(frozen=True)
class AlgebraicValue:
    """Exact element of Q + Q*sqrt(3), stored as ``rat + root3coeff*sqrt(3)``."""

    rat: Fraction = Fraction(0)
    root3coeff: Fraction = Fraction(0)

    def __add__(self, other: "AlgebraicValue") -> "AlgebraicValue":
        return AlgebraicValue(self.rat + other.rat, self.root3coeff + other.root3coeff)

    def __neg__(self) -> "AlgebraicValue":
        return AlgebraicValue(-self.rat, -self.root3coeff)

    def __sub__(self, other: "AlgebraicValue") -> "AlgebraicValue":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraicValue):
            # (a + b*r)(c + d*r) with r^2 = 3
            return AlgebraicValue(
                self.rat * other.rat + 3 * self.root3coeff * other.root3coeff,
                self.rat * other.root3coeff + self.root3coeff * other.rat,
            )
        q = Fraction(other)
        return AlgebraicValue(self.rat * q, self.root3coeff * q)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.rat == 0 and self.root3coeff == 0

    def to_float(self) -> float:
        return float(self.rat) + float(self.root3coeff) * SQRT3

    def __float__(self) -> float:
        return self.to_float()

    def __str__(self) -> str:
        if self.root3coeff == 0:
            return str(self.rat)
        if self.rat == 0:
            return f"{self.root3coeff}*sqrt(3)"
        sign = "+" if self.root3coeff > 0 else "-"
        return f"{self.rat} {sign} {abs(self.root3coeff)}*sqrt(3)"


@dataclass(frozen=True)
class CoeffTable:
    """Signs a_0..a_N of the pentagonal power series; entries in {-1, 0, 1}."""

    values: tuple

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("coefficient table must start with a_0 = 1")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]


_BERNOULLI_CACHE: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = +1/2) as an exact Fraction.

    Uses the recurrence obtained by multiplying the generating function
    ``x / (1 - exp(-x))`` through by its denominator and matching Taylor
    coefficients:

        sum_{i=1..m} (-1)^(i+1) C(m, i) B_{m-i} = [m == 1].

    Only even indices matter downstream; odd B_n vanish for n >= 3.
    """
    if n < 0:
        raise ValueError("bernoulli index must be nonnegative")
    cache = _BERNOULLI_CACHE
    while len(cache) <= n:
        m = len(cache) + 1  # recurrence level that produces B_{m-1}
        acc = Fraction(0)
        for i in range(2, m + 1):
            term = Fraction(comb(m, i)) * cache[m - i]
            acc += term if i % 2 == 0 else -term
        cache.append(acc / m)
    return cache[n]


_GSTAR_CACHE: list[Fraction] = [Fraction(0)]


def glaisher_gstar(n: int) -> Fraction:
    """Coefficient G*(n) of the exponential generating function 3x/(2+4cos x).

    Multiplying ``(2 + 4 cos x) * sum G*(n) x^n/n! = 3x`` and matching the
    coefficient of x^n/n! gives the convolution recurrence

        G*(n) = (3*[n==1] - 4 * sum_{m=1..n//2} (-1)^m C(n,2m) G*(n-2m)) / 6.

    G* vanishes at even indices and is nonnegative on the generated range.
    """
    if n < 0:
        raise ValueError("glaisher index must be nonnegative")
    cache = _GSTAR_CACHE
    while len(cache) <= n:
        k = len(cache)
        acc = Fraction(3) if k == 1 else Fraction(0)
        for m in range(1, k // 2 + 1):
            term = 4 * Fraction(comb(k, 2 * m)) * cache[k - 2 * m]
            acc += term if m % 2 else -term
        cache.append(acc / 6)
    return cache[n]


def glaisher_g(n: int) -> Fraction:
    """Glaisher's G(n) through the index map G(n) = G*(2n+1), n >= 1."""
    if n < 1:
        raise ValueError("glaisher_g is defined for n >= 1")
    return glaisher_gstar(2 * n + 1)


def g_coeff(j: int) -> AlgebraicValue:
    """Finite-sum coefficient g(j).

    Even j:  g(j) = -(1/2) (-1)^(j/2) (2^j - 2)(3^j - 3) B_j, a pure rational.
    Odd j:   g(j) = -(1/sqrt(3)) (2^j + 2) G*(j), a pure multiple of sqrt(3)
             (the 1/sqrt(3) is stored as root3coeff = -(2^j + 2) G*(j) / 3).
    """
    if j < 0:
        raise ValueError("g_coeff index must be nonnegative")
    if j % 2 == 0:
        sign = -1 if (j // 2) % 2 else 1
        rat = -Fraction(sign, 2) * (2**j - 2) * (3**j - 3) * bernoulli(j)
        return AlgebraicValue(rat=rat)
    root3 = -Fraction(2**j + 2, 3) * glaisher_gstar(j)
    return AlgebraicValue(root3coeff=root3)


def coeff_a(n: int) -> int:
    """Series sign a_n: (-1)^m when n = (3m^2 +- m)/2 for m >= 1, 1 at n = 0, else 0.

    Decided exactly: n is generalized pentagonal iff 24n + 1 is a perfect
    square w^2 with w = 6m -+ 1; the integer square root avoids any floating
    point misclassification at large n.
    """
    if n < 0:
        raise ValueError("coefficient index must be nonnegative")
    if n == 0:
        return 1
    w = isqrt(24 * n + 1)
    if w * w != 24 * n + 1:
        return 0
    if w % 6 == 5:
        m = (w + 1) // 6
    elif w % 6 == 1:
        m = (w - 1) // 6
    else:  # unreachable: odd squares are 1 mod 24
        return 0
    return -1 if m % 2 else 1


def coeff_table(n_max: int) -> CoeffTable:
    """Signs a_0..a_{n_max} as a CoeffTable."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    return CoeffTable(tuple(coeff_a(n) for n in range(n_max + 1)))


def product_oracle_coeffs(n_max: int) -> CoeffTable:
    """First n_max+1 coefficients of prod_{n=1..n_max} (1 - q^n), by exact convolution.

    Independent oracle for ``coeff_table``: no pentagonal structure is assumed,
    the truncated product is expanded term by term over Python ints.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > 10**4:
        raise ValueError("product oracle capped at n_max <= 10^4")
    coeffs = [0] * (n_max + 1)
    coeffs[0] = 1
    for n in range(1, n_max + 1):
        # multiply by (1 - q^n); descending index keeps the update in place
        for i in range(n_max, n - 1, -1):
            coeffs[i] -= coeffs[i - n]
    return CoeffTable(tuple(coeffs))


def residue_r(k: int) -> int:
    """Residue pattern of the pole comb: +1 for k = 1,2 (mod 6), -1 for k = 4,5, else 0."""
    m = k % 6
    if m in (1, 2):
        return 1
    if m in (4, 5):
        return -1
    return 0

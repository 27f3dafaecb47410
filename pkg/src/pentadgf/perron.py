"""Partial sums of the pentagonal signs via the residue-count reduction.

For non-integer x > 1 the partial sum S(x) = sum_{1 <= n < x} a_n equals the
sum of the pole-comb residues r(k) over the negative poles k*pi/3 lying
strictly between z_-(x) and 0, where

    z_-(x) = pi/2 - (pi/6) * sqrt(1 + 24x)

is the negative solution of u(z) = x.  Equivalently: sum r(k) over integers
k with (3 - sqrt(1 + 24x))/2 < k < 0.  A brute-force summation oracle over
``sequences.coeff_a`` validates the reduction exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .sequences import coeff_a, residue_r

__all__ = ["PartialSumResult", "z_minus", "partial_sum", "partial_sum_oracle"]


@dataclass(frozen=True)
class PartialSumResult:
    """Integer partial sum with the residue-count witness that produced it."""

    x: float
    value: int
    k_min: int
    z_minus: float


def z_minus(x: float) -> float:
    """Negative solution z_-(x) = pi/2 - (pi/6) sqrt(1 + 24 x) of u(z) = x."""
    x = float(x)
    if x < -1.0 / 24.0:
        raise DomainError("z_minus requires x >= -1/24")
    return math.pi / 2.0 - math.pi / 6.0 * math.sqrt(1.0 + 24.0 * x)


def partial_sum(x: float) -> PartialSumResult:
    """S(x) for non-integer x > 0, as a residue count.

    Counts every pole k*pi/3 with z_-(x) < k*pi/3 < 0.  The threshold in k is
    (3 - sqrt(1+24x))/2; it can only be an exact integer when x sits at a
    pole with residue zero or at a generalized pentagonal integer, and
    integer x is rejected (the sum jumps there).  On (0, 1) the count is
    empty and S(x) = 0, consistent with the definition; this extends the
    x > 1 range the derivation is usually stated for.
    """
    x = float(x)
    if x <= 0.0:
        raise DomainError("partial_sum requires x > 0")
    if x == int(x):
        raise DomainError("partial_sum is discontinuous at integers; x must not be one")
    threshold = (3.0 - math.sqrt(1.0 + 24.0 * x)) / 2.0
    k_min = math.floor(threshold) + 1  # smallest k with threshold < k
    total = 0
    for k in range(k_min, 0):
        total += residue_r(k)
    return PartialSumResult(x=x, value=total, k_min=k_min, z_minus=z_minus(x))


def partial_sum_oracle(x: float) -> int:
    """S(x) by direct summation of the coefficients; the validation oracle."""
    x = float(x)
    if x > 10.0**6:
        raise DomainError("oracle capped at x <= 10^6")
    return sum(coeff_a(n) for n in range(1, math.ceil(x)))

"""Chebyshev-weighted acceleration of alternating series.

Implements the Cohen-Rodriguez Villegas-Zagier scheme: the partial sum of
``sum_{k>=0} (-1)^k a_k`` is replaced by a weighted combination whose weights
come from the Chebyshev polynomial values at 3, giving an error that shrinks
like ``(3 + sqrt(8))^{-n}`` per n terms for well-behaved term sequences.  For
terms of Dirichlet type ``a_k ~ (poly in k)^{-s}`` the error constant grows
like ``exp(pi |Im s| / 2)``, which the step chooser accounts for.
"""

from __future__ import annotations

from math import ceil, log, pi

__all__ = ["cvz_sum", "alternating_sum"]

_LN_RATE = log(3.0 + 8.0 ** 0.5)  # ~1.7627
_N_CAP = 320  # keeps the Chebyshev weight (3+sqrt(8))^n < overflow


def cvz_sum(term, n: int) -> complex:
    """Accelerated value of sum_{k>=0} (-1)^k term(k) using n terms."""
    d = (3.0 + 8.0 ** 0.5) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    acc = 0.0 + 0.0j
    for k in range(n):
        c = b - c
        acc += c * term(k)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return acc / d


def alternating_sum(term, tol: float, imag_scale: float = 0.0):
    """Sum ``sum_{k>=0} (-1)^k term(k)`` to roughly ``tol``.

    Returns ``(value, err_estimate, nterms)``.  The starting order follows the
    theoretical rate with an ``exp(pi*imag_scale/2)`` penalty; the estimate is
    the difference between two consecutive orders and the order grows until the
    estimate is below ``tol`` or the overflow-safe cap is hit.
    """
    n = ceil((log(10.0 / tol) + pi * abs(imag_scale) / 2.0 + 8.0) / _LN_RATE)
    n = max(18, min(n, _N_CAP - 8))  # keep room for the error-estimate order
    value = cvz_sum(term, n)
    nterms = n
    while True:
        n_next = min(n + 8, _N_CAP)
        check = cvz_sum(term, n_next)
        nterms += n_next
        err = abs(check - value)
        value = check
        if err <= tol * max(1.0, abs(value)) or n_next >= _N_CAP:
            return value, err, nterms
        n = min(_N_CAP, ceil(n * 1.5) + 8)

"""Zeros of D*(s) in the critical strip, by argument principle plus Newton.

The strip 0 < Re(s) < 1, 0 < Im(s) <= T is covered by height-one rectangles
widened to Re in [-0.2, 1.2]; each rectangle's zero count comes from the
winding number of the Mellin-route evaluator around its boundary, rectangles
holding more than one zero are subdivided, and single zeros are polished by
Newton iteration with the analytic derivative.  Every accepted zero carries
its residual |D*| and a winding verification on a small box around it.

Zeros landing in the margin strips Re in [-0.2, 0) or (1, 1.2] are returned
with ``in_strip=False`` (and logged), never asserted against: completeness of
the search is inherently heuristic.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from .contour import winding_number
from .dgf import MethodTag, _mellin_fixed_order, d_mellin, dstar_derivative
from .errors import BoundaryZeroError, ConvergenceError, DomainError

__all__ = ["ZeroRecord", "count_zeros", "find_zeros"]

log = logging.getLogger(__name__)

STRIP_MARGIN = 0.2
_IM_MAX_VALIDATED = 22.0
_MIN_BOX = 1e-3
_DEDUPE_TOL = 1e-6


@dataclass
class ZeroRecord:
    """A located zero with its certification data."""

    location: complex
    residual: float
    winding_verified: bool
    method: str
    converged: bool = True
    in_strip: bool = True


def _default_evaluator(s: complex) -> complex:
    return _mellin_fixed_order(s, order=48)


def count_zeros(re_range, im_range, evaluator=None, max_step: float = 0.2) -> int:
    """Number of zeros inside [re_lo, re_hi] x [im_lo, im_hi], by winding number.

    When the boundary passes too close to a zero the rectangle is grown by a
    small, irregular amount and retried, up to three perturbations.
    """
    if evaluator is None:
        evaluator = _default_evaluator
    re_lo, re_hi = float(re_range[0]), float(re_range[1])
    im_lo, im_hi = float(im_range[0]), float(im_range[1])
    for bump in (0.0, 1.3e-3, 2.9e-3, 6.1e-3):
        rect = (re_lo - bump, re_hi + bump, im_lo - bump, im_hi + bump)
        try:
            return winding_number(evaluator, rect, max_step=max_step)
        except BoundaryZeroError:
            continue
    raise BoundaryZeroError(
        "boundary stayed near a zero after three perturbations; "
        "choose the rectangle manually"
    )


def _newton_polish(s0: complex, tol: float):
    s = complex(s0)
    for _ in range(50):
        val = d_mellin(s, 1e-12).value
        try:
            der = dstar_derivative(s, 1e-6).value
        except ConvergenceError as exc:  # keep iterating on the best value
            der = exc.best.value if exc.best is not None else 0.0
        if der == 0:
            break
        step = -val / der
        if abs(step) > 0.5:
            step *= 0.5 / abs(step)
        s += step
        if abs(step) < tol:
            return s, True
    return s, False


def _grid_seed(rect, evaluator) -> complex:
    re_lo, re_hi, im_lo, im_hi = rect
    best = None
    best_val = math.inf
    for i in range(3):
        for j in range(3):
            p = complex(
                re_lo + (i + 1) * (re_hi - re_lo) / 4.0,
                im_lo + (j + 1) * (im_hi - im_lo) / 4.0,
            )
            v = abs(evaluator(p))
            if v < best_val:
                best, best_val = p, v
    return best


def _verify_winding(loc: complex, evaluator) -> bool:
    try:
        n = count_zeros(
            (loc.real - 2e-3, loc.real + 2e-3),
            (loc.imag - 2e-3, loc.imag + 2e-3),
            evaluator=evaluator,
            max_step=1e-3,
        )
        return n == 1
    except BoundaryZeroError:
        return False


def find_zeros(im_max: float, tol: float = 1e-10) -> list[ZeroRecord]:
    """All zeros with 0 < Im(s) <= im_max found in the widened strip.

    Records inside 0 <= Re(s) <= 1 carry ``in_strip=True``; margin hits are
    reported but flagged.  Newton failures are kept as flagged records rather
    than dropped.  Results are deduplicated and sorted by imaginary part.
    """
    im_max = float(im_max)
    if not 0.0 < im_max <= _IM_MAX_VALIDATED:
        raise DomainError(f"im_max must lie in (0, {_IM_MAX_VALIDATED}]")
    evaluator = _default_evaluator
    pending = []
    k = 0
    while k < im_max:
        top = min(k + 1.0, im_max)
        if top - k > 1e-9:
            pending.append((-STRIP_MARGIN, 1.0 + STRIP_MARGIN, float(k), top))
        k += 1
    found: list[tuple[complex, bool]] = []
    while pending:
        rect = pending.pop()
        re_lo, re_hi, im_lo, im_hi = rect
        try:
            n = count_zeros((re_lo, re_hi), (im_lo, im_hi), evaluator=evaluator)
        except BoundaryZeroError:
            # fall back to subdividing blindly; tiny boxes get dropped
            n = 2 if min(re_hi - re_lo, im_hi - im_lo) > _MIN_BOX else 0
        if n == 0:
            continue

        def _inside(p: complex) -> bool:
            return (
                re_lo - 1e-6 <= p.real <= re_hi + 1e-6
                and im_lo - 1e-6 <= p.imag <= im_hi + 1e-6
            )

        small = max(re_hi - re_lo, im_hi - im_lo) <= _MIN_BOX
        if n == 1 or small:
            center = complex(0.5 * (re_lo + re_hi), 0.5 * (im_lo + im_hi))
            loc, converged = _newton_polish(center, tol)
            if not (converged and _inside(loc)):
                seed = _grid_seed(rect, evaluator)
                loc2, conv2 = _newton_polish(seed, tol)
                if conv2 and _inside(loc2):
                    loc, converged = loc2, True
            if converged and _inside(loc):
                found.append((loc, True))
                continue
            if small:
                # best effort on an unsplittable box: keep, but flagged
                found.append((loc, False))
                continue
            # Newton escaped the box: subdivide and retry on smaller cells
        # subdivide along the longer side
        if re_hi - re_lo >= im_hi - im_lo:
            mid = 0.5 * (re_lo + re_hi)
            pending.append((re_lo, mid, im_lo, im_hi))
            pending.append((mid, re_hi, im_lo, im_hi))
        else:
            mid = 0.5 * (im_lo + im_hi)
            pending.append((re_lo, re_hi, im_lo, mid))
            pending.append((re_lo, re_hi, mid, im_hi))

    # deduplicate, keep converged representatives when available
    found.sort(key=lambda t: (t[0].imag, t[0].real))
    unique: list[tuple[complex, bool]] = []
    for loc, conv in found:
        if unique and abs(loc - unique[-1][0]) < _DEDUPE_TOL:
            if conv and not unique[-1][1]:
                unique[-1] = (loc, conv)
            continue
        unique.append((loc, conv))

    records = []
    for loc, conv in unique:
        if not 0.0 < loc.imag <= im_max + 1e-9:
            continue
        residual = abs(d_mellin(loc, 1e-13).value)
        in_strip = -1e-9 <= loc.real <= 1.0 + 1e-9
        if not in_strip:
            log.warning("zero outside the strip at %s (margin finding)", loc)
        records.append(
            ZeroRecord(
                location=loc,
                residual=residual,
                winding_verified=_verify_winding(loc, evaluator),
                method=MethodTag.MELLIN.value,
                converged=conv,
                in_strip=in_strip,
            )
        )
    records.sort(key=lambda r: r.location.imag)
    return records

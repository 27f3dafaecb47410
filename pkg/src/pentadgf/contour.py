"""Reusable contour-quadrature engines.

Four contour shapes cover everything the library integrates:

* an infinite vertical line (truncated by an explicit tail bound), composite
  Gauss-Legendre panels, for the line-integral continuation;
* a flat rectangle hugging the positive real axis (a Hankel contour realized
  as a rectangle boundary), for the q-series representations;
* a circle, trapezoid rule on equispaced nodes, exponentially convergent for
  analytic integrands, for residues and series inversion;
* an axis-aligned rectangle boundary used only for argument-principle
  winding numbers.

All engines take integrands as callables mapping a complex node ndarray to a
value ndarray, refine by doubling the panel order, and report the difference
between the last two refinement levels as the error estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import (
    BoundaryZeroError,
    ContourSpecError,
    ConvergenceError,
)

__all__ = [
    "EvalResult",
    "VerticalLineSpec",
    "HankelRectSpec",
    "CircleSpec",
    "integrate_vertical",
    "integrate_hankel",
    "integrate_circle",
    "winding_number",
    "vertical_truncation",
    "hankel_truncation",
]

PI = math.pi
TWO_PI = 2.0 * math.pi
_MAX_REFINE = 4  # order doublings per call
_ILL_CONDITION_RATIO = 1e12
_ERR_FLOOR = 1e-15  # double-precision honesty floor for error estimates


def _floor_err(err: float, value: complex) -> float:
    base = _ERR_FLOOR * max(1.0, abs(value))
    if not math.isfinite(err):
        return abs(value)
    return max(err, base)


@dataclass
class EvalResult:
    """Value of a numeric evaluation plus its bookkeeping.

    ``err_estimate`` is the magnitude of the difference between the last two
    refinement levels; ``evaluations`` counts integrand evaluations;
    ``ill_conditioned`` is set when the integrand peak exceeds the result by
    more than twelve orders of magnitude.
    """

    value: complex
    err_estimate: float
    method: str
    evaluations: int = 0
    ill_conditioned: bool = False


@dataclass
class VerticalLineSpec:
    """Vertical line Re(z) = abscissa, truncated to |Im(z)| <= truncation."""

    abscissa: float = 0.0
    truncation: float | None = None
    panel_order: int = 24
    panel_width: float = 1.0

    def __post_init__(self):
        if not -PI / 3.0 < self.abscissa < PI / 3.0:
            raise ContourSpecError("vertical-line abscissa must lie in (-pi/3, pi/3)")
        if self.truncation is not None and self.truncation <= 0:
            raise ContourSpecError("truncation must be positive")


@dataclass
class HankelRectSpec:
    """Counterclockwise rectangle [cap_abscissa, truncation] x [-delta, +delta]."""

    half_height: float = PI / 12.0
    cap_abscissa: float = 0.0
    truncation: float | None = None
    panel_order: int = 24
    panel_width: float = PI / 3.0

    def __post_init__(self):
        if self.half_height <= 0:
            raise ContourSpecError("half_height must be positive")
        if self.cap_abscissa >= PI / 6.0:
            raise ContourSpecError("cap abscissa must stay left of the first pole pi/6")


@dataclass
class CircleSpec:
    """Circle |z - center| = radius sampled at ``nodes`` equispaced points."""

    center: complex
    radius: float
    nodes: int = 64

    def __post_init__(self):
        if self.radius <= 0:
            raise ContourSpecError("radius must be positive")
        n = self.nodes
        if n < 8 or n & (n - 1):
            raise ContourSpecError("node count must be a power of two, >= 8")


@lru_cache(maxsize=64)
def _gl_rule(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def _composite_real(breaks: np.ndarray, order: int):
    """Nodes and weights of composite Gauss-Legendre panels over ``breaks``."""
    x, w = _gl_rule(order)
    a = breaks[:-1]
    b = breaks[1:]
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _panel_breaks(lo: float, hi: float, width: float) -> np.ndarray:
    n = max(1, int(math.ceil((hi - lo) / width - 1e-12)))
    return np.linspace(lo, hi, n + 1)


def vertical_truncation(
    power: float, tol: float, imag_s: float = 0.0, peak_scale: float = 1.0
) -> float:
    """Height Y making the vertical-line tail bound smaller than tol/10.

    The integrand envelope is ~ 2*sqrt(3) * exp(-Y) * (3Y^2/(2pi^2))^power,
    inflated by exp(pi*|imag_s|) for the branch-phase asymmetry of the power
    factor.  ``peak_scale`` makes the target relative to the expected result
    magnitude when that is large.
    """
    target = 0.1 * tol * max(1.0, peak_scale)
    log_target = math.log(target)
    y = 12.0
    for _ in range(20000):
        growth = power * math.log(max(3.0 * y * y / (2.0 * PI * PI), 1.0))
        bound = math.log(2.0 * math.sqrt(3.0)) - y + growth + PI * abs(imag_s)
        if bound <= log_target:
            return y
        y += max(1.0, bound - log_target)
        if y > 4000.0:
            break
    raise ContourSpecError("vertical tail bound unreachable for requested tolerance")


def hankel_truncation(beta: complex, const_re: float, target: float) -> float:
    """Edge length X with Re(beta*(x +- i*delta)^2 + const) <= -target at x = X.

    ``beta`` is the quadratic coefficient of the exponent (Re(beta) < 0), and
    the bound covers both horizontal edges of the default-height rectangle.
    """
    if beta.real >= 0:
        raise ContourSpecError("hankel exponent must decay (Re(beta) < 0)")
    delta = PI / 12.0  # conservative: actual half-height <= pi/8 in this library
    a = -beta.real
    b = -2.0 * delta * abs(beta.imag)
    c = -(abs(beta.real) * delta * delta + abs(const_re) + target)
    x = (-b + math.sqrt(b * b - 4.0 * a * c)) / (2.0 * a)
    return max(x, PI)


def integrate_vertical(
    f: Callable[[np.ndarray], np.ndarray], spec: VerticalLineSpec, tol: float
) -> EvalResult:
    """(1/2*pi*i) * integral of f over z = abscissa + i*y, y in [-Y, Y].

    Composite Gauss-Legendre panels; the i*dy Jacobian is folded in so the
    returned value is (1/2pi) * integral f(c + iy) dy.  Refinement doubles the
    panel order until two successive levels agree to ``tol`` (relative once
    the magnitude exceeds one).
    """
    if spec.truncation is None:
        raise ContourSpecError("vertical-line spec needs an explicit truncation")
    y_max = spec.truncation
    breaks = _panel_breaks(-y_max, y_max, spec.panel_width)
    order = spec.panel_order
    prev = None
    evaluations = 0
    peak = 0.0
    err = math.inf
    for _ in range(_MAX_REFINE + 1):
        y, w = _composite_real(breaks, order)
        vals = f(spec.abscissa + 1j * y)
        if not np.all(np.isfinite(vals)):
            raise ContourSpecError("integrand not finite on the vertical line")
        evaluations += y.size
        peak = max(peak, float(np.max(np.abs(vals))))
        total = complex(np.dot(w, vals)) / TWO_PI
        if prev is not None:
            err = abs(total - prev)
            if err <= tol * max(1.0, abs(total)):
                prev = total
                break
        prev = total
        order *= 2
    result = EvalResult(
        value=prev,
        err_estimate=_floor_err(err, prev),
        method="vertical",
        evaluations=evaluations,
        ill_conditioned=peak > _ILL_CONDITION_RATIO * max(abs(prev), 1e-300),
    )
    if err > tol * max(1.0, abs(prev)):
        raise ConvergenceError(
            f"vertical quadrature stalled at err={err:.3e}", best=result
        )
    return result


def _hankel_path(spec: HankelRectSpec, order: int):
    """Complex nodes and complex weights for the counterclockwise rectangle."""
    x0 = spec.cap_abscissa
    x1 = spec.truncation
    d = spec.half_height
    xb = _panel_breaks(x0, x1, spec.panel_width)
    yb = _panel_breaks(-d, d, 2.0 * d)
    xn, xw = _composite_real(xb, order)
    yn, yw = _composite_real(yb, order)
    pieces = [
        (xn - 1j * d, xw.astype(complex)),  # bottom, left to right
        (x1 + 1j * yn, 1j * yw),  # right edge, upward
        (xn[::-1] + 1j * d, -xw[::-1].astype(complex)),  # top, right to left
        (x0 + 1j * yn[::-1], -1j * yw[::-1]),  # cap, downward
    ]
    return pieces


def integrate_hankel(
    f: Callable[[np.ndarray], np.ndarray], spec: HankelRectSpec, tol: float
) -> EvalResult:
    """(1/2*pi*i) * contour integral of f over the rectangle around [0, X].

    Orientation is positive (counterclockwise); the right-edge contribution is
    checked against tol/10 to confirm the truncation rule held.
    """
    if spec.truncation is None:
        raise ContourSpecError("hankel spec needs an explicit truncation")
    order = spec.panel_order
    prev = None
    evaluations = 0
    err = math.inf
    for _ in range(_MAX_REFINE + 1):
        total = 0j
        right_edge = 0j
        for idx, (nodes, weights) in enumerate(_hankel_path(spec, order)):
            vals = f(nodes)
            if not np.all(np.isfinite(vals)):
                raise ContourSpecError("integrand not finite on the hankel path")
            evaluations += nodes.size
            contrib = complex(np.dot(weights, vals))
            if idx == 1:
                right_edge = contrib
            total += contrib
        total /= 2j * PI
        if abs(right_edge) / TWO_PI > 0.1 * tol:
            raise ContourSpecError(
                "hankel truncation too short: right edge contributes "
                f"{abs(right_edge) / TWO_PI:.3e}"
            )
        if prev is not None:
            err = abs(total - prev)
            if err <= tol * max(1.0, abs(total)):
                prev = total
                break
        prev = total
        order *= 2
    result = EvalResult(
        value=prev,
        err_estimate=_floor_err(err, prev),
        method="hankel",
        evaluations=evaluations,
    )
    if err > tol * max(1.0, abs(prev)):
        raise ConvergenceError(f"hankel quadrature stalled at err={err:.3e}", best=result)
    return result


def _circle_level(f, spec: CircleSpec, n: int, precision: int | None) -> complex:
    if precision is None:
        theta = np.arange(n) * (TWO_PI / n)
        ring = np.exp(1j * theta)
        vals = f(spec.center + spec.radius * ring)
        if not np.all(np.isfinite(vals)):
            raise ContourSpecError("integrand not finite on the circle")
        return complex(np.dot(vals, ring)) * (spec.radius / n)
    import gmpy2

    with gmpy2.context(precision=precision):
        two_pi = 2 * gmpy2.const_pi()
        ring = [gmpy2.exp(gmpy2.mpc(0, two_pi * j / n)) for j in range(n)]
        nodes = [spec.center + spec.radius * e for e in ring]
        vals = f(nodes)
        total = gmpy2.mpc(0)
        for v, e in zip(vals, ring):
            total += v * e
        return complex(total * gmpy2.mpfr(spec.radius) / n)


def integrate_circle(
    f: Callable[[np.ndarray], np.ndarray],
    spec: CircleSpec,
    tol: float = 1e-12,
    max_nodes: int = 1 << 16,
    precision: int | None = None,
) -> EvalResult:
    """(1/2*pi*i) * contour integral of f over the circle, by the trapezoid rule.

    Equispaced nodes make the rule exponentially convergent for integrands
    analytic in a neighbourhood of the circle; the node count doubles until
    two levels agree.

    With ``precision`` set (in bits) the trapezoid runs in gmpy2 arithmetic:
    nodes are handed to ``f`` as a list of ``gmpy2.mpc`` and the products are
    accumulated at that precision.  This matters when the integrand spans many
    orders of magnitude around the circle (high-order poles), where the
    double-precision rounding of the summands alone exceeds tight tolerances.
    """
    n = spec.nodes
    prev = None
    evaluations = 0
    err = math.inf
    while n <= max_nodes:
        total = _circle_level(f, spec, n, precision)
        evaluations += n
        if prev is not None:
            err = abs(total - prev)
            if err <= tol * max(1.0, abs(total)):
                return EvalResult(total, _floor_err(err, total), "circle", evaluations)
        prev = total
        n *= 2
    raise ConvergenceError(
        f"circle quadrature stalled at err={err:.3e}",
        best=EvalResult(prev, err, "circle", evaluations),
    )


def winding_number(
    g: Callable[[complex], complex],
    rect: tuple[float, float, float, float],
    max_step: float = 0.25,
    min_modulus: float = 1e-9,
    max_points: int = 1 << 17,
) -> int:
    """Winding number of g around the rectangle (re_lo, re_hi, im_lo, im_hi).

    Samples the boundary counterclockwise, refining every step whose phase
    change reaches pi/2 until all steps are small, then rounds the accumulated
    argument change to an integer multiple of 2*pi.  Raises BoundaryZeroError
    when |g| drops below ``min_modulus`` at a sample (the caller should
    perturb the rectangle).
    """
    re_lo, re_hi, im_lo, im_hi = rect
    if not (re_hi > re_lo and im_hi > im_lo):
        raise ValueError("degenerate rectangle")
    corners = [
        complex(re_lo, im_lo),
        complex(re_hi, im_lo),
        complex(re_hi, im_hi),
        complex(re_lo, im_hi),
        complex(re_lo, im_lo),
    ]
    pts: list[complex] = []
    for a, b in zip(corners[:-1], corners[1:]):
        n = max(2, int(math.ceil(abs(b - a) / max_step)) + 1)
        seg = [a + (b - a) * k / (n - 1) for k in range(n - 1)]
        pts.extend(seg)
    pts.append(corners[-1])

    cache: dict[complex, complex] = {}

    def val(p: complex) -> complex:
        v = cache.get(p)
        if v is None:
            v = g(p)
            if abs(v) < min_modulus:
                raise BoundaryZeroError(
                    f"|g| = {abs(v):.2e} at {p:.6f} on the contour"
                )
            cache[p] = v
        return v

    vals = [val(p) for p in pts]
    while True:
        refined_pts: list[complex] = []
        refined_vals: list[complex] = []
        needs_more = False
        for p0, p1, v0, v1 in zip(pts[:-1], pts[1:], vals[:-1], vals[1:]):
            refined_pts.append(p0)
            refined_vals.append(v0)
            if abs(np.angle(v1 / v0)) >= 0.5 * PI:
                mid = 0.5 * (p0 + p1)
                refined_pts.append(mid)
                refined_vals.append(val(mid))
                needs_more = True
        refined_pts.append(pts[-1])
        refined_vals.append(vals[-1])
        pts, vals = refined_pts, refined_vals
        if not needs_more:
            break
        if len(pts) > max_points:
            raise BoundaryZeroError(
                "phase refinement exploded; a zero is probably on the contour"
            )
    total = 0.0
    for v0, v1 in zip(vals[:-1], vals[1:]):
        total += np.angle(v1 / v0)
    w = total / TWO_PI
    if abs(w - round(w)) > 0.2:
        raise BoundaryZeroError(f"winding number did not settle (got {w:.3f})")
    return int(round(w))

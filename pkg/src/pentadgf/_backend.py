"""Hot numeric kernels with a numba lane and a pure-NumPy fallback lane.

Every quadrature engine and series evaluator funnels its inner loops through
the functions in this module: integrand evaluation over node arrays, weighted
exponential sums, and the truncated theta-type series.  Two interchangeable
implementations exist:

* ``numba``: scalar loops compiled with ``@njit(cache=True)``,
* ``numpy``: vectorized ndarray expressions.

The active lane is chosen once at import from the environment variable
``PENTADGF_BACKEND`` (``auto`` | ``numba`` | ``numpy``; default ``auto`` picks
numba when importable) and can be switched programmatically with ``use()``.
Both lanes implement identical arithmetic; they may differ in the last bits
through summation order only.  ``benchmarks/bench_backends.py`` times one
against the other.
"""

from __future__ import annotations

import math
import os
import warnings

import numpy as np

__all__ = [
    "use",
    "active",
    "available",
    "implementations",
    "fu_pow",
    "fu_pow_log",
    "phi_edge",
    "eta_edge",
    "exp_weighted_sum",
    "exp_weighted_moment",
    "theta_series",
    "eta_theta_series",
    "phi_exp_neg",
]

_PI = math.pi
_SQRT3 = math.sqrt(3.0)
_TWO_PI2 = 2.0 * _PI * _PI

# Re(t) above which phi(exp(-t)) uses the series directly; below, the modular
# transform phi(e^-t) = sqrt(2pi/t) exp(t/24 - pi^2/(6t)) phi(e^(-4pi^2/t)).
_DIRECT_RE_T = 0.35
_TAIL_TARGET = 40.0  # exponent giving ~4e-18 term cutoff


def _theta_nterms(re_t: float) -> int:
    # smallest N with (3N^2 - N)/2 * re_t >= tail target
    target = 2.0 * _TAIL_TARGET / re_t
    return int(math.ceil((1.0 + math.sqrt(1.0 + 12.0 * target)) / 6.0)) + 1


# ----------------------------------------------------------------------------
# NumPy lane
# ----------------------------------------------------------------------------


def _np_fu_pow(z: np.ndarray, s: complex) -> np.ndarray:
    uz = (_PI - 3.0 * z) * (2.0 * _PI - 3.0 * z) / (6.0 * _PI * _PI)
    fz = -4.0 * _SQRT3 * np.cos(z) / (1.0 + 2.0 * np.cos(2.0 * z))
    return fz * np.exp(-s * np.log(uz))


def _np_fu_pow_log(z: np.ndarray, s: complex) -> np.ndarray:
    uz = (_PI - 3.0 * z) * (2.0 * _PI - 3.0 * z) / (6.0 * _PI * _PI)
    fz = -4.0 * _SQRT3 * np.cos(z) / (1.0 + 2.0 * np.cos(2.0 * z))
    lg = np.log(uz)
    return -lg * fz * np.exp(-s * lg)


def _np_phi_edge(z: np.ndarray, logq: complex) -> np.ndarray:
    fp = 4.0 * _SQRT3 * np.sin(z) / (1.0 - 2.0 * np.cos(2.0 * z))
    up = 3.0 * z * z / _TWO_PI2 - 1.0 / 24.0
    return fp * np.exp(up * logq)


def _np_eta_edge(z: np.ndarray, tau: complex) -> np.ndarray:
    fp = 4.0 * _SQRT3 * np.sin(z) / (1.0 - 2.0 * np.cos(2.0 * z))
    return fp * np.exp(3.0j * z * z * tau / _PI)


def _np_exp_weighted_sum(v, w, h, s: complex) -> complex:
    return complex(np.dot(w * h, np.exp(s * v)))


def _np_exp_weighted_moment(v, w, h, s: complex) -> complex:
    return complex(np.dot(w * h * v, np.exp(s * v)))


def _np_theta_series(logq: complex, nterms: int) -> complex:
    m = np.arange(1, nterms + 1, dtype=np.float64)
    p1 = (3.0 * m * m - m) / 2.0
    p2 = (3.0 * m * m + m) / 2.0
    signs = np.where(m.astype(np.int64) % 2 == 1, -1.0, 1.0)
    return complex(1.0 + np.sum(signs * (np.exp(p1 * logq) + np.exp(p2 * logq))))


def _np_eta_theta_series(tau: complex, nterms: int) -> complex:
    n = np.arange(-nterms, nterms + 1, dtype=np.float64)
    signs = np.where(np.abs(n.astype(np.int64)) % 2 == 1, -1.0, 1.0)
    return complex(np.sum(signs * np.exp(3.0j * _PI * (n + 1.0 / 6.0) ** 2 * tau)))


def _np_phi_exp_neg(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=np.complex128)
    out = np.empty_like(t)
    direct = t.real >= _DIRECT_RE_T
    if np.any(direct):
        td = t[direct]
        nt = _theta_nterms(float(td.real.min()))
        m = np.arange(1, nt + 1, dtype=np.float64)
        p1 = (3.0 * m * m - m) / 2.0
        p2 = (3.0 * m * m + m) / 2.0
        signs = np.where(m.astype(np.int64) % 2 == 1, -1.0, 1.0)
        ex = np.exp(-np.multiply.outer(td, p1)) + np.exp(-np.multiply.outer(td, p2))
        out[direct] = 1.0 + ex @ signs
    if np.any(~direct):
        tm = t[~direct]
        tp = 4.0 * _PI * _PI / tm
        nt = _theta_nterms(float(tp.real.min()))
        m = np.arange(1, nt + 1, dtype=np.float64)
        p1 = (3.0 * m * m - m) / 2.0
        p2 = (3.0 * m * m + m) / 2.0
        signs = np.where(m.astype(np.int64) % 2 == 1, -1.0, 1.0)
        ex = np.exp(-np.multiply.outer(tp, p1)) + np.exp(-np.multiply.outer(tp, p2))
        inner = 1.0 + ex @ signs
        pref = np.sqrt(2.0 * _PI / tm) * np.exp(tm / 24.0 - _PI * _PI / (6.0 * tm))
        out[~direct] = pref * inner
    return out


_NUMPY_IMPLS = {
    "fu_pow": _np_fu_pow,
    "fu_pow_log": _np_fu_pow_log,
    "phi_edge": _np_phi_edge,
    "eta_edge": _np_eta_edge,
    "exp_weighted_sum": _np_exp_weighted_sum,
    "exp_weighted_moment": _np_exp_weighted_moment,
    "theta_series": _np_theta_series,
    "eta_theta_series": _np_eta_theta_series,
    "phi_exp_neg": _np_phi_exp_neg,
}


# ----------------------------------------------------------------------------
# Numba lane (built lazily so a missing numba only disables this lane)
# ----------------------------------------------------------------------------

_NUMBA_IMPLS: dict | None = None


def _build_numba():
    import cmath

    from numba import njit

    pi = _PI
    sqrt3 = _SQRT3
    two_pi2 = _TWO_PI2
    direct_re_t = _DIRECT_RE_T
    tail = _TAIL_TARGET

    @njit(cache=True)
    def fu_pow(z, s):
        out = np.empty(z.shape[0], dtype=np.complex128)
        for i in range(z.shape[0]):
            zi = z[i]
            uz = (pi - 3.0 * zi) * (2.0 * pi - 3.0 * zi) / (6.0 * pi * pi)
            fz = -4.0 * sqrt3 * cmath.cos(zi) / (1.0 + 2.0 * cmath.cos(2.0 * zi))
            out[i] = fz * cmath.exp(-s * cmath.log(uz))
        return out

    @njit(cache=True)
    def fu_pow_log(z, s):
        out = np.empty(z.shape[0], dtype=np.complex128)
        for i in range(z.shape[0]):
            zi = z[i]
            uz = (pi - 3.0 * zi) * (2.0 * pi - 3.0 * zi) / (6.0 * pi * pi)
            fz = -4.0 * sqrt3 * cmath.cos(zi) / (1.0 + 2.0 * cmath.cos(2.0 * zi))
            lg = cmath.log(uz)
            out[i] = -lg * fz * cmath.exp(-s * lg)
        return out

    @njit(cache=True)
    def phi_edge(z, logq):
        out = np.empty(z.shape[0], dtype=np.complex128)
        for i in range(z.shape[0]):
            zi = z[i]
            fp = 4.0 * sqrt3 * cmath.sin(zi) / (1.0 - 2.0 * cmath.cos(2.0 * zi))
            up = 3.0 * zi * zi / two_pi2 - 1.0 / 24.0
            out[i] = fp * cmath.exp(up * logq)
        return out

    @njit(cache=True)
    def eta_edge(z, tau):
        out = np.empty(z.shape[0], dtype=np.complex128)
        for i in range(z.shape[0]):
            zi = z[i]
            fp = 4.0 * sqrt3 * cmath.sin(zi) / (1.0 - 2.0 * cmath.cos(2.0 * zi))
            out[i] = fp * cmath.exp(3.0j * zi * zi * tau / pi)
        return out

    @njit(cache=True)
    def exp_weighted_sum(v, w, h, s):
        acc = 0.0 + 0.0j
        for i in range(v.shape[0]):
            acc += w[i] * h[i] * cmath.exp(s * v[i])
        return acc

    @njit(cache=True)
    def exp_weighted_moment(v, w, h, s):
        acc = 0.0 + 0.0j
        for i in range(v.shape[0]):
            acc += w[i] * h[i] * v[i] * cmath.exp(s * v[i])
        return acc

    @njit(cache=True)
    def theta_series(logq, nterms):
        acc = 1.0 + 0.0j
        sign = -1.0
        for m in range(1, nterms + 1):
            p1 = (3.0 * m * m - m) / 2.0
            p2 = (3.0 * m * m + m) / 2.0
            acc += sign * (cmath.exp(p1 * logq) + cmath.exp(p2 * logq))
            sign = -sign
        return acc

    @njit(cache=True)
    def eta_theta_series(tau, nterms):
        acc = 0.0 + 0.0j
        for n in range(-nterms, nterms + 1):
            sign = -1.0 if n % 2 else 1.0
            q = n + 1.0 / 6.0
            acc += sign * cmath.exp(3.0j * pi * q * q * tau)
        return acc

    @njit(cache=True)
    def phi_exp_neg(t):
        out = np.empty(t.shape[0], dtype=np.complex128)
        for i in range(t.shape[0]):
            ti = t[i]
            if ti.real >= direct_re_t:
                tt = ti
                pref = 1.0 + 0.0j
            else:
                tt = 4.0 * pi * pi / ti
                pref = cmath.sqrt(2.0 * pi / ti) * cmath.exp(
                    ti / 24.0 - pi * pi / (6.0 * ti)
                )
            target = 2.0 * tail / tt.real
            nt = int(math.ceil((1.0 + math.sqrt(1.0 + 12.0 * target)) / 6.0)) + 1
            acc = 1.0 + 0.0j
            sign = -1.0
            for m in range(1, nt + 1):
                p1 = (3.0 * m * m - m) / 2.0
                p2 = (3.0 * m * m + m) / 2.0
                acc += sign * (cmath.exp(-p1 * tt) + cmath.exp(-p2 * tt))
                sign = -sign
            out[i] = pref * acc
        return out

    return {
        "fu_pow": fu_pow,
        "fu_pow_log": fu_pow_log,
        "phi_edge": phi_edge,
        "eta_edge": eta_edge,
        "exp_weighted_sum": exp_weighted_sum,
        "exp_weighted_moment": exp_weighted_moment,
        "theta_series": theta_series,
        "eta_theta_series": eta_theta_series,
        "phi_exp_neg": phi_exp_neg,
    }


def available() -> tuple[str, ...]:
    try:
        import numba  # noqa: F401

        return ("numba", "numpy")
    except ImportError:
        return ("numpy",)


def implementations(name: str) -> dict:
    """Implementation table for a lane ('numba' or 'numpy'), for benchmarks."""
    global _NUMBA_IMPLS
    if name == "numpy":
        return _NUMPY_IMPLS
    if name == "numba":
        if _NUMBA_IMPLS is None:
            _NUMBA_IMPLS = _build_numba()
        return _NUMBA_IMPLS
    raise ValueError(f"unknown backend {name!r}")


_active: dict = _NUMPY_IMPLS
_active_name = "numpy"


def use(name: str) -> str:
    """Select the active lane; returns the name actually in effect."""
    global _active, _active_name
    if name == "auto":
        name = "numba" if "numba" in available() else "numpy"
    _active = implementations(name)
    _active_name = name
    return name


def active() -> str:
    return _active_name


def fu_pow(z, s):
    """F(z) * u(z)**(-s) over a node array (principal branch)."""
    return _active["fu_pow"](np.ascontiguousarray(z, dtype=np.complex128), complex(s))


def fu_pow_log(z, s):
    """-log(u(z)) * F(z) * u(z)**(-s) over a node array (d/ds of fu_pow)."""
    return _active["fu_pow_log"](
        np.ascontiguousarray(z, dtype=np.complex128), complex(s)
    )


def phi_edge(z, logq):
    """Shifted-comb integrand F'(z) * exp(u'(z) * logq) over a node array."""
    return _active["phi_edge"](
        np.ascontiguousarray(z, dtype=np.complex128), complex(logq)
    )


def eta_edge(z, tau):
    """Shifted-comb integrand F'(z) * exp(3i z^2 tau / pi) over a node array."""
    return _active["eta_edge"](
        np.ascontiguousarray(z, dtype=np.complex128), complex(tau)
    )


def exp_weighted_sum(v, w, h, s):
    """sum_j w_j h_j exp(s v_j)."""
    return complex(
        _active["exp_weighted_sum"](
            np.ascontiguousarray(v, dtype=np.float64),
            np.ascontiguousarray(w, dtype=np.float64),
            np.ascontiguousarray(h, dtype=np.complex128),
            complex(s),
        )
    )


def exp_weighted_moment(v, w, h, s):
    """sum_j w_j h_j v_j exp(s v_j)."""
    return complex(
        _active["exp_weighted_moment"](
            np.ascontiguousarray(v, dtype=np.float64),
            np.ascontiguousarray(w, dtype=np.float64),
            np.ascontiguousarray(h, dtype=np.complex128),
            complex(s),
        )
    )


def theta_series(logq, nterms):
    """phi(q) as the pentagonal theta sum, truncated at block nterms; logq = Log q."""
    return complex(_active["theta_series"](complex(logq), int(nterms)))


def eta_theta_series(tau, nterms):
    """sum_{|n| <= nterms} (-1)^n exp(3 pi i (n + 1/6)^2 tau)."""
    return complex(_active["eta_theta_series"](complex(tau), int(nterms)))


def phi_exp_neg(t):
    """phi(exp(-t)) over an array of t with Re(t) > 0 (modular form for small Re t)."""
    return _active["phi_exp_neg"](np.ascontiguousarray(t, dtype=np.complex128))


_env_choice = os.environ.get("PENTADGF_BACKEND", "auto").strip().lower()
if _env_choice not in ("auto", "numba", "numpy"):
    warnings.warn(
        f"PENTADGF_BACKEND={_env_choice!r} not recognized; using 'auto'",
        RuntimeWarning,
    )
    _env_choice = "auto"
try:
    use(_env_choice)
except ImportError:
    warnings.warn("numba unavailable; falling back to numpy backend", RuntimeWarning)
    use("numpy")

"""Numerics for the Dirichlet generating function of the pentagonal signs.

The library evaluates the entire continuation D*(s) of

    D(s) = sum_{n>=1} a_n n^(-s),   prod_{n>=1} (1 - q^n) = sum a_n q^n,

through several independent routes (line integral, accelerated series,
regularized Mellin transform, exact finite sums at integers, residue
circles), locates its zeros in the critical strip, computes partial sums of
the coefficients by residue counting, and evaluates the Euler function
phi(q) and Dedekind eta(tau) by series and by contour quadrature.

Scalars are ordinary Python complex numbers; exact quantities use
``fractions.Fraction`` and the Q + Q*sqrt(3) wrapper ``AlgebraicValue``.
"""

from ._backend import active as backend_active
from ._backend import use as backend_use
from .contour import (
    CircleSpec,
    EvalResult,
    HankelRectSpec,
    VerticalLineSpec,
    integrate_circle,
    integrate_hankel,
    integrate_vertical,
    winding_number,
)
from .dgf import (
    AsymptoticForms,
    ExactDk,
    MethodTag,
    asymptotic_approx,
    d_explicit,
    d_mellin,
    d_residue_oracle,
    d_series,
    dstar_derivative,
    dstar_integral,
    evaluate,
)
from .errors import (
    BoundaryZeroError,
    ConsistencyError,
    ContourSpecError,
    ConvergenceError,
    DomainError,
    EvaluationError,
    PoleError,
)
from .kernels import (
    E,
    F,
    KernelFn,
    KernelTag,
    f_prime_shift,
    gamma,
    kernel_fn,
    principal_pow,
    u,
    u_prime_shift,
    zeta_real,
)
from .perron import PartialSumResult, partial_sum, partial_sum_oracle, z_minus
from .qfunc import eta_hankel, eta_series, phi_hankel, phi_product_oracle, phi_series
from .sequences import (
    AlgebraicValue,
    CoeffTable,
    bernoulli,
    coeff_a,
    coeff_table,
    g_coeff,
    glaisher_g,
    glaisher_gstar,
    product_oracle_coeffs,
    residue_r,
)
from .zeros import ZeroRecord, count_zeros, find_zeros

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_active",
    "backend_use",
    # kernels
    "F",
    "u",
    "f_prime_shift",
    "u_prime_shift",
    "E",
    "principal_pow",
    "gamma",
    "zeta_real",
    "KernelTag",
    "KernelFn",
    "kernel_fn",
    # sequences
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
    # contour
    "EvalResult",
    "VerticalLineSpec",
    "HankelRectSpec",
    "CircleSpec",
    "integrate_vertical",
    "integrate_hankel",
    "integrate_circle",
    "winding_number",
    # dgf
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
    # perron
    "PartialSumResult",
    "z_minus",
    "partial_sum",
    "partial_sum_oracle",
    # qfunc
    "phi_series",
    "phi_product_oracle",
    "phi_hankel",
    "eta_series",
    "eta_hankel",
    # zeros
    "ZeroRecord",
    "count_zeros",
    "find_zeros",
    # errors
    "EvaluationError",
    "DomainError",
    "PoleError",
    "ContourSpecError",
    "BoundaryZeroError",
    "ConvergenceError",
    "ConsistencyError",
]

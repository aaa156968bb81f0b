"""Nested upper and lower bounds on the Wallis ratio, with errors that halve per order.

The package encloses

* the Wallis ratio ``W(x) = Gamma(x+1) / Gamma(x+1/2)``, ``x > -1/2``;
* the Student density ratio ``r(p) = f_p(0) / f_inf(0)``, ``p = 2x + 1 > 0``;
* the digamma difference ``psi(x+1) - psi(x+1/2)``.

Relative errors of the order-``k`` bounds fall at least like ``2**-k``.
"""

from .core import (
    CROSS_STRATEGY_RTOL,
    K_MAX,
    NATIVE_K_MAX,
    BoundPair,
    ExponentCache,
    OpCount,
    Strategy,
    Target,
    bounds_recursive,
    build_exponent_cache,
    lower_bound,
    min_order_for_tolerance,
    ratio_bounds,
    relative_error_cap,
    rho_star,
    shift_normalize,
    sigma,
    upper_bound_cached,
    upper_bound_direct,
    wallis_bounds,
)
from .digamma import (
    digamma_diff_bounds,
    digamma_error_bound,
    digamma_error_cap_coarse,
    ell,
    logratio_derivative_bounds,
    pochhammer,
    u_bound,
)
from .errors import DomainError, PrecisionInsufficient, ToleranceUnreachable
from .oracle import (
    Enclosure,
    PrecisionConfig,
    digamma_diff_reference,
    ratio_reference,
    wallis_reference,
)
from .rivals import (
    RaceReport,
    RivalReport,
    convergence_race,
    gauss_watson_bounds,
    gauss_watson_lower,
    shanbhag_bounds,
)

__version__ = "0.1.0"

"""Competing bound families for the Wallis ratio, used for convergence comparisons.

* Gauss-Watson: ``W(x) = sqrt(x * 2F1(-1/2, -1/2; x; 1))``.  Every series term
  after the first is positive, so partial sums give increasing lower bounds;
  upper bounds follow from ``W(x) W(x + 1/2) = x + 1/2``.  The tail decays
  only polynomially in the number of terms.
* Shanbhag: after shifting by ``k`` steps, ``Gamma(x+1)/Gamma(x+s)`` lies between
  ``(x+k)^(1-s) R_k`` and ``(x+k+s)^(1-s) R_k`` with
  ``R_k = (x+s)^(k) / (x+1)^(k)`` (rising factorials).  The ratio of the two
  sides is ``((x+k+s)/(x+k))^(1-s)``, so the relative gap only shrinks like ``1/k``.
"""

import math
from dataclasses import dataclass, field

import mpmath

from .core import check_wallis_arg, min_order_for_tolerance, wallis_bounds
from .errors import DomainError, ToleranceUnreachable
from .oracle import wallis_reference

ITERATION_CAP = 10**6
# Above this order the rising-factorial ratio is taken from log-gamma instead of a running product.
_PRODUCT_MAX_K = 2000


@dataclass(frozen=True)
class RivalReport:
    family: str
    parameter: int
    lower: float
    upper: float
    target_ref: float


@dataclass(frozen=True)
class RaceEntry:
    family: str
    parameter: int | None
    capped: bool
    rel_error: float | None


@dataclass
class RaceReport:
    x: float
    eps: float
    entries: dict = field(default_factory=dict)

    def parameter(self, family):
        return self.entries[family].parameter


def _check_positive_x(x):
    check_wallis_arg(x)
    if not x > 0:
        raise DomainError(f"the Gauss-Watson series needs x > 0, got {x!r}")


def _gw_partial_sums(x):
    """Yield S_1, S_2, ... for 2F1(-1/2, -1/2; x; 1)."""
    term = 1.0
    total = 1.0
    m = 0
    while True:
        yield total
        term *= (m - 0.5) ** 2 / ((x + m) * (m + 1))
        total += term
        m += 1


def gauss_watson_lower(x, n_terms):
    """``sqrt(x * S_n)`` with ``S_n`` the ``n``-term partial sum; increases to ``W(x)``."""
    _check_positive_x(x)
    if isinstance(n_terms, bool) or int(n_terms) != n_terms or n_terms < 1:
        raise DomainError("n_terms must be a positive integer")
    sums = _gw_partial_sums(float(x))
    for _ in range(int(n_terms) - 1):
        next(sums)
    return math.sqrt(next(sums) * x)


def gauss_watson_bounds(x, n_terms):
    lower = gauss_watson_lower(x, n_terms)
    upper = (x + 0.5) / gauss_watson_lower(x + 0.5, n_terms)
    return RivalReport("GaussWatson", int(n_terms), lower, upper, float(wallis_reference(x).mid))


def _rising_ratio(a, b, k):
    """(a)^(k) / (b)^(k) for positive a, b."""
    if k <= _PRODUCT_MAX_K:
        out = 1.0
        for i in range(k):
            out *= (a + i) / (b + i)
        return out
    ctx = mpmath.MPContext()
    ctx.dps = 30
    a, b = ctx.mpf(a), ctx.mpf(b)
    return float(ctx.exp(ctx.loggamma(a + k) - ctx.loggamma(a) - ctx.loggamma(b + k) + ctx.loggamma(b)))


def _shanbhag_pair(x, s, k):
    R = _rising_ratio(x + s, x + 1, k)
    return (x + k) ** (1 - s) * R, (x + k + s) ** (1 - s) * R


def shanbhag_bounds(x, s=0.5, k=1):
    """Bounds ``alpha_k <= Gamma(x+1)/Gamma(x+s) <= beta_k``; at ``s = 1/2`` the target is ``W(x)``."""
    if not x >= 0:
        raise DomainError(f"x must be nonnegative, got {x!r}")
    if not 0 < s < 1:
        raise DomainError(f"s must lie in (0, 1), got {s!r}")
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise DomainError("k must be a positive integer")
    x, s, k = float(x), float(s), int(k)
    alpha, beta = _shanbhag_pair(x, s, k)
    if s == 0.5:
        target = float(wallis_reference(x).mid)
    else:
        ctx = mpmath.MPContext()
        ctx.dps = 30
        target = float(ctx.gammaprod([x + 1], [x + s]))
    return RivalReport("Shanbhag", k, alpha, beta, target)


def gauss_watson_parameter(x, eps, w_ref=None, cap=ITERATION_CAP):
    """Fewest series terms putting both Gauss-Watson sides within relative ``eps``."""
    _check_positive_x(x)
    w = float(wallis_reference(x).mid) if w_ref is None else w_ref
    lo_sums, hi_sums = _gw_partial_sums(float(x)), _gw_partial_sums(float(x) + 0.5)
    err = None
    for n in range(1, cap + 1):
        lower = math.sqrt(next(lo_sums) * x)
        upper = (x + 0.5) / math.sqrt(next(hi_sums) * (x + 0.5))
        err = max((w - lower) / w, (upper - w) / w)
        if err < eps:
            return RaceEntry("GaussWatson", n, False, err)
    return RaceEntry("GaussWatson", cap, True, err)


def shanbhag_parameter(x, eps, s=0.5, w_ref=None, cap=ITERATION_CAP):
    """Smallest Shanbhag order with both sides within relative ``eps`` (bisection; errors fall in k)."""
    w = float(wallis_reference(x).mid) if w_ref is None else w_ref

    def err(k):
        alpha, beta = _shanbhag_pair(float(x), s, k)
        return max((w - alpha) / w, (beta - w) / w)

    top = err(cap)
    if top >= eps:
        return RaceEntry("Shanbhag", cap, True, top)
    lo, hi = 0, cap  # err(lo) >= eps is assumed for lo == 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if err(mid) < eps:
            hi = mid
        else:
            lo = mid
    return RaceEntry("Shanbhag", hi, False, err(hi))


def convergence_race(x, eps, cap=ITERATION_CAP):
    """Parameter each family needs for relative error below ``eps`` at ``x``.

    The ``"Geometric"`` entry is this package's certified order from
    :func:`~wallisbounds.core.min_order_for_tolerance`, with the relative
    error it actually attains.
    """
    _check_positive_x(x)
    if not 0 < eps < 1:
        raise DomainError(f"eps must lie in (0, 1), got {eps!r}")
    w = float(wallis_reference(x).mid)
    report = RaceReport(float(x), float(eps))
    try:
        k = min_order_for_tolerance(2 * x + 1, eps)
        b = wallis_bounds(x, k)
        report.entries["Geometric"] = RaceEntry("Geometric", k, False, max((w - b.lower) / w, (b.upper - w) / w))
    except ToleranceUnreachable:
        report.entries["Geometric"] = RaceEntry("Geometric", None, True, None)
    report.entries["GaussWatson"] = gauss_watson_parameter(x, eps, w, cap)
    report.entries["Shanbhag"] = shanbhag_parameter(x, eps, 0.5, w, cap)
    return report

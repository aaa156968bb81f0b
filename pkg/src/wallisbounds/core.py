r"""Upper and lower bound sequences on the Student density ratio and the Wallis ratio.

The targets are

.. math::

    r(p) = \sqrt{2/p}\, W\!\left(\tfrac{p-1}{2}\right), \qquad
    W(x) = \frac{\Gamma(x+1)}{\Gamma(x+\frac12)}, \qquad p = 2x + 1 .

For every order ``k`` the algebraic bounds ``L_k(p) < r(p) < U_k(p)`` tighten
geometrically in ``k``.  ``U_k`` can be evaluated three ways:

* ``Strategy.DIRECT``: the weighted sum of alternating binomial sums of
  logarithms, ``O(k**2)`` operations;
* ``Strategy.RECURSIVE``: the square-root recursion on ``V_k(p) = sqrt(p) U_k(p)``,
  evaluated bottom-up over the shifted points ``p, p+1, ..., p+k+1``;
* ``Strategy.CACHED``: the product form driven by the integer exponent table
  ``H_{j,k}``, ``O(k)`` operations per point once the table is built.

All routines accept ``digits``.  ``None`` means native doubles, with an
automatic switch to software arithmetic for orders above ``NATIVE_K_MAX``
(the result is still returned as a float).  An integer requests that many
significant decimal digits and returns :class:`mpmath.mpf` values.
"""

import enum
import functools
import math
from dataclasses import dataclass
from math import comb

import mpmath

from ._arith import Arith, log_abs
from .errors import DomainError, ToleranceUnreachable

K_MAX = 64
NATIVE_K_MAX = 12
# Relative agreement required between strategies in native precision, k <= NATIVE_K_MAX.
CROSS_STRATEGY_RTOL = 1e-12

_LN2 = math.log(2.0)


class Strategy(enum.Enum):
    DIRECT = "direct"
    RECURSIVE = "recursive"
    CACHED = "cached"


class Target(enum.Enum):
    RATIO = "r"
    WALLIS = "W"
    LOG_RATIO_DERIV = "dlnr"
    DIGAMMA_DIFF = "psi_diff"


@dataclass(frozen=True)
class BoundPair:
    """An enclosure ``lower <= target <= upper`` at order ``order``."""

    lower: object
    upper: object
    order: int
    target: Target

    @property
    def width(self):
        return self.upper - self.lower

    @property
    def midpoint(self):
        return (self.lower + self.upper) / 2

    def contains(self, value):
        return self.lower <= value <= self.upper

    def strictly_inside(self, other):
        """True when this enclosure lies strictly within ``other``."""
        return other.lower < self.lower and self.upper < other.upper


@dataclass
class OpCount:
    """Caller-owned tally of elementary operations.

    ``pows`` counts exponentials and square roots; divisions count as
    multiplications and subtractions as additions.
    """

    logs: int = 0
    mults: int = 0
    adds: int = 0
    pows: int = 0

    @property
    def arithmetic(self):
        return self.mults + self.adds

    def __iadd__(self, other):
        self.logs += other.logs
        self.mults += other.mults
        self.adds += other.adds
        self.pows += other.pows
        return self


@dataclass(frozen=True)
class ExponentCache:
    """Row ``H[j] = H_{j,k}``, ``j = 0..k``, of the integer exponent table."""

    k: int
    H: tuple

    @property
    def alternating_sum(self):
        return sum(h if j % 2 == 0 else -h for j, h in enumerate(self.H))


# -- argument checks ---------------------------------------------------------


def _is_real(value):
    try:
        return not mpmath.isnan(value) and not mpmath.isinf(value)
    except TypeError:
        return False


def check_dof(p):
    if not _is_real(p) or math.isinf(float(p)):
        raise DomainError(f"p must be a finite real number, got {p!r}")
    if not p > 0:
        raise DomainError(f"p must be positive, got {p!r}")
    return p


def check_wallis_arg(x):
    if not _is_real(x) or math.isinf(float(x)):
        raise DomainError(f"x must be a finite real number, got {x!r}")
    if not x > -0.5:
        raise DomainError(f"x must exceed -0.5, got {x!r}")
    return x


def check_order(k, k_max=K_MAX):
    if isinstance(k, bool):
        raise DomainError("order must be an integer")
    try:
        k = int(k) if int(k) == k else None
    except (TypeError, ValueError):
        k = None
    if k is None or k < 0 or k > k_max:
        raise DomainError(f"order must be an integer in [0, {k_max}]")
    return k


def _tally(tally, logs=0, mults=0, adds=0, pows=0):
    if tally is not None:
        tally.logs += logs
        tally.mults += mults
        tally.adds += adds
        tally.pows += pows


# -- working precision -------------------------------------------------------


def _guard_digits(p, k):
    # Rounding error of ln U_k is at most eps * k * max|ln(p+j)| / 2 for both
    # the direct and the cached sums.
    lmax = max(abs(log_abs(p)), abs(math.log(float(p) + k + 1)), 1.0)
    return int(math.ceil(math.log10(1.0 + k * lmax))) + 3


def _working(p, k, digits):
    """Pick the arithmetic for an order-k evaluation; second item: return floats."""
    if digits is None:
        if k <= NATIVE_K_MAX:
            return Arith(), False
        return Arith(17 + _guard_digits(p, k)), True
    return Arith(int(digits) + _guard_digits(p, k)), False


def _out(value, as_float):
    return float(value) if as_float else value


# -- kernels (arguments already converted to the working arithmetic) --------


# Alternating sums below use log1p(j/p) in place of ln(p+j): the ln(p) parts
# carry coefficients summing to zero, and dropping them removes most of the
# cancellation when p is large.


def _sigma(A, p, m, tally=None):
    total = A.num(0)
    for j in range(m + 1):
        term = comb(m, j) * A.log1p(j / p)
        total = total + term if j % 2 == 0 else total - term
    _tally(tally, logs=m + 1, mults=m + 1, adds=m)
    return total


def _upper_direct(A, p, k, tally=None):
    s = A.num(0)
    for m in range(1, k + 1):
        s += A.ldexp(_sigma(A, p, m, tally), -1 - m)
        _tally(tally, mults=1, adds=1)
    _tally(tally, pows=1)
    return A.exp(s)


def _upper_cached(A, p, H, tally=None):
    s = A.num(0)
    for j, h in enumerate(H):
        term = A.num(h) * A.log1p(j / p)
        s = s + term if j % 2 == 0 else s - term
    k = len(H) - 1
    _tally(tally, logs=k + 1, mults=k + 2, adds=k, pows=1)
    return A.exp(A.ldexp(s, -(k + 1)))


def _recursive_pair(A, p, k, tally=None):
    # Level i holds V_i(p + j) for j = 0..k+1-i; the last level gives V_k(p), V_k(p+1).
    V = [A.sqrt(p + j) for j in range(k + 2)]
    _tally(tally, pows=k + 2, adds=k + 1)
    for _ in range(k):
        V = [A.sqrt((p + j) * V[j] / V[j + 1]) for j in range(len(V) - 1)]
        n = len(V)
        _tally(tally, mults=2 * n, adds=n, pows=n)
    root_p = A.sqrt(p)
    _tally(tally, mults=2, pows=1)
    return root_p / V[1], V[0] / root_p


def _lower_from_shifted_upper(A, p, u_next, tally=None):
    _tally(tally, mults=2, adds=1, pows=1)
    return A.sqrt(p / (p + 1)) / u_next


def _ratio_pair(A, p, k, strategy, tally=None):
    if strategy is Strategy.RECURSIVE:
        return _recursive_pair(A, p, k, tally)
    if strategy is Strategy.DIRECT:
        upper = _upper_direct(A, p, k, tally)
        u_next = _upper_direct(A, p + 1, k, tally)
    else:
        H = _exponent_cache(k).H
        upper = _upper_cached(A, p, H, tally)
        u_next = _upper_cached(A, p + 1, H, tally)
    return _lower_from_shifted_upper(A, p, u_next, tally), upper


# -- public operations -------------------------------------------------------


def sigma(p, m, digits=None, tally=None):
    r"""Alternating binomial sum :math:`\sum_{j=0}^m (-1)^j \binom{m}{j} \ln(p+j)`.

    This is minus the m-th forward difference of ``ln`` at ``p``, so it is
    negative for every ``m >= 1``.  In native precision roughly
    ``m * log2(2p)`` bits cancel; pass ``digits`` to get a trustworthy value
    for large ``m``.
    """
    check_dof(p)
    if isinstance(m, bool) or int(m) != m or m < 1 or m > K_MAX:
        raise DomainError(f"m must be an integer in [1, {K_MAX}]")
    m = int(m)
    if digits is None:
        return _sigma(Arith(), float(p), m, tally)
    # Mean-value form: |sigma| >= (m-1)!/(p+m)^m, terms are at most 2^m max|ln(p+j)|.
    lmax = max(abs(log_abs(p)), abs(math.log(float(p) + m)), 1.0)
    loss = (m * _LN2 + math.log(lmax) - math.lgamma(m) + m * math.log(float(p) + m)) / math.log(10)
    A = Arith(int(digits) + max(0, int(math.ceil(loss))) + 5)
    return _sigma(A, A.num(p), m, tally)


def upper_bound_direct(p, k, digits=None, tally=None):
    """``U_k(p)`` from its defining sum; ``U_0(p) = 1``."""
    check_dof(p)
    k = check_order(k)
    A, as_float = _working(p, k, digits)
    return _out(_upper_direct(A, A.num(p), k, tally), as_float)


def lower_bound(p, k, strategy=Strategy.DIRECT, digits=None, tally=None):
    """``L_k(p) = sqrt(p/(p+1)) / U_k(p+1)``."""
    return ratio_bounds(p, k, strategy, digits, tally).lower


def build_exponent_cache(k):
    """Exponent row ``H_{0,k}, ..., H_{k,k}`` from ``H_{j,j} = [j >= 1]``,
    ``H_{j,k+1} = 2 H_{j,k} + C(k+1, j)``.

    Python integers are unbounded, so no overflow path exists.
    """
    return _exponent_cache(check_order(k))


@functools.lru_cache(maxsize=None)
def _exponent_cache(k):
    H = [0]
    pascal = [1]  # row n of Pascal's triangle, advanced by the additive recurrence
    for n in range(1, k + 1):
        pascal = [1] + [pascal[j - 1] + pascal[j] for j in range(1, n)] + [1]
        H = [2 * H[j] + pascal[j] for j in range(n)] + [1]
    return ExponentCache(k, tuple(H))


def upper_bound_cached(p, cache, tally=None, digits=None):
    """``U_k(p)`` from the product form; exactly ``k + 1`` logarithms per call."""
    check_dof(p)
    A, as_float = _working(p, cache.k, digits)
    return _out(_upper_cached(A, A.num(p), cache.H, tally), as_float)


def bounds_recursive(p, k, digits=None, tally=None):
    """``{L_k(p), U_k(p)}`` from the square-root recursion on ``V_k``."""
    return ratio_bounds(p, k, Strategy.RECURSIVE, digits, tally)


def ratio_bounds(p, k, strategy=Strategy.CACHED, digits=None, tally=None):
    """Enclosure ``L_k(p) < r(p) < U_k(p)`` of the Student density ratio."""
    check_dof(p)
    k = check_order(k)
    strategy = Strategy(strategy)
    A, as_float = _working(p, k, digits)
    lower, upper = _ratio_pair(A, A.num(p), k, strategy, tally)
    return BoundPair(_out(lower, as_float), _out(upper, as_float), k, Target.RATIO)


def wallis_bounds(x, k, strategy=Strategy.CACHED, digits=None, tally=None):
    """Enclosure of ``W(x) = Gamma(x+1)/Gamma(x+1/2)`` via ``p = 2x + 1``."""
    check_wallis_arg(x)
    k = check_order(k)
    strategy = Strategy(strategy)
    A, as_float = _working(2 * float(x) + 1, k, digits)
    p = 2 * A.num(x) + 1
    lower, upper = _ratio_pair(A, p, k, strategy, tally)
    scale = A.sqrt(p / 2)
    return BoundPair(_out(lower * scale, as_float), _out(upper * scale, as_float), k, Target.WALLIS)


def shift_normalize(x, x_min, digits=None):
    """Shift ``x`` up by the smallest integer ``m >= 0`` reaching ``x_min``.

    Returns ``(x + m, factor)`` with ``W(x) = W(x + m) * factor``, where
    ``factor = (x+1/2)^(m) / (x+1)^(m)`` is accumulated as a running product of
    ratios close to one.
    """
    check_wallis_arg(x)
    A = Arith(digits)
    x = A.num(x)
    m = max(0, math.ceil(float(x_min - x)))
    while x + m < x_min:
        m += 1
    factor = A.num(1)
    for j in range(m):
        factor *= (x + 0.5 + j) / (x + 1 + j)
    return x + m, factor


def _ln_branch(p):
    """ln((p+1)/p) as a float."""
    pf = float(p)
    inv = 1.0 / pf if pf > 0 else math.inf
    if math.isfinite(inv):
        return math.log1p(inv)
    return -log_abs(p)


def log_rho_star(p, k):
    """Natural log of ``rho_star(p, k)``, finite even where the value underflows."""
    check_dof(p)
    log_fact = math.lgamma(k + 2) - (k + 1) * log_abs(p)
    log_ln = math.log(_ln_branch(p))
    return min(log_fact, log_ln) - (k + 1) * _LN2


def rho_star(p, k):
    r"""Log-space error cap :math:`2^{-(k+1)} \min((k+1)!/p^{k+1},\ \ln\frac{p+1}{p})`.

    The factorial branch is formed in log space; on the logarithmic branch the
    value halves exactly from ``k`` to ``k + 1``.
    """
    check_dof(p)
    if isinstance(k, bool) or int(k) != k or k < 0:
        raise DomainError("order must be a nonnegative integer")
    k = int(k)
    log_fact = math.lgamma(k + 2) - (k + 1) * log_abs(p)
    ln_branch = _ln_branch(p)
    if log_fact < math.log(ln_branch):
        return math.exp(log_fact - (k + 1) * _LN2)
    return math.ldexp(ln_branch, -(k + 1))


def relative_error_cap(p, k, digits=None):
    """``exp(rho_star) - 1``: bounds both relative errors of ``U_k`` and ``L_k``."""
    rho = rho_star(p, k)
    if digits is None:
        return math.expm1(rho)
    A = Arith(digits)
    return A.expm1(A.num(rho))


def min_order_for_tolerance(p, eps):
    """Smallest ``k <= K_MAX`` whose certified relative error cap is below ``eps``."""
    check_dof(p)
    if not 0 < eps < 1:
        raise DomainError(f"eps must lie in (0, 1), got {eps!r}")
    for k in range(K_MAX + 1):
        if relative_error_cap(p, k) < eps:
            return k
    raise ToleranceUnreachable(f"no order <= {K_MAX} reaches relative error {eps!r} at p={p!r}")

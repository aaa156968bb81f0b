r"""Rational bounds on :math:`\frac{d}{dp}\ln r(p)` and on :math:`\psi(x+1)-\psi(x+\frac12)`.

With ``p = 2x + 1``::

    ell_k(p) < d/dp ln r(p) < u_k(p),
    ell_k(p) = sum_{m=1}^{k} 2^(-1-m) m! / p^(m+1)        (rising factorial)
    u_k(p)   = 1/(2p(p+1)) - ell_k(p+1)

and ``psi(x+1) - psi(x+1/2)`` is enclosed by ``1/p + 2 ell_k(p)`` and
``1/p + 2 u_k(p)``.  Every summand is positive, so native doubles are
adequate at all orders.
"""

from ._arith import Arith
from .core import BoundPair, Target, check_dof, check_order, check_wallis_arg


def pochhammer(y, m, digits=None):
    """Rising factorial ``y (y+1) ... (y+m-1)``; ``pochhammer(y, 0) == 1``."""
    if isinstance(m, bool) or int(m) != m or m < 0:
        raise ValueError("m must be a nonnegative integer")
    A = Arith(digits)
    y = A.num(y)
    out = A.num(1)
    for j in range(int(m)):
        out *= y + j
    return out


def _ell(A, p, k):
    # a_1 = 1/(4 p (p+1)); a_{m+1} = a_m (m+1) / (2 (p+m+1))
    total = A.num(0)
    if k == 0:
        return total
    a = 1 / (4 * p * (p + 1))
    for m in range(1, k + 1):
        total += a
        a = a * (m + 1) / (2 * (p + m + 1))
    return total


def _u(A, p, k):
    return 1 / (2 * p * (p + 1)) - _ell(A, p + 1, k)


def _error_bound(A, p, k):
    # 2^{-k-1} (k+1)! / p^{(k+2)} as a product of k+2 factors
    out = 1 / (2 * p * (p + 1))
    for j in range(1, k + 1):
        out = out * (j + 1) / (2 * (p + j + 1))
    return out


def ell(p, k, digits=None):
    """Lower bound ``ell_k(p)`` on ``d/dp ln r(p)``; ``ell_0 = 0``."""
    check_dof(p)
    k = check_order(k)
    A = Arith(digits)
    return _ell(A, A.num(p), k)


def u_bound(p, k, digits=None):
    """Upper bound ``u_k(p) = 1/(2p(p+1)) - ell_k(p+1)``."""
    check_dof(p)
    k = check_order(k)
    A = Arith(digits)
    return _u(A, A.num(p), k)


def logratio_derivative_bounds(p, k, digits=None):
    check_dof(p)
    k = check_order(k)
    A = Arith(digits)
    p = A.num(p)
    return BoundPair(_ell(A, p, k), _u(A, p, k), k, Target.LOG_RATIO_DERIV)


def digamma_diff_bounds(x, k, digits=None):
    """Enclosure of ``psi(x+1) - psi(x+1/2)``, nested and shrinking in ``k``."""
    check_wallis_arg(x)
    k = check_order(k)
    A = Arith(digits)
    p = 2 * A.num(x) + 1
    base = 1 / p
    return BoundPair(base + 2 * _ell(A, p, k), base + 2 * _u(A, p, k), k, Target.DIGAMMA_DIFF)


def digamma_error_bound(p, k, digits=None):
    """``2^{-k-1} (k+1)! / p^{(k+2)}``.

    Both one-sided errors of ``ell_k`` and ``u_k`` lie strictly below this
    value.  It also equals ``u_k(p) - ell_k(p)`` identically, so the full
    enclosure width attains it.
    """
    check_dof(p)
    k = check_order(k)
    A = Arith(digits)
    return _error_bound(A, A.num(p), k)


def digamma_error_cap_coarse(p, k):
    """Cruder cap ``2^{-k-1} / p``, never below :func:`digamma_error_bound`."""
    check_dof(p)
    k = check_order(k)
    return 2.0 ** (-k - 1) / p

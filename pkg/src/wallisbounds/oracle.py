"""Extended-precision reference enclosures.

References are produced by driving the convergent bound sequences of
:mod:`wallisbounds.core` and :mod:`wallisbounds.digamma` to a deep order in
software arithmetic.  No external gamma or digamma implementation is used;
independent checks come from closed forms at integer and half-integer points
and from the product identities (see the test suite).
"""

import math
from dataclasses import dataclass

from ._arith import Arith
from .core import (
    Strategy,
    _guard_digits,
    _ratio_pair,
    check_dof,
    check_wallis_arg,
    log_rho_star,
)
from .digamma import _ell, _u
from .errors import PrecisionInsufficient

_LN10 = math.log(10.0)
# Endpoints are pushed outward by this many units of the requested precision.
SLACK_ULPS = 10


@dataclass(frozen=True)
class PrecisionConfig:
    digits: int = 50
    squeeze_order: int | None = None

    def __post_init__(self):
        if self.digits < 30:
            raise ValueError("oracle precision needs at least 30 digits")
        if self.squeeze_order is not None and self.squeeze_order < 0:
            raise ValueError("squeeze_order must be nonnegative")


@dataclass(frozen=True)
class Enclosure:
    lo: object
    hi: object
    certified: bool
    digits: int

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def rel_width(self):
        return self.width / abs(self.mid)

    def contains(self, value):
        return self.lo <= value <= self.hi


def ratio_squeeze_order(p, digits):
    """Smallest K whose relative error cap at ``p`` is below ``10**-(digits-5)``."""
    target = -(digits - 5) * _LN10
    K = 0
    while log_rho_star(p, K) >= target:
        K += 1
    return K


def digamma_squeeze_order(p, digits):
    """Smallest K with ``2 * 2^{-K-1} (K+1)! / p^{(K+2)} < 10**-(digits-5) / p``."""
    pf = float(p)
    target = -(digits - 5) * _LN10 - math.log(pf)
    # log of 2 * bound at K = 0, i.e. log(1 / (p (p+1)))
    log_b = -math.log(pf) - math.log(pf + 1)
    K = 0
    while log_b >= target:
        K += 1
        log_b += math.log(K + 1) - math.log(2.0) - math.log(pf + K + 1)
    return K


def _widen(A, lo, hi, digits):
    slack = SLACK_ULPS * Arith(digits).eps
    return lo * (1 - slack), hi * (1 + slack)


def _check_width(enc, digits):
    if enc.rel_width >= 10.0 ** -(digits - 8):
        raise PrecisionInsufficient(
            f"enclosure relative width {float(enc.rel_width):.3g} misses the "
            f"{digits}-digit target; raise digits or squeeze_order"
        )
    return enc


def _ratio_enclosure(p, cfg):
    K = cfg.squeeze_order if cfg.squeeze_order is not None else ratio_squeeze_order(p, cfg.digits)
    A = Arith(cfg.digits + _guard_digits(p, K) + 5)
    pa = A.num(p)
    lower, upper = _ratio_pair(A, pa, K, Strategy.CACHED)
    return A, lower, upper


def ratio_reference(p, cfg=None):
    """Enclosure of the Student density ratio ``r(p)`` at ``cfg.digits`` digits."""
    check_dof(p)
    cfg = cfg or PrecisionConfig()
    A, lower, upper = _ratio_enclosure(p, cfg)
    lo, hi = _widen(A, lower, upper, cfg.digits)
    return _check_width(Enclosure(lo, hi, True, cfg.digits), cfg.digits)


def wallis_reference(x, cfg=None):
    """Enclosure of ``W(x) = Gamma(x+1)/Gamma(x+1/2)``, scaled from ``r(2x+1)``."""
    check_wallis_arg(x)
    cfg = cfg or PrecisionConfig()
    # 2x+1 is exact at this precision for any double or short decimal x.
    p = 2 * Arith(cfg.digits + 20).num(x) + 1
    A, lower, upper = _ratio_enclosure(p, cfg)
    scale = A.sqrt(A.num(p) / 2)
    lo, hi = _widen(A, lower * scale, upper * scale, cfg.digits)
    return _check_width(Enclosure(lo, hi, True, cfg.digits), cfg.digits)


def digamma_diff_reference(x, cfg=None):
    """Enclosure of ``psi(x+1) - psi(x+1/2)``."""
    check_wallis_arg(x)
    cfg = cfg or PrecisionConfig()
    A = Arith(cfg.digits + 10)
    p = 2 * A.num(x) + 1
    K = cfg.squeeze_order if cfg.squeeze_order is not None else digamma_squeeze_order(p, cfg.digits)
    base = 1 / p
    lo, hi = _widen(A, base + 2 * _ell(A, p, K), base + 2 * _u(A, p, K), cfg.digits)
    return _check_width(Enclosure(lo, hi, True, cfg.digits), cfg.digits)

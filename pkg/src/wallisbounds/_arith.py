"""Precision-parameterized real arithmetic.

Every bound routine in the package is written once against an :class:`Arith`
instance, which is either native IEEE doubles (the :mod:`math` module) or a
private :class:`mpmath.MPContext` at a requested number of decimal digits.
A private context per call keeps extended-precision work free of shared
global state.
"""

import math
import sys

import mpmath


class Arith:
    """Elementary functions at a fixed working precision.

    ``digits=None`` selects native doubles.
    """

    def __init__(self, digits=None):
        self.digits = digits
        if digits is None:
            self.ctx = None
            self.num = float
            self.log = math.log
            self.exp = math.exp
            self.expm1 = math.expm1
            self.log1p = math.log1p
            self.sqrt = math.sqrt
            self.eps = sys.float_info.epsilon
        else:
            if digits < 1:
                raise ValueError("digits must be positive")
            ctx = mpmath.MPContext()
            ctx.dps = int(digits)
            self.ctx = ctx
            self.num = ctx.mpf
            self.log = ctx.log
            self.exp = ctx.exp
            self.expm1 = ctx.expm1
            self.log1p = ctx.log1p
            self.sqrt = ctx.sqrt
            self.eps = ctx.eps

    @property
    def native(self):
        return self.ctx is None

    def ldexp(self, value, n):
        """value * 2**n, exact in both arithmetics."""
        if self.ctx is None:
            return math.ldexp(value, n)
        return self.ctx.ldexp(value, n)

    def __repr__(self):
        return "Arith(native)" if self.native else f"Arith(digits={self.digits})"


def log_abs(value):
    """Natural log of |value| as a float, safe for mpf values beyond the double range."""
    if isinstance(value, (int, float)):
        return math.log(abs(value))
    return float(mpmath.log(abs(mpmath.mpf(value))))

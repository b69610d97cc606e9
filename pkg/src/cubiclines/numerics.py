"""Precision policy shared by every module that touches real arithmetic.

All high-precision work goes through mpmath.  A "precision" is always a
number of significant decimal digits; internal evaluations carry extra
guard digits so that results are trustworthy to the declared precision.
"""
from __future__ import annotations

import contextlib

from mpmath import mp, mpf

DEFAULT_PRECISION = 128   # significant decimal digits
MIN_PRECISION = 30
GUARD_DIGITS = 20


class PrecisionError(RuntimeError):
    """Declared precision is too low for the requested operation."""


class DegenerateInputError(ValueError):
    """Coincident or duplicate points where distinct ones are required."""


class PoleError(ValueError):
    """Argument too close to a pole of the cotangent."""


def check_precision(precision: int) -> int:
    if precision < MIN_PRECISION:
        raise ValueError(
            f"precision must be at least {MIN_PRECISION} digits, got {precision}")
    return int(precision)


def as_mpf(value) -> mpf:
    """Convert to mpf, but never re-round a value that already is one.

    mpf(x) rounds to the ambient working precision even when x is an mpf,
    which would silently destroy guard digits outside a precision context.
    """
    return value if isinstance(value, mpf) else mpf(value)


@contextlib.contextmanager
def working_precision(precision: int):
    """mpmath context at `precision` plus guard digits."""
    check_precision(precision)
    with mp.workdps(precision + GUARD_DIGITS):
        yield


def default_tolerance(precision: int) -> mpf:
    """Comparison tolerance 10^(-precision/2).

    Half the digit budget goes to generation error, half to comparison,
    so equality and collinearity decisions stay decisive.
    """
    check_precision(precision)
    return mpf(10) ** -(precision // 2)

"""Arbitrary-precision points on the singular cubic y^2 = x^3 - x^2.

The non-singular locus of the curve, together with the vertical point at
infinity, carries a circle-group structure; the fraction t = i/n of a
full turn maps to the affine point (c^2 + 1, c (c^2 + 1)) with
c = cot(pi t), and t = 0 maps to the point at infinity.  Chords of the
curve realize the zero-sum lines of the residue model, which is what
makes these configurations free of four collinear points.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp, mpf

from .numerics import (
    DEFAULT_PRECISION,
    DegenerateInputError,
    PoleError,
    PrecisionError,
    as_mpf,
    check_precision,
    default_tolerance,
    working_precision,
)

# absolute distance (radians) to a pole of cot below which evaluation is refused
POLE_MARGIN = 1e-12


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """Homogeneous coordinate triple (X : Y : Z), not all zero.

    Canonical form scales the last nonzero coordinate of (Z, Y, X) to 1,
    so affine points read (x : y : 1) and the vertical point at infinity
    is (0 : 1 : 0).
    """

    X: mpf
    Y: mpf
    Z: mpf

    def __post_init__(self) -> None:
        for name in ("X", "Y", "Z"):
            object.__setattr__(self, name, as_mpf(getattr(self, name)))
        if self.X == 0 and self.Y == 0 and self.Z == 0:
            raise ValueError("(0, 0, 0) is not a projective point")

    def is_canonical(self) -> bool:
        for c in (self.Z, self.Y, self.X):
            if c != 0:
                return c == 1
        return False

    def canonical(self, precision: int = DEFAULT_PRECISION) -> "ProjectivePoint":
        """Idempotent; division runs at `precision` plus guard digits."""
        if self.is_canonical():
            return self
        with working_precision(precision):
            for c in (self.Z, self.Y, self.X):
                if c != 0:
                    return ProjectivePoint(self.X / c, self.Y / c, self.Z / c)
        raise AssertionError("unreachable: some coordinate is nonzero")

    def is_infinite(self) -> bool:
        return self.Z == 0

    def affine(self) -> tuple[mpf, mpf]:
        if self.Z == 0:
            raise ValueError(f"{self} is at infinity")
        p = self.canonical()
        return p.X, p.Y

    def as_float_triple(self) -> tuple[float, float, float]:
        return float(self.X), float(self.Y), float(self.Z)

    def __repr__(self) -> str:
        return f"({mp.nstr(self.X, 8)} : {mp.nstr(self.Y, 8)} : {mp.nstr(self.Z, 8)})"


def point_at_infinity() -> ProjectivePoint:
    """The vertical direction (0 : 1 : 0), on every line x = const."""
    return ProjectivePoint(mpf(0), mpf(1), mpf(0))


def points_equal(p: ProjectivePoint, q: ProjectivePoint, tol: mpf) -> bool:
    """Max-norm comparison of canonical forms."""
    p = p.canonical()
    q = q.canonical()
    return (abs(p.X - q.X) < tol and abs(p.Y - q.Y) < tol
            and abs(p.Z - q.Z) < tol)


class PointConfiguration:
    """Indexed list of pairwise-distinct canonical projective points."""

    def __init__(self, points, precision: int = DEFAULT_PRECISION,
                 provenance: int | None = None):
        check_precision(precision)
        self.precision = int(precision)
        self.provenance = provenance
        self.points: tuple[ProjectivePoint, ...] = tuple(
            p.canonical(precision) for p in points)
        self._check_distinct()

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, index: int) -> ProjectivePoint:
        return self.points[index]

    def __iter__(self):
        return iter(self.points)

    def tolerance(self) -> mpf:
        return default_tolerance(self.precision)

    def _check_distinct(self) -> None:
        n = len(self.points)
        if n < 2:
            return
        # float prefilter: only near-coincident pairs get the exact test
        arr = np.array([p.as_float_triple() for p in self.points])
        dist = np.abs(arr[:, None, :] - arr[None, :, :]).max(axis=2)
        close_i, close_j = np.nonzero(dist < 1e-3)
        tol = self.tolerance()
        for i, j in zip(close_i.tolist(), close_j.tolist()):
            if i < j and points_equal(self.points[i], self.points[j], tol):
                raise DegenerateInputError(
                    f"points {i} and {j} coincide at tolerance {mp.nstr(tol, 3)}")


# -----------------------------
# Cotangent kernel
# -----------------------------

def _cot_pi(num: int, den: int) -> mpf:
    """cot(pi * num/den) for 0 < num < den, at the ambient mp precision.

    The argument is range-reduced exactly in the rationals: fractions
    above 1/2 reflect to (den-num)/den with a sign flip, so the single
    transcendental evaluation always happens on (0, 1/2] where cot is
    well conditioned in the relative sense.
    """
    if 2 * num == den:
        return mpf(0)
    if 2 * num > den:
        return -_cot_pi(den - num, den)
    return mp.cot(mp.pi * num / den)


def curve_point(num: int, den: int,
                precision: int = DEFAULT_PRECISION) -> ProjectivePoint:
    """Point of the cubic at fraction num/den of a full turn.

    num = 0 gives the point at infinity; otherwise the affine point
    (c^2 + 1, c (c^2 + 1)) with c = cot(pi num/den).
    """
    check_precision(precision)
    if den < 1:
        raise ValueError(f"denominator must be positive, got {den}")
    if not 0 <= num < den:
        raise ValueError(f"numerator must lie in [0, {den}), got {num}")
    if num == 0:
        return point_at_infinity()
    frac = Fraction(num, den)
    with working_precision(precision):
        c = _cot_pi(frac.numerator, frac.denominator)
        x = c * c + 1
        return ProjectivePoint(x, c * x, mpf(1))


def curve_residual(point: ProjectivePoint,
                   precision: int = DEFAULT_PRECISION) -> mpf:
    """Homogenized curve equation Y^2 Z - X^3 + X^2 Z at the point.

    Zero (within evaluation error) on the projective closure of the
    cubic, including the point at infinity.
    """
    with working_precision(precision):
        X, Y, Z = point.X, point.Y, point.Z
        return Y * Y * Z - X * X * X + X * X * Z


def cot_addition_residual(x, y, precision: int = DEFAULT_PRECISION) -> mpf:
    """Defect of the cotangent addition formula at (x, y):

        cot(x + y) - (cot x cot y - 1) / (cot x + cot y)

    Used as a self-test of the trigonometric kernel; mathematically zero
    whenever x, y and x + y avoid the poles at integer multiples of pi.
    """
    check_precision(precision)
    with working_precision(precision):
        x = mpf(x)
        y = mpf(y)
        for value, label in ((x, "x"), (y, "y"), (x + y, "x+y")):
            cycles = value / mp.pi
            distance = abs(cycles - mp.nint(cycles)) * mp.pi
            if distance < POLE_MARGIN:
                raise PoleError(
                    f"{label} is within {POLE_MARGIN} of a multiple of pi")
        cx, cy = mp.cot(x), mp.cot(y)
        return mp.cot(x + y) - (cx * cy - 1) / (cx + cy)


def curve_cycle(n: int, precision: int = DEFAULT_PRECISION) -> PointConfiguration:
    """The n-point configuration [point(0/n), ..., point((n-1)/n)].

    Index order matches residue order, so the residue model's line
    predictions transfer index-to-index.  Exactly one point (index 0) is
    at infinity.
    """
    if n < 2:
        raise ValueError(f"need at least 2 points, got n={n}")
    check_precision(precision)
    points = [curve_point(i, n, precision) for i in range(n)]
    infinite = [i for i, p in enumerate(points) if p.is_infinite()]
    if infinite != [0]:
        raise AssertionError(f"expected index 0 alone at infinity, got {infinite}")
    try:
        return PointConfiguration(points, precision, provenance=n)
    except DegenerateInputError as exc:
        raise PrecisionError(
            f"{precision} digits cannot separate the {n} points: {exc}") from exc

"""Flattening a projective configuration into the affine plane.

Any finite point set misses some line; an invertible linear map on
homogeneous coordinates that sends that line to Z = 0 yields an affine
image with the same collinearity structure.  The deterministic choice is
the horizontal line y = M just above the finite points, whose map fixes
X and Y and replaces Z by M*Z - Y; a seeded random search over small
integer lines covers configurations the horizontal strategy cannot miss
(e.g. ones containing the horizontal direction (1 : 0 : 0)).
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from mpmath import mp, mpf

from .curve import PointConfiguration, ProjectivePoint
from .numerics import as_mpf, default_tolerance, working_precision

_RANDOM_LINE_SEED = 0
_RANDOM_LINE_TRIALS = 10_000

Coefficients = tuple[mpf, mpf, mpf]


def _incidence_gap(point: ProjectivePoint, line: Coefficients) -> mpf:
    """|aX + bY + cZ| with the point row and the coefficients both scaled
    to unit max-norm; zero exactly when the point lies on the line."""
    a, b, c = line
    norm_line = max(abs(a), abs(b), abs(c))
    norm_row = max(abs(point.X), abs(point.Y), abs(point.Z))
    value = a * point.X + b * point.Y + c * point.Z
    return abs(value) / (norm_line * norm_row)


def _misses_all(config: PointConfiguration, line: Coefficients, tol: mpf) -> bool:
    return all(_incidence_gap(p, line) > tol for p in config)


@dataclass(frozen=True)
class ProjectiveMap:
    """Invertible 3x3 map on homogeneous coordinates."""

    matrix: tuple[tuple[mpf, mpf, mpf], ...]
    precision: int

    def __post_init__(self) -> None:
        if len(self.matrix) != 3 or any(len(row) != 3 for row in self.matrix):
            raise ValueError("matrix must be 3x3")
        object.__setattr__(
            self, "matrix",
            tuple(tuple(as_mpf(c) for c in row) for row in self.matrix))
        tol = default_tolerance(self.precision)
        with working_precision(self.precision):
            rows = [tuple(c / max(abs(x) for x in row) for c in row)
                    for row in self.matrix]
            det = self._det(rows)
            if abs(det) <= tol:
                raise ValueError("matrix is singular at the working tolerance")

    @staticmethod
    def _det(rows) -> mpf:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def apply(self, point: ProjectivePoint) -> ProjectivePoint:
        with working_precision(self.precision):
            coords = tuple(
                row[0] * point.X + row[1] * point.Y + row[2] * point.Z
                for row in self.matrix)
        return ProjectivePoint(*coords).canonical(self.precision)

    def inverse(self) -> "ProjectiveMap":
        with working_precision(self.precision):
            (a, b, c), (d, e, f), (g, h, i) = self.matrix
            det = self._det(self.matrix)
            adjugate = (
                (e * i - f * h, c * h - b * i, b * f - c * e),
                (f * g - d * i, a * i - c * g, c * d - a * f),
                (d * h - e * g, b * g - a * h, a * e - b * d),
            )
            matrix = tuple(tuple(x / det for x in row) for row in adjugate)
        return ProjectiveMap(matrix, self.precision)


def find_missing_line(config: PointConfiguration,
                      tol: mpf | None = None,
                      seed: int = _RANDOM_LINE_SEED) -> Coefficients:
    """A line (a : b : c) farther than `tol` from every configuration point.

    Deterministic first choice: y = M with M one more than the largest
    finite |Y/Z| rounded up (M = 1 when no finite point exists).  That
    line avoids the vertical point at infinity, whose Y-coordinate is
    nonzero, and clears the finite points by at least 1.  If some point
    still lies on it, seeded random small-integer lines are tried.
    """
    if len(config) == 0:
        raise ValueError("configuration is empty")
    if tol is None:
        tol = config.tolerance()
    with working_precision(config.precision):
        heights = [abs(p.Y) for p in config if not p.is_infinite()]
        bound = int(mp.ceil(max(heights))) if heights else 0
        line = (mpf(0), mpf(1), mpf(-(bound + 1)))
        if _misses_all(config, line, tol):
            return line
        rng = random.Random(seed)
        for _ in range(_RANDOM_LINE_TRIALS):
            coeffs = tuple(mpf(rng.randint(-9, 9)) for _ in range(3))
            if all(c == 0 for c in coeffs):
                continue
            if _misses_all(config, coeffs, tol):
                return coeffs
    raise RuntimeError("no missing line found; configuration too degenerate")


def send_to_infinity(config: PointConfiguration, line: Coefficients,
                     tol: mpf | None = None
                     ) -> tuple[PointConfiguration, ProjectiveMap]:
    """Map the configuration so `line` becomes the line at infinity.

    The new Z-coordinate is the negated line functional, so points off
    the line land in the affine chart; the other two rows are the
    standard basis vectors of the coordinates away from the line's
    largest coefficient.  For the horizontal line (0 : 1 : -M) this is
    exactly (X : Y : Z) -> (X : Y : M*Z - Y).  Provenance is preserved:
    the map keeps index-to-index collinearity intact.
    """
    if tol is None:
        tol = config.tolerance()
    coeffs = tuple(as_mpf(c) for c in line)
    if len(coeffs) != 3 or all(c == 0 for c in coeffs):
        raise ValueError(f"not a projective line: {line}")
    with working_precision(config.precision):
        offenders = [i for i, p in enumerate(config)
                     if _incidence_gap(p, coeffs) <= tol]
    if offenders:
        raise ValueError(f"line meets configuration points {offenders}")

    magnitudes = [abs(c) for c in coeffs]
    drop = max(range(3), key=lambda idx: (magnitudes[idx], idx))
    basis = [(mpf(1), mpf(0), mpf(0)), (mpf(0), mpf(1), mpf(0)),
             (mpf(0), mpf(0), mpf(1))]
    rows = [basis[idx] for idx in range(3) if idx != drop]
    rows.append(tuple(-c for c in coeffs))
    transform = ProjectiveMap(tuple(rows), config.precision)

    images = [transform.apply(p) for p in config]
    stuck = [i for i, p in enumerate(images) if p.is_infinite()]
    if stuck:
        raise RuntimeError(f"images {stuck} stayed at infinity")
    image = PointConfiguration(images, config.precision,
                               provenance=config.provenance)
    return image, transform

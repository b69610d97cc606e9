"""Projective line machinery: collinearity, maximal collinear subsets,
and geometric verification of colorings.

Collinearity of three canonical points is |det| < tol for the 3x3 matrix
of their coordinates, each row scaled to unit max-norm so one tolerance
is meaningful across points whose magnitudes span many orders.

The enumeration scan is the naive quadratic-pairs algorithm, but decided
in two stages: a vectorized float64 screen discards triples whose
normalized determinant is provably above tolerance, and survivors are
settled by an exact fixed-point integer determinant carrying the full
working precision.  For rows of unit max-norm the float64 evaluation
(cross product, then dot) is off by at most ~3e-15 in absolute terms, so
a screened value above 1e-13 guarantees the true determinant exceeds any
tolerance up to 1e-14, and a true determinant below tolerance can never
screen above the cut.  The two-stage decision therefore equals testing
every triple at full precision.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from mpmath import mp, mpf

from .curve import PointConfiguration, ProjectivePoint, points_equal
from .groupmodel import Coloring, VerificationReport
from .numerics import (
    DEFAULT_PRECISION,
    GUARD_DIGITS,
    DegenerateInputError,
    as_mpf,
    default_tolerance,
    working_precision,
)

# float64 screen: |screened det| above this is provably non-collinear
# (absolute error of the screen is < 3e-15 for unit max-norm rows)
_FLOAT_FILTER = 1e-13
# the screen is only sound when the tolerance sits below cut minus error
_FILTER_SAFE_TOL = 1e-14
_CHUNK_CELLS = 4_000_000


def _det3_int(r0, r1, r2) -> int:
    a, b, c = r0
    d, e, f = r1
    g, h, i = r2
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


class _DeterminantEngine:
    """Row-normalized coordinates of a point list, in three parallel forms:
    mp floats (for line coefficients), float64 (screen), and fixed-point
    integers scaled by 10^(precision + guard) (exact decisions)."""

    def __init__(self, points, precision: int, tol: mpf):
        self.precision = precision
        self.tol = as_mpf(tol)
        scale_digits = precision + GUARD_DIGITS
        with working_precision(precision):
            scale = mpf(10) ** scale_digits
            threshold = self.tol * scale ** 3
            self.threshold_int = int(mp.floor(threshold))
            if self.threshold_int < 1:
                raise ValueError(
                    f"tolerance {mp.nstr(self.tol, 3)} is below the engine "
                    f"resolution at {precision} digits")
            self.rows_mp: list[tuple[mpf, mpf, mpf]] = []
            self.rows_int: list[tuple[int, int, int]] = []
            for p in points:
                norm = max(abs(p.X), abs(p.Y), abs(p.Z))
                row = (p.X / norm, p.Y / norm, p.Z / norm)
                self.rows_mp.append(row)
                self.rows_int.append(tuple(int(mp.nint(c * scale)) for c in row))
        self.rows_f = np.array([[float(c) for c in row] for row in self.rows_mp])
        self._cache: dict[tuple[int, int, int], bool] = {}

    def collinear_triple(self, a: int, b: int, c: int) -> bool:
        key = tuple(sorted((a, b, c)))
        hit = self._cache.get(key)
        if hit is None:
            det = _det3_int(self.rows_int[a], self.rows_int[b], self.rows_int[c])
            hit = abs(det) < self.threshold_int
            self._cache[key] = hit
        return hit

    def line_coefficients(self, a: int, b: int) -> tuple[mpf, mpf, mpf]:
        """Canonical (a : b : c) of the line through points a and b:
        cross product of the rows, scaled to unit max-norm with the first
        nonzero coefficient positive."""
        (x1, y1, z1), (x2, y2, z2) = self.rows_mp[a], self.rows_mp[b]
        with working_precision(self.precision):
            u = y1 * z2 - z1 * y2
            v = z1 * x2 - x1 * z2
            w = x1 * y2 - y1 * x2
            norm = max(abs(u), abs(v), abs(w))
            coeffs = (u / norm, v / norm, w / norm)
            for lead in coeffs:
                if lead != 0:
                    return coeffs if lead > 0 else tuple(-c for c in coeffs)
        raise AssertionError("cross product of distinct rows cannot vanish")


@dataclass(frozen=True)
class Line:
    """Maximal collinear subset, as sorted point indices plus the
    canonical homogeneous coefficients of the supporting line."""

    members: tuple[int, ...]
    coefficients: tuple[mpf, mpf, mpf]

    def __len__(self) -> int:
        return len(self.members)


class LineHypergraph:
    """Vertices 0..n-1 and the member sets of the lines.

    Hypergraphs produced by `enumerate_lines` additionally satisfy the
    line-cover property: every unordered vertex pair lies in exactly one
    edge (which also rules out nested edges).  Hand-built instances, e.g.
    for exercising the coloring solver, need only basic well-formedness.
    """

    def __init__(self, vertex_count: int, edges,
                 engine: _DeterminantEngine | None = None):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, ...], ...] = tuple(
            sorted(tuple(e) for e in edges))
        seen = set()
        for e in self.edges:
            if len(e) < 2:
                raise ValueError(f"edge {e} has fewer than 2 vertices")
            if tuple(sorted(set(e))) != e:
                raise ValueError(f"edge {e} must be sorted and duplicate-free")
            if not (0 <= e[0] and e[-1] < vertex_count):
                raise ValueError(f"edge {e} outside 0..{vertex_count - 1}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        self._engine = engine

    def __len__(self) -> int:
        return len(self.edges)

    def size_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for e in self.edges:
            counts[len(e)] = counts.get(len(e), 0) + 1
        return counts

    def validate_line_cover(self) -> None:
        """Raise unless every vertex pair lies in exactly one edge."""
        seen: set[tuple[int, int]] = set()
        for e in self.edges:
            for a in range(len(e)):
                for b in range(a + 1, len(e)):
                    pair = (e[a], e[b])
                    if pair in seen:
                        raise DegenerateInputError(
                            f"pair {pair} lies in more than one line")
                    seen.add(pair)
        want = self.vertex_count * (self.vertex_count - 1) // 2
        if len(seen) != want:
            raise DegenerateInputError(
                f"{want - len(seen)} vertex pairs lie on no line")

    @cached_property
    def lines(self) -> tuple[Line, ...]:
        if self._engine is None:
            raise ValueError("no geometry attached; only the edge sets exist")
        return tuple(
            Line(e, self._engine.line_coefficients(e[0], e[1]))
            for e in self.edges)

    def monochromatic_edges(self, coloring: Coloring) -> tuple[tuple[int, ...], ...]:
        if len(coloring) != self.vertex_count:
            raise ValueError(
                f"coloring covers {len(coloring)} indices but the hypergraph "
                f"has {self.vertex_count} vertices")
        colors = coloring.assignment
        return tuple(e for e in self.edges
                     if all(colors[v] == colors[e[0]] for v in e[1:]))


# -----------------------------
# Predicates and enumeration
# -----------------------------

def collinear(p: ProjectivePoint, q: ProjectivePoint, r: ProjectivePoint,
              tol: mpf | None = None,
              precision: int = DEFAULT_PRECISION) -> bool:
    """Whether the normalized determinant of the three points is below tol.

    Symmetric in its arguments and invariant under rescaling of any
    point's homogeneous coordinates.  Coincident inputs are refused:
    collinearity of a multiset is ill-defined.
    """
    if tol is None:
        tol = default_tolerance(precision)
    pts = [point.canonical(precision) for point in (p, q, r)]
    for a in range(3):
        for b in range(a + 1, 3):
            if points_equal(pts[a], pts[b], tol):
                raise DegenerateInputError(
                    f"points {a} and {b} coincide; deduplicate first")
    engine = _DeterminantEngine(pts, precision, tol)
    return engine.collinear_triple(0, 1, 2)


def enumerate_lines(config: PointConfiguration,
                    tol: mpf | None = None) -> LineHypergraph:
    """Every maximal collinear subset (size >= 2) of the configuration.

    For each unordered point pair, the scan collects all further points
    collinear with it at tolerance; the resulting member sets are
    deduplicated.  The returned hypergraph satisfies the line-cover
    property (checked), and each edge appears exactly once.
    """
    n = len(config)
    if tol is None:
        tol = config.tolerance()
    if n < 2:
        return LineHypergraph(n, ())
    engine = _DeterminantEngine(config.points, config.precision, tol)
    rows_f = engine.rows_f
    use_screen = tol <= _FILTER_SAFE_TOL

    edges: set[tuple[int, ...]] = set()
    pairs_i, pairs_j = np.triu_indices(n, 1)
    chunk = max(1, _CHUNK_CELLS // n)
    for start in range(0, len(pairs_i), chunk):
        idx_i = pairs_i[start:start + chunk]
        idx_j = pairs_j[start:start + chunk]
        if use_screen:
            normals = np.cross(rows_f[idx_i], rows_f[idx_j])
            residues = np.abs(normals @ rows_f.T)
            mask = residues < _FLOAT_FILTER
            counts = mask.sum(axis=1)
        else:
            mask = np.ones((len(idx_i), n), dtype=bool)
            counts = np.full(len(idx_i), n)
        for p in np.nonzero(counts <= 2)[0].tolist():
            edges.add((int(idx_i[p]), int(idx_j[p])))
        for p in np.nonzero(counts > 2)[0].tolist():
            i = int(idx_i[p])
            j = int(idx_j[p])
            members = [i, j]
            for m in np.nonzero(mask[p])[0].tolist():
                if m != i and m != j and engine.collinear_triple(i, j, m):
                    members.append(m)
            members.sort()
            edges.add(tuple(members))

    hypergraph = LineHypergraph(n, edges, engine=engine)
    hypergraph.validate_line_cover()
    return hypergraph


def max_collinear(config: PointConfiguration, tol: mpf | None = None) -> int:
    """Size of the largest line of the configuration."""
    if len(config) < 2:
        return len(config)
    return max(len(e) for e in enumerate_lines(config, tol).edges)


def verify_coloring_geometric(config: PointConfiguration, coloring: Coloring,
                              tol: mpf | None = None) -> VerificationReport:
    """Check that no enumerated line of the configuration is monochromatic."""
    if len(coloring) != len(config):
        raise ValueError(
            f"coloring covers {len(coloring)} indices but the configuration "
            f"has {len(config)} points")
    bad = enumerate_lines(config, tol).monochromatic_edges(coloring)
    return VerificationReport(passed=not bad, monochromatic=bad)

"""Geometry tests.

The grid expectations come from an exact integer oracle (cross products
over Z, no tolerance); the curve expectations come from the residue
model.  Both are independent of the engine under test.
"""
from __future__ import annotations

import pytest
from mpmath import mp, mpf

from cubiclines import (
    DegenerateInputError,
    LineHypergraph,
    collinear,
    curve_point,
    enumerate_lines,
    group_lines,
    max_collinear,
    point_at_infinity,
    thirds_coloring,
    verify_coloring_geometric,
    verify_coloring_group,
    Coloring,
)
from cubiclines.numerics import working_precision

from conftest import cached_cycle, grid_config, integer_config


def oracle_integer_lines(coords) -> set[tuple[int, ...]]:
    """Maximal collinear subsets of integer points by exact arithmetic."""
    def collin(a, b, c):
        return ((b[0] - a[0]) * (c[1] - a[1])
                - (b[1] - a[1]) * (c[0] - a[0])) == 0

    n = len(coords)
    lines = set()
    for i in range(n):
        for j in range(i + 1, n):
            members = {i, j}
            for k in range(n):
                if k not in (i, j) and collin(coords[i], coords[j], coords[k]):
                    members.add(k)
            lines.add(tuple(sorted(members)))
    return lines


def normalized_mp_det(p, q, r, precision=128) -> mpf:
    """Reference determinant: rows scaled to unit max-norm, mp arithmetic."""
    with working_precision(precision):
        rows = []
        for point in (p, q, r):
            scale = max(abs(point.X), abs(point.Y), abs(point.Z))
            rows.append((point.X / scale, point.Y / scale, point.Z / scale))
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


class TestCollinear:
    def test_zero_sum_triple_is_collinear(self):
        assert collinear(curve_point(1, 6), curve_point(1, 3), curve_point(1, 2))

    def test_vertical_chord_through_infinity(self):
        assert collinear(curve_point(1, 4), curve_point(3, 4), point_at_infinity())

    def test_nonzero_sum_triple_is_not_collinear(self):
        assert not collinear(curve_point(1, 5), curve_point(2, 5), curve_point(3, 5))

    def test_coincident_points_rejected(self):
        p = curve_point(1, 4)
        with pytest.raises(DegenerateInputError):
            collinear(p, p, curve_point(1, 2))

    def test_permutation_invariance(self):
        import itertools
        pts = [curve_point(1, 6), curve_point(1, 3), curve_point(1, 2)]
        results = {collinear(*perm) for perm in itertools.permutations(pts)}
        assert results == {True}
        pts = [curve_point(1, 5), curve_point(2, 5), curve_point(3, 5)]
        results = {collinear(*perm) for perm in itertools.permutations(pts)}
        assert results == {False}

    def test_rescaling_invariance(self):
        from cubiclines import ProjectivePoint
        a, b, c = curve_point(1, 6), curve_point(1, 3), curve_point(1, 2)
        with working_precision(128):
            b_scaled = ProjectivePoint(b.X * 7, b.Y * 7, b.Z * 7)
            c_scaled = ProjectivePoint(c.X * -3, c.Y * -3, c.Z * -3)
        assert collinear(a, b_scaled, c_scaled)


class TestEnumerateLines:
    def test_triangle(self):
        config = integer_config([(0, 0), (1, 0), (0, 1)])
        hypergraph = enumerate_lines(config)
        assert hypergraph.edges == ((0, 1), (0, 2), (1, 2))

    def test_three_by_three_grid(self):
        config = grid_config(3)
        hypergraph = enumerate_lines(config)
        counts = hypergraph.size_counts()
        assert counts == {3: 8, 2: 12}
        coords = [(x, y) for x in range(3) for y in range(3)]
        assert set(hypergraph.edges) == oracle_integer_lines(coords)

    def test_matches_group_model_on_curve(self):
        for n in (2, 3, 4, 5, 9, 16, 31, 48):
            hypergraph = enumerate_lines(cached_cycle(n))
            expected = {line.members for line in group_lines(n)}
            assert set(hypergraph.edges) == expected, f"n={n}"

    def test_pair_coverage_identity(self):
        for n in (7, 16, 40):
            hypergraph = enumerate_lines(cached_cycle(n))
            covered = sum(len(e) * (len(e) - 1) // 2 for e in hypergraph.edges)
            assert covered == n * (n - 1) // 2

    def test_empty_and_single(self):
        assert enumerate_lines(integer_config([(0, 0)])).edges == ()

    def test_deterministic(self):
        config = cached_cycle(24)
        assert enumerate_lines(config).edges == enumerate_lines(config).edges

    def test_absurd_tolerance_rejected(self):
        with pytest.raises(ValueError):
            enumerate_lines(cached_cycle(5), tol=mpf(10) ** -2000)


class TestMaxCollinear:
    def test_curve_configuration_never_exceeds_three(self):
        assert max_collinear(cached_cycle(100)) == 3

    def test_four_on_a_line(self):
        config = integer_config([(0, 0), (1, 1), (2, 2), (3, 3), (5, 0)])
        assert max_collinear(config) == 4

    def test_two_points(self):
        assert max_collinear(cached_cycle(2)) == 2


class TestVerifyColoringGeometric:
    def test_thirds_coloring_passes(self):
        report = verify_coloring_geometric(cached_cycle(16), thirds_coloring(16))
        assert report.passed
        assert report.monochromatic == ()

    def test_constant_coloring_fails(self):
        report = verify_coloring_geometric(cached_cycle(7), Coloring(3, (1,) * 7))
        assert not report.passed
        assert len(report.monochromatic) == len(enumerate_lines(cached_cycle(7)).edges)

    def test_agrees_with_group_model(self):
        n = 9
        geo = verify_coloring_geometric(cached_cycle(n), thirds_coloring(n))
        alg = verify_coloring_group(n, thirds_coloring(n))
        assert geo.passed and alg.passed

    def test_domain_mismatch_rejected(self):
        with pytest.raises(ValueError):
            verify_coloring_geometric(cached_cycle(5), thirds_coloring(6))


class TestDecisionMargins:
    def test_collinear_and_non_collinear_are_far_apart(self):
        config = cached_cycle(50)
        edges = set(enumerate_lines(config).edges)
        three_lines = [e for e in edges if len(e) == 3]
        for e in three_lines[:40]:
            det = normalized_mp_det(*(config[i] for i in e))
            assert abs(det) < mpf(10) ** -64
        # non-edges: batches of triples that lie on no common line
        import itertools
        checked = 0
        for triple in itertools.combinations(range(50), 3):
            if checked >= 300:
                break
            if any(set(triple) <= set(e) for e in edges if len(e) == 3):
                continue
            det = normalized_mp_det(*(config[i] for i in triple))
            assert abs(det) > mpf(10) ** -20, triple
            checked += 1


class TestLineObjects:
    def test_members_satisfy_line_equation(self):
        config = cached_cycle(12)
        hypergraph = enumerate_lines(config)
        tol = config.tolerance()
        with working_precision(config.precision):
            for line in hypergraph.lines:
                a, b, c = line.coefficients
                assert max(abs(a), abs(b), abs(c)) == 1
                for idx in line.members:
                    p = config[idx]
                    scale = max(abs(p.X), abs(p.Y), abs(p.Z))
                    residue = abs(a * p.X + b * p.Y + c * p.Z) / scale
                    assert residue < tol

    def test_nonmembers_violate_line_equation(self):
        config = cached_cycle(12)
        hypergraph = enumerate_lines(config)
        tol = config.tolerance()
        with working_precision(config.precision):
            for line in hypergraph.lines[:10]:
                others = set(range(len(config))) - set(line.members)
                for idx in others:
                    p = config[idx]
                    scale = max(abs(p.X), abs(p.Y), abs(p.Z))
                    residue = abs(line.coefficients[0] * p.X
                                  + line.coefficients[1] * p.Y
                                  + line.coefficients[2] * p.Z) / scale
                    assert residue > tol


class TestLineHypergraphValidation:
    def test_basic_checks(self):
        with pytest.raises(ValueError):
            LineHypergraph(3, [(0,)])
        with pytest.raises(ValueError):
            LineHypergraph(3, [(1, 0)])
        with pytest.raises(ValueError):
            LineHypergraph(3, [(0, 3)])
        with pytest.raises(ValueError):
            LineHypergraph(3, [(0, 1), (0, 1)])

    def test_cover_validation(self):
        good = LineHypergraph(3, [(0, 1), (0, 2), (1, 2)])
        good.validate_line_cover()
        with pytest.raises(DegenerateInputError):
            LineHypergraph(3, [(0, 1), (0, 2)]).validate_line_cover()
        with pytest.raises(DegenerateInputError):
            LineHypergraph(3, [(0, 1, 2), (0, 1)]).validate_line_cover()

    def test_lines_need_geometry(self):
        with pytest.raises(ValueError):
            LineHypergraph(2, [(0, 1)]).lines

    def test_monochromatic_edges(self):
        h = LineHypergraph(4, [(0, 1, 2), (0, 3), (1, 3), (2, 3)])
        mono = h.monochromatic_edges(Coloring(2, (0, 0, 0, 1)))
        assert mono == ((0, 1, 2),)
        with pytest.raises(ValueError):
            h.monochromatic_edges(Coloring(2, (0, 0)))

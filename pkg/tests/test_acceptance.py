"""Acceptance suite: one test per criterion, each at its stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
PASS/FAIL lines as they complete.
"""
from __future__ import annotations

import contextlib
import json
import math
import random

from mpmath import mpf

from cubiclines import (
    LineHypergraph,
    SearchStatus,
    brute_force_coloring,
    cot_addition_residual,
    curve_point,
    curve_residual,
    enumerate_lines,
    group_lines,
    load_configuration,
    point_at_infinity,
    points_equal,
    search_coloring,
)
from cubiclines.cli import main
from cubiclines.numerics import working_precision

from conftest import cached_cycle, integer_config, parabola_config

FULL_RANGE = range(2, 201)
TAU = mpf(10) ** -64


@contextlib.contextmanager
def criterion(label: str):
    ok = False
    try:
        yield
        ok = True
    finally:
        print(f"[acceptance] {label}: {'PASS' if ok else 'FAIL'}")


def test_criterion_1_construction_verifies_end_to_end(tmp_path):
    """Every n in [2, 200]: generate + verify exit 0 at tau = 1e-64."""
    with criterion("1 construction-and-coloring-verify n=2..200"):
        for n in FULL_RANGE:
            path = tmp_path / f"s{n}.json"
            assert main(["generate", "--n", str(n), "--out", str(path)]) == 0
            assert main(["verify", str(path), "--tol", "1e-64"]) == 0, n


def test_criterion_2_group_geometry_equivalence():
    """Exact index-set equality of the two line enumerations, plus the
    pair-counting identity 3*L3 + L2 = n(n-1)/2."""
    with criterion("2 group/geometry-equivalence n=2..200"):
        for n in FULL_RANGE:
            hypergraph = enumerate_lines(cached_cycle(n), tol=TAU)
            expected = {line.members for line in group_lines(n)}
            assert set(hypergraph.edges) == expected, n
            counts = hypergraph.size_counts()
            two = counts.get(2, 0)
            three = counts.get(3, 0)
            assert set(counts) <= {2, 3}, n
            assert 3 * three + two == n * (n - 1) // 2, n


def test_criterion_3_embedding_spot_checks():
    """Quarter/half-turn values, curve residuals on 200 points, and the
    cotangent addition identity on 1000 seeded samples."""
    with criterion("3 embedding-spot-checks"):
        tight = mpf(10) ** -100
        p = curve_point(1, 4, precision=128)
        with working_precision(128):
            assert abs(p.X - 2) < tight and abs(p.Y - 2) < tight
            q = curve_point(1, 2, precision=128)
            assert abs(q.X - 1) < tight and abs(q.Y) < tight

        residual_bound = mpf(10) ** -118
        for point in cached_cycle(200):
            assert abs(curve_residual(point, precision=128)) < residual_bound

        rng = random.Random(20160915)
        produced = 0
        while produced < 1000:
            x = rng.uniform(0.05, math.pi - 0.05)
            y = rng.uniform(0.05, math.pi - 0.05)
            total = x + y
            if min(abs(total - math.pi), abs(total - 2 * math.pi)) < 0.05:
                continue
            assert abs(cot_addition_residual(x, y, precision=128)) < tight
            produced += 1


def test_criterion_4_projective_reduction(tmp_path):
    """Every n in [2, 200]: the flattened image is fully affine, has an
    identical line hypergraph, and the inverse map returns each point."""
    with criterion("4 projective-reduction n=2..200"):
        for n in FULL_RANGE:
            src = tmp_path / f"in{n}.json"
            dst = tmp_path / f"out{n}.json"
            assert main(["generate", "--n", str(n), "--out", str(src)]) == 0
            assert main(["transform", str(src), "--out", str(dst),
                         "--tol", "1e-64"]) == 0, n

            original = load_configuration(src)
            image = load_configuration(dst)
            assert all(p.Z == 1 for p in image.config), n
            assert (enumerate_lines(image.config, tol=TAU).edges
                    == enumerate_lines(original.config, tol=TAU).edges), n

            inverse = image.transform.inverse()
            for before, after in zip(original.config, image.config):
                assert points_equal(inverse.apply(after), before, TAU), n


def test_criterion_5_figure_reproduction(tmp_path):
    """n = 16 layout (one red point at infinity, thirds split 6/5/5) and
    byte-deterministic SVG output for the full and zoom views."""
    with criterion("5 figure-reproduction n=16"):
        path = tmp_path / "s16.json"
        assert main(["generate", "--n", "16", "--out", str(path)]) == 0
        payload = json.loads(path.read_text())
        config = load_configuration(path).config
        infinite = [i for i, p in enumerate(config) if p.is_infinite()]
        assert infinite == [0]
        assert points_equal(config[0], point_at_infinity(), TAU)
        coloring = payload["coloring"]
        assert coloring[0] == 0                       # infinity is red
        assert [i for i, c in enumerate(coloring) if c == 0] == list(range(6))
        assert [i for i, c in enumerate(coloring) if c == 1] == list(range(6, 11))
        assert [i for i, c in enumerate(coloring) if c == 2] == list(range(11, 16))
        assert payload["colors"] == ["red", "green", "blue"]

        for name, args in (("full", []), ("zoom", ["--window", "0,8,-9,9"])):
            first = tmp_path / f"{name}1.svg"
            second = tmp_path / f"{name}2.svg"
            assert main(["plot", str(path), "--out", str(first)] + args) == 0
            assert main(["plot", str(path), "--out", str(second)] + args) == 0
            assert first.read_bytes() == second.read_bytes()
        full = (tmp_path / "full1.svg").read_text()
        zoom = (tmp_path / "zoom1.svg").read_text()
        assert full != zoom
        assert full.count("<circle") == 16


def test_criterion_6_solver_soundness():
    """Backtracker agrees with the exhaustive oracle on 200 seeded random
    line hypergraphs; witnesses verify; curve hypergraphs are 3-colorable
    for every n in [2, 60] within the default budget."""
    with criterion("6 solver-soundness"):
        rng = random.Random(271828)
        cells = [(x, y) for x in range(5) for y in range(5)]
        for trial in range(200):
            count = rng.randint(3, 12)
            hypergraph = enumerate_lines(integer_config(rng.sample(cells, count)))
            k = rng.randint(1, 3)
            fast = search_coloring(hypergraph, k)
            slow = brute_force_coloring(hypergraph, k)
            assert fast.status == slow.status, (trial, k)
            assert fast.status in (SearchStatus.SATISFIABLE,
                                   SearchStatus.UNSATISFIABLE)
            for outcome in (fast, slow):
                if outcome.status is SearchStatus.SATISFIABLE:
                    assert not hypergraph.monochromatic_edges(outcome.witness)

        for n in range(2, 61):
            hypergraph = enumerate_lines(cached_cycle(n), tol=TAU)
            outcome = search_coloring(hypergraph, 3)
            assert outcome.status is SearchStatus.SATISFIABLE, n
            assert not hypergraph.monochromatic_edges(outcome.witness)


def test_criterion_7_pigeonhole_bound():
    """k+1 points with no 3 collinear defeat k colors, k <= 4: every pair
    is a line, so some line is monochromatic (exhaustively verified)."""
    with criterion("7 pigeonhole-at-l=2"):
        for k in range(1, 5):
            for size in range(k + 1, 9):
                hypergraph = enumerate_lines(parabola_config(size))
                assert all(len(e) == 2 for e in hypergraph.edges)
                assert (brute_force_coloring(hypergraph, k).status
                        is SearchStatus.UNSATISFIABLE), (k, size)
                assert (search_coloring(hypergraph, k).status
                        is SearchStatus.UNSATISFIABLE), (k, size)

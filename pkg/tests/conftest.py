"""Shared helpers: cached configurations and small geometric builders."""
from __future__ import annotations

import functools

import pytest
from mpmath import mpf

from cubiclines import PointConfiguration, ProjectivePoint, curve_cycle


@functools.lru_cache(maxsize=None)
def cached_cycle(n: int, precision: int = 128) -> PointConfiguration:
    return curve_cycle(n, precision)


def integer_config(coords, precision: int = 128,
                   provenance: int | None = None) -> PointConfiguration:
    """Configuration from integer affine pairs (exactly representable)."""
    points = [ProjectivePoint(mpf(x), mpf(y), mpf(1)) for x, y in coords]
    return PointConfiguration(points, precision, provenance=provenance)


def grid_config(side: int = 3) -> PointConfiguration:
    return integer_config([(x, y) for x in range(side) for y in range(side)])


def parabola_config(size: int) -> PointConfiguration:
    """`size` points on y = x^2: no three are ever collinear."""
    return integer_config([(t, t * t) for t in range(size)])


@pytest.fixture
def cycle():
    return cached_cycle

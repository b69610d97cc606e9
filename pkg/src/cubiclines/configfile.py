"""On-disk JSON format for point configurations.

Coordinates are serialized as decimal strings at the declared precision
(never binary floats), homogeneous triples even for affine points, so
files round-trip across arbitrary-precision implementations and the
point at infinity needs no special casing.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from mpmath import mp, mpf

from .curve import PointConfiguration, ProjectivePoint
from .groupmodel import Coloring
from .numerics import MIN_PRECISION, working_precision
from .projective import ProjectiveMap

FORMAT_VERSION = "pointset/1"
DEFAULT_COLOR_NAMES_3 = ("red", "green", "blue")


class ConfigFileError(ValueError):
    """Malformed or inconsistent configuration file."""


@dataclass(frozen=True)
class ConfigurationFile:
    """A configuration plus the optional payloads the format carries."""

    config: PointConfiguration
    coloring: Coloring | None = None
    color_names: tuple[str, ...] | None = None
    transform: ProjectiveMap | None = None


def default_color_names(k: int) -> tuple[str, ...]:
    if k == 3:
        return DEFAULT_COLOR_NAMES_3
    return tuple(f"c{i}" for i in range(k))


def _format_scalar(value: mpf, precision: int) -> str:
    return mp.nstr(value, precision)


def dump_configuration(config: PointConfiguration,
                       coloring: Coloring | None = None,
                       color_names: tuple[str, ...] | None = None,
                       transform: ProjectiveMap | None = None) -> str:
    if coloring is not None and len(coloring) != len(config):
        raise ConfigFileError(
            f"coloring covers {len(coloring)} indices for {len(config)} points")
    precision = config.precision
    payload: dict = {"format": FORMAT_VERSION, "precision": precision}
    if config.provenance is not None:
        payload["n"] = config.provenance
    payload["points"] = [
        [_format_scalar(p.X, precision), _format_scalar(p.Y, precision),
         _format_scalar(p.Z, precision)]
        for p in config]
    if coloring is not None:
        payload["k"] = coloring.k
        payload["coloring"] = list(coloring.assignment)
        payload["colors"] = list(color_names or default_color_names(coloring.k))
    if transform is not None:
        payload["transform"] = [
            [_format_scalar(c, precision) for c in row]
            for row in transform.matrix]
    return json.dumps(payload, indent=2) + "\n"


def save_configuration(path: str | Path, config: PointConfiguration,
                       coloring: Coloring | None = None,
                       color_names: tuple[str, ...] | None = None,
                       transform: ProjectiveMap | None = None) -> None:
    text = dump_configuration(config, coloring, color_names, transform)
    Path(path).write_text(text, encoding="ascii")


def _parse_scalar(raw, precision: int) -> mpf:
    if not isinstance(raw, str):
        raise ConfigFileError(f"coordinates must be decimal strings, got {raw!r}")
    try:
        with working_precision(precision):
            return mpf(raw)
    except ValueError as exc:
        raise ConfigFileError(f"bad decimal string {raw!r}") from exc


def load_configuration(path: str | Path) -> ConfigurationFile:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigFileError(f"cannot read {path}: {exc}") from exc
    if not isinstance(payload, dict):
        raise ConfigFileError("top-level JSON value must be an object")
    if payload.get("format") != FORMAT_VERSION:
        raise ConfigFileError(
            f"unsupported format {payload.get('format')!r}; "
            f"expected {FORMAT_VERSION!r}")

    precision = payload.get("precision")
    if not isinstance(precision, int) or precision < MIN_PRECISION:
        raise ConfigFileError(
            f"precision must be an integer >= {MIN_PRECISION}, got {precision!r}")

    provenance = payload.get("n")
    if provenance is not None and (not isinstance(provenance, int) or provenance < 2):
        raise ConfigFileError(f"provenance n must be an integer >= 2, got {provenance!r}")

    raw_points = payload.get("points")
    if not isinstance(raw_points, list) or not raw_points:
        raise ConfigFileError("'points' must be a nonempty list of triples")
    points = []
    for idx, triple in enumerate(raw_points):
        if not isinstance(triple, list) or len(triple) != 3:
            raise ConfigFileError(f"point {idx} is not a coordinate triple")
        coords = [_parse_scalar(c, precision) for c in triple]
        try:
            points.append(ProjectivePoint(*coords))
        except ValueError as exc:
            raise ConfigFileError(f"point {idx}: {exc}") from exc
    try:
        config = PointConfiguration(points, precision, provenance=provenance)
    except ValueError as exc:
        raise ConfigFileError(str(exc)) from exc

    coloring = None
    color_names = None
    raw_coloring = payload.get("coloring")
    if raw_coloring is not None:
        if (not isinstance(raw_coloring, list)
                or not all(isinstance(c, int) for c in raw_coloring)):
            raise ConfigFileError("'coloring' must be a list of color indices")
        if len(raw_coloring) != len(points):
            raise ConfigFileError(
                f"coloring lists {len(raw_coloring)} colors for {len(points)} points")
        k = payload.get("k", max(raw_coloring, default=0) + 1)
        if not isinstance(k, int) or k < 1:
            raise ConfigFileError(f"'k' must be a positive integer, got {k!r}")
        try:
            coloring = Coloring(k, tuple(raw_coloring))
        except ValueError as exc:
            raise ConfigFileError(str(exc)) from exc
        raw_names = payload.get("colors")
        if raw_names is not None:
            if (not isinstance(raw_names, list)
                    or not all(isinstance(s, str) for s in raw_names)
                    or len(raw_names) < k):
                raise ConfigFileError("'colors' must list one name per color")
            color_names = tuple(raw_names)

    transform = None
    raw_transform = payload.get("transform")
    if raw_transform is not None:
        if (not isinstance(raw_transform, list) or len(raw_transform) != 3
                or any(not isinstance(r, list) or len(r) != 3 for r in raw_transform)):
            raise ConfigFileError("'transform' must be a 3x3 matrix of strings")
        matrix = tuple(
            tuple(_parse_scalar(c, precision) for c in row)
            for row in raw_transform)
        try:
            transform = ProjectiveMap(matrix, precision)
        except ValueError as exc:
            raise ConfigFileError(str(exc)) from exc

    return ConfigurationFile(config, coloring, color_names, transform)

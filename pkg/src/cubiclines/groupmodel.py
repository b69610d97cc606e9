"""Exact residue model of the curve configurations.

For the n-point configuration the geometry collapses to arithmetic in
Z/nZ: three distinct residues lie on a common line exactly when they sum
to 0 mod n, and a chord is tangent when the third intersection falls back
onto one of its two generators.  Everything here is integer-exact, so it
serves as the oracle against which the floating geometry is checked.
"""
from __future__ import annotations

from dataclasses import dataclass, field


def _check_modulus(n: int) -> int:
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    return int(n)


def _check_residue(i: int, n: int, name: str = "residue") -> int:
    if not 0 <= i < n:
        raise ValueError(f"{name} must lie in [0, {n}), got {i}")
    return int(i)


@dataclass(frozen=True, slots=True)
class GroupElement:
    """Residue i of Z/nZ, kept canonical in [0, n)."""

    n: int
    i: int

    def __post_init__(self) -> None:
        _check_modulus(self.n)
        _check_residue(self.i, self.n)

    def _coerce(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected GroupElement, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"modulus mismatch: {self.n} vs {other.n}")
        return other

    def __add__(self, other: "GroupElement") -> "GroupElement":
        other = self._coerce(other)
        return GroupElement(self.n, (self.i + other.i) % self.n)

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.n, (-self.i) % self.n)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-self._coerce(other))


@dataclass(frozen=True, slots=True)
class GroupLine:
    """Maximal collinear set of residues: 3 summing to 0 mod n, or a
    tangent pair whose third intersection repeats one member."""

    members: tuple[int, ...]
    tangent: bool

    def __post_init__(self) -> None:
        m = self.members
        if len(m) == 2:
            ordered = m[0] < m[1]
        elif len(m) == 3:
            ordered = m[0] < m[1] < m[2]
        else:
            raise ValueError(f"a line has 2 or 3 members, got {m}")
        if not ordered:
            raise ValueError(f"members must be sorted and distinct: {m}")
        if self.tangent != (len(m) == 2):
            raise ValueError("tangent flag must mark exactly the 2-point lines")


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors 0..k-1 to indices 0..len(assignment)-1."""

    k: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"need at least one color, got k={self.k}")
        object.__setattr__(self, "assignment", tuple(self.assignment))
        for idx, c in enumerate(self.assignment):
            if not 0 <= c < self.k:
                raise ValueError(f"color {c} at index {idx} outside 0..{self.k - 1}")

    def __len__(self) -> int:
        return len(self.assignment)

    def color_of(self, index: int) -> int:
        return self.assignment[index]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a monochromatic-line check; witnesses list every violation."""

    passed: bool
    monochromatic: tuple[tuple[int, ...], ...] = field(default=())

    def __bool__(self) -> bool:
        return self.passed


# -----------------------------
# Operations
# -----------------------------

def third_point(i: int, j: int, n: int) -> int:
    """Residue completing {i, j} to a zero-sum triple mod n.

    May coincide with i or j (tangency)."""
    _check_modulus(n)
    _check_residue(i, n, "i")
    _check_residue(j, n, "j")
    return (-i - j) % n


def group_lines(n: int) -> list[GroupLine]:
    """All lines of Z/nZ, each exactly once, sorted by members.

    Every unordered residue pair {i, j} extends to {i, j, -i-j mod n};
    the extension is recorded once, as a 3-line when the third residue is
    new and as a tangent 2-line when it repeats i or j.
    """
    _check_modulus(n)
    lines: list[GroupLine] = []
    for i in range(n):
        for j in range(i + 1, n):
            k = (-i - j) % n
            if k == i or k == j:
                lines.append(GroupLine((i, j), tangent=True))
            elif k > j:
                # record each 3-line only from its two smallest members
                lines.append(GroupLine((i, j, k), tangent=False))
    lines.sort(key=lambda line: line.members)
    return lines


def thirds_coloring(n: int) -> Coloring:
    """3-coloring of residues by thirds of [0, n): color(i) = 0 when
    3i < n, 1 when n <= 3i < 2n, 2 otherwise.  Integer comparisons only.
    """
    _check_modulus(n)
    colors = []
    for i in range(n):
        t = 3 * i
        colors.append(0 if t < n else (1 if t < 2 * n else 2))
    return Coloring(3, tuple(colors))


def verify_coloring_group(n: int, coloring: Coloring) -> VerificationReport:
    """Check that no line of Z/nZ is monochromatic under `coloring`.

    Tangent 2-lines count: a line is a maximal collinear set regardless
    of its size.  On failure the report lists every monochromatic line.
    """
    _check_modulus(n)
    if len(coloring) != n:
        raise ValueError(
            f"coloring covers {len(coloring)} indices but the ground set has {n}")
    colors = coloring.assignment
    bad: list[tuple[int, ...]] = []
    for i in range(n):
        ci = colors[i]
        for j in range(i + 1, n):
            if colors[j] != ci:
                continue
            k = (-i - j) % n
            if k == i or k == j:
                bad.append((i, j))
            elif k > j and colors[k] == ci:
                bad.append((i, j, k))
    return VerificationReport(passed=not bad, monochromatic=tuple(bad))

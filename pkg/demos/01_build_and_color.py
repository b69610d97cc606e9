"""Build the 16-point configuration and check its coloring.

The points live on the singular cubic y^2 = x^3 - x^2.  Fraction i/16 of
a full turn maps to (c^2 + 1, c (c^2 + 1)) with c = cot(pi i/16); the
fraction 0 maps to the point at infinity of the vertical direction.
Coloring each point by which third of [0, 16) its index falls into
leaves no line (maximal collinear subset) monochromatic, even though no
four points are collinear.
"""
from mpmath import mp

from cubiclines import (
    curve_cycle,
    curve_residual,
    thirds_coloring,
    verify_coloring_geometric,
    verify_coloring_group,
)

n = 16
config = curve_cycle(n)
coloring = thirds_coloring(n)
names = ["red", "green", "blue"]

print(f"{n} points at 128-digit precision:")
for i, p in enumerate(config):
    where = "infinity" if p.is_infinite() else (
        f"({mp.nstr(p.X, 8)}, {mp.nstr(p.Y, 8)})")
    print(f"  i={i:2d}  {names[coloring.color_of(i)]:5s}  {where}")

worst = max(abs(curve_residual(p)) for p in config)
print(f"\nworst curve-equation residual: {mp.nstr(worst, 3)}")

geometric = verify_coloring_geometric(config, coloring)
algebraic = verify_coloring_group(n, coloring)
print(f"no monochromatic line (geometric scan): {geometric.passed}")
print(f"no monochromatic line (residues mod n): {algebraic.passed}")

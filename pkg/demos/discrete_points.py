"""Weighted point medians, vertex snapping, and the sampled fallback.

Three small stories: a wide-angle triple whose median IS one of the
points, weights dragging the answer onto the heavy site, and a region
median recovered from nothing but a lattice of interior samples.
"""

import math

from regionmedian import Polygon
from regionmedian.solver import solve_median
from regionmedian.weiszfeld import PointSet, region_median_by_sampling, weiszfeld

print("1) an obtuse triple: the middle point sees the others under > 120 degrees")
res = weiszfeld(PointSet([(0.0, 0.0), (1.0, 0.0), (0.5, 0.05)]))
print("   median (%.6f, %.6f), subgradient norm %.1e  (exactly the vertex)"
      % (res.median.x, res.median.y, res.residual_norm))

print("\n2) weights: one corner of a square outweighs the other three combined")
heavy = weiszfeld(PointSet([(0, 0), (1, 0), (1, 1), (0, 1)], weights=[5.0, 1.0, 1.0, 1.0]))
print("   median (%.2e, %.2e), pinned to the heavy corner" % (heavy.median.x, heavy.median.y))

print("\n3) region median from interior samples only")
t345 = Polygon([(0.0, 0.0), (3.0, 0.0), (3.0, 4.0)])
truth = solve_median(t345).median
print("   boundary-integral solve: (%.9f, %.9f)" % (truth.x, truth.y))
for grid in (32, 64, 128, 256):
    approx = region_median_by_sampling(t345, grid)
    gap = math.hypot(approx.x - truth.x, approx.y - truth.y)
    print("   %3dx%-3d lattice:         (%.9f, %.9f)   off by %.2e"
          % (grid, grid, approx.x, approx.y, gap))
print("   the lattice route needs no boundary integrals at all, which makes")
print("   it a useful independent check on the solver above")

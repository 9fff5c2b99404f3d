"""A curved region enters the solver as a sampled boundary loop.

Nothing in the solve pipeline knows about circles; it sees a polygon
with N vertices read off the (slightly unevenly sampled) boundary of a
unit disk. The solved median must then approach the disk center at
first order in the sample spacing.
"""

import math

import numpy as np

from regionmedian import Polygon, solve_median

center = (0.25, -0.4)
print("disk center: (%.2f, %.2f)\n" % center)
print("%6s  %22s  %14s" % ("N", "solved median", "dist to center"))

prev = None
for n in (16, 32, 64, 128, 256):
    u = np.arange(n) / n
    theta = 2.0 * np.pi * u + 1e-3 * np.sin(2.0 * np.pi * u)
    loop = np.stack([center[0] + np.cos(theta), center[1] + np.sin(theta)], axis=1)
    res = solve_median(Polygon(loop))
    dist = math.hypot(res.median.x - center[0], res.median.y - center[1])
    note = "" if prev is None else "   (ratio %.2f)" % (dist / prev)
    print("%6d  (%9.6f, %9.6f)  %14.3e%s" % (n, res.median.x, res.median.y, dist, note))
    prev = dist

print("\nthe uneven sampling is deliberate: perfectly uniform vertices cancel")
print("by symmetry and land on the center to rounding error at every N")

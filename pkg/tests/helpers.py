"""Shared generators for randomized tests. All randomness flows through
the caller's seeded Generator so every test is reproducible."""
import numpy as np

from regionmedian import Polygon


def random_convex_polygon(rng, n_max=8, scale=1.0):
    """Random convex polygon with 3..n_max vertices, unit-ish size."""
    from scipy.spatial import ConvexHull

    while True:
        n = int(rng.integers(3, n_max + 1))
        angles = np.sort(rng.uniform(0.0, 2.0 * np.pi, n))
        radii = rng.uniform(0.5, 1.5, n)
        pts = np.stack([radii * np.cos(angles), radii * np.sin(angles)], axis=1)
        pts = (pts + rng.uniform(-1.0, 1.0, 2)) * scale
        try:
            hull = ConvexHull(pts)
        except Exception:
            continue
        coords = pts[hull.vertices]
        if len(coords) >= 3:
            poly = Polygon(coords)
            if poly.area > 0.3 * scale * scale:
                return poly


def random_triangle(rng, scale=1.0, min_area=0.15):
    """Random triangle with area bounded away from zero."""
    while True:
        coords = rng.uniform(-1.0, 1.0, (3, 2)) * scale
        area = 0.5 * abs(
            (coords[1, 0] - coords[0, 0]) * (coords[2, 1] - coords[0, 1])
            - (coords[1, 1] - coords[0, 1]) * (coords[2, 0] - coords[0, 0])
        )
        if area > min_area * scale * scale:
            return Polygon(coords)


def random_star_polygon(rng, n=8, scale=1.0):
    """Non-convex but simple polygon, star-shaped around its anchor point.

    Angles come from a jittered uniform grid so every angular gap stays
    strictly between 0 and pi; with positive radii that is enough to keep
    the loop simple no matter how wild the radii are.
    """
    angles = (np.arange(n) + rng.uniform(0.05, 0.95, n)) * (2.0 * np.pi / n)
    radii = rng.uniform(0.35, 1.5, n)
    pts = np.stack([radii * np.cos(angles), radii * np.sin(angles)], axis=1) * scale
    return Polygon(pts + rng.uniform(-0.5, 0.5, 2) * scale)


def similarity_transform(coords, angle, scale, shift):
    """Apply rotation by angle, scaling, then translation to (n, 2) coords."""
    c, s = np.cos(angle), np.sin(angle)
    rot = np.array([[c, -s], [s, c]])
    return (np.asarray(coords, dtype=float) @ rot.T) * scale + np.asarray(shift, dtype=float)


def interior_point(poly, rng):
    """A point strictly inside the polygon, biased toward the centroid."""
    c = poly.centroid.as_array()
    coords = poly.coords
    while True:
        v = coords[int(rng.integers(0, len(coords)))]
        p = c + rng.uniform(0.05, 0.85) * (v - c)
        if poly.contains(p, strict=True):
            return p

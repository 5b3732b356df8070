"""Muscle path geometry: straight segments and single-cylinder wrapping.

A path segment that intersects its wrap cylinder is replaced, in the plane
normal to the cylinder axis, by the tangent line from each endpoint plus
the connecting arc, taken on the side selected by the cylinder's sign
convention.  The out-of-plane component is recovered by unrolling the
developable surface: the 3-D length is the hypotenuse of the in-plane
length and the axial displacement, which is exact for a geodesic wrap.

``side`` is the travel orientation around the cylinder looking down the
axis: +1 bends the path counterclockwise, -1 clockwise.  Because the side
is fixed per cylinder, the wrapped length is continuous through tangency
on the selected side (the arc shrinks to a point there).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .errors import ModelConfigError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class WrapCylinder:
    """A wrapping cylinder fixed to a body.

    Attributes:
        name: identifier referenced by muscle paths.
        body: name of the body the cylinder is attached to.
        center: point on the cylinder axis, in body-local coordinates (m).
        axis: unit direction of the cylinder axis, body-local.
        radius: cylinder radius (m).
        side: +1 or -1, tangent-solution selector (see module docstring).
    """

    name: str
    body: str
    center: tuple[float, float, float]
    axis: tuple[float, float, float]
    radius: float
    side: int = 1

    def __post_init__(self):
        if self.radius <= 0:
            raise ModelConfigError(f"wrap {self.name}: radius must be positive")
        n = math.sqrt(sum(a * a for a in self.axis))
        if abs(n - 1.0) > 1e-9:
            object.__setattr__(self, "axis", tuple(a / n for a in self.axis))
        if self.side not in (1, -1):
            raise ModelConfigError(f"wrap {self.name}: side must be +1 or -1")


@njit(cache=True)
def wrap_length_plane(px, py, sx, sy, radius, side):
    """In-plane path length from P to S around a circle at the origin.

    Returns (length, wrapped, ok); ok is False when an endpoint lies
    inside the circle (invalid configuration).
    """
    dp2 = px * px + py * py
    ds2 = sx * sx + sy * sy
    r2 = radius * radius
    if dp2 <= r2 or ds2 <= r2:
        return 0.0, False, False

    dx = sx - px
    dy = sy - py
    seg2 = dx * dx + dy * dy
    straight = math.sqrt(seg2)
    if seg2 < 1e-30:
        return straight, False, True

    # closest approach of the segment to the origin
    t = -(px * dx + py * dy) / seg2
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    cx = px + t * dx
    cy = py + t * dy
    if cx * cx + cy * cy >= r2:
        return straight, False, True

    # tangent points, chosen for travel orientation `side`
    ang_p = math.atan2(py, px)
    ang_s = math.atan2(sy, sx)
    phi_p = math.acos(radius / math.sqrt(dp2))
    phi_s = math.acos(radius / math.sqrt(ds2))
    t_p = ang_p + side * phi_p
    t_s = ang_s - side * phi_s
    arc = (side * (t_s - t_p)) % TWO_PI
    length = math.sqrt(dp2 - r2) + radius * arc + math.sqrt(ds2 - r2)
    return length, True, True


@njit(cache=True)
def segment_length_3d(p, s, center, axis, radius, side):
    """Length of the path from 3-D point p to s wrapping the cylinder.

    Points and cylinder geometry share one frame.  Returns (length,
    wrapped, ok) as in :func:`wrap_length_plane`.
    """
    # orthonormal in-plane basis (e1, e2) normal to the axis
    ax, ay, az = axis[0], axis[1], axis[2]
    if abs(ax) < 0.9:
        hx, hy, hz = 1.0, 0.0, 0.0
    else:
        hx, hy, hz = 0.0, 1.0, 0.0
    e1x = hy * az - hz * ay
    e1y = hz * ax - hx * az
    e1z = hx * ay - hy * ax
    n = math.sqrt(e1x * e1x + e1y * e1y + e1z * e1z)
    e1x /= n
    e1y /= n
    e1z /= n
    e2x = ay * e1z - az * e1y
    e2y = az * e1x - ax * e1z
    e2z = ax * e1y - ay * e1x

    rpx = p[0] - center[0]
    rpy = p[1] - center[1]
    rpz = p[2] - center[2]
    rsx = s[0] - center[0]
    rsy = s[1] - center[1]
    rsz = s[2] - center[2]

    pu = rpx * e1x + rpy * e1y + rpz * e1z
    pv = rpx * e2x + rpy * e2y + rpz * e2z
    su = rsx * e1x + rsy * e1y + rsz * e1z
    sv = rsx * e2x + rsy * e2y + rsz * e2z
    pz = rpx * ax + rpy * ay + rpz * az
    sz = rsx * ax + rsy * ay + rsz * az

    plane_len, wrapped, ok = wrap_length_plane(pu, pv, su, sv, radius, side)
    if not ok:
        return 0.0, False, False
    dz = sz - pz
    return math.sqrt(plane_len * plane_len + dz * dz), wrapped, ok


def path_length(points: np.ndarray, cylinder: WrapCylinder | None = None,
                cylinder_frame: tuple[np.ndarray, np.ndarray] | None = None) -> float:
    """Polyline length through world-frame points, wrapping one cylinder.

    ``cylinder_frame`` gives the cylinder's (world center, world axis); it
    defaults to the body-local values, which is only correct when the
    owning body sits at the world origin with identity orientation.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] < 2 or pts.shape[1] != 3:
        raise ModelConfigError("path needs >= 2 three-dimensional points")
    total = 0.0
    if cylinder is None:
        for i in range(len(pts) - 1):
            total += float(np.linalg.norm(pts[i + 1] - pts[i]))
        return total
    if cylinder_frame is None:
        center = np.asarray(cylinder.center, dtype=float)
        axis = np.asarray(cylinder.axis, dtype=float)
    else:
        center, axis = cylinder_frame
    for i in range(len(pts) - 1):
        length, _, ok = segment_length_3d(pts[i], pts[i + 1], center, axis,
                                          cylinder.radius, cylinder.side)
        if not ok:
            raise ModelConfigError(
                f"path point inside wrap cylinder {cylinder.name!r}")
        total += length
    return total

"""2D polygon primitives: areas, centroids, half-plane clipping, ray casting.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share across threads.  Tolerances are
scale-relative: the coincidence epsilon is ``EPS_REL`` times the bounding-box
diameter of whatever is being tested, so the code behaves identically for a
unit square and a kilometre-sized domain.

Voronoi partitioning is done by clipping the parent region with the pairwise
perpendicular-bisector half-planes (the number of generators per parent is
always small).  Clipping a non-convex region can disconnect it, so the result
of a clip is a ``Region``: a list of disjoint simple polygons with summed
area.  The splitter below handles cuts that pass exactly through vertices,
run along collinear boundary edges, or pinch a region at a point.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    DegenerateConfiguration,
    DegenerateGeometry,
    GeneratorOutsideParent,
    NoIntersection,
    OriginOutsideRegion,
)

# Relative coincidence tolerance (times bounding-box diameter).
EPS_REL = 1e-12


class Point(NamedTuple):
    x: float
    y: float


class HalfPlane(NamedTuple):
    """The closed set {p : p . normal <= offset}, with unit normal."""

    nx: float
    ny: float
    offset: float

    @classmethod
    def from_normal(cls, normal: Sequence[float], offset: float) -> "HalfPlane":
        nx, ny = float(normal[0]), float(normal[1])
        norm = math.hypot(nx, ny)
        if not math.isfinite(norm) or norm == 0.0:
            raise DegenerateGeometry("half-plane normal must be a nonzero finite vector")
        if abs(norm - 1.0) > 1e-12:
            nx, ny, offset = nx / norm, ny / norm, float(offset) / norm
        return cls(nx, ny, float(offset))

    @classmethod
    def bisector(cls, keep: Point, other: Point) -> "HalfPlane":
        """Half-plane of points at least as close to ``keep`` as to ``other``."""
        dx, dy = other[0] - keep[0], other[1] - keep[1]
        dist = math.hypot(dx, dy)
        if dist == 0.0:
            raise DegenerateConfiguration("bisector of coincident points")
        nx, ny = dx / dist, dy / dist
        mx, my = 0.5 * (keep[0] + other[0]), 0.5 * (keep[1] + other[1])
        return cls(nx, ny, mx * nx + my * ny)

    def side(self, p: Sequence[float]) -> float:
        """Positive inside the half-plane, negative outside."""
        return self.offset - (p[0] * self.nx + p[1] * self.ny)


def _shoelace(verts) -> float:
    a = 0.0
    n = len(verts)
    for i in range(n):
        x1, y1 = verts[i]
        x2, y2 = verts[(i + 1) % n]
        a += x1 * y2 - x2 * y1
    return 0.5 * a


def _bbox(verts):
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    return min(xs), min(ys), max(xs), max(ys)


def _bbox_diameter(bbox) -> float:
    return math.hypot(bbox[2] - bbox[0], bbox[3] - bbox[1])


def _dedupe_ring(verts, eps: float):
    """Drop consecutive (and wrap-around) vertices closer than eps."""
    out = []
    for v in verts:
        if out and math.hypot(v[0] - out[-1][0], v[1] - out[-1][1]) <= eps:
            continue
        out.append(v)
    while len(out) > 1 and math.hypot(out[0][0] - out[-1][0], out[0][1] - out[-1][1]) <= eps:
        out.pop()
    return out


def _segments_properly_intersect(p1, p2, p3, p4, eps: float) -> bool:
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1 = orient(p3, p4, p1)
    d2 = orient(p3, p4, p2)
    d3 = orient(p1, p2, p3)
    d4 = orient(p1, p2, p4)
    return (
        ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps))
        and ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps))
    )


class Polygon:
    """Simple polygon with counter-clockwise vertices, implicitly closed."""

    __slots__ = ("vertices", "area", "bbox")

    def __init__(self, vertices: Iterable[Sequence[float]], validate: bool = True):
        verts = [(float(v[0]), float(v[1])) for v in vertices]
        for x, y in verts:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise DegenerateGeometry("polygon vertex is not finite")
        if len(verts) < 3:
            raise DegenerateGeometry("polygon needs at least 3 vertices")
        bbox = _bbox(verts)
        eps = EPS_REL * _bbox_diameter(bbox)
        verts = _dedupe_ring(verts, eps)
        if len(verts) < 3:
            raise DegenerateGeometry("polygon collapses under vertex deduplication")
        area = _shoelace(verts)
        if area <= eps * eps:
            if area < 0:
                raise DegenerateGeometry("polygon vertices must be counter-clockwise")
            raise DegenerateGeometry(f"polygon area {area:g} below tolerance")
        if validate:
            self._check_simple(verts, eps * _bbox_diameter(bbox))
        self.vertices = tuple(verts)
        self.area = area
        self.bbox = bbox

    @staticmethod
    def _check_simple(verts, eps_cross: float) -> None:
        n = len(verts)
        for i in range(n):
            a1, a2 = verts[i], verts[(i + 1) % n]
            for j in range(i + 1, n):
                if j == i or (j + 1) % n == i or (i + 1) % n == j:
                    continue
                b1, b2 = verts[j], verts[(j + 1) % n]
                if _segments_properly_intersect(a1, a2, b1, b2, eps_cross):
                    raise DegenerateGeometry("polygon is self-intersecting")

    def centroid(self) -> Point:
        cx = cy = 0.0
        n = len(self.vertices)
        for i in range(n):
            x1, y1 = self.vertices[i]
            x2, y2 = self.vertices[(i + 1) % n]
            w = x1 * y2 - x2 * y1
            cx += (x1 + x2) * w
            cy += (y1 + y2) * w
        f = 1.0 / (6.0 * self.area)
        return Point(cx * f, cy * f)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)

    def __repr__(self) -> str:
        return f"Polygon({len(self.vertices)} vertices, area={self.area:.6g})"


def polygon_area(poly: Polygon) -> float:
    """Shoelace area; raises DegenerateGeometry below tolerance (checked at
    construction, re-raised here for direct callers)."""
    eps = EPS_REL * _bbox_diameter(poly.bbox)
    if poly.area < eps * eps:
        raise DegenerateGeometry("degenerate polygon")
    return poly.area


def simplify_collinear(poly: Polygon, rel_tol: float = 1e-12) -> Polygon:
    """Remove vertices that lie on the segment joining their neighbours."""
    verts = list(poly.vertices)
    tol = rel_tol * _bbox_diameter(poly.bbox) ** 2
    changed = True
    while changed and len(verts) > 3:
        changed = False
        for i in range(len(verts)):
            a = verts[i - 1]
            b = verts[i]
            c = verts[(i + 1) % len(verts)]
            cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
            if abs(cross) <= tol:
                del verts[i]
                changed = True
                break
    return Polygon(verts, validate=False)


class Region:
    """Union of simple polygons with pairwise disjoint interiors.

    The empty region (no pieces, zero area) is a legal value: it marks an
    empty clip result.
    """

    __slots__ = ("pieces", "area", "bbox", "_centroid")

    def __init__(self, pieces: Iterable[Polygon]):
        self.pieces = tuple(pieces)
        self.area = sum(p.area for p in self.pieces)
        if self.pieces:
            xs0 = min(p.bbox[0] for p in self.pieces)
            ys0 = min(p.bbox[1] for p in self.pieces)
            xs1 = max(p.bbox[2] for p in self.pieces)
            ys1 = max(p.bbox[3] for p in self.pieces)
            self.bbox = (xs0, ys0, xs1, ys1)
        else:
            self.bbox = (0.0, 0.0, 0.0, 0.0)
        self._centroid = None

    @classmethod
    def empty(cls) -> "Region":
        return cls(())

    @classmethod
    def from_polygon(cls, poly: Polygon) -> "Region":
        return cls((poly,))

    @property
    def is_empty(self) -> bool:
        return not self.pieces or self.area <= 0.0

    def centroid(self) -> Point:
        if self.is_empty:
            raise DegenerateGeometry("centroid of an empty region")
        if self._centroid is None:
            cx = cy = 0.0
            for p in self.pieces:
                c = p.centroid()
                cx += p.area * c.x
                cy += p.area * c.y
            self._centroid = Point(cx / self.area, cy / self.area)
        return self._centroid

    def eps(self) -> float:
        """Scale-relative coincidence tolerance for this region."""
        return EPS_REL * max(_bbox_diameter(self.bbox), 1e-300)

    def diameter(self) -> float:
        """Max pairwise vertex distance (cells are small, brute force)."""
        pts = [v for p in self.pieces for v in p.vertices]
        best = 0.0
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                d = math.hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1])
                if d > best:
                    best = d
        return best

    def contains(self, p: Sequence[float], eps: float | None = None) -> bool:
        """Boundary-inclusive membership test."""
        return self.locate_point(p, eps) != "outside"

    def locate_point(self, p: Sequence[float], eps: float | None = None) -> str:
        """Classify a point as 'inside', 'boundary' or 'outside'."""
        if eps is None:
            eps = self.eps()
        x, y = float(p[0]), float(p[1])
        x0, y0, x1, y1 = self.bbox
        if x < x0 - eps or x > x1 + eps or y < y0 - eps or y > y1 + eps:
            return "outside"
        for poly in self.pieces:
            if _point_on_ring(x, y, poly.vertices, eps):
                return "boundary"
            if _point_in_ring(x, y, poly.vertices):
                return "inside"
        return "outside"

    def __repr__(self) -> str:
        return f"Region({len(self.pieces)} pieces, area={self.area:.6g})"


def _point_in_ring(x: float, y: float, verts) -> bool:
    """Even-odd crossing test; half-open rule keeps vertex hits consistent."""
    inside = False
    n = len(verts)
    for i in range(n):
        x1, y1 = verts[i]
        x2, y2 = verts[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            xc = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xc > x:
                inside = not inside
    return inside


def _point_on_ring(x: float, y: float, verts, eps: float) -> bool:
    n = len(verts)
    for i in range(n):
        x1, y1 = verts[i]
        x2, y2 = verts[(i + 1) % n]
        dx, dy = x2 - x1, y2 - y1
        ll = dx * dx + dy * dy
        if ll == 0.0:
            t = 0.0
        else:
            t = ((x - x1) * dx + (y - y1) * dy) / ll
            t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
        ex, ey = x1 + t * dx - x, y1 + t * dy - y
        if ex * ex + ey * ey <= eps * eps:
            return True
    return False


def region_centroid(region: Region) -> Point:
    return region.centroid()


# ---------------------------------------------------------------------------
# Half-plane splitting
# ---------------------------------------------------------------------------

def _split_ring(verts, hp: HalfPlane, eps: float):
    """Split one simple CCW ring by the half-plane's boundary line.

    Returns (inside_rings, outside_rings).  Handles cut lines through
    vertices, collinear boundary edges, and point-pinches (the pinched parts
    come back as separate rings).
    """
    n = len(verts)
    s = [hp.offset - (vx * hp.nx + vy * hp.ny) for vx, vy in verts]
    tags = [0 if -eps <= si <= eps else (1 if si > 0.0 else -1) for si in s]
    if all(t >= 0 for t in tags):
        return [verts], []
    if all(t <= 0 for t in tags):
        return [], [verts]

    # Augmented ring: original vertices plus strict-crossing intersections.
    aug_pts = []
    aug_tag = []
    for i in range(n):
        j = (i + 1) % n
        aug_pts.append(verts[i])
        aug_tag.append(tags[i])
        if tags[i] * tags[j] < 0:
            t = s[i] / (s[i] - s[j])
            ax, ay = verts[i]
            bx, by = verts[j]
            aug_pts.append((ax + t * (bx - ax), ay + t * (by - ay)))
            aug_tag.append(0)
    m = len(aug_pts)

    # Coordinate along the cut line (direction d = (-ny, nx)); points on the
    # line are clustered into nodes so coincident crossings share identity.
    def line_t(p):
        return -hp.ny * p[0] + hp.nx * p[1]

    zero_idx = [i for i in range(m) if aug_tag[i] == 0]
    order = sorted(zero_idx, key=lambda i: line_t(aug_pts[i]))
    node_of = {}
    node_t = []
    for i in order:
        tv = line_t(aug_pts[i])
        if node_t and tv - node_t[-1] <= eps:
            node_of[i] = len(node_t) - 1
        else:
            node_of[i] = len(node_t)
            node_t.append(tv)
    n_nodes = len(node_t)

    # t-intervals of the line covered by collinear boundary edges.
    onsegs = []
    for i in range(m):
        j = (i + 1) % m
        if aug_tag[i] == 0 and aug_tag[j] == 0:
            ta, tb = line_t(aug_pts[i]), line_t(aug_pts[j])
            onsegs.append((min(ta, tb), max(ta, tb)))

    # Between consecutive nodes, the cut line is uniformly interior to the
    # ring, exterior, or lying along its boundary.  Interior intervals become
    # cut edges.
    base_x, base_y = hp.offset * hp.nx, hp.offset * hp.ny
    interval_used = [False] * max(n_nodes - 1, 0)
    for k in range(n_nodes - 1):
        tm = 0.5 * (node_t[k] + node_t[k + 1])
        if any(a - eps <= tm <= b + eps for a, b in onsegs):
            continue
        qx, qy = base_x - hp.ny * tm, base_y + hp.nx * tm
        if _point_in_ring(qx, qy, verts):
            interval_used[k] = True
    used_nodes = set()
    for k, u in enumerate(interval_used):
        if u:
            used_nodes.add(k)
            used_nodes.add(k + 1)

    def side_pieces(side: int):
        # Edge i (aug_pts[i] -> aug_pts[i+1]) belongs to this side when it has
        # a strict vertex on the side, or is a collinear edge traversed in the
        # direction that keeps this side's interior on its left.
        belong = []
        for i in range(m):
            j = (i + 1) % m
            ti, tj = aug_tag[i], aug_tag[j]
            if ti * side > 0 or tj * side > 0:
                belong.append(True)
            elif ti == 0 and tj == 0:
                dt = line_t(aug_pts[j]) - line_t(aug_pts[i])
                belong.append(dt * side > 0)
            else:
                belong.append(False)

        # Maximal runs of belonging edges -> open chains (endpoints on the
        # line); isolated on-line vertices become singleton chains so pinch
        # points can be stitched through.
        chains = []
        on_chain = [False] * m
        for st in range(m):
            if belong[st] and not belong[st - 1]:
                seq = [st]
                k = st
                while belong[k]:
                    k = (k + 1) % m
                    seq.append(k)
                for idx in seq:
                    on_chain[idx] = True
                chains.append(seq)
        for i in range(m):
            if aug_tag[i] == 0 and not on_chain[i] and not belong[i] and not belong[i - 1]:
                chains.append([i])

        # Split chains at interior vertices sitting on nodes where a cut edge
        # terminates; those are mandatory stitch points.
        split_chains = []
        for seq in chains:
            cur = [seq[0]]
            for pos in range(1, len(seq)):
                idx = seq[pos]
                cur.append(idx)
                if (
                    pos != len(seq) - 1
                    and aug_tag[idx] == 0
                    and node_of.get(idx) in used_nodes
                ):
                    split_chains.append(cur)
                    cur = [idx]
            if len(cur) > 1 or len(seq) == 1:
                split_chains.append(cur)
        chains = split_chains

        start_at: dict[int, list[int]] = {}
        for ci, seq in enumerate(chains):
            start_at.setdefault(node_of[seq[0]], []).append(ci)
        for stack in start_at.values():
            stack.reverse()  # pop() consumes in discovery order

        pieces = []
        consumed = [False] * len(chains)
        for ci in range(len(chains)):
            if consumed[ci]:
                continue
            start_node = node_of[chains[ci][0]]
            start_at[start_node].remove(ci)
            walk = []
            cur = ci
            closed = False
            for _ in range(len(chains) + 1):
                consumed[cur] = True
                walk.extend(aug_pts[i] for i in chains[cur])
                end_node = node_of[chains[cur][-1]]
                k = end_node if side > 0 else end_node - 1
                if k < 0 or k >= len(interval_used) or not interval_used[k]:
                    break
                nxt_node = end_node + 1 if side > 0 else end_node - 1
                if nxt_node == start_node:
                    closed = True
                    break
                stack = start_at.get(nxt_node)
                if not stack:
                    break
                cur = stack.pop()
            if closed:
                pieces.append(walk)
        return pieces

    return side_pieces(1), side_pieces(-1)


def _rings_to_region(rings, eps: float) -> Region:
    pieces = []
    for ring in rings:
        ring = _dedupe_ring(ring, eps)
        if len(ring) < 3:
            continue
        area = _shoelace(ring)
        if area <= eps * eps:
            continue
        pieces.append(Polygon(ring, validate=False))
    return Region(pieces)


def split_halfplane(region: Region, hp: HalfPlane) -> tuple[Region, Region]:
    """Split a region into (region ∩ hp, region ∩ hp-complement)."""
    ins: list = []
    outs: list = []
    for poly in region.pieces:
        eps = EPS_REL * max(_bbox_diameter(poly.bbox), 1e-300)
        a, b = _split_ring(list(poly.vertices), hp, eps)
        ins.extend(a)
        outs.extend(b)
    eps_r = region.eps() if region.pieces else 0.0
    return _rings_to_region(ins, eps_r), _rings_to_region(outs, eps_r)


def clip_halfplane(region: Region, hp: HalfPlane) -> Region:
    """Region ∩ half-plane; an empty Region is a legal result."""
    ins: list = []
    for poly in region.pieces:
        eps = EPS_REL * max(_bbox_diameter(poly.bbox), 1e-300)
        s = [hp.offset - (vx * hp.nx + vy * hp.ny) for vx, vy in poly.vertices]
        if all(si >= -eps for si in s):
            ins.append(list(poly.vertices))
            continue
        if all(si <= eps for si in s):
            continue
        a, _ = _split_ring(list(poly.vertices), hp, eps)
        ins.extend(a)
    eps_r = region.eps() if region.pieces else 0.0
    return _rings_to_region(ins, eps_r)


# ---------------------------------------------------------------------------
# Rays and Voronoi partitions
# ---------------------------------------------------------------------------

def ray_first_exit(region: Region, origin: Sequence[float], direction: Sequence[float]) -> float:
    """Smallest alpha > 0 with origin + alpha*direction on the region boundary.

    The origin must be strictly inside the region.
    """
    if region.locate_point(origin) != "inside":
        raise OriginOutsideRegion(f"ray origin {tuple(origin)} not strictly inside region")
    ox, oy = float(origin[0]), float(origin[1])
    dx, dy = float(direction[0]), float(direction[1])
    nrm = math.hypot(dx, dy)
    if not math.isfinite(nrm) or nrm == 0.0:
        raise DegenerateGeometry("ray direction must be a nonzero finite vector")
    dx, dy = dx / nrm, dy / nrm
    best = math.inf
    for poly in region.pieces:
        verts = poly.vertices
        n = len(verts)
        for i in range(n):
            ax, ay = verts[i]
            bx, by = verts[(i + 1) % n]
            ex, ey = bx - ax, by - ay
            den = dx * ey - dy * ex
            if abs(den) < 1e-300:
                continue
            wx, wy = ax - ox, ay - oy
            alpha = (wx * ey - wy * ex) / den
            u = (wx * dy - wy * dx) / den
            if alpha > 0.0 and -1e-12 <= u <= 1.0 + 1e-12:
                if alpha < best:
                    best = alpha
    if not math.isfinite(best):
        raise NoIntersection("interior ray found no boundary hit")
    return best


def voronoi_partition(parent: Region, generators: Sequence[Sequence[float]]) -> list[Region]:
    """Partition the parent among generator points by bisector clipping.

    Cell k is the parent clipped by every perpendicular-bisector half-plane
    against the other generators; cell areas sum to the parent area.
    """
    gens = [(float(g[0]), float(g[1])) for g in generators]
    if not gens:
        raise DegenerateConfiguration("at least one generator required")
    eps = parent.eps()
    for g in gens:
        if not (math.isfinite(g[0]) and math.isfinite(g[1])):
            raise DegenerateConfiguration("generator is not finite")
        if not parent.contains(g):
            raise GeneratorOutsideParent(f"generator {g} outside parent region")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if math.hypot(gens[i][0] - gens[j][0], gens[i][1] - gens[j][1]) <= eps:
                raise DegenerateConfiguration(f"generators {i} and {j} coincide")
    if len(gens) == 1:
        return [parent]
    cells = []
    for k, gk in enumerate(gens):
        cell = parent
        for j, gj in enumerate(gens):
            if j == k:
                continue
            cell = clip_halfplane(cell, HalfPlane.bisector(Point(*gk), Point(*gj)))
            if cell.is_empty:
                break
        cells.append(cell)
    return cells


# ---------------------------------------------------------------------------
# Vectorized point membership (used for raster pixel assignment)
# ---------------------------------------------------------------------------

def points_in_region_mask(xs: np.ndarray, ys: np.ndarray, region: Region,
                          eps: float | None = None) -> np.ndarray:
    """Boundary-inclusive membership mask for arrays of points."""
    if eps is None:
        eps = region.eps()
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    mask = np.zeros(xs.shape, dtype=bool)
    if region.is_empty:
        return mask
    x0, y0, x1, y1 = region.bbox
    near = (xs >= x0 - eps) & (xs <= x1 + eps) & (ys >= y0 - eps) & (ys <= y1 + eps)
    if not near.any():
        return mask
    px, py = xs[near], ys[near]
    sub = np.zeros(px.shape, dtype=bool)
    border = np.zeros(px.shape, dtype=bool)
    for poly in region.pieces:
        v = poly.as_array()
        x1v, y1v = v[:, 0], v[:, 1]
        x2v, y2v = np.roll(x1v, -1), np.roll(y1v, -1)
        inside = np.zeros(px.shape, dtype=bool)
        for ex1, ey1, ex2, ey2 in zip(x1v, y1v, x2v, y2v):
            cond = (ey1 > py) != (ey2 > py)
            if not cond.any():
                continue
            xc = ex1 + (py - ey1) * (ex2 - ex1) / (ey2 - ey1)
            inside ^= cond & (xc > px)
            # distance to this edge, for boundary-inclusive ties
        sub |= inside
        for ex1, ey1, ex2, ey2 in zip(x1v, y1v, x2v, y2v):
            dx, dy = ex2 - ex1, ey2 - ey1
            ll = dx * dx + dy * dy
            if ll == 0.0:
                continue
            t = ((px - ex1) * dx + (py - ey1) * dy) / ll
            np.clip(t, 0.0, 1.0, out=t)
            qx = ex1 + t * dx - px
            qy = ey1 + t * dy - py
            border |= qx * qx + qy * qy <= eps * eps
    mask[near] = sub | border
    return mask


# ---------------------------------------------------------------------------
# Constructors and JSON interface
# ---------------------------------------------------------------------------

def unit_square() -> Region:
    return Region.from_polygon(Polygon([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]))


def l_shape() -> Region:
    return Region.from_polygon(
        Polygon([(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)])
    )


def regular_polygon(center: Sequence[float], radius: float, sides: int,
                    phase: float = 0.0) -> Region:
    cx, cy = float(center[0]), float(center[1])
    verts = [
        (cx + radius * math.cos(phase + 2.0 * math.pi * k / sides),
         cy + radius * math.sin(phase + 2.0 * math.pi * k / sides))
        for k in range(sides)
    ]
    return Region.from_polygon(Polygon(verts))


def load_polygon_json(path) -> Region:
    """Read a domain polygon from JSON: {"vertices": [[x, y], ...]} in CCW order."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "vertices" not in data:
        raise DegenerateGeometry(f"{path}: expected a JSON object with a 'vertices' key")
    return Region.from_polygon(Polygon(data["vertices"]))


def save_polygon_json(path, region: Region) -> None:
    if len(region.pieces) != 1:
        raise DegenerateGeometry("polygon JSON stores a single simple polygon")
    data = {"vertices": [[x, y] for x, y in region.pieces[0].vertices]}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh)
        fh.write("\n")

"""Hierarchical refinement trees: daughter placement, partitioning, indexing.

Each parent cell is split among ``multiplicity`` daughter generators placed a
``dispersion`` fraction of the way from the parent generator toward the cell
boundary, along a fan of equally spaced directions.  Nodes are indexed
0-based: child k of node (m, n) is (m+1, n*N + k), so the parent of (m, n) is
(m-1, floor(n/N)).

Construction is deterministic; the finished tree is immutable and safe to
share across threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    DegenerateConfiguration,
    DegenerateGeometry,
    EmptyCell,
    PointOutsideDomain,
    RootHasNoParent,
)
from .geometry import (
    Point,
    Polygon,
    Region,
    ray_first_exit,
    region_centroid,
    voronoi_partition,
)

STRICT = "strict"
PERMISSIVE = "permissive"


@dataclass(frozen=True)
class RefinementParams:
    """Fixed per-run refinement parameters.

    multiplicity        N, daughters per parent (>= 2)
    dispersion          delta, fraction of generator-to-boundary distance
    base_angle          theta0 (radians), direction of daughter 0 at level 1
    rotation_per_level  rho (radians), added once per level
    max_depth           M, number of refinement levels
    min_cell_area       cells below this are errors (strict) or skipped
    degeneracy_policy   "strict" raises on degenerate placements,
                        "permissive" degrades to an incomplete transform
    """

    multiplicity: int
    dispersion: float
    base_angle: float = 0.0
    rotation_per_level: float = 0.0
    max_depth: int = 0
    min_cell_area: float = 0.0
    degeneracy_policy: str = STRICT

    def __post_init__(self):
        if int(self.multiplicity) != self.multiplicity or self.multiplicity < 2:
            raise ValueError("multiplicity must be an integer >= 2")
        if self.degeneracy_policy not in (STRICT, PERMISSIVE):
            raise ValueError("degeneracy_policy must be 'strict' or 'permissive'")
        if self.degeneracy_policy == STRICT:
            if not (0.0 < self.dispersion < 1.0):
                raise ValueError("strict policy requires dispersion in (0, 1)")
        else:
            if not (0.0 <= self.dispersion <= 1.0):
                raise ValueError("dispersion must lie in [0, 1]")
        if self.max_depth < 0:
            raise ValueError("max_depth must be >= 0")
        if self.min_cell_area < 0:
            raise ValueError("min_cell_area must be >= 0")

    def to_dict(self) -> dict:
        return {
            "multiplicity": self.multiplicity,
            "dispersion": self.dispersion,
            "base_angle": self.base_angle,
            "rotation_per_level": self.rotation_per_level,
            "max_depth": self.max_depth,
            "min_cell_area": self.min_cell_area,
            "degeneracy_policy": self.degeneracy_policy,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RefinementParams":
        return cls(
            multiplicity=int(d["multiplicity"]),
            dispersion=float(d["dispersion"]),
            base_angle=float(d.get("base_angle", 0.0)),
            rotation_per_level=float(d.get("rotation_per_level", 0.0)),
            max_depth=int(d.get("max_depth", 0)),
            min_cell_area=float(d.get("min_cell_area", 0.0)),
            degeneracy_policy=d.get("degeneracy_policy", STRICT),
        )


class NodeIndex(NamedTuple):
    level: int
    index: int


def parent_of(node: NodeIndex, multiplicity: int) -> NodeIndex:
    if node.level < 1:
        raise RootHasNoParent("the root node (0, 0) has no parent")
    return NodeIndex(node.level - 1, node.index // multiplicity)


def child_of(node: NodeIndex, k: int, multiplicity: int) -> NodeIndex:
    if not 0 <= k < multiplicity:
        raise ValueError(f"child slot {k} out of range for multiplicity {multiplicity}")
    return NodeIndex(node.level + 1, node.index * multiplicity + k)


def is_ancestor(ancestor: NodeIndex, node: NodeIndex, multiplicity: int) -> bool:
    """The modulus-based subset test: floor(n1 / N^(m1-m2)) == n2."""
    if node.level <= ancestor.level:
        return node == ancestor
    return node.index // multiplicity ** (node.level - ancestor.level) == ancestor.index


@dataclass
class RefinementNode:
    id: NodeIndex
    generator: Point
    region: Region
    measure: float
    skipped: bool = False

    @property
    def alive(self) -> bool:
        return not self.skipped and not self.region.is_empty


class RefinementTree:
    """Indexed hierarchy of nodes; levels[m] holds all N^m slots of level m."""

    def __init__(self, domain: Region, params: RefinementParams,
                 levels: list[list[RefinementNode]]):
        self.domain = domain
        self.params = params
        self.levels = levels

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def node(self, level: int, index: int) -> RefinementNode:
        return self.levels[level][index]

    @property
    def root(self) -> RefinementNode:
        return self.levels[0][0]

    def children(self, node: RefinementNode) -> list[RefinementNode]:
        if node.id.level >= self.depth:
            return []
        n = self.params.multiplicity
        base = node.id.index * n
        return self.levels[node.id.level + 1][base:base + n]

    def iter_nodes(self, alive_only: bool = True) -> Iterator[RefinementNode]:
        for level in self.levels:
            for node in level:
                if node.alive or not alive_only:
                    yield node

    def level_nodes(self, level: int, alive_only: bool = True) -> list[RefinementNode]:
        return [nd for nd in self.levels[level] if nd.alive or not alive_only]

    def ancestors(self, node: NodeIndex) -> list[NodeIndex]:
        """Chain root..node inclusive."""
        chain = [node]
        cur = node
        while cur.level > 0:
            cur = parent_of(cur, self.params.multiplicity)
            chain.append(cur)
        chain.reverse()
        return chain

    # -- diagnostics -------------------------------------------------------

    def closure_residuals(self) -> list[dict]:
        """Per level: alive cell count, total area, and closure residuals."""
        out = []
        mu = self.domain.area
        for m, level in enumerate(self.levels):
            alive = [nd for nd in level if nd.alive]
            total = sum(nd.measure for nd in alive)
            worst_parent = 0.0
            if m >= 1:
                for parent in self.levels[m - 1]:
                    if not parent.alive:
                        continue
                    kids = self.children(parent)
                    ksum = sum(k.measure for k in kids if k.alive)
                    worst_parent = max(worst_parent, abs(ksum - parent.measure) / parent.measure)
            out.append({
                "level": m,
                "cells": len(alive),
                "total_area": total,
                "domain_residual": abs(total - mu) / mu,
                "max_parent_residual": worst_parent,
            })
        return out

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        nodes = []
        for level in self.levels:
            for nd in level:
                nodes.append({
                    "m": nd.id.level,
                    "n": nd.id.index,
                    "generator": [nd.generator.x, nd.generator.y],
                    "pieces": [[[x, y] for x, y in p.vertices] for p in nd.region.pieces],
                    "area": nd.measure,
                })
        return {"params": self.params.to_dict(), "nodes": nodes}

    def save_json(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, separators=(",", ":"))
            fh.write("\n")

    @classmethod
    def from_json_dict(cls, data: dict) -> "RefinementTree":
        params = RefinementParams.from_dict(data["params"])
        n = params.multiplicity
        by_id = {}
        max_level = 0
        for nd in data["nodes"]:
            m, idx = int(nd["m"]), int(nd["n"])
            max_level = max(max_level, m)
            pieces = [Polygon(p, validate=False) for p in nd["pieces"]]
            region = Region(pieces)
            gx, gy = nd["generator"]
            by_id[(m, idx)] = RefinementNode(
                id=NodeIndex(m, idx),
                generator=Point(float(gx), float(gy)),
                region=region,
                measure=float(nd["area"]),
                skipped=region.is_empty,
            )
        levels = []
        for m in range(max_level + 1):
            row = []
            for idx in range(n ** m):
                node = by_id.get((m, idx))
                if node is None:
                    node = RefinementNode(NodeIndex(m, idx), Point(0.0, 0.0),
                                          Region.empty(), 0.0, skipped=True)
                row.append(node)
            levels.append(row)
        domain = levels[0][0].region
        return cls(domain, params, levels)

    @classmethod
    def load_json(cls, path) -> "RefinementTree":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json_dict(json.load(fh))


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def place_children(parent: RefinementNode, params: RefinementParams,
                   level: int) -> list[Point]:
    """Daughter points for the children's ``level`` (>= 1).

    Direction k points at theta0 + (level-1)*rho + 2*pi*k/N (k = 0 along +x
    when the angle is zero); each daughter sits ``dispersion`` of the way from
    the generator to the first boundary hit along its direction.
    """
    if level < 1:
        raise ValueError("children live at level >= 1")
    n = params.multiplicity
    theta = params.base_angle + (level - 1) * params.rotation_per_level
    gx, gy = parent.generator
    pts = []
    for k in range(n):
        ang = theta + 2.0 * math.pi * k / n
        d = (math.cos(ang), math.sin(ang))
        alpha = ray_first_exit(parent.region, parent.generator, d)
        pts.append(Point(gx + params.dispersion * alpha * d[0],
                         gy + params.dispersion * alpha * d[1]))
    if params.degeneracy_policy == STRICT:
        eps = parent.region.eps()
        for i in range(n):
            for j in range(i + 1, n):
                if math.hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) <= eps:
                    raise DegenerateConfiguration(
                        f"children {i} and {j} of node {parent.id} coincide")
    return pts


def _skipped_node(idx: NodeIndex) -> RefinementNode:
    return RefinementNode(idx, Point(0.0, 0.0), Region.empty(), 0.0, skipped=True)


def _refine_one(parent: RefinementNode, params: RefinementParams,
                level: int) -> list[RefinementNode]:
    """Children of one parent, in slot order."""
    n = params.multiplicity
    base = parent.id.index * n
    ids = [NodeIndex(level, base + k) for k in range(n)]

    if parent.skipped:
        return [_skipped_node(i) for i in ids]

    refinable = parent.region.locate_point(parent.generator) == "inside"
    if not refinable:
        if params.degeneracy_policy == STRICT:
            raise DegenerateConfiguration(
                f"generator of node {parent.id} is not strictly interior")
        # Pass the region through unchanged: the refinement repeats itself,
        # which keeps closure but adds no information (incomplete transform).
        passthrough = RefinementNode(ids[0], parent.generator, parent.region,
                                     parent.measure)
        return [passthrough] + [_skipped_node(i) for i in ids[1:]]

    pts = place_children(parent, params, level)

    # Group coincident daughters (permissive); representatives partition the
    # parent, duplicates are skipped.
    eps = parent.region.eps()
    rep_for = list(range(n))
    for i in range(n):
        for j in range(i):
            if math.hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) <= eps:
                rep_for[i] = rep_for[j]
                break
    reps = sorted({r for r in rep_for})

    if len(reps) == 1:
        cells = {reps[0]: parent.region}
    else:
        cell_list = voronoi_partition(parent.region, [pts[r] for r in reps])
        cells = dict(zip(reps, cell_list))

    children = []
    for k in range(n):
        if rep_for[k] != k:
            children.append(_skipped_node(ids[k]))
            continue
        cell = cells[k]
        if cell.is_empty or cell.area < params.min_cell_area:
            if params.degeneracy_policy == STRICT:
                raise EmptyCell(
                    f"cell of node {ids[k]} has area {cell.area:g} below "
                    f"min_cell_area {params.min_cell_area:g}")
            children.append(_skipped_node(ids[k]))
            continue
        children.append(RefinementNode(ids[k], pts[k], cell, cell.area))
    return children


def refine(domain: Region, params: RefinementParams,
           root_generator: Point | None = None) -> RefinementTree:
    """Build the refinement tree breadth-first down to ``params.max_depth``.

    The root generator defaults to the domain centroid.
    """
    if domain.is_empty:
        raise DegenerateGeometry("cannot refine an empty domain")
    if root_generator is None:
        root_generator = region_centroid(domain)
    else:
        root_generator = Point(float(root_generator[0]), float(root_generator[1]))
        if domain.locate_point(root_generator) != "inside":
            raise DegenerateConfiguration("root generator must be strictly inside the domain")
    root = RefinementNode(NodeIndex(0, 0), root_generator, domain, domain.area)
    levels = [[root]]
    for m in range(1, params.max_depth + 1):
        row: list[RefinementNode] = []
        for parent in levels[m - 1]:
            row.extend(_refine_one(parent, params, m))
        levels.append(row)
    return RefinementTree(domain, params, levels)


# ---------------------------------------------------------------------------
# Point location
# ---------------------------------------------------------------------------

def _nearest_piece_distance(region: Region, x: float, y: float) -> float:
    best = math.inf
    for poly in region.pieces:
        verts = poly.vertices
        n = len(verts)
        for i in range(n):
            x1, y1 = verts[i]
            x2, y2 = verts[(i + 1) % n]
            dx, dy = x2 - x1, y2 - y1
            ll = dx * dx + dy * dy
            t = 0.0 if ll == 0.0 else max(0.0, min(1.0, ((x - x1) * dx + (y - y1) * dy) / ll))
            ex, ey = x1 + t * dx - x, y1 + t * dy - y
            best = min(best, ex * ex + ey * ey)
    return best


def locate(tree: RefinementTree, x: Sequence[float], level: int) -> NodeIndex:
    """Node index of the level-``level`` cell containing x.

    Ties on shared boundaries go to the lowest-index cell.  Descends the tree
    so the result is consistent with the nesting structure.
    """
    if not 0 <= level <= tree.depth:
        raise ValueError(f"level {level} out of range 0..{tree.depth}")
    px, py = float(x[0]), float(x[1])
    if not tree.domain.contains((px, py)):
        raise PointOutsideDomain(f"point {(px, py)} outside the domain")
    cur = tree.root
    for m in range(1, level + 1):
        kids = tree.children(cur)
        nxt = None
        for kid in kids:
            if kid.alive and kid.region.contains((px, py)):
                nxt = kid
                break
        if nxt is None:
            # Float-level gap between sibling cells: fall back to the nearest
            # alive child (deterministic: min distance, then lowest index).
            alive = [k for k in kids if k.alive]
            if not alive:
                raise PointOutsideDomain(
                    f"no alive cell contains {(px, py)} at level {m}")
            nxt = min(alive, key=lambda k: (_nearest_piece_distance(k.region, px, py),
                                            k.id.index))
        cur = nxt
    return cur.id

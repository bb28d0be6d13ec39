"""Hierarchical Voronoi refinement trees and multiscale transforms on polygons."""

from .geometry import (
    HalfPlane,
    Point,
    Polygon,
    Region,
    clip_halfplane,
    l_shape,
    polygon_area,
    ray_first_exit,
    region_centroid,
    regular_polygon,
    split_halfplane,
    unit_square,
    voronoi_partition,
)

__version__ = "0.1.0"

__all__ = [
    "HalfPlane",
    "Point",
    "Polygon",
    "Region",
    "clip_halfplane",
    "l_shape",
    "polygon_area",
    "ray_first_exit",
    "region_centroid",
    "regular_polygon",
    "split_halfplane",
    "unit_square",
    "voronoi_partition",
    "__version__",
]

"""Exact convex hull kernels for point sets of affine dimension <= 3.

Points are first projected onto coordinates that are independent on their
affine span, so a polygon sitting in Z^3 is handled by the planar kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Set, Tuple

from ..errors import UnsupportedRank
from ..exactmath import IntVector, nullspace, primitive_vector, rank, rref

Triangle = Tuple[int, int, int]


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _orient3(a, b, c, p) -> int:
    u, v, w = _sub(b, a), _sub(c, a), _sub(p, a)
    n = _cross3(u, v)
    return n[0] * w[0] + n[1] * w[1] + n[2] * w[2]


def _cross2(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_2d(points: Sequence[IntVector]) -> List[int]:
    """Andrew's monotone chain; strictly convex vertex indices in CCW order."""
    order = sorted(range(len(points)), key=lambda i: points[i])
    if len(order) <= 2:
        return order

    def chain(idx):
        out: List[int] = []
        for i in idx:
            while len(out) >= 2 and _cross2(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(list(reversed(order)))
    return lower[:-1] + upper[:-1]


def hull_3d(points: Sequence[IntVector]) -> List[Triangle]:
    """Incremental hull of full-dimensional points in Z^3.

    Returns outward oriented triangles (positive ``_orient3`` means outside).
    Triangles may subdivide a facet and may carry non-vertex points on
    facets or edges; callers filter vertices by incident normals.
    """
    i0 = 0
    i1 = next(i for i in range(len(points)) if points[i] != points[i0])
    d1 = _sub(points[i1], points[i0])
    i2 = next(i for i in range(len(points)) if any(_cross3(d1, _sub(points[i], points[i0]))))
    i3 = next(
        i
        for i in range(len(points))
        if _orient3(points[i0], points[i1], points[i2], points[i]) != 0
    )
    tetra = (i0, i1, i2, i3)
    faces: List[Triangle] = []
    for skip in range(4):
        a, b, c = (tetra[j] for j in range(4) if j != skip)
        opposite = tetra[skip]
        if _orient3(points[a], points[b], points[c], points[opposite]) > 0:
            b, c = c, b
        faces.append((a, b, c))

    for idx in range(len(points)):
        if idx in tetra:
            continue
        p = points[idx]
        visible = [f for f in faces if _orient3(points[f[0]], points[f[1]], points[f[2]], p) > 0]
        if not visible:
            continue
        edges: Set[Tuple[int, int]] = set()
        for a, b, c in visible:
            edges.update(((a, b), (b, c), (c, a)))
        horizon = [(u, v) for (u, v) in edges if (v, u) not in edges]
        seen = set(visible)
        faces = [f for f in faces if f not in seen] + [(u, v, idx) for (u, v) in horizon]
    return faces


@dataclass(frozen=True)
class HullData:
    """Vertex and facet description of conv(points) in ambient coordinates.

    ``facets`` holds inner normals ``a`` with offsets ``b`` (``<a, x> >= b``
    on the polytope) together with the indices of the vertices on the facet.
    ``equations`` span the normals of the affine hull with their values.
    """

    vertices: Tuple[IntVector, ...]
    dim: int
    facets: Tuple[Tuple[IntVector, int, Tuple[int, ...]], ...]
    equations: Tuple[Tuple[IntVector, int], ...]
    coords: Tuple[int, ...]


def affine_frame(points: Sequence[IntVector]) -> Tuple[int, Tuple[int, ...]]:
    """Affine dimension and coordinates that are injective on the affine span."""
    base = points[0]
    diffs = [_sub(p, base) for p in points[1:] if p != base]
    if not diffs:
        return 0, ()
    _, pivots = rref(diffs)
    return len(pivots), tuple(pivots)


def compute_hull(points: Sequence[IntVector], ambient_rank: int) -> HullData:
    if ambient_rank > 3:
        raise UnsupportedRank(f"convex hulls are supported up to rank 3, got {ambient_rank}")
    pts = sorted(set(tuple(p) for p in points))
    dim, coords = affine_frame(pts)
    proj = [tuple(p[c] for c in coords) for p in pts]

    if dim == 0:
        vert_idx = [0]
    elif dim == 1:
        vert_idx = [min(range(len(pts)), key=lambda i: proj[i]), max(range(len(pts)), key=lambda i: proj[i])]
    elif dim == 2:
        vert_idx = hull_2d(proj)
    else:
        triangles = hull_3d(proj)
        normals: Dict[int, List[IntVector]] = {}
        for a, b, c in triangles:
            n = _cross3(_sub(proj[b], proj[a]), _sub(proj[c], proj[a]))
            for i in (a, b, c):
                normals.setdefault(i, []).append(n)
        vert_idx = [i for i, ns in normals.items() if rank(ns) == 3]

    vertices = tuple(sorted(pts[i] for i in set(vert_idx)))
    vproj = [tuple(v[c] for c in coords) for v in vertices]

    # facet normals in projected coordinates, lifted by zero padding
    raw_normals: List[IntVector] = []
    if dim == 1:
        raw_normals = [(1,), (-1,)]
    elif dim == 2:
        ccw = hull_2d(vproj)
        for k in range(len(ccw)):
            a, b = vproj[ccw[k]], vproj[ccw[(k + 1) % len(ccw)]]
            raw_normals.append(primitive_vector((-(b[1] - a[1]), b[0] - a[0])))
    elif dim == 3:
        for a, b, c in hull_3d(vproj):
            n = _cross3(_sub(vproj[b], vproj[a]), _sub(vproj[c], vproj[a]))
            if any(n):
                raw_normals.append(primitive_vector(tuple(-x for x in n)))

    facets = []
    for a_proj in sorted(set(raw_normals)):
        a = [0] * ambient_rank
        for k, c in enumerate(coords):
            a[c] = a_proj[k]
        a = tuple(a)
        values = [sum(x * y for x, y in zip(a, v)) for v in vertices]
        b = min(values)
        on = tuple(i for i, val in enumerate(values) if val == b)
        facets.append((a, b, on))

    base = vertices[0]
    eq_normals = nullspace([_sub(v, base) for v in vertices[1:]], ambient_rank) if dim < ambient_rank else []
    equations = tuple((e, sum(x * y for x, y in zip(e, base))) for e in eq_normals)
    return HullData(
        vertices=vertices,
        dim=dim,
        facets=tuple(facets),
        equations=equations,
        coords=coords,
    )

from __future__ import annotations

from functools import lru_cache

from .polytope import LatticePolytope, _faces, _hull_data


@lru_cache(maxsize=4096)
def normal_fan(p: LatticePolytope):
    """Inner normal fan of P.

    The cone of a face F collects the w minimized on F; it is generated by
    the inner normals of the facets through F plus the orthogonal complement
    of the affine span of P. ``fan.labels`` maps each cone to its face.
    """
    # tropcycle imports this package, so the cone types are bound late
    from ..tropcycle.cones import Cone, Fan

    data = _hull_data(p)
    lineality = [e for e, _ in data.equations]
    labels = {}
    for face in _faces(p):
        members = set(face.vertex_indices)
        normals = [a for a, _, on in data.facets if members <= set(on)]
        labels[Cone.from_generators(p.rank, normals, lineality)] = face
    return Fan.from_cones(p.rank, labels.keys(), labels)

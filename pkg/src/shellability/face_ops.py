"""Face-local constructions: links and face deletions.

Results stay on the parent vertex set so faces remain comparable across a
decomposition recursion; vertices outside every facet simply never occur.
"""

from __future__ import annotations

from .complexes import Face, SimplicialComplex, face_bits, from_facets
from .errors import EmptyFace, NotAFace


def link(cplx: SimplicialComplex, face: Face) -> SimplicialComplex:
    """Subcomplex of faces disjoint from ``face`` whose union with it is a
    face.  The link of the empty face is the complex itself."""
    if not cplx.is_face(face):
        raise NotAFace("link requires a face of the complex")
    return from_facets(
        cplx.vertices, [f & ~face for f in cplx.facets if face & ~f == 0]
    )


def face_deletion(cplx: SimplicialComplex, face: Face) -> SimplicialComplex:
    """Maximal faces of the complex not containing ``face``."""
    if face == 0:
        raise EmptyFace("cannot delete the empty face")
    if not cplx.is_face(face):
        raise NotAFace("face deletion requires a face of the complex")
    candidates: list[Face] = []
    for facet in cplx.facets:
        if face & ~facet:
            candidates.append(facet)
        else:
            candidates.extend(facet & ~(1 << b) for b in face_bits(face))
    return from_facets(cplx.vertices, candidates)

"""Shedding faces, vertex-decomposability, and k-decomposability.

A face sheds when deleting it loses no facet: every facet of the deletion is
already a facet of the complex.  For a vertex this is equivalent to "no facet
of the link is a facet of the deletion".  Decomposability recursions accept a
simplex outright and otherwise look for a shedding candidate whose link and
deletion both decompose; verdicts are memoised per top-level call on facet
lists compressed to their occupied vertices.
"""

from __future__ import annotations

from .complexes import Face, Kind, SimplicialComplex, all_faces, face_bits
from .errors import EmptyFace, NotAFace, VoidComplex
from .face_ops import face_deletion, link

_Memo = dict[tuple[Face, ...], bool]


def _loses_no_facet(cplx: SimplicialComplex, deleted: SimplicialComplex) -> bool:
    facets = set(cplx.facets)
    return all(f in facets for f in deleted.facets)


def _sheds(cplx: SimplicialComplex, face: Face) -> bool:
    return _loses_no_facet(cplx, face_deletion(cplx, face))


def is_shedding_face(cplx: SimplicialComplex, face: Face) -> bool:
    """Whether deleting ``face`` loses no facet of the complex."""
    if face == 0:
        raise EmptyFace("the empty face cannot shed")
    if not cplx.is_face(face):
        raise NotAFace("shedding candidates must be faces of the complex")
    return _sheds(cplx, face)


def _key(cplx: SimplicialComplex) -> tuple[Face, ...]:
    # compress onto occupied vertices so complexes differing only by unused
    # vertices share memo entries
    occupied = 0
    for facet in cplx.facets:
        occupied |= facet
    remap = {b: i for i, b in enumerate(face_bits(occupied))}
    packed = []
    for facet in cplx.facets:
        mask = 0
        for b in face_bits(facet):
            mask |= 1 << remap[b]
        packed.append(mask)
    packed.sort(key=lambda m: (-m.bit_count(), m))
    return tuple(packed)


def _vertex_candidates(cplx: SimplicialComplex) -> list[Face]:
    occupied = 0
    for facet in cplx.facets:
        occupied |= facet
    return [1 << b for b in face_bits(occupied)]


def _vd(cplx: SimplicialComplex, memo: _Memo) -> bool:
    if len(cplx.facets) == 1:
        return True
    key = _key(cplx)
    cached = memo.get(key)
    if cached is not None:
        return cached
    verdict = False
    for vertex in _vertex_candidates(cplx):
        deleted = face_deletion(cplx, vertex)
        if not _loses_no_facet(cplx, deleted):
            continue
        if _vd(link(cplx, vertex), memo) and _vd(deleted, memo):
            verdict = True
            break
    memo[key] = verdict
    return verdict


def is_vertex_decomposable(cplx: SimplicialComplex) -> bool:
    """Recursive test: a simplex, or some shedding vertex whose link and
    deletion are both vertex-decomposable."""
    if cplx.kind is Kind.VOID:
        raise VoidComplex("the void complex is not decomposable")
    return _vd(cplx, {})


def is_shedding_vertex(cplx: SimplicialComplex, vertex: Face) -> bool:
    """Whether ``vertex`` can start a vertex decomposition: it sheds, and its
    link and deletion are both vertex-decomposable."""
    if vertex.bit_count() != 1:
        raise ValueError("expected a single-vertex face")
    if not cplx.is_face(vertex):
        raise NotAFace("not a vertex of the complex")
    deleted = face_deletion(cplx, vertex)
    if not _loses_no_facet(cplx, deleted):
        return False
    memo: _Memo = {}
    return _vd(link(cplx, vertex), memo) and _vd(deleted, memo)


def _kdec(cplx: SimplicialComplex, k: int, memo: _Memo) -> bool:
    if len(cplx.facets) == 1:
        return True
    key = _key(cplx)
    cached = memo.get(key)
    if cached is not None:
        return cached
    verdict = False
    for face in all_faces(cplx, k):
        deleted = face_deletion(cplx, face)
        if not _loses_no_facet(cplx, deleted):
            continue
        if _kdec(deleted, k, memo) and _kdec(link(cplx, face), k, memo):
            verdict = True
            break
    memo[key] = verdict
    return verdict


def is_k_decomposable(cplx: SimplicialComplex, k: int) -> bool:
    """Decomposability by shedding faces of dimension at most ``k``; k = 0 is
    vertex-decomposability."""
    if cplx.kind is Kind.VOID:
        raise VoidComplex("the void complex is not decomposable")
    if k < 0:
        raise ValueError("k must be >= 0")
    return _kdec(cplx, k, {})


def shedding_faces(cplx: SimplicialComplex, k: int) -> list[Face]:
    """All faces of dimension at most ``k`` that shed, in canonical face order."""
    if cplx.kind is Kind.VOID:
        raise VoidComplex("the void complex has no shedding faces")
    if k < 0:
        raise ValueError("k must be >= 0")
    return [f for f in all_faces(cplx, k) if _sheds(cplx, f)]


def shedding_vertices(cplx: SimplicialComplex) -> list[Face]:
    """Vertices passing :func:`is_shedding_vertex`, in position order."""
    if cplx.kind is Kind.VOID:
        raise VoidComplex("the void complex has no shedding vertices")
    memo: _Memo = {}
    out: list[Face] = []
    for vertex in _vertex_candidates(cplx):
        deleted = face_deletion(cplx, vertex)
        if not _loses_no_facet(cplx, deleted):
            continue
        if _vd(link(cplx, vertex), memo) and _vd(deleted, memo):
            out.append(vertex)
    return out

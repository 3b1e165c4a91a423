"""Nonface ideals, combinatorial Alexander duality, and linear quotients.

Everything here lives in the squarefree world: a monomial is identified with
its support face, so colon ideals reduce to support differences.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import (
    Face,
    Kind,
    SimplicialComplex,
    VertexSet,
    facet_permutation,
    from_facets,
)
from .errors import InvalidComplex, VoidComplex, VoidDual


@dataclass(frozen=True)
class MonomialSet:
    """Ordered squarefree monomials over a ground set.  The order matters:
    linear-quotient checks are order-sensitive."""

    ground: VertexSet
    gens: tuple[Face, ...]

    def gen_labels(self) -> list[tuple[str, ...]]:
        return [self.ground.face_labels(g) for g in self.gens]


def minimal_nonfaces(cplx: SimplicialComplex) -> MonomialSet:
    """Inclusion-minimal vertex subsets that are not faces, in canonical face
    order.  Works level by level: a k-set is a minimal nonface exactly when it
    lies in no facet while all of its (k-1)-subsets are faces."""
    if cplx.kind is Kind.VOID:
        raise VoidComplex("the void complex has no nonface ideal")
    n = cplx.vertices.n
    out: list[Face] = []
    for k in range(1, n + 1):
        level: list[Face] = []
        for combo in combinations(range(n), k):
            mask = 0
            for b in combo:
                mask |= 1 << b
            if cplx.is_face(mask):
                continue
            if all(cplx.is_face(mask & ~(1 << b)) for b in combo):
                level.append(mask)
        level.sort()
        out.extend(level)
    return MonomialSet(cplx.vertices, tuple(out))


def alexander_dual(cplx: SimplicialComplex) -> SimplicialComplex:
    """Complex whose facets are the complements of the minimal nonfaces."""
    if cplx.kind is Kind.VOID:
        raise VoidComplex("the void complex has no dual")
    full = cplx.vertices.full_face
    if cplx.facets == (full,):
        raise VoidDual("the full simplex has a void dual")
    gens = minimal_nonfaces(cplx).gens
    return from_facets(cplx.vertices, [full ^ g for g in gens])


def dual_ideal_generators(cplx: SimplicialComplex) -> MonomialSet:
    """Complements of the facets, in facet order.  As a set this equals the
    minimal nonfaces of the Alexander dual."""
    if cplx.kind is not Kind.PROPER:
        raise InvalidComplex("dual ideal generators require a proper complex")
    full = cplx.vertices.full_face
    return MonomialSet(cplx.vertices, tuple(full ^ f for f in cplx.facets))


def _check_generators(gens: tuple[Face, ...]) -> None:
    if not gens:
        raise ValueError("generator list must be nonempty")
    for i, g in enumerate(gens):
        for h in gens[i + 1 :]:
            if g & ~h == 0 or h & ~g == 0:
                raise ValueError("generators must be pairwise incomparable")


def has_linear_quotients(mset: MonomialSet) -> bool:
    """True when every successive colon ideal is generated by single vertices:
    for each generator, the minimal support differences against all earlier
    generators must all be singletons."""
    gens = mset.gens
    _check_generators(gens)
    for i in range(1, len(gens)):
        diffs = [gens[j] & ~gens[i] for j in range(i)]
        minimal = [d for d in diffs if not any(e != d and e & ~d == 0 for e in diffs)]
        if any(d.bit_count() != 1 for d in minimal):
            return False
    return True


def linear_quotients_from_shelling(
    cplx: SimplicialComplex, order: list[Face]
) -> list[tuple[str, ...]]:
    """Per-step quotient vertex sets induced by a facet order.

    Step i scans pairs (j, k) with j, k < i, in that nested order, and collects
    every vertex x with order[i] minus order[k] equal to {x} and contained in
    order[i] minus order[j].  First occurrences are kept, so each step is a set
    of labels reported in discovery order.
    """
    seq = facet_permutation(cplx, order)
    labels = cplx.vertices.labels
    steps: list[tuple[str, ...]] = []
    for i in range(1, len(seq)):
        hits: list[int] = []
        for j in range(i):
            diff_j = seq[i] & ~seq[j]
            for k in range(i):
                diff_k = seq[i] & ~seq[k]
                if diff_k.bit_count() == 1 and diff_k & ~diff_j == 0:
                    x = diff_k.bit_length() - 1
                    if x not in hits:
                        hits.append(x)
        steps.append(tuple(labels[x] for x in hits))
    return steps

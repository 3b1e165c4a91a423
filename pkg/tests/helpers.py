"""Shared builders, random generators, and brute-force oracles for the tests.

The oracles deliberately avoid the library's own algorithms: faces are found
by filtering all 2^n subsets, shelling steps by enumerating the subsets of
each facet, and transversals by scanning the whole power set of the universe.
"""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from shellability import (
    Face,
    SimplicialComplex,
    VertexSet,
    from_facets,
    submasks,
)

LETTERS = "abcdefghij"

DEMO_FACETS = "ceg beg aeg bdg adg cef bef aef"
DEMO_NONFACES = "ab ac bc cd de df fg"
O1 = DEMO_FACETS
O2 = "beg aeg adg bef cef aef ceg bdg"
O3 = "bdg beg aeg ceg adg cef bef aef"
Q1 = [("b",), ("a",), ("d",), ("d", "a"), ("f",), ("f", "b"), ("f", "a")]
Q2 = [("a",), ("d",), ("f",), ("c",), ("f", "a"), ("c", "g"), ("d", "b")]
Q3 = [("e",), ("a",), ("c",), ("a", "d"), ("f",), ("f", "b"), ("f", "a")]


def vset(labels: str) -> VertexSet:
    return VertexSet(tuple(labels))


def cx(labels: str, facets: str) -> SimplicialComplex:
    """Complex from single-character labels; facets as 'abc bd ...'."""
    vs = vset(labels)
    return from_facets(vs, [vs.face(tuple(word)) for word in facets.split()])


def fc(cplx: SimplicialComplex, word: str) -> Face:
    return cplx.vertices.face(tuple(word))


def faces_of(cplx: SimplicialComplex, words: str) -> list[Face]:
    return [fc(cplx, w) for w in words.split()]


def words(cplx: SimplicialComplex, faces) -> list[str]:
    return ["".join(cplx.vertices.face_labels(f)) for f in faces]


def label_sets(cplx: SimplicialComplex, faces) -> set[frozenset[str]]:
    return {frozenset(cplx.vertices.face_labels(f)) for f in faces}


def demo_complex() -> SimplicialComplex:
    return cx("abcdefg", DEMO_FACETS)


# --- deterministic random generators -------------------------------------

def random_complex(rng: random.Random, max_vertices=7, max_faces=8) -> SimplicialComplex:
    n = rng.randint(1, max_vertices)
    vs = VertexSet(tuple(LETTERS[:n]))
    m = rng.randint(1, max_faces)
    return from_facets(vs, [rng.randint(1, (1 << n) - 1) for _ in range(m)])


def random_pure_complex(
    rng: random.Random, max_vertices=7, max_facets=6
) -> SimplicialComplex:
    n = rng.randint(2, max_vertices)
    k = rng.randint(1, n)
    pool = [sum(1 << b for b in c) for c in combinations(range(n), k)]
    m = rng.randint(1, min(max_facets, len(pool)))
    return from_facets(VertexSet(tuple(LETTERS[:n])), rng.sample(pool, m))


# --- hypothesis strategies ------------------------------------------------

@st.composite
def complexes(draw, max_vertices=6, max_faces=6):
    n = draw(st.integers(1, max_vertices))
    masks = draw(
        st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_faces)
    )
    return from_facets(VertexSet(tuple(LETTERS[:n])), masks)


@st.composite
def pure_complexes(draw, max_vertices=6, max_facets=6):
    n = draw(st.integers(2, max_vertices))
    k = draw(st.integers(1, n))
    pool = [sum(1 << b for b in c) for c in combinations(range(n), k)]
    m = draw(st.integers(1, min(max_facets, len(pool))))
    chosen = draw(st.lists(st.sampled_from(pool), min_size=m, max_size=m, unique=True))
    return from_facets(VertexSet(tuple(LETTERS[:n])), chosen)


# --- brute-force oracles ----------------------------------------------------

def brute_face_set(cplx: SimplicialComplex) -> set[Face]:
    """All faces by filtering every subset of the vertex set."""
    n = cplx.vertices.n
    return {
        s
        for s in range(1 << n)
        if any(s & ~facet == 0 for facet in cplx.facets)
    }


def brute_minimal_nonfaces(cplx: SimplicialComplex) -> set[Face]:
    n = cplx.vertices.n
    faces = brute_face_set(cplx)
    nonfaces = [s for s in range(1 << n) if s not in faces]
    return {
        s
        for s in nonfaces
        if not any(t != s and t & ~s == 0 for t in nonfaces)
    }


def brute_from_nonfaces(vs: VertexSet, nonfaces) -> SimplicialComplex:
    n = vs.n
    faces = [
        s
        for s in range(1 << n)
        if not any(nf & ~s == 0 for nf in nonfaces)
    ]
    maximal = [s for s in faces if not any(t != s and s & ~t == 0 for t in faces)]
    return from_facets(vs, maximal)


def brute_step_restriction(prefix, facet) -> Face | None:
    """Unique minimal new face of a shelling step, or None if non-unique."""
    covered: set[Face] = set()
    for prev in prefix:
        covered.update(submasks(prev))
    new = [s for s in submasks(facet) if s not in covered]
    minimal = [s for s in new if not any(t != s and t & ~s == 0 for t in new)]
    return minimal[0] if len(minimal) == 1 else None


def brute_is_shelling_order(order) -> bool:
    return all(
        brute_step_restriction(order[:i], order[i]) is not None
        for i in range(1, len(order))
    )


def brute_restriction_faces(order) -> list[Face]:
    out = [0]
    for i in range(1, len(order)):
        rest = brute_step_restriction(order[:i], order[i])
        assert rest is not None, "order is not a shelling order"
        out.append(rest)
    return out


def brute_minimal_hitting_sets(family) -> set[int]:
    universe = 0
    for member in family:
        universe |= member
    hitting = [
        t
        for t in submasks(universe)
        if all(member & t for member in family)
    ]
    return {
        t
        for t in hitting
        if not any(u != t and u & ~t == 0 for u in hitting)
    }

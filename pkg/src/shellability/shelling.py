"""Shelling orders: verification, restriction faces, and a backtracking search.

The single-step test has three equivalent faces here, each used where it reads
most naturally: the unique-minimal-new-face test (via minimal hitting sets of
the difference sets) verifies pure complexes, the intersection-dimension test
verifies non-pure ones, and a singleton-difference check drives the search.
Their agreement is part of the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import (
    Face,
    HVector,
    Kind,
    SimplicialComplex,
    facet_permutation,
    is_pure,
)
from .errors import InvalidOrder, InvalidPermutation, NotPure, VoidComplex

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class ShellingOrder:
    """A facet order together with each step's unique minimal new face."""

    facets: tuple[Face, ...]
    restrictions: tuple[Face, ...]


@dataclass(frozen=True)
class DefaultStrategy:
    """Search the facets in canonical order."""


@dataclass(frozen=True)
class RandomStrategy:
    """Shuffle the facets first; the seed fully determines the shuffle."""

    seed: int


@dataclass(frozen=True)
class PermutationStrategy:
    """Rearrange the facets by explicit indices before searching."""

    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "perm", tuple(self.perm))


SearchStrategy = DefaultStrategy | RandomStrategy | PermutationStrategy
DEFAULT = DefaultStrategy()


def minimal_hitting_sets(sets: Iterable[int], limit: int | None = None) -> list[int]:
    """Inclusion-minimal transversals of a family of bitmask sets.

    Branches on the first unhit set; a completed candidate is kept only if it
    passes the irredundancy certificate (every chosen vertex is the sole hit
    of some member).  ``limit`` stops the search once that many transversals
    are known, which is enough to decide uniqueness cheaply.

    The empty family has the single minimal transversal 0; a family containing
    the empty set has none.
    """
    family = list(sets)
    if any(s == 0 for s in family):
        return []
    found: set[int] = set()
    visited: set[int] = set()

    def certify(chosen: int) -> bool:
        rest = chosen
        while rest:
            low = rest & -rest
            if not any(member & chosen == low for member in family):
                return False
            rest ^= low
        return True

    def walk(chosen: int) -> None:
        if limit is not None and len(found) >= limit:
            return
        if chosen in visited:
            return
        visited.add(chosen)
        unhit = next((m for m in family if m & chosen == 0), None)
        if unhit is None:
            if certify(chosen):
                found.add(chosen)
            return
        while unhit:
            low = unhit & -unhit
            walk(chosen | low)
            if limit is not None and len(found) >= limit:
                return
            unhit ^= low

    walk(0)
    return sorted(found, key=lambda m: (m.bit_count(), m))


def _pure_step(prefix: Sequence[Face], facet: Face) -> bool:
    # unique minimal new face <=> unique minimal hitting set of the differences
    diffs = [facet & ~prev for prev in prefix]
    return len(minimal_hitting_sets(diffs, limit=2)) == 1


def _intersection_step(prefix: Sequence[Face], facet: Face) -> bool:
    # all maximal intersections with earlier facets one vertex short of the
    # facet; an empty intersection passes exactly when the facet is a vertex
    inters = [facet & prev for prev in prefix]
    maximal = [x for x in inters if not any(y != x and x & ~y == 0 for y in inters)]
    want = facet.bit_count() - 1
    return all(x.bit_count() == want for x in maximal)


def _exchange_step(prefix: Sequence[Face], facet: Face) -> bool:
    # every difference must contain a vertex realised as a singleton difference
    singles = 0
    diffs = []
    for prev in prefix:
        d = facet & ~prev
        diffs.append(d)
        if d.bit_count() == 1:
            singles |= d
    return all(d & singles for d in diffs)


def is_shelling_order(cplx: SimplicialComplex, order: Sequence[Face]) -> bool:
    """Whether ``order`` shells the complex.

    Pure complexes use the unique-minimal-new-face test at each step; non-pure
    complexes use the intersection-dimension test.  The two agree on pure
    complexes.
    """
    seq = facet_permutation(cplx, order)
    if len(seq) <= 1:
        return True
    step = _pure_step if is_pure(cplx) else _intersection_step
    return all(step(seq[:i], seq[i]) for i in range(1, len(seq)))


def restriction_faces(cplx: SimplicialComplex, order: Sequence[Face]) -> list[Face]:
    """The unique minimal new face of each step of a shelling order of a pure
    complex (the empty face at position 0)."""
    seq = facet_permutation(cplx, order)
    if not is_pure(cplx):
        raise NotPure("restriction faces are defined for pure complexes")
    out: list[Face] = [0]
    for i in range(1, len(seq)):
        diffs = [seq[i] & ~seq[j] for j in range(i)]
        hits = minimal_hitting_sets(diffs, limit=2)
        if len(hits) != 1:
            raise InvalidOrder(f"not a shelling order at step {i + 1}")
        out.append(hits[0])
    return out


def h_from_shelling(cplx: SimplicialComplex, order: Sequence[Face]) -> HVector:
    """h-vector read off a shelling order: entry j counts the steps whose
    restriction face has j vertices."""
    rests = restriction_faces(cplx, order)
    d = cplx.dimension() + 1
    h = [0] * (d + 1)
    for r in rests:
        h[r.bit_count()] += 1
    return tuple(h)


def _splitmix64(seed: int):
    # stable across platforms and Python versions, unlike random.shuffle
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def _shuffled(items: Sequence[Face], seed: int) -> list[Face]:
    out = list(items)
    stream = _splitmix64(seed)
    for i in range(len(out) - 1, 0, -1):
        j = next(stream) % (i + 1)
        out[i], out[j] = out[j], out[i]
    return out


def _arranged(facets: tuple[Face, ...], strategy: SearchStrategy) -> list[Face]:
    if isinstance(strategy, DefaultStrategy):
        return list(facets)
    if isinstance(strategy, RandomStrategy):
        return _shuffled(facets, strategy.seed)
    if isinstance(strategy, PermutationStrategy):
        if sorted(strategy.perm) != list(range(len(facets))):
            raise InvalidPermutation(
                f"expected a permutation of 0..{len(facets) - 1}, got {strategy.perm}"
            )
        return [facets[p] for p in strategy.perm]
    raise TypeError(f"unknown search strategy: {strategy!r}")


def _restriction(prefix: Sequence[Face], facet: Face) -> Face:
    rest = 0
    for prev in prefix:
        d = facet & ~prev
        if d.bit_count() == 1:
            rest |= d
    return rest


def shelling_order(
    cplx: SimplicialComplex, strategy: SearchStrategy = DEFAULT
) -> ShellingOrder | None:
    """Depth-first search for a shelling order; ``None`` if there is none.

    The facets are arranged per ``strategy`` and tried first-fit in that
    order, one facet at a time, backtracking on failure.  Only facets of
    maximal remaining cardinality are candidates (vacuous for pure complexes),
    so returned orders have weakly decreasing dimension.  Deterministic for a
    fixed strategy.
    """
    if cplx.kind is Kind.VOID:
        raise VoidComplex("the void complex cannot be shelled")
    arranged = _arranged(cplx.facets, strategy)
    n = len(arranged)
    used = [False] * n
    prefix: list[Face] = []

    def extend() -> bool:
        if len(prefix) == n:
            return True
        largest = max(arranged[i].bit_count() for i in range(n) if not used[i])
        for i in range(n):
            if used[i] or arranged[i].bit_count() != largest:
                continue
            if not _exchange_step(prefix, arranged[i]):
                continue
            used[i] = True
            prefix.append(arranged[i])
            if extend():
                return True
            prefix.pop()
            used[i] = False
        return False

    if not extend():
        return None
    restrictions = tuple(_restriction(prefix[:i], prefix[i]) for i in range(n))
    return ShellingOrder(tuple(prefix), restrictions)


def is_shellable(cplx: SimplicialComplex) -> bool:
    """Whether some shelling order exists (searched with the default strategy)."""
    if cplx.kind is Kind.VOID:
        raise VoidComplex("the void complex cannot be shelled")
    return shelling_order(cplx, DEFAULT) is not None

import random

import pytest
from hypothesis import given, settings

from helpers import (
    DEMO_NONFACES,
    brute_face_set,
    brute_from_nonfaces,
    complexes,
    cx,
    label_sets,
    pure_complexes,
    random_pure_complex,
    vset,
    words,
)
from shellability import (
    InvalidNonface,
    InvalidVertex,
    Kind,
    VertexSet,
    VoidComplex,
    all_faces,
    f_vector,
    face_set,
    from_facets,
    from_nonfaces,
    h_vector,
    is_pure,
    is_simplex,
    minimal_nonfaces,
)


class TestVertexSet:
    def test_basic(self):
        vs = vset("abc")
        assert vs.n == 3
        assert vs.index == {"a": 0, "b": 1, "c": 2}
        assert vs.face("ac") == 0b101
        assert vs.face_labels(0b101) == ("a", "c")

    def test_duplicate_label_rejected(self):
        with pytest.raises(ValueError):
            VertexSet(("a", "a"))

    def test_empty_label_rejected(self):
        with pytest.raises(ValueError):
            VertexSet(("a", ""))

    def test_capacity(self):
        VertexSet(tuple(f"v{i}" for i in range(64)))
        with pytest.raises(ValueError):
            VertexSet(tuple(f"v{i}" for i in range(65)))

    def test_unknown_label(self):
        with pytest.raises(InvalidVertex):
            vset("abc").face("ad")


class TestFromFacets:
    def test_demo_facets(self, demo):
        assert demo.kind is Kind.PROPER
        assert label_sets(demo, demo.facets) == {
            frozenset(w) for w in "ceg beg aeg bdg adg cef bef aef".split()
        }

    def test_canonical_order(self, demo):
        # cardinality descending, then bit pattern ascending
        assert words(demo, demo.facets) == [
            "aef", "bef", "cef", "adg", "bdg", "aeg", "beg", "ceg",
        ]

    def test_maximalisation(self):
        c = cx("ab", "ab a b")
        assert words(c, c.facets) == ["ab"]

    def test_void(self):
        c = from_facets(vset("abc"), [])
        assert c.kind is Kind.VOID and c.facets == ()

    def test_irrelevant(self):
        c = from_facets(vset("abc"), [0])
        assert c.kind is Kind.IRRELEVANT and c.facets == (0,)

    def test_empty_face_absorbed(self):
        c = from_facets(vset("abc"), [0, 0b001])
        assert c.kind is Kind.PROPER and c.facets == (0b001,)

    def test_out_of_range_face(self):
        with pytest.raises(InvalidVertex):
            from_facets(vset("abc"), [0b1000])

    @given(complexes())
    def test_idempotent(self, c):
        assert from_facets(c.vertices, c.facets) == c


class TestFromNonfaces:
    def test_demo(self, demo):
        vs = vset("abcdefg")
        built = from_nonfaces(vs, [vs.face(tuple(w)) for w in DEMO_NONFACES.split()])
        assert built == demo

    def test_no_constraints_full_simplex(self):
        vs = vset("abc")
        c = from_nonfaces(vs, [])
        assert c.facets == (0b111,)

    def test_triangle_boundary(self, tri_boundary):
        vs = vset("abc")
        c = from_nonfaces(vs, [0b111])
        assert c == tri_boundary
        assert c == brute_from_nonfaces(vs, [0b111])

    def test_empty_nonface_rejected(self):
        with pytest.raises(InvalidNonface):
            from_nonfaces(vset("abc"), [0])

    @given(complexes(max_vertices=5))
    def test_matches_brute_filter(self, c):
        # treat the facets of a random complex as a nonface list
        nonfaces = list(c.facets)
        if any(nf == 0 for nf in nonfaces):
            return
        vs = c.vertices
        assert from_nonfaces(vs, nonfaces) == brute_from_nonfaces(vs, nonfaces)

    @given(complexes(max_vertices=7))
    def test_round_trip_with_minimal_nonfaces(self, c):
        if c.kind is not Kind.PROPER:
            return
        assert from_nonfaces(c.vertices, minimal_nonfaces(c).gens) == c


class TestFVector:
    def test_full_simplex(self, full3):
        assert f_vector(full3) == (1, 3, 3, 1)

    def test_triangle_boundary(self, tri_boundary):
        assert f_vector(tri_boundary) == (1, 3, 3)

    def test_demo(self, demo):
        assert f_vector(demo) == (1, 7, 14, 8)

    def test_irrelevant(self):
        assert f_vector(from_facets(vset("ab"), [0])) == (1,)

    def test_void_rejected(self):
        with pytest.raises(VoidComplex):
            f_vector(from_facets(vset("ab"), []))

    @given(complexes())
    def test_matches_brute_enumeration(self, c):
        assert face_set(c) == brute_face_set(c)
        f = f_vector(c)
        by_size = {}
        for s in brute_face_set(c):
            by_size[s.bit_count()] = by_size.get(s.bit_count(), 0) + 1
        assert list(f) == [by_size.get(i, 0) for i in range(len(f))]


class TestHVector:
    def test_full_simplex(self, full3):
        assert h_vector(full3) == (1, 0, 0, 0)

    def test_triangle_boundary(self, tri_boundary):
        assert h_vector(tri_boundary) == (1, 1, 1)

    def test_demo(self, demo):
        assert h_vector(demo) == (1, 4, 3, 0)

    def test_void_rejected(self):
        with pytest.raises(VoidComplex):
            h_vector(from_facets(vset("ab"), []))

    @given(complexes())
    def test_length_and_leading_entry(self, c):
        h = h_vector(c)
        assert len(h) == c.dimension() + 2
        assert h[0] == 1

    @given(pure_complexes())
    def test_sum_is_facet_count_when_pure(self, c):
        assert sum(h_vector(c)) == len(c.facets)

    @settings(max_examples=20)
    @given(complexes())
    def test_sum_rule_on_seeded_pure_instances(self, c):
        # extra deterministic coverage alongside the hypothesis pure strategy
        rng = random.Random(11)
        for _ in range(20):
            p = random_pure_complex(rng)
            assert sum(h_vector(p)) == len(p.facets)


class TestPurityAndSimplex:
    def test_demo_is_pure(self, demo):
        assert is_pure(demo)

    def test_mixed_dimensions(self):
        assert not is_pure(cx("abc", "ab c"))

    def test_irrelevant_is_pure(self):
        assert is_pure(from_facets(vset("ab"), [0]))

    def test_is_simplex(self, demo, full3):
        assert is_simplex(full3)
        assert not is_simplex(demo)
        assert is_simplex(from_facets(vset("ab"), [0]))
        assert not is_simplex(from_facets(vset("ab"), []))
        assert is_simplex(cx("abcde", "e"))


class TestAllFaces:
    def test_demo_vertices(self, demo):
        assert words(demo, all_faces(demo, 0)) == list("abcdefg")

    def test_triangle_boundary(self, tri_boundary):
        assert words(tri_boundary, all_faces(tri_boundary, 1)) == [
            "a", "b", "c", "ab", "ac", "bc",
        ]

    def test_k_caps_at_dimension(self):
        c = cx("ab", "ab")
        assert words(c, all_faces(c, 5)) == ["a", "b", "ab"]

    def test_excludes_empty_face(self):
        c = from_facets(vset("ab"), [0])
        assert all_faces(c, 3) == []

    def test_errors(self, demo):
        with pytest.raises(VoidComplex):
            all_faces(from_facets(vset("a"), []), 0)
        with pytest.raises(ValueError):
            all_faces(demo, -1)


class TestDimension:
    def test_values(self, demo):
        assert demo.dimension() == 2
        assert from_facets(vset("ab"), [0]).dimension() == -1

    def test_void_rejected(self):
        with pytest.raises(VoidComplex):
            from_facets(vset("ab"), []).dimension()

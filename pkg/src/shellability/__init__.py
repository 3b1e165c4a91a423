"""Shellability, vertex-decomposability and k-decomposability of finite
simplicial complexes, with the enumerative invariants and the nonface-ideal
combinatorics that go with them (Alexander duals, linear quotients)."""

from .complexes import (
    MAX_VERTICES,
    FVector,
    Face,
    HVector,
    Kind,
    SimplicialComplex,
    VertexSet,
    all_faces,
    f_vector,
    face_bits,
    face_dim,
    face_set,
    from_facets,
    from_nonfaces,
    h_vector,
    is_pure,
    is_simplex,
    relabelled,
    submasks,
)
from .decomposability import (
    is_k_decomposable,
    is_shedding_face,
    is_shedding_vertex,
    is_vertex_decomposable,
    shedding_faces,
    shedding_vertices,
)
from .duality import (
    MonomialSet,
    alexander_dual,
    dual_ideal_generators,
    has_linear_quotients,
    linear_quotients_from_shelling,
    minimal_nonfaces,
)
from .errors import (
    ComplexError,
    EmptyFace,
    InvalidComplex,
    InvalidNonface,
    InvalidOrder,
    InvalidPermutation,
    InvalidVertex,
    NotAFace,
    NotPure,
    ParseError,
    VoidComplex,
    VoidDual,
)
from .face_ops import face_deletion, link
from .shelling import (
    DEFAULT,
    DefaultStrategy,
    PermutationStrategy,
    RandomStrategy,
    SearchStrategy,
    ShellingOrder,
    h_from_shelling,
    is_shellable,
    is_shelling_order,
    minimal_hitting_sets,
    restriction_faces,
    shelling_order,
)
from .cli import parse_complex, serialize_complex, serialize_nonfaces

__version__ = "0.1.0"

__all__ = [
    "MAX_VERTICES",
    "ComplexError",
    "DEFAULT",
    "DefaultStrategy",
    "EmptyFace",
    "FVector",
    "Face",
    "HVector",
    "InvalidComplex",
    "InvalidNonface",
    "InvalidOrder",
    "InvalidPermutation",
    "InvalidVertex",
    "Kind",
    "MonomialSet",
    "NotAFace",
    "NotPure",
    "ParseError",
    "PermutationStrategy",
    "RandomStrategy",
    "SearchStrategy",
    "ShellingOrder",
    "SimplicialComplex",
    "VertexSet",
    "VoidComplex",
    "VoidDual",
    "alexander_dual",
    "all_faces",
    "dual_ideal_generators",
    "f_vector",
    "face_bits",
    "face_deletion",
    "face_dim",
    "face_set",
    "from_facets",
    "from_nonfaces",
    "h_from_shelling",
    "h_vector",
    "has_linear_quotients",
    "is_k_decomposable",
    "is_pure",
    "is_shedding_face",
    "is_shedding_vertex",
    "is_shellable",
    "is_shelling_order",
    "is_simplex",
    "is_vertex_decomposable",
    "link",
    "linear_quotients_from_shelling",
    "minimal_hitting_sets",
    "minimal_nonfaces",
    "parse_complex",
    "relabelled",
    "restriction_faces",
    "serialize_complex",
    "serialize_nonfaces",
    "shedding_faces",
    "shedding_vertices",
    "shelling_order",
    "submasks",
]

"""Face-to-flag degree sequences of simplicial posets and polyhedral complexes."""

from .complexes import (
    FacetList,
    facets_to_poset,
    gen_complete_complex,
    gen_cross_polytope_solid,
    gen_cubical_grid,
    gen_hypercube_solid,
    gen_random_pure,
    gen_simplex,
)
from .flagdeg import (
    FlagFVector,
    FVector,
    degree_of_face,
    degree_sequence,
    degree_sequence_naive,
    degree_sequence_simplicial,
    f_vector,
    face_degrees,
    flag_f,
    flag_f_vector,
)
from .poset import (
    BOTTOM,
    PosetError,
    PreconditionError,
    RankedPoset,
    from_covers,
    is_boolean_interval,
    is_pure,
    is_simple_facet,
    is_simplicial_complex,
    is_simplicial_poset,
)
from .seqcore import (
    Composition,
    DegreeSequence,
    MajorizationRelation,
    Verdict,
    compare,
    compositions_of,
    conjugate,
    multinomial,
    permutations_of,
)
from .verify import VerificationReport, verify_all

__version__ = "0.1.0"

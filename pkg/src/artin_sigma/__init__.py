"""Character membership and complement geometry for Artin groups of labeled graphs.

The package decides, for a character of the Artin group attached to a finite
labeled graph, whether its ray lies in the first BNS invariant; computes the
spherical polyhedron of rays conjectured to form the complement; and backs the
conjectural region with Fox-calculus Jacobians and rank certificates for
non-finite generation built from dead-edge forests specialized at roots of
unity.
"""

from .errors import InputError, MathError
from .graphs import (
    HYPOTHESIS_MODES,
    SIMPLE_CYCLE,
    STRICT,
    Block,
    LabeledGraph,
    all_labels_even,
    blocks,
    check_hypothesis,
    connected_components,
    cycle_rank,
    full_subgraph,
    high_label_subgraph,
    hypothesis_witness,
    is_connected,
    is_dominant,
    parse_artin,
    parse_graph,
)
from .characters import (
    Character,
    DeadEdgeSet,
    character,
    dead_edges,
    lf_subgraph,
    living_subgraph,
    parse_character,
    parse_rational,
)
from .decision import (
    STATUS_IN,
    STATUS_OUT,
    STATUS_OUT_CONJECTURAL,
    Diagnostics,
    Verdict,
    conjecture_predicate,
    decide_sigma1,
)
from .polyhedron import (
    LinearForm,
    PieceOrigin,
    SphericalPolyhedron,
    SubSphere,
    complement_polyhedron,
    disconnection_pieces,
    dominance_pieces,
    polyhedron_contains,
    polyhedron_from_json,
    subsphere_contained,
)
from .fox import (
    FreeWord,
    GroupRingElement,
    abelianization_map,
    abelianize,
    artin_relator,
    commutator,
    fox_derivative,
    graph_presentation,
    jacobian,
    parse_word,
)
from .laurent import LaurentPoly, parse_poly
from .fields import CyclotomicField, PrimeField, QQ, ZZ, cyclotomic_polynomial
from .groebner import buchberger, is_unit_ideal, laurent_unit_ideal, reduce_poly, unit_ideal_mod_p
from .linalg import PolyMatrix, matrix_rank
from .presentations import (
    BipartiteForest,
    Certificate,
    ModulePresentation,
    bipartition_presentation,
    certify_not_finitely_generated,
    dead_edge_forest,
    forest_presentation,
    koszul_differential,
    specialize,
)

__version__ = "0.1.0"

__all__ = [
    "InputError",
    "MathError",
    "LabeledGraph",
    "Block",
    "parse_artin",
    "parse_graph",
    "full_subgraph",
    "is_connected",
    "is_dominant",
    "connected_components",
    "cycle_rank",
    "blocks",
    "all_labels_even",
    "high_label_subgraph",
    "check_hypothesis",
    "hypothesis_witness",
    "HYPOTHESIS_MODES",
    "SIMPLE_CYCLE",
    "STRICT",
    "Character",
    "DeadEdgeSet",
    "character",
    "parse_character",
    "parse_rational",
    "lf_subgraph",
    "living_subgraph",
    "dead_edges",
    "STATUS_IN",
    "STATUS_OUT",
    "STATUS_OUT_CONJECTURAL",
    "Diagnostics",
    "Verdict",
    "conjecture_predicate",
    "decide_sigma1",
    "LinearForm",
    "PieceOrigin",
    "SubSphere",
    "SphericalPolyhedron",
    "dominance_pieces",
    "disconnection_pieces",
    "complement_polyhedron",
    "polyhedron_contains",
    "polyhedron_from_json",
    "subsphere_contained",
    "FreeWord",
    "GroupRingElement",
    "parse_word",
    "commutator",
    "fox_derivative",
    "artin_relator",
    "abelianization_map",
    "abelianize",
    "jacobian",
    "graph_presentation",
    "LaurentPoly",
    "parse_poly",
    "QQ",
    "ZZ",
    "PrimeField",
    "CyclotomicField",
    "cyclotomic_polynomial",
    "buchberger",
    "reduce_poly",
    "is_unit_ideal",
    "laurent_unit_ideal",
    "unit_ideal_mod_p",
    "PolyMatrix",
    "matrix_rank",
    "BipartiteForest",
    "ModulePresentation",
    "Certificate",
    "forest_presentation",
    "bipartition_presentation",
    "dead_edge_forest",
    "koszul_differential",
    "specialize",
    "certify_not_finitely_generated",
    "__version__",
]

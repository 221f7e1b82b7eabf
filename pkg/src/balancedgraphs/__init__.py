"""Cell graphs on oriented surfaces, balance, and branched-covering monodromy."""

from .errors import (
    BadPermutation,
    BalancedGraphsError,
    Disconnected,
    InconsistentPropagation,
    InfeasibleWeighting,
    InvariantViolation,
    NegativeDotCount,
    NonIntegerGenus,
    NoPerfectMatching,
    NotBipartiteFaces,
    NotInvolution,
    NotVerified,
    ParseError,
    SizeLimitExceeded,
    UnsupportedFormat,
)
from .surface_map import (
    COLOR_A,
    COLOR_B,
    CombinatorialMap,
    DegreeProfile,
    FaceColoring,
    MapDocument,
    alternating_coloring,
    are_isomorphic,
    build_map,
    degree_profile,
    deserialize,
    face_adjacency,
    faces,
    genus,
    serialize,
    subdivide_edges,
)
from .balance import (
    BalanceReport,
    GlobalBalance,
    Region,
    corner_bound_check,
    is_generic_thurston,
    is_globally_balanced,
    is_locally_balanced,
    positive_regions,
    region_from_faces,
)
from .enrichment import (
    DotGraph,
    DotMatching,
    HallResult,
    dot_graph,
    enrich,
    hall_check,
    iter_perfect_matchings,
    perfect_matching,
)
from .labeling import (
    ChargeableGraph,
    ChargeReport,
    Passport,
    VertexLabeling,
    Weighting,
    admissible_labeling,
    charge_conservation_check,
    compress_labels,
    generic_labeling,
    passport_of,
    verify_labeling,
)
from .monodromy import (
    Constellation,
    ConstellationReport,
    conjugation_canonical,
    constellation_from,
    deserialize_constellation,
    pullback_from_constellation,
    rh_genus,
    serialize_constellation,
    verify_constellation,
)
from .real_combinatorics import (
    CoverageRow,
    NonCrossingPairing,
    Tableau2Row,
    WeightComposition,
    catalan,
    compositions,
    conjugation_involution,
    count_coverage_check,
    deserialize_pairing,
    enumerate_pairings,
    enumerate_ssyt,
    is_real_balanced,
    kostka,
    marked_canonical_key,
    mirror_graph,
    pairing_to_tableau,
    serialize_pairing,
    serialize_tableau,
    tableau_to_pairing,
    validate_pairing,
)
from .render import to_dot, to_svg

__version__ = "0.1.0"

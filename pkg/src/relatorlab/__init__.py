"""Combinatorial laboratory for relator 2-complexes.

Builds finite combinatorial 2-complexes and the maps between them that
one-relator constructions produce: enlargements of a base complex by one
edge and one relator cell, cyclic branched covers, Stallings-style folding
of arbitrary combinatorial maps onto immersions, the low-edge collapse
machinery driven by a left-invariant order oracle, exact cellular homology
over Z and F_p, and transversality pictures on compact orientable surfaces.
Everything is exact integer combinatorics; the harness enumerates
desk-scale instances exhaustively and checks the quantitative bounds.
"""

from .complexes import (
    AttachingPath,
    DirectedEdge,
    Presentation,
    TwoComplex,
    ValidationReport,
    Violation,
    components,
    euler_characteristic,
    fundamental_group_presentation,
    subdivide_edge,
    validate,
)
from .maps import (
    BranchMap,
    CellImage,
    CombMap,
    Witness,
    compose,
    identity_map,
    inclusion_map,
    is_branch_map,
    is_immersion,
    validate_map,
)
from .orders import (
    Comparison,
    FreeWord,
    MagnusOrder,
    OrderVerdict,
    SeriesTruncation,
    free_reduce,
    magnus_expand,
    parse_word,
)
from .folding import FoldResult, FoldState, FoldStep, fold_once, fold_to_immersion
from .enlargement import (
    EdgeClassification,
    EnlargementError,
    BranchedCover,
    RelatorSplit,
    SimpleEnlargement,
    branched_cover,
    build_simple_enlargement,
    classify_edges,
    split_relator,
)
from .collapse import (
    CollapseCertificate,
    CollapseStep,
    CollapseStuck,
    ContractibilityReport,
    HalfEdge,
    SuccessorState,
    almost_collapse_sequence,
    compute_z_prime,
    contractibility_report,
    replay_certificate,
    successor,
    successor_state,
    trivial_image_component,
)
from .homology import (
    BettiVector,
    BoundingFunction,
    CheckReport,
    IntegerMatrix,
    SNFResult,
    betti_numbers,
    boundary_matrices,
    check_11k,
    check_5beta,
    check_betti_bound,
    check_p_power_bound,
    hat_beta,
    nonpositive_immersions_audit,
    smith_normal_form,
    treeoids,
    zr_bounding_function,
)
from .pictures import (
    Arc,
    Picture,
    PictureScheme,
    PictureVertex,
    Surface,
    check_dh,
    dh_bound,
    full_scheme,
    is_reduced,
    relative_scheme,
    validate_picture,
)
from .enumeration import (
    EnumerationBudget,
    enumerate_branch_maps,
    enumerate_immersions,
    enumerate_pictures,
    self_immersions,
)
from .suite import SuiteEntry, SuiteReport, demo_coherence_step, run_suite

__version__ = "0.1.0"

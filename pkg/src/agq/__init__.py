"""Homological dimensions of almost gentle algebras given as bound quivers.

Closed-form global and self-injective dimensions via forbidden paths, with
symbolic syzygies, a cross-validating exact-linear-algebra oracle, the .agq
file format, and a CLI (``agq``).
"""

from .quiver import (
    AgqError,
    AlmostGentlePair,
    Arrow,
    InvalidStringError,
    NonzeroPath,
    NotValidatedError,
    Quiver,
    UnknownArrowError,
    UnknownVertexError,
    ValidationReport,
    Violation,
    basis_paths,
    crossing_nonzero_count,
    nonzero_predecessor,
    nonzero_successor,
    opposite,
    validate_bound_quiver,
    vertex_type,
)
from .strings import (
    AntiClaw,
    Claw,
    DirectedString,
    anticlaw_of,
    claw_of,
    left_maximal_extension,
    module_dims,
    right_maximal_extension,
    socle_supports,
    string_of,
)
from .forbidden import (
    ForbiddenWalk,
    LengthOrInf,
    RelationDigraph,
    delta_forbidden_sup,
    forbidden_cycles,
    is_down_relational,
    is_relational_vertex,
    is_up_relational,
    relation_digraph,
    sup_forbidden_from_arrow,
    sup_forbidden_from_vertex,
    zero_length_forbidden,
)
from .syzygy import (
    NotInjectiveCaseError,
    NotRightMaximalError,
    Psi0Descriptor,
    Resolution,
    Summand,
    SyzygyDecomposition,
    is_gentle_vertex,
    is_invalid_vertex,
    is_omega1_projective_dirstring,
    omega1_directed_string,
    omega1_injective,
    psi0_decompose,
    psi0_descriptor,
    psi0_dim_vector,
    psi0_is_projective,
    resolve_symbolic,
)
from .homdim import (
    DimReport,
    GorensteinReport,
    global_dimension,
    gorenstein_report,
    noninvalid_cycle_vertex,
    pdim_directed_string,
    pdim_injective,
    pdim_injective_envelope,
    pdim_simple,
    self_injective_dimension,
    self_injective_infinite_by_cycle,
)
from .oracle import (
    AgreementReport,
    PdimResult,
    Representation,
    RepMorphism,
    check_against_formulas,
    check_relations,
    cover_morphism,
    default_cutoff,
    oracle_pdim,
    projective_cover_kernel,
    rep_of,
    top,
)

__version__ = "0.1.0"

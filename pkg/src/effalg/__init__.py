"""Finite effect algebras: axioms, order, sharpness, decompositions, states.

The package models a finite partial algebra (E; +, 0, 1) whose partial sum
is commutative and associative where defined, every element has a unique
supplement to 1, and 1 + a is defined only for a = 0.  On top of the
validated table it derives the induced order, lattice structure, atoms and
sharp elements, isotropic indices, sharp covers and kernels, basic
decompositions, and exact rational states, including the smearing
extension of a state on the sharp part to the whole algebra.  An
executable law suite re-checks the expected structural identities on any
given algebra, and the ``effalg`` command line exposes everything over a
small text format for tables and states.
"""

from .constructions import (
    boolean_algebra,
    direct_product,
    horizontal_sum,
    mv_chain,
    bundled_fixture,
)
from .core import (
    AxiomReport,
    EffectAlgebra,
    SumTable,
    Violation,
    build_effect_algebra,
    make_algebra,
    multiple,
    partial_difference,
    partial_sum,
    verify_axioms,
)
from .decompose import (
    AtomicDecomposition,
    AtomMultiple,
    BasicDecomposition,
    SplitDecomposition,
    atomic_decomposition,
    basic_decomposition,
    split_atomic_decomposition,
)
from .eaf import (
    EafDocument,
    parse_eaf,
    parse_state,
    serialize_eaf,
    serialize_state,
)
from .errors import (
    AxiomViolation,
    BoundsMissing,
    DegenerateBlock,
    DuplicateSum,
    EffectAlgebraError,
    InvalidDecomposition,
    InvalidState,
    MissingElement,
    MissingHeader,
    NegativeDenominator,
    NotDecomposable,
    ParseError,
    PreconditionFailed,
    SizeLimit,
    UnknownName,
    ZeroElement,
)
from .laws import LAW_IDS, LawReport, LawResult, run_law_suite
from .linear import (
    FeasiblePoint,
    InfeasibilityCertificate,
    LinearSystem,
    solve_exact,
    verify_certificate,
    verify_point,
)
from .order import (
    Bounds,
    Classification,
    OrderStructure,
    classify,
    compatible,
    compute_bounds,
    derive_order,
    leq,
)
from .states import (
    State,
    StateReport,
    StateViolation,
    find_state,
    restrict_to_sharp,
    smear_state,
    state_row_labels,
    state_system,
    verify_state,
)
from .structure import (
    SharpBounds,
    SharpSubalgebra,
    StructureProfile,
    atoms,
    extract_sharp,
    is_archimedean,
    is_atomic,
    is_s_dominating,
    is_sharp,
    is_sharply_dominating,
    isotropic_index,
    meager_elements,
    sharp_bounds,
    sharp_elements,
    structure_profile,
)

__all__ = [
    "AtomMultiple",
    "AtomicDecomposition",
    "AxiomReport",
    "AxiomViolation",
    "BasicDecomposition",
    "Bounds",
    "BoundsMissing",
    "Classification",
    "DegenerateBlock",
    "DuplicateSum",
    "EafDocument",
    "EffectAlgebra",
    "EffectAlgebraError",
    "FeasiblePoint",
    "InfeasibilityCertificate",
    "InvalidDecomposition",
    "InvalidState",
    "LAW_IDS",
    "LawReport",
    "LawResult",
    "LinearSystem",
    "MissingElement",
    "MissingHeader",
    "NegativeDenominator",
    "NotDecomposable",
    "OrderStructure",
    "ParseError",
    "PreconditionFailed",
    "SharpBounds",
    "SharpSubalgebra",
    "SizeLimit",
    "SplitDecomposition",
    "State",
    "StateReport",
    "StateViolation",
    "StructureProfile",
    "SumTable",
    "UnknownName",
    "Violation",
    "ZeroElement",
    "atomic_decomposition",
    "atoms",
    "basic_decomposition",
    "boolean_algebra",
    "build_effect_algebra",
    "classify",
    "compatible",
    "compute_bounds",
    "derive_order",
    "direct_product",
    "extract_sharp",
    "find_state",
    "horizontal_sum",
    "is_archimedean",
    "is_atomic",
    "is_s_dominating",
    "is_sharp",
    "is_sharply_dominating",
    "isotropic_index",
    "leq",
    "make_algebra",
    "meager_elements",
    "multiple",
    "mv_chain",
    "parse_eaf",
    "parse_state",
    "bundled_fixture",
    "partial_difference",
    "partial_sum",
    "restrict_to_sharp",
    "run_law_suite",
    "serialize_eaf",
    "serialize_state",
    "sharp_bounds",
    "sharp_elements",
    "smear_state",
    "solve_exact",
    "split_atomic_decomposition",
    "state_row_labels",
    "state_system",
    "structure_profile",
    "verify_axioms",
    "verify_certificate",
    "verify_point",
    "verify_state",
]

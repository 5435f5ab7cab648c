"""Exact 2-string braid arithmetic over torus bundles on the circle and a
certified Borsuk-Ulam classifier for fiber-preserving homotopy classes."""

from .freegroup import (
    B,
    IDENTITY,
    X,
    Y,
    ExponentSums,
    FreeWord,
    commutator,
    enclosed_area,
    format_word,
    parse_word,
    staircase_word,
    twist_train,
)
from .torus_braid import (
    B_TWIST,
    ONE,
    SIGMA,
    W_CENTER,
    Z_CENTER,
    RelationCheck,
    TorusBraid,
    braid_commutator,
    format_braid,
    parse_braid,
    presentation_report,
    project_first_strand,
    rho,
)
from .param_braid import (
    Bundle,
    ParamBraid,
    c_conjugate,
    c_loop,
    embed,
    first_strand_image,
    format_param_braid,
    kind_for_matrix,
    parametrized_relations_report,
    parse_param_braid,
)
from .fundamental import (
    HomClassMA,
    HomClassT3,
    Involution,
    KleinS1Elem,
    MAElem,
    Mat2,
    MONODROMY_MA,
    MONODROMY_MA_TILDE,
    MONODROMY_ORBIT,
    MONODROMY_ORBIT_TILDE,
    SnEquivalence,
    T3Elem,
    class_from_descriptor,
    class_to_descriptor,
    commutes,
    covering_push,
    sn_equivalent,
    standard_from_tilde,
    theta_tau,
    tilde_from_standard,
)
from .classifier import (
    CandidateFamily,
    Certificate,
    DiagramReport,
    ParityReport,
    SystemReport,
    WitnessTriple,
    check_diagram,
    classify,
    classify_ma,
    classify_t3,
    conjugate_train,
    diagram_images_from_witness,
    extend_t2_diagram_to_t3,
    parity_certificate,
    restrict_t3_to_t2,
    sample_candidates,
    system_holds,
    verify_certificate,
    verify_system,
    witness_ma,
)
from .oracle import (
    SearchHit,
    estimate_candidates,
    express_as_B_conjugates,
    naive_reduce,
    search_system,
)

__all__ = [name for name in dir() if not name.startswith("_")]

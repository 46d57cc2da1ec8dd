"""Certified computations on real binary forms: real roots, gradient circle maps, Waring rank."""
from .circle import (
    CircleMapSample,
    WindingResult,
    degree_phi_exact,
    hessian_at_point,
    phi_bar,
    psi_bar,
    quadratic_hessian_check,
    trajectory_csv,
    winding_number_numeric,
)
from .errors import (
    ApolarityError,
    DegreeError,
    ExactMethodInapplicable,
    FormError,
    HomogeneityError,
    MapBreakdownError,
    NotSquarefreeError,
    ParseError,
    SingularMatrixError,
    UndersamplingError,
    ZeroFormError,
)
from .experiments import ExperimentConfig, ExperimentReport, sample_form, theorem_fuzz, typical_rank_experiment
from .forms import (
    BinaryForm,
    LinearForm,
    change_coordinates,
    dehomogenize,
    directional_derivative,
    evaluate,
    hessian,
    homogenize,
    partial_x,
    partial_y,
)
from .parser import format_form, parse_form
from .rank import (
    Catalecticant,
    Decomposition,
    RankCertificate,
    SearchBudget,
    apolar_slice,
    catalecticant,
    catalecticant_bound,
    complex_rank,
    decompose_from_apolar,
    real_rank,
)
from .roots import (
    RootCount,
    RootIsolation,
    SturmSequence,
    count_projective_real_roots,
    discriminant_form,
    discriminant_univariate,
    has_n_distinct_real_roots,
    isolate_real_roots,
    resultant_gradient,
    sturm_count,
    sturm_sequence,
)
from .theorem import (
    TheoremReport,
    check_criterion_A,
    check_criterion_B,
    check_criterion_C,
    pencil_discriminant,
    verify_corollary,
    verify_theorem1,
)

__version__ = "0.1.0"

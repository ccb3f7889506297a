"""ltistab: stability analysis of continuous-time LTI systems.

Three routes to an absolute-stability verdict (pole locations, region of
convergence of the bilateral Laplace transform, absolute integrability of the
impulse response), relative-stability metrics from the dominant pole, and
feedback gain design, backed by exact-as-floating-point polynomial algebra
and a compiled kernel core with a NumPy fallback.
"""
from ltistab._kernels import backend as kernel_backend
from ltistab.diagrams import elaborate_diagram
from ltistab.errors import (
    AmbiguousRocError,
    BoundViolatedError,
    DegenerateLoopError,
    DegreeZeroError,
    DiagramError,
    EmptyRocError,
    EvaluationAtPoleError,
    ExpressionError,
    ExpressionSyntaxError,
    FourierDoesNotExistError,
    GridMismatchError,
    ImproperTransferFunctionError,
    ImpulseNotSamplableError,
    InternalInvariantError,
    LtistabError,
    MultipleDivisionError,
    NegativeExponentError,
    NonConjugateRootsError,
    NotAbsolutelyIntegrableError,
    NotStableError,
    PoleInsideRocError,
    ZeroDenominatorError,
    ZeroPolynomialError,
)
from ltistab.expressions import format_poly, format_tf, lower_ast, parse_tf, tf_from_text
from ltistab.polynomial import (
    Polynomial,
    RootSet,
    poly_add,
    poly_eval,
    poly_mul,
    poly_roots,
    roots_to_poly,
)
from ltistab.rational import (
    PoleZeroForm,
    TransferFunction,
    cancel_common,
    feedback_unity,
    freq_response,
    from_pole_zero,
    parallel,
    pole_zero_form,
    series,
    tf_eval,
    tf_new,
    tf_poles,
    tf_zeros,
)
from ltistab.signals import (
    ExpPolySignal,
    ExpPolyTerm,
    IntegralResult,
    SampledSignal,
    Side,
    abs_integral,
    convolve,
    make_signal,
    sample,
    signal_eval,
    square_integral,
)
from ltistab.stability import (
    DEFAULT_EPSILON,
    BoundCertificate,
    GainRange,
    NumericVerdict,
    Route,
    StabilityReport,
    Verdict,
    adversarial_input,
    adversarial_output_peak,
    bibo_from_poles,
    bibo_from_roc,
    bibo_numeric,
    bound_witness,
    gain_range_first_order,
    gain_sweep,
    settling_time,
)
from ltistab.transforms import (
    LaplaceResult,
    PartialFractions,
    PfEntry,
    Roc,
    fourier_from_laplace,
    fourier_numeric,
    inverse_laplace,
    laplace,
    partial_fractions,
    pf_eval,
    roc_causal,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousRocError",
    "BoundCertificate",
    "BoundViolatedError",
    "DEFAULT_EPSILON",
    "DegenerateLoopError",
    "DegreeZeroError",
    "DiagramError",
    "EmptyRocError",
    "EvaluationAtPoleError",
    "ExpPolySignal",
    "ExpPolyTerm",
    "ExpressionError",
    "ExpressionSyntaxError",
    "FourierDoesNotExistError",
    "GainRange",
    "GridMismatchError",
    "ImproperTransferFunctionError",
    "ImpulseNotSamplableError",
    "IntegralResult",
    "InternalInvariantError",
    "LaplaceResult",
    "LtistabError",
    "MultipleDivisionError",
    "NegativeExponentError",
    "NonConjugateRootsError",
    "NotAbsolutelyIntegrableError",
    "NotStableError",
    "NumericVerdict",
    "PartialFractions",
    "PfEntry",
    "PoleInsideRocError",
    "PoleZeroForm",
    "Polynomial",
    "Roc",
    "RootSet",
    "Route",
    "SampledSignal",
    "Side",
    "StabilityReport",
    "TransferFunction",
    "Verdict",
    "ZeroDenominatorError",
    "ZeroPolynomialError",
    "abs_integral",
    "adversarial_input",
    "adversarial_output_peak",
    "bibo_from_poles",
    "bibo_from_roc",
    "bibo_numeric",
    "bound_witness",
    "cancel_common",
    "convolve",
    "elaborate_diagram",
    "feedback_unity",
    "format_poly",
    "format_tf",
    "fourier_from_laplace",
    "fourier_numeric",
    "freq_response",
    "from_pole_zero",
    "gain_range_first_order",
    "gain_sweep",
    "inverse_laplace",
    "kernel_backend",
    "laplace",
    "lower_ast",
    "make_signal",
    "parallel",
    "parse_tf",
    "partial_fractions",
    "pf_eval",
    "pole_zero_form",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "poly_roots",
    "roc_causal",
    "roots_to_poly",
    "sample",
    "series",
    "settling_time",
    "signal_eval",
    "square_integral",
    "tf_eval",
    "tf_from_text",
    "tf_new",
    "tf_poles",
    "tf_zeros",
]

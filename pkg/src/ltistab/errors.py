"""Exception hierarchy for ltistab.

Every domain failure raises a subclass of :class:`LtistabError`, so callers
(and the CLI) can distinguish domain errors from genuine bugs.
"""


class LtistabError(Exception):
    """Base class for all ltistab domain errors."""


# --- polynomial -----------------------------------------------------------

class ZeroPolynomialError(LtistabError):
    """Roots of the identically-zero polynomial were requested."""


class DegreeZeroError(LtistabError):
    """Roots of a nonzero constant polynomial were requested."""


class NonConjugateRootsError(LtistabError):
    """A root set is not closed under complex conjugation."""


# --- rational transfer functions ------------------------------------------

class ZeroDenominatorError(LtistabError):
    """Transfer-function denominator is identically zero."""


class ImproperTransferFunctionError(LtistabError):
    """Numerator degree exceeds denominator degree."""


class EvaluationAtPoleError(LtistabError):
    """Evaluation point coincides with a pole."""


class DegenerateLoopError(LtistabError):
    """Unity feedback closure with 1 + forward identically zero."""


# --- signals ---------------------------------------------------------------

class ImpulseNotSamplableError(LtistabError):
    """A signal with a nonzero impulse weight cannot be sampled."""


class GridMismatchError(LtistabError):
    """Two sampled signals do not share the same time step."""


# --- transforms -------------------------------------------------------------

class EmptyRocError(LtistabError):
    """No vertical strip of convergence exists (the transform does not exist)."""


class PoleInsideRocError(LtistabError):
    """A claimed region of convergence contains a pole."""


class AmbiguousRocError(LtistabError):
    """Defensive: a pole could not be classified against the strip bounds."""


class FourierDoesNotExistError(LtistabError):
    """The imaginary axis lies outside the region of convergence."""


class NotAbsolutelyIntegrableError(LtistabError):
    """Numeric Fourier integral requested for a non-integrable signal."""


# --- stability ---------------------------------------------------------------

class BoundViolatedError(LtistabError):
    """The BIBO output bound was exceeded; indicates an implementation bug."""


class NotStableError(LtistabError):
    """A stable-only metric was requested for a non-stable verdict."""


# --- frontend ----------------------------------------------------------------

class ExpressionError(LtistabError):
    """Base for transfer-function expression parse errors.

    ``offset`` is the byte offset into the UTF-8 encoded input at which the
    problem was detected.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class ExpressionSyntaxError(ExpressionError):
    """Input does not match the expression grammar."""


class MultipleDivisionError(ExpressionError):
    """More than one top-level '/' in a transfer-function expression."""


class NegativeExponentError(ExpressionError):
    """'^' followed by a negative exponent."""


class DiagramError(LtistabError):
    """Block-diagram validation or elaboration failure.

    ``path`` locates the offending node, e.g. ``$.blocks[1].forward``.
    """

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class InternalInvariantError(LtistabError):
    """An internal consistency check failed; indicates an implementation bug."""

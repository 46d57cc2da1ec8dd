"""Exception hierarchy shared by every module of the package."""


class FormError(ValueError):
    """Base class for invalid inputs to a binary-form operation."""


class ZeroFormError(FormError):
    """The zero form was passed where a nonzero form is required."""


class DegreeError(FormError):
    """The form's degree is outside the range an operation accepts."""


class NotSquarefreeError(FormError):
    """The form has a repeated root over the complex numbers."""


class SingularMatrixError(FormError):
    """A coordinate change or linear solve was given a singular matrix."""


class ParseError(FormError):
    """Syntax error in a form expression; ``position`` is a 0-based offset."""

    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class HomogeneityError(FormError):
    """The expression expands to a polynomial mixing total degrees."""


class MapBreakdownError(FormError):
    """The gradient map nearly vanished on the circle, so it cannot be normalized."""


class UndersamplingError(FormError):
    """A winding computation saw an angle increment of at least pi/2 in one step."""


class ExactMethodInapplicable(FormError):
    """The certified winding computation needs a Hessian without real roots."""


class ApolarityError(FormError):
    """A proposed decomposition generator is not usable (not apolar, or roots not real and distinct)."""

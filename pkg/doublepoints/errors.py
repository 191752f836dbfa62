"""
Exceptions raised across the package.

Two families matter to callers: InputError (the request itself is malformed)
and MathematicalRefusal (the request is well formed but the mathematics
refuses it, e.g. a non-reduced curve). The command line maps them to exit
statuses 2 and 1.
"""


class DoublePointsError(Exception):
    """
    Base class of every error raised by the package.
    """


class InputError(DoublePointsError):
    """
    Malformed input: bad text, unknown variables, out-of-range arguments.
    """


class ParseError(InputError):
    """
    Polynomial or point text that does not follow the grammar.
    """

    def __init__(self, message, text=None, position=None):
        """
        :param message: what went wrong
        :param text: the text being parsed
        :param position: 0-based offset of the offending token
        """
        self.text = text
        self.position = position
        if position is not None:
            message = '%s (at position %d)' % (message, position)
        super(ParseError, self).__init__(message)


class RingMismatchError(InputError):
    """
    Operands live in polynomial rings with different variables.
    """


class DomainMismatchError(InputError):
    """
    Quadratic-extension elements over different discriminants were combined.
    """


class MathematicalRefusal(DoublePointsError):
    """
    Well-formed input that the algorithms refuse to process.
    """


class NonReducedCurveError(MathematicalRefusal):
    """
    The curve equation has a repeated factor.
    """

    def __init__(self, message, repeated_factor=None):
        self.repeated_factor = repeated_factor
        super(NonReducedCurveError, self).__init__(message)


class StepCapExceeded(MathematicalRefusal):
    """
    The double-point classifier ran out of steps. Carries the partial trace.
    """

    def __init__(self, message, trace=None):
        self.trace = trace
        super(StepCapExceeded, self).__init__(message)


class ExtensionUnsupported(MathematicalRefusal):
    """
    The computation needs a square root that does not live in Q or in the
    single quadratic extension at hand.
    """


class PositiveDimensionalError(MathematicalRefusal):
    """
    An operation restricted to 0-dimensional schemes got a positive-dimensional one.
    """


class BasePointError(MathematicalRefusal):
    """
    A parameterization has base points (the projection center meets the curve).
    """


class ProjectionUndefined(MathematicalRefusal):
    """
    The projection center meets the scheme being projected.
    """

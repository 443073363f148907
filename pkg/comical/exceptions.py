"""
Error types

Every failure raised by the engine derives from ComicalError; the CLI turns
these into click errors with a non-zero exit code.
"""


class ComicalError(Exception):
    """Base class for engine errors"""


class CompositionError(ComicalError, ValueError):
    """Consecutive operators do not chain"""

    def __init__(self, message: str, position: int = None):
        super().__init__(message)
        self.position = position


class ArityError(ComicalError, ValueError):
    """Vertex length does not match the operator's source dimension"""


class ParameterError(ComicalError, ValueError):
    """Out-of-range parameters for a standard object or generator"""


class OperatorSyntaxError(ComicalError, ValueError):
    """Malformed operator string"""


class IntegrityError(ComicalError):
    """A face table or map violates action coherence"""


class UnsupportedInputError(ComicalError):
    """Input outside the supported scope (non-mono legs and the like)"""


class PreconditionError(ComicalError, ValueError):
    """Operation called with arguments violating its precondition"""


class NoPivotError(ComicalError, ValueError):
    """Strategy lift requested for a simplex with zero diagonality"""


class IncompletenessError(ComicalError):
    """Input lacks a witness needed to build the homotopy category"""


class CategoryError(ComicalError):
    """Finite category data violates the category axioms"""


class SchemaError(ComicalError, ValueError):
    """Malformed object or map document"""

    def __init__(self, message: str, path: str = '$'):
        super().__init__(f'{path}: {message}')
        self.path = path


class UnknownSuiteError(ComicalError, KeyError):
    """No verification suite with the requested name"""

    def __str__(self):
        return str(self.args[0]) if self.args else 'unknown suite'

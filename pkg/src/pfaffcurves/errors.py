"""Exception hierarchy shared by all modules.

Each error carries a short machine-parsable ``code`` and an exit status used
by the command line front end.
"""


class PfaffError(Exception):
    code = "ERROR"
    exit_status = 3


class ParseError(PfaffError, ValueError):
    code = "PARSE_ERROR"
    exit_status = 2

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class FieldMismatch(PfaffError, TypeError):
    code = "FIELD_MISMATCH"


class DegreeMismatch(PfaffError, ValueError):
    code = "DEGREE_MISMATCH"


class NotDivisible(PfaffError, ArithmeticError):
    code = "NOT_DIVISIBLE"

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class SizeLimit(PfaffError, ValueError):
    code = "SIZE_LIMIT"


class NotARepresentation(PfaffError):
    code = "NOT_A_REPRESENTATION"


class DegenerateRep(PfaffError):
    code = "DEGENERATE_REP"


class NonlinearQuotient(PfaffError):
    code = "NONLINEAR_QUOTIENT"


class SampleNotOnCurve(PfaffError, ValueError):
    code = "SAMPLE_NOT_ON_CURVE"


class PointNotOnCurve(PfaffError, ValueError):
    code = "POINT_NOT_ON_CURVE"


class UnsupportedField(PfaffError, ValueError):
    code = "UNSUPPORTED_FIELD"


class EliminationFailed(PfaffError):
    code = "ELIMINATION_FAILED"


class WrongCount(PfaffError):
    code = "WRONG_COUNT"


class InvalidGroupElement(PfaffError, ValueError):
    code = "INVALID_GROUP_ELEMENT"


class MissingParameter(PfaffError, KeyError):
    code = "MISSING_PARAMETER"

    def __str__(self):
        return Exception.__str__(self)


class BudgetExhausted(PfaffError):
    code = "BUDGET_EXHAUSTED"
    exit_status = 4


class NoSolutionFound(BudgetExhausted):
    code = "NO_SOLUTION_FOUND"

    def __init__(self, message, attempts=0):
        super().__init__(message)
        self.attempts = attempts


class InsufficientSamples(PfaffError, ValueError):
    code = "INSUFFICIENT_SAMPLES"

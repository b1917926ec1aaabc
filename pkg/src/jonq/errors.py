"""Exception hierarchy for the engine."""


class JonqError(Exception):
    """Base class for all engine errors."""


class StructuralError(JonqError):
    """Mismatched variable sets, wrong arities, malformed matrices."""


class ParseError(JonqError):
    """Text input that does not follow the polynomial or instance grammar."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DivisibilityError(JonqError):
    """An exact division that the caller promised would succeed failed."""


class MembershipError(JonqError):
    """A polynomial expected to lie in an ideal does not."""


class HypothesisViolation(JonqError):
    """Input data violating a named standing hypothesis.

    The message always names the violated hypothesis (coprimality, degree
    relation, nonvanishing of an evaluated form, inverse verification, ...).
    """


class BudgetExceeded(JonqError):
    """A resource budget (pair limit, saturation cap, degree bound) ran out."""

    def __init__(self, what, limit):
        super().__init__(f"budget exceeded: {what} (limit {limit})")
        self.what = what
        self.limit = limit

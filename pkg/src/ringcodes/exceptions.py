"""Exception types raised across the package."""


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would visit more codewords than allowed."""

    def __init__(self, size, budget):
        self.size = size
        self.budget = budget
        super().__init__(f"code has {size} codewords, enumeration budget is {budget}")


class ParseError(ValueError):
    """Malformed polynomial or ring-element text. ``position`` is a 0-based offset."""

    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class DivisibilityError(ValueError):
    """A generator-polynomial divisibility requirement does not hold."""


class IdentityViolation(AssertionError):
    """A checked algebraic identity failed; ``witness`` carries the counterexample."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class UndefinedDistance(ValueError):
    """Minimum distance requested for a code with no nonzero codeword."""

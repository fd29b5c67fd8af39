"""Shared exception types."""


class BudgetExceeded(RuntimeError):
    """An enumeration would visit more vectors/messages than the caller allowed."""

    def __init__(self, needed: int, budget: int, what: str = "enumeration"):
        super().__init__(f"{what} needs {needed} steps, budget is {budget}")
        self.needed = needed
        self.budget = budget


class ZeroCode(ValueError):
    """The operation is undefined on the zero code."""


class NonExactDivision(ArithmeticError):
    """A MacWilliams scaling by 1/|C| did not divide exactly.

    Almost always means the supplied cardinality is not the true |C|.
    """


class ExpansionTooLarge(RuntimeError):
    """Symbolic transform expansion refused above the guard degree."""


class NotSymmetric(ValueError):
    """Matrix argument must satisfy A == A^T."""


class BadBorder(ValueError):
    """Bordered construction requires gamma = beta or gamma = -beta."""


class NotSelfDual(ValueError):
    """The report requires a self-dual input code."""

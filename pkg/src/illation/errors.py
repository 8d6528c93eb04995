"""Exceptions shared across the package."""


class LimitExceededError(Exception):
    """An enumeration limit was hit (CLI exit code 3)."""


class MissingVariableError(KeyError):
    """An assignment is missing a variable the formula mentions."""

    def __init__(self, variable: str):
        super().__init__(variable)
        self.variable = variable

    def __str__(self) -> str:
        return f"assignment has no value for variable {self.variable!r}"

"""Exception hierarchy shared by the library and the command line."""


class OpticsError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 1


class UsageError(OpticsError, ValueError):
    exit_code = 2


class ChainSyntaxError(UsageError):
    """Malformed chain text. ``position`` is 1-based."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DomainError(OpticsError, ValueError):
    exit_code = 3


class NumericalIntegrityError(OpticsError, ArithmeticError):
    """A computed matrix drifted outside its group beyond tolerance."""

    exit_code = 4

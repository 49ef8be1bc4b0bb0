"""Exception hierarchy shared by every module.

The CLI maps each class to a distinct exit code.
"""


class ChainASLError(Exception):
    exit_code = 1


class ParseError(ChainASLError, ValueError):
    exit_code = 2


class BudgetExceeded(ChainASLError):
    exit_code = 3


class VerificationFailure(ChainASLError):
    """A mathematical check failed; ``witness`` carries the offending data."""

    exit_code = 4

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInLattice(ChainASLError, KeyError):
    exit_code = 2

    def __str__(self):
        return str(self.args[0]) if self.args else "element not in lattice"

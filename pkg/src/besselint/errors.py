"""Exception types raised by besselint."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested quantity."""


class UnsupportedCaseError(ValueError):
    """The (mu, nu, kernel) combination has no closed form here."""


class UnsupportedParityError(UnsupportedCaseError):
    def __init__(self, msg="unsupported parity: mu and nu must have opposite parity"):
        super().__init__(msg)


class ConvergenceError(RuntimeError):
    """Quadrature did not reach the requested tolerance.

    The best available estimate is kept on ``best`` (an ``OracleResult``).
    """

    def __init__(self, msg, best=None):
        super().__init__(msg)
        self.best = best

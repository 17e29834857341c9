"""Exception hierarchy.

Every domain failure derives from :class:`CuboidError`; the command line maps
those to exit code 2.
"""


class CuboidError(Exception):
    """Base class for domain errors (singular points, off-surface input, ...)."""


class IndeterminateError(CuboidError):
    """Raised for root queries on the zero polynomial."""


class SingularityError(CuboidError):
    def __init__(self, factors, where=""):
        self.factors = tuple(factors)
        msg = "singular point: " + ", ".join(self.factors) + " vanish"
        if where:
            msg = f"{where}: {msg}"
        super().__init__(msg)


class AdmissibilityError(CuboidError):
    def __init__(self, violation, where=""):
        self.violation = violation
        msg = f"inadmissible cubic: {violation.describe()}"
        if where:
            msg = f"{where}: {msg}"
        super().__init__(msg)


class DegenerateParameterError(CuboidError):
    """w = 1 or w = -1: the root formulas divide by zero."""


class OffSurfaceError(CuboidError):
    """w does not satisfy the sextic for the given D-parameter."""


class ConversionSingularError(CuboidError):
    """The denominator 2*v3 - v1 - v2 of a conversion formula vanishes."""


class PairingError(CuboidError):
    """No alignment of the two root multisets reproduces the mixed sums."""


class BranchUndefinedError(CuboidError):
    """The branch construction is not defined at this point."""

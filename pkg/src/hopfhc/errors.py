"""Exception types shared across the package."""


class HopfHCError(Exception):
    """Base class for all package errors."""


class DegreeOverflow(HopfHCError):
    """A normal-form word left the truncation window of a preset."""


class NotHopf(HopfHCError):
    """The operation needs an antipode but the preset is only a bialgebra."""


class NotStable(HopfHCError):
    """The coefficient module/comodule fails the required stability."""


class NotAYD(HopfHCError):
    """The coefficient module/comodule is not anti-Yetter-Drinfeld."""


class NotCoideal(HopfHCError):
    """Generators of a left ideal do not span a coideal."""


class HypothesisFailed(HopfHCError):
    """A lemma hypothesis was checked and does not hold."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAComplex(HopfHCError):
    """Coboundary squared is nonzero."""


class NotCocyclic(HopfHCError):
    """The cyclic operator does not satisfy t^(n+1) = id."""


class ParseError(HopfHCError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ValidationError(HopfHCError):
    def __init__(self, key, message=""):
        super().__init__(f"{key}: {message}" if message else key)
        self.key = key

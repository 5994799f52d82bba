"""Exception taxonomy shared across the package."""


class GrobconError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatch(GrobconError):
    """Operands live in different polynomial rings."""


class DimensionMismatch(GrobconError):
    """Exponent/weight vector length differs from the ring's variable count."""


class ZeroPolynomialError(GrobconError):
    """Leading term (or similar) requested from the zero polynomial."""


class StepLimitExceeded(GrobconError):
    """A Groebner computation exceeded its configured pair-reduction budget."""


class OracleSizeError(GrobconError):
    """An exhaustive partition oracle was asked for too many minimal primes."""


class ContractViolation(GrobconError):
    """A checked precondition failed (e.g. height of a non-containing ideal)."""


class DeformationIntegrityError(GrobconError):
    """Specialization of a homogenized ideal did not recover the expected ideal."""


class ParseError(GrobconError):
    """Syntax error in a polynomial expression; carries line/column."""

    def __init__(self, message, line, col):
        super().__init__("%s (line %d, column %d)" % (message, line, col))
        self.line = line
        self.col = col


class EntryValidationError(GrobconError):
    """A corpus entry is malformed or violates the entry invariants."""


class UnsupportedComputation(GrobconError):
    """A derived invariant is undefined for the given quotient dimension."""

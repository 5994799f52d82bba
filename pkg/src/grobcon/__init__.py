"""grobcon: exact Groebner-deformation connectedness toolkit.

Computes reduced Groebner bases and initial ideals over Q, connectedness
graphs and connectedness dimension of equidimensional quotient rings, and
verifies at desk scale that square-free deformations preserve component
counts, connectedness dimension, and the graph-expressible Lyubeznik
numbers.
"""

__version__ = "0.1.0"

from ._core import BACKEND as kernel_backend
from .errors import (
    ContractViolation,
    DeformationIntegrityError,
    DimensionMismatch,
    EntryValidationError,
    GrobconError,
    OracleSizeError,
    ParseError,
    RingMismatch,
    StepLimitExceeded,
    UnsupportedComputation,
    ZeroPolynomialError,
)
from .polyring import (
    MonomialOrder,
    Polynomial,
    Rational,
    RingDescriptor,
    cmp_monomials,
    leading_monomial,
    leading_term,
    weight_degree,
)
from .monomials import (
    MonomialIdealValue,
    VariablePrime,
    is_equidimensional_monomial,
    is_squarefree,
    minimal_primes_squarefree,
    monomial_dimension,
    radical_monomial,
)
from .groebner import (
    Counters,
    DEFAULT_MAX_STEPS,
    IdealPresentation,
    ReducedGroebnerBasis,
    buchberger,
    colon,
    eliminate,
    height_in_quotient,
    initial_ideal,
    intersect,
    krull_dimension,
    member,
    normal_form,
    radical_member,
    same_ideal,
    zero_ideal,
)
from .ioformats import parse_polynomial, poly_to_string

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact multivariate polynomials over Q and monomial-order comparators.

Everything here is immutable and hashable.  Coefficients are
``fractions.Fraction`` (arbitrary-precision, always in lowest terms with a
positive denominator, zero uniquely 0/1 -- the Fraction invariants).
Polynomials are stored canonically: terms strictly descending under grevlex
no matter which order a computation uses, so structural equality is
order-independent.
"""

import re
from fractions import Fraction

from . import _core
from .errors import DimensionMismatch, RingMismatch, ZeroPolynomialError

Rational = Fraction

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingDescriptor:
    """A polynomial ring over Q given by its ordered variable names."""

    __slots__ = ("names",)

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for nm in names:
            if not _NAME_RE.match(nm):
                raise ValueError("invalid variable name %r" % (nm,))
        object.__setattr__(self, "names", names)

    def __setattr__(self, *a):
        raise AttributeError("RingDescriptor is immutable")

    @property
    def n(self):
        return len(self.names)

    def index(self, name):
        return self.names.index(name)

    def fresh_name(self, base):
        """A name not already used by this ring, derived from ``base``."""
        if base not in self.names:
            return base
        k = 0
        while "%s%d" % (base, k) in self.names:
            k += 1
        return "%s%d" % (base, k)

    def extend(self, name):
        """New descriptor with ``name`` appended as the last variable."""
        return RingDescriptor(self.names + (name,))

    def __eq__(self, other):
        return isinstance(other, RingDescriptor) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "RingDescriptor(%r)" % (list(self.names),)


class MonomialOrder:
    """Total multiplicative monomial order: lex, grevlex, weight-with-tie,
    or the internal two-block elimination order.

    Variable precedence is the declaration order of the ring.  Weight
    vectors are strictly positive integers; the tie order must itself be
    tie-free (lex or grevlex).
    """

    __slots__ = ("kind", "w", "tie", "mask")

    def __init__(self, kind, w=None, tie=None, mask=None):
        if kind not in ("lex", "grevlex", "weight", "block"):
            raise ValueError("unknown order kind %r" % (kind,))
        if kind == "weight":
            w = tuple(int(x) for x in w)
            if not w or any(x <= 0 for x in w):
                raise ValueError("weight vector must be positive integers")
            if tie is None:
                tie = MonomialOrder("grevlex")
            if tie.kind not in ("lex", "grevlex"):
                raise ValueError("tie order must be lex or grevlex")
        elif kind == "block":
            mask = tuple(1 if m else 0 for m in mask)
            if not any(mask) or all(mask):
                raise ValueError("block order needs a proper variable split")
        else:
            w = None
            tie = None
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "tie", tie)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, *a):
        raise AttributeError("MonomialOrder is immutable")

    @staticmethod
    def lex():
        return MonomialOrder("lex")

    @staticmethod
    def grevlex():
        return MonomialOrder("grevlex")

    @staticmethod
    def weight(w, tie=None):
        return MonomialOrder("weight", w=w, tie=tie)

    @staticmethod
    def block(mask):
        return MonomialOrder("block", mask=mask)

    def kernel_code(self):
        """(code, aux) pair consumed by the term kernel."""
        if self.kind == "lex":
            return _core.LEX, None
        if self.kind == "grevlex":
            return _core.GREVLEX, None
        if self.kind == "weight":
            code = _core.WEIGHT_LEX if self.tie.kind == "lex" else _core.WEIGHT_GREVLEX
            return code, self.w
        return _core.BLOCK_GREVLEX, self.mask

    def arity(self):
        """Required exponent length, or None when the order is generic."""
        if self.kind == "weight":
            return len(self.w)
        if self.kind == "block":
            return len(self.mask)
        return None

    def cmp(self, a, b):
        code, aux = self.kernel_code()
        return _core.cmp_expvec(code, aux, a, b)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.w == other.w
            and self.tie == other.tie
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.kind, self.w, self.tie, self.mask))

    def __repr__(self):
        if self.kind == "weight":
            return "MonomialOrder.weight(%r, tie=%r)" % (list(self.w), self.tie)
        if self.kind == "block":
            return "MonomialOrder.block(%r)" % (list(self.mask),)
        return "MonomialOrder.%s()" % self.kind


GREVLEX = MonomialOrder.grevlex()
LEX = MonomialOrder.lex()


def cmp_monomials(order, a, b):
    """Compare two exponent vectors under ``order``: -1 (less), 0, or 1."""
    a = tuple(a)
    b = tuple(b)
    if len(a) != len(b):
        raise DimensionMismatch("exponent lengths %d and %d differ" % (len(a), len(b)))
    ar = order.arity()
    if ar is not None and ar != len(a):
        raise DimensionMismatch("order expects %d variables, got %d" % (ar, len(a)))
    return order.cmp(a, b)


def weight_degree(w, m):
    """Dot product of a positive weight vector with an exponent vector."""
    w = tuple(w)
    m = tuple(m)
    if len(w) != len(m):
        raise DimensionMismatch("weight length %d vs exponent length %d" % (len(w), len(m)))
    return sum(wi * mi for wi, mi in zip(w, m))


class Polynomial:
    """Canonical-form multivariate polynomial over Q.

    ``terms`` is a tuple of (exponent tuple, Fraction) pairs, strictly
    descending under grevlex, with no zero coefficients.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        canon = _core.sort_terms(
            [(tuple(e), c if isinstance(c, Fraction) else Fraction(c)) for e, c in terms],
            _core.GREVLEX,
            None,
        )
        for e, _ in canon:
            if len(e) != ring.n:
                raise DimensionMismatch(
                    "exponent length %d in a %d-variable ring" % (len(e), ring.n)
                )
            if any(x < 0 for x in e):
                raise ValueError("negative exponent")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", tuple(canon))

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(ring):
        return Polynomial(ring, [])

    @staticmethod
    def constant(ring, c):
        return Polynomial(ring, [((0,) * ring.n, Fraction(c))])

    @staticmethod
    def one(ring):
        return Polynomial.constant(ring, 1)

    @staticmethod
    def variable(ring, i):
        e = [0] * ring.n
        e[i] = 1
        return Polynomial(ring, [(tuple(e), Fraction(1))])

    @staticmethod
    def monomial(ring, exps, c=1):
        return Polynomial(ring, [(tuple(exps), Fraction(c))])

    # -- queries ------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    @property
    def is_term(self):
        return len(self.terms) == 1

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def support_vars(self):
        """Indices of variables actually occurring."""
        out = set()
        for e, _ in self.terms:
            for i, x in enumerate(e):
                if x:
                    out.add(i)
        return out

    def sorted_terms(self, order):
        """Terms as a list, descending under ``order``."""
        code, aux = order.kernel_code()
        if order.kind == "grevlex":
            return list(self.terms)
        return _core.sort_terms(list(self.terms), code, aux)

    # -- arithmetic ---------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatch("operands live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        self._check_ring(other)
        return _from_sorted(self.ring, _core.add_terms(list(self.terms), list(other.terms), _core.GREVLEX, None))

    __radd__ = __add__

    def __neg__(self):
        return _from_sorted(self.ring, _core.neg_terms(list(self.terms)))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _from_sorted(self.ring, _core.scale_terms(list(self.terms), Fraction(other)))
        self._check_ring(other)
        return _from_sorted(
            self.ring, _core.mul_terms(list(self.terms), list(other.terms), _core.GREVLEX, None)
        )

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.one(self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        from .ioformats import poly_to_string

        return "<%s>" % poly_to_string(self)


def _from_sorted(ring, terms):
    """Wrap a kernel-produced (already canonical) term list without resorting."""
    p = Polynomial.__new__(Polynomial)
    object.__setattr__(p, "ring", ring)
    object.__setattr__(p, "terms", tuple(terms))
    return p


def leading_term(order, f):
    """The order-maximal (coefficient, exponents) of a nonzero polynomial."""
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    ar = order.arity()
    if ar is not None and ar != f.ring.n:
        raise DimensionMismatch("order expects %d variables, got %d" % (ar, f.ring.n))
    best = f.terms[0]
    if order.kind != "grevlex":
        for t in f.terms[1:]:
            if order.cmp(t[0], best[0]) > 0:
                best = t
    return best[1], best[0]


def leading_monomial(order, f):
    return leading_term(order, f)[1]

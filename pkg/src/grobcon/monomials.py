"""Square-free monomial combinatorics.

Minimal primes of a square-free monomial ideal are the inclusion-minimal
variable sets hitting every generator's support (minimal covers of the
support hypergraph); dimension is the complementary independent-set size.
This is the fast combinatorial route used wherever an ideal is known to be
monomial, replacing general primary decomposition.
"""

from . import _core
from .errors import ContractViolation, RingMismatch


class MonomialIdealValue:
    """A monomial ideal stored by its unique minimal generating set."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring, gens):
        gens = _minimalize([tuple(int(x) for x in e) for e in gens])
        for e in gens:
            if len(e) != ring.n:
                raise RingMismatch("exponent length %d in a %d-variable ring" % (len(e), ring.n))
            if any(x < 0 for x in e):
                raise ValueError("negative exponent")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", tuple(gens))

    def __setattr__(self, *a):
        raise AttributeError("MonomialIdealValue is immutable")

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return any(not any(e) for e in self.gens)

    @property
    def is_proper(self):
        return not self.is_unit

    def supports(self):
        return [frozenset(i for i, x in enumerate(e) if x) for e in self.gens]

    def contains_monomial(self, exps):
        exps = tuple(exps)
        return any(_core.exp_divides(g, exps) for g in self.gens)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdealValue)
            and self.ring == other.ring
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        from .ioformats import _monomial_str

        inner = ", ".join(_monomial_str(self.ring, e) or "1" for e in self.gens)
        return "MonomialIdeal(%s)" % inner


def _minimalize(exps):
    """Keep only divisibility-minimal exponents, canonically sorted."""
    exps = sorted(set(exps))
    keep = []
    for e in exps:
        if not any(_core.exp_divides(f, e) for f in keep if f != e):
            keep.append(e)
    # a later element never divides an earlier one after the plain sort
    # above, but guard both directions anyway
    out = [e for e in keep if not any(f != e and _core.exp_divides(f, e) for f in keep)]
    out.sort(key=lambda e: (sum(e), e))
    return out


class VariablePrime:
    """Prime ideal generated by a set of variables, stored as sorted indices."""

    __slots__ = ("vars",)

    def __init__(self, variables):
        vs = tuple(sorted(set(int(v) for v in variables)))
        if not vs:
            raise ValueError("a variable prime needs at least one variable")
        if vs[0] < 0:
            raise ValueError("negative variable index")
        object.__setattr__(self, "vars", vs)

    def __setattr__(self, *a):
        raise AttributeError("VariablePrime is immutable")

    def names(self, ring):
        return [ring.names[i] for i in self.vars]

    def as_monomial_ideal(self, ring):
        gens = []
        for i in self.vars:
            e = [0] * ring.n
            e[i] = 1
            gens.append(tuple(e))
        return MonomialIdealValue(ring, gens)

    def as_ideal(self, ring):
        from .groebner import IdealPresentation
        from .polyring import Polynomial

        return IdealPresentation(ring, [Polynomial.variable(ring, i) for i in self.vars])

    def __eq__(self, other):
        return isinstance(other, VariablePrime) and self.vars == other.vars

    def __lt__(self, other):
        return self.vars < other.vars

    def __hash__(self):
        return hash(self.vars)

    def __repr__(self):
        return "VariablePrime(%r)" % (list(self.vars),)


# ---------------------------------------------------------------------------
# covers
# ---------------------------------------------------------------------------

def minimal_covers(supports):
    """All inclusion-minimal variable sets hitting every support set.

    Branch-and-bound over the support hypergraph; the empty cover is
    returned for an empty hypergraph.
    """
    edges = [frozenset(s) for s in supports]
    if any(not e for e in edges):
        raise ValueError("empty support (unit generator) has no covers")
    found = []

    def descend(chosen, excluded, rest):
        pivot = None
        for e in rest:
            if not (e & chosen):
                pivot = e
                break
        if pivot is None:
            found.append(frozenset(chosen))
            return
        blocked = set(excluded)
        for v in sorted(pivot):
            if v in blocked:
                continue
            descend(chosen | {v}, blocked, [e for e in rest if v not in e])
            blocked.add(v)

    descend(set(), set(), edges)
    minimal = []
    for c in sorted(set(found), key=lambda s: (len(s), sorted(s))):
        if not any(m < c for m in minimal):
            minimal.append(c)
    return [tuple(sorted(c)) for c in minimal]


def min_cover_size(supports):
    """Size of a smallest hitting set, without full enumeration."""
    edges = sorted((frozenset(s) for s in supports), key=len)
    if any(not e for e in edges):
        raise ValueError("empty support (unit generator) has no covers")
    best = [len(set().union(*edges))] if edges else [0]

    def descend(chosen, rest):
        if len(chosen) >= best[0]:
            return
        for e in rest:
            if not (e & chosen):
                for v in sorted(e):
                    descend(chosen | {v}, [r for r in rest if v not in r])
                return
        best[0] = len(chosen)

    descend(frozenset(), edges)
    return best[0]


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def is_squarefree(M):
    """True when every minimal generator has all exponents in {0, 1}."""
    return all(all(x <= 1 for x in e) for e in M.gens)


def radical_monomial(M):
    """Square-free-ification: replace each generator by its support product."""
    return MonomialIdealValue(
        M.ring, [tuple(1 if x else 0 for x in e) for e in M.gens]
    )


def minimal_primes_squarefree(M):
    """Minimal primes of a proper square-free monomial ideal, as variable
    primes in a deterministic order."""
    if not is_squarefree(M):
        raise ContractViolation("minimal primes via covers need a square-free ideal")
    if M.is_unit or M.is_zero:
        raise ContractViolation("minimal primes need a proper nonzero monomial ideal")
    return [VariablePrime(c) for c in minimal_covers(M.supports())]


def monomial_dimension(M):
    """dim of the quotient by M: variables minus the minimum cover size."""
    if M.is_unit:
        raise ContractViolation("unit ideal has no quotient dimension")
    if M.is_zero:
        return M.ring.n
    return M.ring.n - min_cover_size(M.supports())


def is_equidimensional_monomial(M):
    """All minimal covers of a square-free ideal share one size."""
    if not is_squarefree(M):
        raise ContractViolation("equidimensionality test needs a square-free ideal")
    covers = minimal_covers(M.supports())
    return len({len(c) for c in covers}) <= 1


def dimension_modulo_vars(M, varset):
    """dim of the quotient by M + (the given variables).

    Generators meeting ``varset`` are absorbed; the rest constrain
    independence inside the complement.
    """
    varset = frozenset(varset)
    rest = [s for s in M.supports() if not (s & varset)]
    if any(not s for s in rest):
        raise ContractViolation("unit ideal has no quotient dimension")
    free = M.ring.n - len(varset)
    return free - min_cover_size(rest)


def sum_monomial(A, B):
    if A.ring != B.ring:
        raise RingMismatch("monomial ideals in different rings")
    return MonomialIdealValue(A.ring, A.gens + B.gens)


def intersect_monomial(A, B):
    if A.ring != B.ring:
        raise RingMismatch("monomial ideals in different rings")
    if A.is_zero or B.is_zero:
        return MonomialIdealValue(A.ring, [])
    return MonomialIdealValue(
        A.ring, [_core.exp_lcm(a, b) for a in A.gens for b in B.gens]
    )

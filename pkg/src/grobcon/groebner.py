"""Buchberger's algorithm, reduced Groebner bases, and the ideal operations
built on them: membership, elimination, intersection, colon, radical
membership, dimension, and heights inside equidimensional quotients.

Everything is deterministic: pair selection uses the normal strategy
(smallest lcm degree, then smallest pair index) and divisors are always
tried in list order, so reduced bases and normal forms are reproducible
bit for bit.
"""

from fractions import Fraction

from . import _core
from .errors import ContractViolation, RingMismatch, StepLimitExceeded
from .monomials import MonomialIdealValue, min_cover_size
from .polyring import MonomialOrder, Polynomial, _from_sorted

DEFAULT_MAX_STEPS = 10 ** 6

_GREVLEX = MonomialOrder.grevlex()


class Counters:
    """Deterministic work counters; these double as the 'timings' in reports."""

    __slots__ = ("gb_calls", "pair_reductions", "normal_forms")

    def __init__(self):
        self.gb_calls = 0
        self.pair_reductions = 0
        self.normal_forms = 0

    def as_dict(self):
        return {
            "gb_calls": self.gb_calls,
            "pair_reductions": self.pair_reductions,
            "normal_forms": self.normal_forms,
        }


class IdealPresentation:
    """An ideal given by generators.  An empty generator list is the zero
    ideal (needed as an elimination result)."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring, gens):
        gens = tuple(gens)
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError("generators must be polynomials")
            if g.ring != ring:
                raise RingMismatch("generator outside the stated ring")
            if g.is_zero:
                raise ValueError("zero polynomial among generators")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", gens)

    def __setattr__(self, *a):
        raise AttributeError("IdealPresentation is immutable")

    @property
    def is_zero_presentation(self):
        return not self.gens

    def __add__(self, other):
        if self.ring != other.ring:
            raise RingMismatch("ideal sum across rings")
        return IdealPresentation(self.ring, self.gens + other.gens)

    def __eq__(self, other):
        return (
            isinstance(other, IdealPresentation)
            and self.ring == other.ring
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        return "IdealPresentation(%d gens over %r)" % (len(self.gens), self.ring.names)


def zero_ideal(ring):
    return IdealPresentation(ring, [])


def principal(f):
    return IdealPresentation(f.ring, [f])


class ReducedGroebnerBasis:
    """The unique reduced basis of an ideal under an order.

    Elements are monic, no monomial of any element is divisible by another
    element's leading monomial, and the basis is sorted ascending by
    leading monomial.
    """

    __slots__ = ("ring", "order", "basis", "_terms", "_code", "_aux")

    def __init__(self, ring, order, basis, _terms=None):
        code, aux = order.kernel_code()
        if _terms is None:
            _terms = [f.sorted_terms(order) for f in basis]
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "_terms", _terms)
        object.__setattr__(self, "_code", code)
        object.__setattr__(self, "_aux", aux)

    def __setattr__(self, *a):
        raise AttributeError("ReducedGroebnerBasis is immutable")

    @property
    def is_zero(self):
        return not self.basis

    @property
    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant

    def leading_exponents(self):
        return [t[0][0] for t in self._terms]

    def initial_monomial_ideal(self):
        return MonomialIdealValue(self.ring, self.leading_exponents())

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, ReducedGroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.basis == other.basis
        )

    def __repr__(self):
        return "ReducedGroebnerBasis(%d elements)" % len(self.basis)


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def _monic(terms):
    lc = terms[0][1]
    if lc == 1:
        return terms
    inv = Fraction(1) / lc if not isinstance(lc, Fraction) else 1 / lc
    return _core.scale_terms(terms, inv)


def normal_form(f, G, order=None, counters=None):
    """Remainder of f on division by the list G (or a reduced basis).

    f - result lies in the ideal generated by G and no monomial of the
    result is divisible by any leading monomial of G; divisors are tried
    in list order.
    """
    if isinstance(G, ReducedGroebnerBasis):
        order = G.order
        gterms = G._terms
        ring = G.ring
    else:
        if order is None:
            order = _GREVLEX
        ring = f.ring
        for g in G:
            if g.ring != ring:
                raise RingMismatch("divisor outside the polynomial's ring")
        gterms = [g.sorted_terms(order) for g in G if not g.is_zero]
    if f.ring != ring:
        raise RingMismatch("polynomial outside the basis ring")
    if counters is not None:
        counters.normal_forms += 1
    code, aux = order.kernel_code()
    if not gterms:
        return f
    rem = _core.normal_form_terms(f.sorted_terms(order), gterms, code, aux)
    return Polynomial(ring, rem)


def member(f, G, counters=None):
    """Ideal membership through the reduced basis: normal form is zero."""
    return normal_form(f, G, counters=counters).is_zero


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def buchberger(ideal, order=None, max_steps=None, counters=None):
    """Reduced Groebner basis of an ideal under ``order``.

    Pair selection: minimal lcm total degree, then smallest pair index
    (normal strategy).  Both classical criteria (coprime leading monomials
    and the chain criterion) prune pairs.  Every intermediate polynomial is
    made monic after reduction.  Raises StepLimitExceeded after
    ``max_steps`` S-pair reductions rather than guessing at feasibility.
    """
    if order is None:
        order = _GREVLEX
    if isinstance(ideal, IdealPresentation):
        ring = ideal.ring
        gens = ideal.gens
    else:
        gens = tuple(ideal)
        if not gens:
            raise ValueError("need an IdealPresentation or nonempty generator list")
        ring = gens[0].ring
    if max_steps is None:
        max_steps = DEFAULT_MAX_STEPS
    if counters is not None:
        counters.gb_calls += 1
    code, aux = order.kernel_code()

    G = []
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generator outside the stated ring")
        if not g.is_zero:
            G.append(_monic(g.sorted_terms(order)))
    if not G:
        return ReducedGroebnerBasis(ring, order, [], _terms=[])

    lead = [t[0][0] for t in G]
    pending = set()
    for i in range(len(G)):
        for j in range(i):
            pending.add((j, i))

    def lcm_deg(pair):
        m = _core.exp_lcm(lead[pair[0]], lead[pair[1]])
        return sum(m)

    steps = 0
    while pending:
        pair = min(pending, key=lambda p: (lcm_deg(p), p))
        pending.discard(pair)
        i, j = pair
        li, lj = lead[i], lead[j]
        m = _core.exp_lcm(li, lj)
        # Buchberger's first criterion: coprime leading monomials
        if all(a + b == c for a, b, c in zip(li, lj, m)):
            continue
        # chain criterion: some k divides the lcm and both side pairs are done
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _core.exp_divides(lead[k], m):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        steps += 1
        if steps > max_steps:
            raise StepLimitExceeded(
                "pair-reduction budget of %d exhausted" % max_steps
            )
        if counters is not None:
            counters.pair_reductions += 1
        s = _core.mul_term(G[i], Fraction(1), _core.exp_sub(m, li))
        s = _core.sub_scaled(s, Fraction(1), _core.exp_sub(m, lj), G[j], code, aux)
        r = _core.normal_form_terms(s, G, code, aux)
        if r:
            r = _monic(r)
            G.append(r)
            lead.append(r[0][0])
            new = len(G) - 1
            for k in range(new):
                pending.add((k, new))

    # minimal generators of the initial ideal
    keep = []
    for i in range(len(G)):
        li = lead[i]
        redundant = False
        for j in range(len(G)):
            if i == j:
                continue
            if _core.exp_divides(lead[j], li) and (lead[j] != li or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)

    # tail reduction against the other survivors
    reduced = []
    for i in keep:
        others = [G[j] for j in keep if j != i]
        if others:
            r = _core.normal_form_terms(G[i], others, code, aux)
        else:
            r = G[i]
        reduced.append(_monic(r))

    reduced.sort(key=lambda t: _OrderKey(code, aux, t[0][0]))
    basis = [Polynomial(ring, t) for t in reduced]
    return ReducedGroebnerBasis(ring, order, basis, _terms=reduced)


class _OrderKey:
    """Sort adapter comparing exponent vectors under a kernel order code."""

    __slots__ = ("code", "aux", "e")

    def __init__(self, code, aux, e):
        self.code = code
        self.aux = aux
        self.e = e

    def __lt__(self, other):
        return _core.cmp_expvec(self.code, self.aux, self.e, other.e) < 0

    def __eq__(self, other):
        return self.e == other.e


def initial_ideal(G):
    """Monomial ideal of leading monomials; minimal generating set."""
    return G.initial_monomial_ideal()


def same_ideal(A, B, order=None, max_steps=None, counters=None):
    """Mutual membership of two presentations (same ring)."""
    if A.ring != B.ring:
        raise RingMismatch("ideal comparison across rings")
    gb_a = buchberger(A, order, max_steps=max_steps, counters=counters)
    gb_b = buchberger(B, order, max_steps=max_steps, counters=counters)
    return all(member(g, gb_b, counters=counters) for g in A.gens) and all(
        member(g, gb_a, counters=counters) for g in B.gens
    )


# ---------------------------------------------------------------------------
# variable maps
# ---------------------------------------------------------------------------

def map_variables(f, new_ring, positions):
    """Reinterpret f in ``new_ring``; positions[i] is the new index of old
    variable i."""
    terms = []
    for e, c in f.terms:
        ne = [0] * new_ring.n
        for i, x in enumerate(e):
            if x:
                ne[positions[i]] = x
        terms.append((tuple(ne), c))
    return Polynomial(new_ring, terms)


def restrict_variables(f, new_ring, positions):
    """Inverse of map_variables for polynomials supported on the mapped
    variables; positions[i] is the old index of new variable i."""
    back = {old: new for new, old in enumerate(positions)}
    terms = []
    for e, c in f.terms:
        ne = [0] * new_ring.n
        for i, x in enumerate(e):
            if x:
                if i not in back:
                    raise ContractViolation("polynomial not supported on the kept variables")
                ne[back[i]] = x
        terms.append((tuple(ne), c))
    return Polynomial(new_ring, terms)


# ---------------------------------------------------------------------------
# elimination and friends
# ---------------------------------------------------------------------------

def _resolve_vars(ring, variables):
    out = set()
    for v in variables:
        out.add(ring.index(v) if isinstance(v, str) else int(v))
    return out


def eliminate(ideal, keep, max_steps=None, counters=None):
    """Generators of the contraction to the subring on ``keep`` variables,
    returned in the ambient ring.

    Realized with a two-block order: eliminated variables dominant,
    grevlex inside each block.
    """
    ring = ideal.ring
    keep_idx = _resolve_vars(ring, keep)
    drop = [i for i in range(ring.n) if i not in keep_idx]
    if not drop:
        gb = buchberger(ideal, _GREVLEX, max_steps=max_steps, counters=counters)
        return IdealPresentation(ring, gb.basis)
    if len(drop) == ring.n:
        order = _GREVLEX
    else:
        mask = tuple(1 if i in set(drop) else 0 for i in range(ring.n))
        order = MonomialOrder.block(mask)
    gb = buchberger(ideal, order, max_steps=max_steps, counters=counters)
    kept = [g for g in gb.basis if g.support_vars() <= keep_idx]
    return IdealPresentation(ring, kept)


def intersect(I, J, max_steps=None, counters=None, force_general=False):
    """Generators of I ∩ J via ⟨u·I, (1-u)·J⟩ ∩ S with a fresh variable u.

    Monomial inputs short-circuit to pairwise lcms (the two routes are
    cross-checked in the test suite).
    """
    if I.ring != J.ring:
        raise RingMismatch("intersection across rings")
    ring = I.ring
    if I.is_zero_presentation or J.is_zero_presentation:
        return zero_ideal(ring)
    if not force_general and all(f.is_term for f in I.gens) and all(
        f.is_term for f in J.gens
    ):
        gens = []
        for f in I.gens:
            ef = f.terms[0][0]
            for g in J.gens:
                gens.append(_core.exp_lcm(ef, g.terms[0][0]))
        M = MonomialIdealValue(ring, gens)
        return IdealPresentation(ring, [Polynomial.monomial(ring, e) for e in M.gens])
    ring_u = ring.extend(ring.fresh_name("u"))
    positions = list(range(ring.n))
    u = Polynomial.variable(ring_u, ring.n)
    one = Polynomial.one(ring_u)
    gens = [u * map_variables(f, ring_u, positions) for f in I.gens]
    gens += [(one - u) * map_variables(g, ring_u, positions) for g in J.gens]
    big = IdealPresentation(ring_u, gens)
    contracted = eliminate(big, range(ring.n), max_steps=max_steps, counters=counters)
    return IdealPresentation(
        ring, [restrict_variables(g, ring, positions) for g in contracted.gens]
    )


def _exact_quotient(g, f, order, counters=None):
    """g / f when f divides g exactly; raises on inexact division."""
    code, aux = order.kernel_code()
    fterms = f.sorted_terms(order)
    work = g.sorted_terms(order)
    quot = []
    flm, flc = fterms[0]
    while work:
        m, c = work[0]
        if not _core.exp_divides(flm, m):
            raise ContractViolation("inexact division in colon computation")
        q = c / flc
        e = _core.exp_sub(m, flm)
        quot.append((e, q))
        work = _core.sub_scaled(work, q, e, fterms, code, aux)
    return Polynomial(g.ring, quot)


def colon(I, f, max_steps=None, counters=None):
    """(I : f) = {g | g·f ∈ I}, via intersect(I, (f)) and exact division."""
    if f.is_zero:
        raise ValueError("colon by the zero polynomial")
    ring = I.ring
    if f.ring != ring:
        raise RingMismatch("colon divisor outside the ring")
    inter = intersect(I, principal(f), max_steps=max_steps, counters=counters)
    gens = [_exact_quotient(g, f, _GREVLEX, counters) for g in inter.gens]
    gens = [g for g in gens if not g.is_zero]
    return IdealPresentation(ring, gens)


def radical_member(f, I, max_steps=None, counters=None):
    """f ∈ √I via the auxiliary-variable trick: 1 ∈ ⟨I, 1 - u·f⟩."""
    ring = I.ring
    if f.is_zero:
        return True
    if f.ring != ring:
        raise RingMismatch("radical membership across rings")
    ring_u = ring.extend(ring.fresh_name("u"))
    positions = list(range(ring.n))
    u = Polynomial.variable(ring_u, ring.n)
    gens = [map_variables(g, ring_u, positions) for g in I.gens]
    gens.append(Polynomial.one(ring_u) - u * map_variables(f, ring_u, positions))
    gb = buchberger(IdealPresentation(ring_u, gens), _GREVLEX,
                    max_steps=max_steps, counters=counters)
    return gb.is_unit


# ---------------------------------------------------------------------------
# dimension and heights
# ---------------------------------------------------------------------------

def krull_dimension(ideal, order=None, max_steps=None, counters=None):
    """dim S/I computed from the initial ideal: the largest variable subset
    supporting no minimal generator of in(I).

    Total on improper input: the unit ideal reports the -1 sentinel.
    """
    if isinstance(ideal, MonomialIdealValue):
        M = ideal
    elif isinstance(ideal, ReducedGroebnerBasis):
        M = ideal.initial_monomial_ideal()
    else:
        if ideal.is_zero_presentation:
            return ideal.ring.n
        gb = buchberger(ideal, order, max_steps=max_steps, counters=counters)
        if gb.is_unit:
            return -1
        M = gb.initial_monomial_ideal()
    if M.is_unit:
        return -1
    if M.is_zero:
        return M.ring.n
    return M.ring.n - min_cover_size(M.supports())


def height_in_quotient(ambient, J, order=None, max_steps=None, counters=None,
                       check=True, ambient_dim=None):
    """Height of J·(S/ambient) in an equidimensional quotient, as the
    dimension drop dim S/ambient - dim S/(ambient + J).

    ``check`` verifies that J contains the ambient ideal up to radical
    (each ambient generator reduces to zero, with a radical-membership
    fallback); equidimensionality of the ambient is the caller's contract.
    """
    if ambient.ring != J.ring:
        raise RingMismatch("height computation across rings")
    dim_a = krull_dimension(ambient, order, max_steps=max_steps, counters=counters) \
        if ambient_dim is None else ambient_dim
    if dim_a < 0:
        raise ContractViolation("ambient ideal must be proper")
    if check and ambient.gens:
        if J.is_zero_presentation:
            raise ContractViolation(
                "ideal does not contain the ambient ideal up to radical"
            )
        gb_j = buchberger(J, order, max_steps=max_steps, counters=counters)
        for g in ambient.gens:
            if member(g, gb_j, counters=counters):
                continue
            if not radical_member(g, J, max_steps=max_steps, counters=counters):
                raise ContractViolation(
                    "ideal does not contain the ambient ideal up to radical"
                )
    dim_sum = krull_dimension(ambient + J, order, max_steps=max_steps, counters=counters)
    if dim_sum < 0:
        raise ContractViolation("sum with the ambient ideal is the unit ideal")
    return dim_a - dim_sum

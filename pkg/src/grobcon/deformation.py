"""Flat-degeneration machinery and the end-to-end verification pipeline.

Given a reduced basis, a strictly compatible weight vector turns the
initial ideal into the fiber at 0 of a one-parameter family: each basis
element is homogenized with a fresh degree-1 variable t (deg x_i = w_i),
setting t = 0 recovers the initial ideal and t = 1 the original ideal.
``theorem_check`` runs every verification the package makes of this
picture: prime bookkeeping, specialization integrity, non-zero-divisor and
radical parameter checks, component counts and connectedness dimension on
both fibers, pairwise height preservation, dust partitions, and the
partitionwise colon test.
"""

from fractions import Fraction
from math import gcd

from .errors import (
    ContractViolation,
    DeformationIntegrityError,
    GrobconError,
)
from .gamma import (
    PrimeFamily,
    _partitions,
    build_gamma,
    c_from_counts,
    component_count,
    component_partition,
    connectedness_dimension_graphwise,
    make_prime_family,
)
from .groebner import (
    Counters,
    DEFAULT_MAX_STEPS,
    IdealPresentation,
    buchberger,
    colon,
    initial_ideal,
    krull_dimension,
    member,
    radical_member,
    same_ideal,
)
from .ioformats import poly_to_string
from .lyubeznik import lyubeznik_triple
from .monomials import (
    MonomialIdealValue,
    VariablePrime,
    is_equidimensional_monomial,
    is_squarefree,
    minimal_primes_squarefree,
    radical_monomial,
)
from .polyring import MonomialOrder, Polynomial, weight_degree

_GREVLEX = MonomialOrder.grevlex()

TOR_PARTITION_MAX_PRIMES = 12


class WeightVector:
    """Strictly positive integer weights compatible with a reduced basis."""

    __slots__ = ("w",)

    def __init__(self, w):
        w = tuple(int(x) for x in w)
        if not w or any(x <= 0 for x in w):
            raise ValueError("weights must be positive integers")
        object.__setattr__(self, "w", w)

    def __setattr__(self, *a):
        raise AttributeError("WeightVector is immutable")

    def __eq__(self, other):
        return isinstance(other, WeightVector) and self.w == other.w

    def __repr__(self):
        return "WeightVector(%r)" % (list(self.w),)


class HomogenizedIdeal:
    """Generators inside the extended ring, with t the last variable."""

    __slots__ = ("ring", "base_ring", "gens", "w", "t_index")

    def __init__(self, ring, base_ring, gens, w):
        self.ring = ring
        self.base_ring = base_ring
        self.gens = tuple(gens)
        self.w = w
        self.t_index = base_ring.n

    @property
    def t_name(self):
        return self.ring.names[-1]

    def ideal(self):
        return IdealPresentation(self.ring, self.gens)

    def t_polynomial(self):
        return Polynomial.variable(self.ring, self.t_index)


class DustRecord:
    """Minimal primes of the 0-fiber lying over one minimal prime, when the
    weight order exposes them (single-term initial forms)."""

    __slots__ = ("prime_index", "available", "primes")

    def __init__(self, prime_index, available, primes=None):
        self.prime_index = prime_index
        self.available = available
        self.primes = tuple(primes) if primes is not None else None

    def as_dict(self, ring):
        return {
            "prime": self.prime_index,
            "available": self.available,
            "primes": None if self.primes is None
            else [p.names(ring) for p in self.primes],
        }


# ---------------------------------------------------------------------------
# weight vectors by exact Fourier-Motzkin elimination
# ---------------------------------------------------------------------------

def _normalize_row(row):
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    if g > 1:
        row = tuple(x // g for x in row)
    return tuple(row)


def _fm_positive_vector(diffs, n):
    """A strictly positive rational point of {w : d·w > 0 for all d}, found
    by eliminating variables last-to-first, or None when infeasible."""
    rows = set()
    for d in diffs:
        rows.add(_normalize_row(d))
    for i in range(n):
        unit = [0] * n
        unit[i] = 1
        rows.add(tuple(unit))
    levels = [None] * n
    current = list(rows)
    for k in range(n - 1, 0, -1):
        levels[k] = current
        pos = [r for r in current if r[k] > 0]
        neg = [r for r in current if r[k] < 0]
        carried = {r[:k] for r in current if r[k] == 0}
        for p in pos:
            for q in neg:
                comb = tuple(p[i] * (-q[k]) + q[i] * p[k] for i in range(k))
                if not any(comb):
                    return None
                carried.add(_normalize_row(comb))
        current = list(carried)
    levels[0] = current
    for r in levels[0]:
        if r[0] <= 0:
            return None
    w = [None] * n
    w[0] = Fraction(1)
    for k in range(1, n):
        low = Fraction(0)
        high = None
        for r in levels[k]:
            ck = r[k]
            if ck == 0:
                continue
            partial = sum(Fraction(r[i]) * w[i] for i in range(k))
            bound = -partial / ck
            if ck > 0:
                if bound > low:
                    low = bound
            else:
                if high is None or bound < high:
                    high = bound
        if high is None:
            w[k] = low + 1
        else:
            if not (low < high):
                return None
            w[k] = (low + high) / 2
    return w


def weight_vector(G, counters=None):
    """A weight vector reproducing the leading terms of a reduced basis:
    w·(leading exponent) strictly exceeds w·(any trailing exponent).

    Found by exact rational Fourier-Motzkin feasibility, scaled to
    positive integers, and re-verified before returning.  A monomial basis
    yields all-ones.
    """
    if G.is_zero:
        raise ContractViolation("weight vector needs a nonzero basis")
    n = G.ring.n
    diffs = []
    for terms in G._terms:
        lead = terms[0][0]
        for e, _ in terms[1:]:
            diffs.append(tuple(lead[i] - e[i] for i in range(n)))
    if not diffs:
        return WeightVector((1,) * n)
    sol = _fm_positive_vector(diffs, n)
    if sol is None:
        raise GrobconError(
            "no compatible weight vector exists for this basis; "
            "this cannot happen for a reduced basis and signals a bug"
        )
    denom = 1
    for x in sol:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    w = [int(x * denom) for x in sol]
    g = 0
    for x in w:
        g = gcd(g, x)
    if g > 1:
        w = [x // g for x in w]
    wv = WeightVector(w)
    if not _weight_is_strict(G, wv):
        raise GrobconError(
            "weight vector fails a strict inequality; "
            "this cannot happen for a reduced basis and signals a bug"
        )
    return wv


def _weight_is_strict(G, wv):
    for terms in G._terms:
        lead = terms[0][0]
        dl = weight_degree(wv.w, lead)
        for e, _ in terms[1:]:
            if weight_degree(wv.w, e) >= dl:
                return False
    return True


# ---------------------------------------------------------------------------
# homogenization and specializations
# ---------------------------------------------------------------------------

def homogenize_polynomials(polys, w, t_name=None):
    """Homogenize each polynomial with a fresh degree-1 variable t, giving
    x_i degree w_i.  Generates the full one-parameter family ideal only
    when fed a basis computed under an order refining w.
    """
    if not polys:
        raise ValueError("nothing to homogenize")
    if isinstance(w, WeightVector):
        w = w.w
    ring = polys[0].ring
    ring_t = ring.extend(ring.fresh_name(t_name or "t"))
    out = []
    for f in polys:
        if f.is_zero:
            continue
        d = max(weight_degree(w, e) for e, _ in f.terms)
        terms = [(e + (d - weight_degree(w, e),), c) for e, c in f.terms]
        out.append(Polynomial(ring_t, terms))
    return HomogenizedIdeal(ring_t, ring, out, WeightVector(w))


def homogenize(G, w, t_name=None):
    """Homogenize a reduced basis after checking that ``w`` strictly
    separates each element's leading term from its trailing terms.

    Only a reduced basis may be homogenized here: homogenizing a raw
    generating set can produce a strictly smaller family ideal whose
    parameter is a zero divisor.
    """
    wv = w if isinstance(w, WeightVector) else WeightVector(w)
    if not _weight_is_strict(G, wv):
        raise ContractViolation(
            "weight vector does not strictly separate the leading terms of "
            "this basis"
        )
    return homogenize_polynomials(list(G.basis), wv, t_name=t_name)


def specialize(H, at):
    """Fiber of the family: at=0 keeps the t-free terms (the initial
    forms); at=1 substitutes t = 1.  Returns an ideal in the base ring."""
    if at not in (0, 1):
        raise ValueError("specialization point must be 0 or 1")
    gens = []
    for f in H.gens:
        if at == 1:
            terms = [(e[:-1], c) for e, c in f.terms]
        else:
            terms = [(e[:-1], c) for e, c in f.terms if e[-1] == 0]
        g = Polynomial(H.base_ring, terms)
        if not g.is_zero:
            gens.append(g)
    return IdealPresentation(H.base_ring, gens)


def verify_specializations(H, G, max_steps=None, counters=None):
    """Deformation integrity: the 0-fiber equals the initial ideal and the
    1-fiber equals the original ideal, both by mutual membership."""
    ring = H.base_ring
    fiber0 = specialize(H, 0)
    fiber1 = specialize(H, 1)
    Min = initial_ideal(G)
    in_presentation = IdealPresentation(
        ring, [Polynomial.monomial(ring, e) for e in Min.gens]
    )
    if not same_ideal(fiber0, in_presentation, max_steps=max_steps, counters=counters):
        raise DeformationIntegrityError(
            "0-fiber differs from the initial ideal; homogenization is broken"
        )
    original = IdealPresentation(ring, G.basis)
    if not same_ideal(fiber1, original, max_steps=max_steps, counters=counters):
        raise DeformationIntegrityError(
            "1-fiber differs from the original ideal; homogenization is broken"
        )


def parameter_checks(H, max_steps=None, counters=None):
    """(nzd, radical): t is a non-zero-divisor modulo the family ideal
    ((ideal : t) = ideal by mutual membership), and (t) is radical there
    (the 0-fiber is a square-free monomial ideal)."""
    ideal_H = H.ideal()
    quotient = colon(ideal_H, H.t_polynomial(), max_steps=max_steps, counters=counters)
    nzd = same_ideal(quotient, ideal_H, max_steps=max_steps, counters=counters)
    fiber0 = specialize(H, 0)
    radical = all(g.is_term for g in fiber0.gens) and is_squarefree(
        MonomialIdealValue(H.base_ring, [g.terms[0][0] for g in fiber0.gens])
    )
    return nzd, radical


def dust(H, p, order_tie=None, prime_index=-1, max_steps=None, counters=None):
    """Minimal primes of the 0-fiber containing the image of ``p``.

    Computes the reduced basis of p under (weight w, tie); when every
    element's weight-initial form is a single term, the initial forms span
    a monomial ideal whose minimal primes (of its radical) are the dust.
    Multi-term initial forms make the dust Unavailable -- a value, not an
    error.
    """
    tie = order_tie or _GREVLEX
    wo = MonomialOrder.weight(H.w.w, tie=tie)
    gb = buchberger(p, wo, max_steps=max_steps, counters=counters)
    initials = []
    for terms in gb._terms:
        lead = terms[0][0]
        dl = weight_degree(H.w.w, lead)
        if any(weight_degree(H.w.w, e) == dl for e, _ in terms[1:]):
            return DustRecord(prime_index, False)
        initials.append(lead)
    M = radical_monomial(MonomialIdealValue(H.base_ring, initials))
    return DustRecord(prime_index, True, minimal_primes_squarefree(M))


# ---------------------------------------------------------------------------
# the end-to-end check
# ---------------------------------------------------------------------------

_FOOTER = (
    "heights and counts are computed in the graded polynomial model at the "
    "irrelevant maximal ideal",
    "no residue-field separability hypothesis is checked; the equalities "
    "are asserted unconditionally",
    "count verdicts cover levels 1..dim-1; levels outside that range are "
    "reported informationally only",
)


class DeformationReport:
    """Self-contained record of one verification run."""

    def __init__(self, entry_id, assume_absolutely_prime):
        self.entry_id = entry_id
        self.assume_absolutely_prime = assume_absolutely_prime
        self.status = "rejected"
        self.squarefree = None
        self.equidimensional = None
        self.quotient_dim = None
        self.weight = None
        self.initial_generators = []
        self.primes_ring = []
        self.primes_initial = []
        self.counts_ring = {}
        self.counts_initial = {}
        self.counts_homogenized = {}
        self.c_ring = None
        self.c_initial = None
        self.c_homogenized = None
        self.c_compared = {}
        self.height_pairs = []
        self.nzd_check = None
        self.radical_check = None
        self.dust = []
        self.verdicts = {}
        self.caveats = list(_FOOTER)
        self.diagnostics = []
        self.lyubeznik = None

    def as_dict(self):
        return {
            "entry": self.entry_id,
            "status": self.status,
            "assume_absolutely_prime": self.assume_absolutely_prime,
            "squarefree": self.squarefree,
            "equidimensional": self.equidimensional,
            "quotient_dim": self.quotient_dim,
            "weight": self.weight,
            "initial_generators": self.initial_generators,
            "primes_ring": self.primes_ring,
            "primes_initial": self.primes_initial,
            "counts": {
                "ring": {str(t): c for t, c in self.counts_ring.items()},
                "initial": {str(t): c for t, c in self.counts_initial.items()},
                "homogenized": {str(t): c for t, c in self.counts_homogenized.items()},
            },
            "connectedness_dim": {
                "ring": self.c_ring,
                "initial": self.c_initial,
                "homogenized": self.c_homogenized,
                "compared": self.c_compared,
            },
            "height_pairs": self.height_pairs,
            "checks": {"t_nonzerodivisor": self.nzd_check, "t_radical": self.radical_check},
            "dust": self.dust,
            "verdicts": self.verdicts,
            "caveats": self.caveats,
            "diagnostics": self.diagnostics,
            "lyubeznik": self.lyubeznik,
        }


def _verdict(ok):
    return "pass" if ok else "fail"


def _as_monomial_family(ideal, primes, ring):
    """Convert to the combinatorial fast path when everything is monomial."""
    if not all(g.is_term for g in ideal.gens):
        return None
    vps = []
    for p in primes:
        vs = []
        for g in p.gens:
            e = g.terms[0][0]
            if sum(e) != 1 or g.terms[0][1] != 1:
                return None
            vs.append(e.index(1))
        vps.append(VariablePrime(vs))
    M = MonomialIdealValue(ring, [g.terms[0][0] for g in ideal.gens])
    return M, vps


def theorem_check(entry, max_steps=None, counters=None):
    """Run the full verification pipeline on one corpus entry.

    Returns a DeformationReport with status 'pass', 'fail',
    'not_applicable' (initial ideal not square-free -- hypotheses unmet,
    not a failure), or 'rejected' (declared data failed verification).
    """
    counters = counters if counters is not None else Counters()
    if max_steps is None:
        max_steps = entry.limits.get("max_steps", DEFAULT_MAX_STEPS)
    ring = entry.ring
    order = entry.order
    rep = DeformationReport(entry.id, entry.assume_absolutely_prime)

    I = IdealPresentation(ring, entry.ideal)
    G = buchberger(I, order, max_steps=max_steps, counters=counters)
    if G.is_unit:
        rep.diagnostics.append("the ideal is the unit ideal")
        return rep
    Min = initial_ideal(G)
    rep.initial_generators = [
        poly_to_string(Polynomial.monomial(ring, e)) for e in Min.gens
    ]
    rep.squarefree = is_squarefree(Min)
    d = krull_dimension(Min)
    rep.quotient_dim = d

    # ring-side prime family (declared, or computed for monomial input)
    try:
        if entry.declared_min_primes is not None:
            primes_ring = [IdealPresentation(ring, gens) for gens in entry.declared_min_primes]
            F_ring = make_prime_family(I, primes_ring, order=order, declared=True,
                                       max_steps=max_steps, counters=counters)
        else:
            vps = minimal_primes_squarefree(radical_monomial(Min))
            F_ring = make_prime_family(Min, vps, order=order, declared=False,
                                       max_steps=max_steps, counters=counters)
    except ContractViolation as e:
        rep.status = "rejected"
        rep.diagnostics.append(str(e))
        return rep
    rep.primes_ring = _prime_labels(F_ring)

    # completeness of a declared family: its intersection must lie in the
    # radical of the ideal (the other containment was checked per prime)
    if entry.declared_min_primes is not None:
        inter = F_ring.intersection_of(range(len(F_ring)))
        for g in inter.gens:
            if member(g, G, counters=counters):
                continue
            if not radical_member(g, I, max_steps=max_steps, counters=counters):
                rep.status = "rejected"
                rep.diagnostics.append(
                    "declared primes do not intersect inside the radical: "
                    "%s is missing" % poly_to_string(g)
                )
                return rep

    # deformation scaffolding (all entries, square-free or not)
    w = weight_vector(G, counters=counters)
    rep.weight = list(w.w)
    H = homogenize(G, w)
    verify_specializations(H, G, max_steps=max_steps, counters=counters)
    nzd, radical = parameter_checks(H, max_steps=max_steps, counters=counters)
    rep.nzd_check = nzd
    rep.radical_check = radical

    rep.counts_ring = {t: component_count(build_gamma(F_ring, t)) for t in range(d + 1)}
    rep.c_ring = connectedness_dimension_graphwise(F_ring)

    if not rep.squarefree:
        rep.status = "not_applicable"
        rep.equidimensional = True  # ring side only; verified by the family
        rep.diagnostics.append(
            "initial ideal is not square-free; deformation comparisons do not apply"
        )
        return rep

    # initial-side family
    try:
        if not is_equidimensional_monomial(Min):
            raise ContractViolation("initial ideal is not equidimensional")
        vps_in = minimal_primes_squarefree(Min)
        F_in = make_prime_family(Min, vps_in, declared=False,
                                 max_steps=max_steps, counters=counters)
    except ContractViolation as e:
        rep.status = "rejected"
        rep.diagnostics.append(str(e))
        return rep
    rep.equidimensional = True
    rep.primes_initial = [p.names(ring) for p in F_in.primes]

    rep.counts_initial = {t: component_count(build_gamma(F_in, t)) for t in range(d + 1)}
    rep.c_initial = connectedness_dimension_graphwise(F_in)

    rep.verdicts["t_nonzerodivisor"] = _verdict(nzd)
    rep.verdicts["t_radical"] = _verdict(radical)

    lo, hi = 1, d - 1
    rep.verdicts["component_counts"] = _verdict(
        all(rep.counts_ring[t] == rep.counts_initial[t] for t in range(lo, hi + 1))
    )
    c_cmp_ring = c_from_counts(rep.counts_ring, d)
    c_cmp_in = c_from_counts(rep.counts_initial, d)
    rep.c_compared = {"ring": c_cmp_ring, "initial": c_cmp_in}
    rep.verdicts["connectedness_dimension"] = _verdict(c_cmp_ring == c_cmp_in)
    if rep.c_ring != c_cmp_ring:
        rep.caveats.append(
            "single minimal prime on the ring side: the level-0 convention gives "
            "c=%d; the comparison uses levels >= 1 (c=%d)" % (rep.c_ring, c_cmp_ring)
        )

    # homogenized family, index-aligned with the ring side
    tie = order if order.kind in ("lex", "grevlex") else order.tie
    wo = MonomialOrder.weight(w.w, tie=tie)
    ideal_T = H.ideal()
    primes_T = []
    for i in range(len(F_ring)):
        gb_p = buchberger(F_ring.prime_ideal(i), wo, max_steps=max_steps, counters=counters)
        Hp = homogenize_polynomials(list(gb_p.basis), w, t_name=H.t_name)
        primes_T.append(IdealPresentation(H.ring, Hp.gens))
    fast = _as_monomial_family(ideal_T, primes_T, H.ring)
    if fast is not None:
        F_hom = make_prime_family(fast[0], fast[1], declared=False, sort=False,
                                  max_steps=max_steps, counters=counters)
    else:
        F_hom = make_prime_family(ideal_T, primes_T, declared=False, sort=False,
                                  max_steps=max_steps, counters=counters)
    if F_hom.quotient_dim != d + 1:
        raise DeformationIntegrityError(
            "homogenized quotient dimension %d, expected %d"
            % (F_hom.quotient_dim, d + 1)
        )

    ell = len(F_ring)
    heights_ok = True
    for i in range(ell):
        for j in range(i + 1, ell):
            hr = F_ring.height(i, j)
            hh = F_hom.height(i, j)
            rep.height_pairs.append(
                {"i": i, "j": j, "ring": hr, "homogenized": hh}
            )
            heights_ok = heights_ok and hr == hh
    rep.verdicts["height_pairs"] = _verdict(heights_ok)

    rep.counts_homogenized = {
        t: component_count(build_gamma(F_hom, t)) for t in range(d + 2)
    }
    rep.c_homogenized = connectedness_dimension_graphwise(F_hom)
    rep.verdicts["graded_component_counts"] = _verdict(
        all(rep.counts_homogenized[t] == rep.counts_initial[t] for t in range(1, d))
    )
    c_cmp_hom = c_from_counts(rep.counts_homogenized, d + 1)
    rep.c_compared["homogenized"] = c_cmp_hom
    rep.verdicts["graded_connectedness_dimension"] = _verdict(c_cmp_hom == c_cmp_in + 1)

    # dust
    dust_records = []
    for i in range(ell):
        dust_records.append(
            dust(H, F_ring.prime_ideal(i), order_tie=tie, prime_index=i,
                 max_steps=max_steps, counters=counters)
        )
    rep.dust = [r.as_dict(ring) for r in dust_records]
    if all(r.available for r in dust_records):
        union = set()
        for r in dust_records:
            union.update(r.primes)
        rep.verdicts["dust_union"] = _verdict(union == set(F_in.primes))
        disjoint = True
        for t in range(lo, hi + 1):
            comps = component_partition(build_gamma(F_ring, t))
            seen = []
            for comp in comps:
                block = set()
                for i in comp:
                    block.update(dust_records[i].primes)
                seen.append(block)
            for a in range(len(seen)):
                for b in range(a + 1, len(seen)):
                    if seen[a] & seen[b]:
                        disjoint = False
        rep.verdicts["dust_disjoint"] = _verdict(disjoint)
    else:
        rep.caveats.append(
            "dust unavailable for primes %s; dust checks skipped"
            % sorted(r.prime_index for r in dust_records if not r.available)
        )

    # partitionwise colon test for the parameter
    if ell > TOR_PARTITION_MAX_PRIMES:
        rep.caveats.append(
            "partitionwise colon test skipped: %d primes exceed the %d bound"
            % (ell, TOR_PARTITION_MAX_PRIMES)
        )
    else:
        tor_ok = True
        for left, right in _partitions(ell):
            QA = _homogenized_intersection(F_ring, left, wo, w, H.t_name,
                                           max_steps, counters)
            QB = _homogenized_intersection(F_ring, right, wo, w, H.t_name,
                                           max_steps, counters)
            Q = IdealPresentation(H.ring, QA.gens + QB.gens)
            quotient = colon(Q, H.t_polynomial(), max_steps=max_steps, counters=counters)
            if not same_ideal(quotient, Q, max_steps=max_steps, counters=counters):
                tor_ok = False
                break
        rep.verdicts["parameter_colon_partitions"] = _verdict(tor_ok)

    # graph-expressible projective invariants
    if d >= 2:
        tri_ring = lyubeznik_triple(F_ring, counts=rep.counts_ring)
        tri_in = lyubeznik_triple(F_in, counts=rep.counts_initial)
        equal = {
            "lambda_0_1": tri_ring.lambda01 == tri_in.lambda01,
            "lambda_1_2": tri_ring.lambda12 == tri_in.lambda12,
            "lambda_top": tri_ring.lambda_top == tri_in.lambda_top,
        }
        rep.lyubeznik = {
            "ring": tri_ring.as_dict(),
            "initial": tri_in.as_dict(),
            "equal": equal,
        }
        rep.verdicts["lyubeznik_numbers"] = _verdict(all(equal.values()))
    else:
        rep.caveats.append(
            "quotient dimension %d < 2: projective invariants unsupported" % d
        )

    rep.status = "pass" if all(v == "pass" for v in rep.verdicts.values()) else "fail"
    return rep


def _prime_labels(family):
    out = []
    for p in family.primes:
        if isinstance(p, VariablePrime):
            out.append(p.names(family.ring))
        else:
            out.append([poly_to_string(g) for g in p.gens])
    return out


def ring_prime_family(entry, max_steps=None, counters=None):
    """The verified minimal-prime family of the entry's quotient ring:
    declared primes when present, cover-computed for monomial input."""
    ring = entry.ring
    if max_steps is None:
        max_steps = entry.limits.get("max_steps", DEFAULT_MAX_STEPS)
    if entry.declared_min_primes is not None:
        I = IdealPresentation(ring, entry.ideal)
        primes = [IdealPresentation(ring, gens) for gens in entry.declared_min_primes]
        return make_prime_family(I, primes, order=entry.order, declared=True,
                                 max_steps=max_steps, counters=counters)
    M = MonomialIdealValue(ring, [g.terms[0][0] for g in entry.ideal])
    vps = minimal_primes_squarefree(radical_monomial(M))
    return make_prime_family(M, vps, declared=False,
                             max_steps=max_steps, counters=counters)


def _homogenized_intersection(family, indices, wo, w, t_name, max_steps, counters):
    """Homogenization of the intersection of the selected primes, computed
    from its reduced basis under the weight order."""
    inter = family.intersection_of(indices)
    gb = buchberger(inter, wo, max_steps=max_steps, counters=counters)
    return homogenize_polynomials(list(gb.basis), w, t_name=t_name)

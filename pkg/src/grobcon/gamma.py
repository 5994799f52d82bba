"""Connectedness graphs over a family of minimal primes.

The level-t graph has the minimal primes as vertices and an edge between
two primes when the height of their sum, measured inside the quotient by
the ambient ideal, is at most t.  Heights are always dimension differences
in the quotient, never ambient-ring codimensions.  Two independent oracles
(exhaustive partition connectivity, and the direct partition minimum for
the connectedness dimension) cross-check the graph route.
"""

from .errors import ContractViolation, OracleSizeError, RingMismatch
from .groebner import (
    IdealPresentation,
    buchberger,
    height_in_quotient,
    intersect,
    krull_dimension,
    member,
    radical_member,
)
from .ioformats import poly_to_string
from .monomials import (
    MonomialIdealValue,
    VariablePrime,
    dimension_modulo_vars,
    monomial_dimension,
    sum_monomial,
)
from .polyring import MonomialOrder

_GREVLEX = MonomialOrder.grevlex()

ORACLE_MAX_PRIMES = 15


class PrimeRecord:
    """Verification status for one declared/computed minimal prime."""

    __slots__ = ("contains_ambient", "radical_checked", "declared_prime")

    def __init__(self, contains_ambient, radical_checked, declared_prime):
        self.contains_ambient = contains_ambient
        self.radical_checked = radical_checked
        self.declared_prime = declared_prime

    def as_dict(self):
        return {
            "contains_ambient": self.contains_ambient,
            "radical_checked": self.radical_checked,
            "declared_prime": self.declared_prime,
        }


class PrimeFamily:
    """A quotient ring's minimal primes with verified bookkeeping.

    Primes are sorted canonically by their generator lists, so vertex
    numbering (and every downstream report) is reproducible.  When the
    ambient ideal is monomial and every prime is variable-generated, all
    heights come from cover combinatorics; otherwise from Groebner
    dimension computations.
    """

    def __init__(self, ring, ambient, primes, records, quotient_dim,
                 order=None, max_steps=None, counters=None):
        self.ring = ring
        self.ambient = ambient
        self.primes = tuple(primes)
        self.records = tuple(records)
        self.quotient_dim = quotient_dim
        self.order = order or _GREVLEX
        self.max_steps = max_steps
        self.counters = counters
        self._heights = {}
        self._ambient_presentation = None

    @property
    def monomial_path(self):
        return isinstance(self.ambient, MonomialIdealValue)

    def __len__(self):
        return len(self.primes)

    def labels(self):
        out = []
        for p in self.primes:
            if isinstance(p, VariablePrime):
                out.append("(%s)" % ", ".join(p.names(self.ring)))
            else:
                out.append("(%s)" % ", ".join(poly_to_string(g) for g in p.gens))
        return out

    def _ambient_ideal(self):
        if self._ambient_presentation is None:
            if self.monomial_path:
                from .polyring import Polynomial

                self._ambient_presentation = IdealPresentation(
                    self.ring,
                    [Polynomial.monomial(self.ring, e) for e in self.ambient.gens],
                )
            else:
                self._ambient_presentation = self.ambient
        return self._ambient_presentation

    def prime_ideal(self, i):
        p = self.primes[i]
        if isinstance(p, VariablePrime):
            return p.as_ideal(self.ring)
        return p

    def height(self, i, j):
        """ht(p_i + p_j) in the quotient, cached."""
        if i == j:
            return 0
        key = (min(i, j), max(i, j))
        if key not in self._heights:
            self._heights[key] = self._pair_height(*key)
        return self._heights[key]

    def _pair_height(self, i, j):
        if self.monomial_path:
            union = set(self.primes[i].vars) | set(self.primes[j].vars)
            return self.quotient_dim - dimension_modulo_vars(self.ambient, union)
        J = self.prime_ideal(i) + self.prime_ideal(j)
        return height_in_quotient(
            self._ambient_ideal(), J, self.order,
            max_steps=self.max_steps, counters=self.counters,
            check=False, ambient_dim=self.quotient_dim,
        )

    def all_heights(self):
        ell = len(self.primes)
        return {
            (i, j): self.height(i, j) for i in range(ell) for j in range(i + 1, ell)
        }

    def intersection_of(self, indices):
        """Intersection of the selected primes (monomial fast path when
        possible), as an IdealPresentation."""
        indices = sorted(indices)
        if self.monomial_path:
            from .polyring import Polynomial

            M = self.primes[indices[0]].as_monomial_ideal(self.ring)
            from .monomials import intersect_monomial

            for k in indices[1:]:
                M = intersect_monomial(M, self.primes[k].as_monomial_ideal(self.ring))
            return IdealPresentation(
                self.ring, [Polynomial.monomial(self.ring, e) for e in M.gens]
            )
        acc = self.prime_ideal(indices[0])
        for k in indices[1:]:
            acc = intersect(acc, self.prime_ideal(k),
                            max_steps=self.max_steps, counters=self.counters)
        return acc


def make_prime_family(ambient, primes, order=None, declared=True, check=True,
                      max_steps=None, counters=None, sort=True):
    """Build and verify a PrimeFamily.

    ``ambient`` is an IdealPresentation or MonomialIdealValue; primes are
    VariablePrime or IdealPresentation values.  Verification: every prime
    contains the ambient ideal up to radical, and all quotient dimensions
    agree (equidimensionality).  Raises ContractViolation with a specific
    message when a check fails.  ``sort=False`` keeps the caller's prime
    order (used to keep a derived family index-aligned with its source).
    """
    order = order or _GREVLEX
    if isinstance(ambient, MonomialIdealValue):
        ring = ambient.ring
    else:
        ring = ambient.ring
    primes = list(primes)
    if not primes:
        raise ContractViolation("a prime family needs at least one prime")

    monomial_path = isinstance(ambient, MonomialIdealValue) and all(
        isinstance(p, VariablePrime) for p in primes
    )

    if monomial_path:
        if ambient.is_unit:
            raise ContractViolation("ambient ideal must be proper")
        if sort:
            primes.sort(key=lambda p: p.vars)
        qdim = monomial_dimension(ambient)
        records = []
        for p in primes:
            vs = set(p.vars)
            contains = all(s & vs for s in ambient.supports())
            if check and not contains:
                raise ContractViolation(
                    "prime (%s) does not contain the ambient ideal"
                    % ", ".join(p.names(ring))
                )
            pdim = ring.n - len(p.vars)
            if check and pdim != qdim:
                raise ContractViolation(
                    "prime (%s) has quotient dimension %d, ambient has %d"
                    % (", ".join(p.names(ring)), pdim, qdim)
                )
            records.append(PrimeRecord(contains, True, declared))
        return PrimeFamily(ring, ambient, primes, records, qdim,
                           order=order, max_steps=max_steps, counters=counters)

    # general path: normalize primes to IdealPresentations
    normalized = []
    for p in primes:
        if isinstance(p, VariablePrime):
            normalized.append(p.as_ideal(ring))
        else:
            if p.ring != ring:
                raise RingMismatch("prime outside the ambient ring")
            normalized.append(p)
    if sort:
        normalized.sort(key=lambda p: tuple(sorted(poly_to_string(g) for g in p.gens)))

    qdim = krull_dimension(ambient, order, max_steps=max_steps, counters=counters)
    if qdim < 0:
        raise ContractViolation("ambient ideal must be proper")
    records = []
    for p in normalized:
        label = ", ".join(poly_to_string(g) for g in p.gens)
        contains = True
        if check:
            gb_p = buchberger(p, order, max_steps=max_steps, counters=counters)
            for g in ambient.gens:
                if member(g, gb_p, counters=counters):
                    continue
                if not radical_member(g, p, max_steps=max_steps, counters=counters):
                    contains = False
                    break
            if not contains:
                raise ContractViolation(
                    "prime (%s) does not contain the ambient ideal up to radical" % label
                )
            pdim = krull_dimension(p, order, max_steps=max_steps, counters=counters)
            if pdim != qdim:
                raise ContractViolation(
                    "prime (%s) has quotient dimension %d, ambient has %d"
                    % (label, pdim, qdim)
                )
        records.append(PrimeRecord(contains, check, declared))
    return PrimeFamily(ring, ambient, normalized, records, qdim,
                       order=order, max_steps=max_steps, counters=counters)


# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------

class GammaGraph:
    """Connectedness graph at one level t."""

    __slots__ = ("t", "vertices", "edges", "heights")

    def __init__(self, t, vertices, edges, heights):
        self.t = t
        self.vertices = tuple(vertices)
        self.edges = frozenset(edges)
        self.heights = dict(heights)

    def height(self, i, j):
        if i == j:
            return 0
        return self.heights[(min(i, j), max(i, j))]

    def __repr__(self):
        return "GammaGraph(t=%d, %d vertices, %d edges)" % (
            self.t, len(self.vertices), len(self.edges))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            if rj < ri:
                ri, rj = rj, ri
            self.parent[rj] = ri


def build_gamma(family, t):
    """The level-t graph: edge (i, j) iff ht(p_i + p_j) <= t in the quotient."""
    if not (0 <= t <= family.quotient_dim):
        raise ContractViolation(
            "level %d outside [0, %d]" % (t, family.quotient_dim)
        )
    heights = family.all_heights()
    edges = {key for key, h in heights.items() if h <= t}
    return GammaGraph(t, range(len(family)), edges, heights)


def component_partition(graph):
    """Connected components as sorted index lists, sorted by representative."""
    uf = _UnionFind(len(graph.vertices))
    for i, j in graph.edges:
        uf.union(i, j)
    comps = {}
    for v in graph.vertices:
        comps.setdefault(uf.find(v), []).append(v)
    return [sorted(c) for _, c in sorted(comps.items())]


def component_count(graph):
    return len(component_partition(graph))


def connectedness_dimension_graphwise(family):
    """d - (smallest t in [0, d] with a connected level graph).

    The level-0 graph is connected exactly for a single prime, so one
    prime yields d.  Returns -1 if no level is connected (cannot happen
    for graded families; kept total for safety).
    """
    d = family.quotient_dim
    for t in range(0, d + 1):
        if component_count(build_gamma(family, t)) == 1:
            return d - t
    return -1


def c_from_counts(counts, d, lowest=1):
    """d - (smallest t >= lowest with one component), from a count table."""
    for t in range(lowest, d + 1):
        if counts.get(t) == 1:
            return d - t
    return -1


def _partitions(ell):
    """Nontrivial bipartitions of range(ell); vertex 0 stays on the left."""
    for mask in range(1, 1 << (ell - 1)):
        right = [k for k in range(1, ell) if (mask >> (k - 1)) & 1]
        left = [k for k in range(ell) if k not in set(right)]
        yield left, right


def partition_connectivity_oracle(family, t, counters=None):
    """Connectivity without graph traversal: every nontrivial split of the
    primes has intersection-sum height at most t."""
    ell = len(family)
    if ell < 2 or ell > ORACLE_MAX_PRIMES:
        raise OracleSizeError(
            "partition oracle needs between 2 and %d primes, got %d"
            % (ORACLE_MAX_PRIMES, ell)
        )
    ambient = family._ambient_ideal()
    for left, right in _partitions(ell):
        IA = family.intersection_of(left)
        IB = family.intersection_of(right)
        h = height_in_quotient(
            ambient, IA + IB, family.order,
            max_steps=family.max_steps, counters=counters or family.counters,
            check=False, ambient_dim=family.quotient_dim,
        )
        if h > t:
            return False
    return True


def c_direct_oracle(family, counters=None):
    """Connectedness dimension as the minimum over nontrivial splits of
    dim S/(ambient + left-intersection + right-intersection); a single
    prime reports the quotient dimension by convention."""
    ell = len(family)
    if ell == 1:
        return family.quotient_dim
    if ell > ORACLE_MAX_PRIMES:
        raise OracleSizeError(
            "partition oracle needs at most %d primes, got %d"
            % (ORACLE_MAX_PRIMES, ell)
        )
    ambient = family._ambient_ideal()
    best = None
    for left, right in _partitions(ell):
        IA = family.intersection_of(left)
        IB = family.intersection_of(right)
        dim = krull_dimension(
            ambient + IA + IB, family.order,
            max_steps=family.max_steps, counters=counters or family.counters,
        )
        if best is None or dim < best:
            best = dim
    return best

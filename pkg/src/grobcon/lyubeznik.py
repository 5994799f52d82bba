"""Graph-expressible Lyubeznik-type invariants of a projective quotient.

For a projective quotient of dimension d (ring quotient dimension d + 1),
three of the local-cohomology invariants reduce to component counts of the
connectedness graphs: the first is the level-d count minus one, the second
the drop from level d-1 to level d, and the top one the level-2 count.
All three are read off a verified prime family.
"""

from .errors import UnsupportedComputation
from .gamma import build_gamma, component_count


class LyubeznikTriple:
    """The three component-count invariants of one projective quotient."""

    __slots__ = ("d", "lambda01", "lambda12", "lambda_top", "caveats")

    def __init__(self, d, lambda01, lambda12, lambda_top, caveats=()):
        self.d = d
        self.lambda01 = lambda01
        self.lambda12 = lambda12
        self.lambda_top = lambda_top
        self.caveats = tuple(caveats)

    def values(self):
        return (self.lambda01, self.lambda12, self.lambda_top)

    def as_dict(self):
        return {
            "projective_dim": self.d,
            "lambda_0_1": self.lambda01,
            "lambda_1_2": self.lambda12,
            "lambda_top": self.lambda_top,
            "top_index": self.d + 1,
            "caveats": list(self.caveats),
        }

    def __eq__(self, other):
        return isinstance(other, LyubeznikTriple) and self.values() == other.values() \
            and self.d == other.d

    def __repr__(self):
        return "LyubeznikTriple(d=%d, %d, %d, %d)" % (
            (self.d,) + self.values())


def lyubeznik_triple(family, counts=None):
    """Compute the triple from a prime family's component counts.

    Requires quotient dimension >= 2 (projective dimension >= 1).  With
    projective dimension exactly 1 the second invariant is still reported,
    fed by the edgeless level-0 graph, with an explicit caveat.
    """
    qdim = family.quotient_dim
    if qdim < 2:
        raise UnsupportedComputation(
            "projective invariants need quotient dimension >= 2, got %d" % qdim
        )
    d = qdim - 1
    counts = dict(counts) if counts else {}

    def cnt(t):
        if t not in counts:
            counts[t] = component_count(build_gamma(family, t))
        return counts[t]

    caveats = []
    lambda01 = cnt(d) - 1
    lambda12 = cnt(d - 1) - cnt(d)
    if d - 1 < 1:
        caveats.append(
            "projective dimension 1: the second invariant reads the edgeless level-0 graph"
        )
    lambda_top = cnt(2)
    return LyubeznikTriple(d, lambda01, lambda12, lambda_top, caveats)


def lyubeznik_invariance_check(entry, max_steps=None):
    """Equality of the triple across the deformation, one boolean per value.

    Returns None when the entry's deformation check is NotApplicable (the
    square-free gate failed), otherwise a dict with the three comparisons.
    """
    from .deformation import theorem_check

    report = theorem_check(entry, max_steps=max_steps)
    if report.status == "not_applicable" or report.lyubeznik is None:
        return None
    return dict(report.lyubeznik["equal"])

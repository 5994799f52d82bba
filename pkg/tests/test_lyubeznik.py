import random

import pytest

from grobcon import (
    IdealPresentation,
    RingDescriptor,
    UnsupportedComputation,
)
from grobcon.gamma import make_prime_family
from grobcon.ioformats import entry_from_dict, parse_polynomial
from grobcon.lyubeznik import lyubeznik_invariance_check, lyubeznik_triple
from grobcon.monomials import MonomialIdealValue, minimal_primes_squarefree

import bruteforce as bf


def monomial_family(names, gens, sort=True):
    ring = RingDescriptor(names)
    M = MonomialIdealValue(ring, gens)
    return make_prime_family(M, minimal_primes_squarefree(M), declared=False, sort=sort)


def test_two_disjoint_lines():
    F = monomial_family(
        ["x", "y", "z", "w"],
        [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)],
    )
    tri = lyubeznik_triple(F)
    assert tri.d == 1
    assert tri.values() == (1, 0, 1)
    assert any("dimension 1" in c for c in tri.caveats)


def test_two_triangles_sharing_a_vertex():
    F = monomial_family(
        ["x1", "x2", "x3", "x4", "x5"],
        [(1, 0, 0, 1, 0), (1, 0, 0, 0, 1), (0, 1, 0, 1, 0), (0, 1, 0, 0, 1)],
    )
    tri = lyubeznik_triple(F)
    assert tri.d == 2
    assert tri.values() == (0, 1, 1)
    assert not tri.caveats


def test_prime_ambient_first_invariant_vanishes():
    ring = RingDescriptor(["x", "y", "z"])
    cubic = IdealPresentation(ring, [parse_polynomial("y - x^2", ring)])
    F = make_prime_family(cubic, [cubic])
    tri = lyubeznik_triple(F)
    assert tri.lambda01 == 0


def test_unsupported_below_dimension_two():
    ring = RingDescriptor(["x", "y"])
    I = IdealPresentation(ring, [parse_polynomial("x^2 + y^2", ring)])
    F = make_prime_family(I, [I])
    assert F.quotient_dim == 1
    with pytest.raises(UnsupportedComputation):
        lyubeznik_triple(F)


def test_triple_independent_of_prime_order():
    gens = [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)]
    sorted_family = monomial_family(["x", "y", "z", "w"], gens, sort=True)
    ring = sorted_family.ring
    M = MonomialIdealValue(ring, gens)
    reversed_family = make_prime_family(
        M, list(reversed(minimal_primes_squarefree(M))), declared=False, sort=False
    )
    assert lyubeznik_triple(sorted_family) == lyubeznik_triple(reversed_family)


def test_second_invariant_nonnegative_random():
    rng = random.Random(20240514)
    done = 0
    while done < 25:
        n = rng.randint(3, 6)
        gens = bf.random_squarefree_gens(rng, n, 4)
        ring_names = ["v%d" % i for i in range(n)]
        ring = RingDescriptor(ring_names)
        M = MonomialIdealValue(ring, gens)
        primes = minimal_primes_squarefree(M)
        if len({len(p.vars) for p in primes}) != 1:
            continue
        F = make_prime_family(M, primes, declared=False)
        if F.quotient_dim < 2:
            continue
        tri = lyubeznik_triple(F)
        assert tri.lambda12 >= 0
        assert tri.lambda_top >= 1
        done += 1


def test_invariance_check_on_entries():
    det = entry_from_dict({
        "id": "det",
        "ring": {"names": ["a", "b", "c", "d", "e", "f"]},
        "ideal": ["a*e - b*d", "a*f - c*d", "b*f - c*e"],
        "order": {"type": "lex"},
        "declared_min_primes": [["a*e - b*d", "a*f - c*d", "b*f - c*e"]],
    })
    assert lyubeznik_invariance_check(det) == {
        "lambda_0_1": True, "lambda_1_2": True, "lambda_top": True
    }
    gate = entry_from_dict({
        "id": "gate",
        "ring": {"names": ["x", "y"]},
        "ideal": ["x^2 + y^2"],
        "order": {"type": "lex"},
        "declared_min_primes": [["x^2 + y^2"]],
    })
    assert lyubeznik_invariance_check(gate) is None

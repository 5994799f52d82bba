import random

import pytest

from grobcon import ContractViolation, RingDescriptor
from grobcon.monomials import (
    MonomialIdealValue,
    VariablePrime,
    dimension_modulo_vars,
    intersect_monomial,
    is_equidimensional_monomial,
    is_squarefree,
    minimal_covers,
    minimal_primes_squarefree,
    monomial_dimension,
    radical_monomial,
    sum_monomial,
)

import bruteforce as bf

R3 = RingDescriptor(["x", "y", "z"])
R4 = RingDescriptor(["x", "y", "z", "w"])
R6 = RingDescriptor(["a", "b", "c", "d", "e", "f"])


def test_minimal_generating_set_is_enforced():
    M = MonomialIdealValue(R3, [(1, 0, 0), (1, 1, 0), (2, 0, 1)])
    assert M.gens == ((1, 0, 0),)


def test_is_squarefree_examples():
    assert is_squarefree(MonomialIdealValue(R3, [(1, 1, 0), (0, 0, 1)]))
    assert not is_squarefree(MonomialIdealValue(R3, [(2, 0, 0)]))
    cubic_initial = MonomialIdealValue(R3, [(2, 0, 0), (1, 1, 0), (0, 2, 0)])
    assert not is_squarefree(cubic_initial)


def test_minimal_primes_examples():
    single = MonomialIdealValue(R3, [(1, 1, 1)])
    assert minimal_primes_squarefree(single) == [
        VariablePrime([0]), VariablePrime([1]), VariablePrime([2])
    ]
    segments = MonomialIdealValue(
        R6, [(1, 0, 0, 0, 1, 0), (1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 0, 1)]
    )
    assert [p.names(R6) for p in minimal_primes_squarefree(segments)] == [
        ["a", "b"], ["a", "f"], ["e", "f"]
    ]
    planes = MonomialIdealValue(
        R4, [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)]
    )
    assert [p.names(R4) for p in minimal_primes_squarefree(planes)] == [
        ["x", "y"], ["z", "w"]
    ]


def test_minimal_primes_contract():
    with pytest.raises(ContractViolation):
        minimal_primes_squarefree(MonomialIdealValue(R3, [(2, 0, 0)]))
    with pytest.raises(ContractViolation):
        minimal_primes_squarefree(MonomialIdealValue(R3, [(0, 0, 0)]))


def test_monomial_dimension_examples():
    assert monomial_dimension(MonomialIdealValue(R3, [(1, 1, 1)])) == 2
    segments = MonomialIdealValue(
        R6, [(1, 0, 0, 0, 1, 0), (1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 0, 1)]
    )
    assert monomial_dimension(segments) == 4
    one_var = RingDescriptor(["x"])
    assert monomial_dimension(MonomialIdealValue(one_var, [(1,)])) == 0


def test_equidimensional_examples():
    planes = MonomialIdealValue(
        R4, [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)]
    )
    assert is_equidimensional_monomial(planes)
    mixed = MonomialIdealValue(R3, [(1, 1, 0), (1, 0, 1)])  # (xy, xz)
    assert not is_equidimensional_monomial(mixed)
    assert is_equidimensional_monomial(MonomialIdealValue(R3, [(1, 1, 1)]))
    with pytest.raises(ContractViolation):
        is_equidimensional_monomial(MonomialIdealValue(R3, [(2, 0, 0)]))


def test_minimal_covers_against_brute_force():
    rng = random.Random(20240509)
    for _ in range(60):
        n = rng.randint(1, 6)
        gens = bf.random_squarefree_gens(rng, n, 4)
        supports = [frozenset(i for i, x in enumerate(e) if x) for e in gens]
        got = minimal_covers(supports)
        assert sorted(got) == bf.brute_minimal_covers(n, supports)
        # engine order is deterministic: by size, then lexicographically
        assert got == sorted(got, key=lambda c: (len(c), c))


def test_cover_face_duality_random():
    # dimension + minimum cover size = variable count, exhaustively checked
    rng = random.Random(20240510)
    for _ in range(60):
        n = rng.randint(1, 7)
        ring = RingDescriptor(["v%d" % i for i in range(n)])
        gens = bf.random_squarefree_gens(rng, n, 4)
        M = MonomialIdealValue(ring, gens)
        supports = M.supports()
        dim = monomial_dimension(M)
        assert dim == bf.independent_set_dimension(n, supports)
        assert dim + min(len(c) for c in minimal_covers(supports)) == n


def test_minimal_primes_against_brute_force_membership():
    # primes = inclusion-minimal variable-generated primes containing M
    rng = random.Random(20240511)
    for _ in range(40):
        n = rng.randint(1, 6)
        ring = RingDescriptor(["v%d" % i for i in range(n)])
        gens = bf.random_squarefree_gens(rng, n, 4)
        M = MonomialIdealValue(ring, gens)
        got = {p.vars for p in minimal_primes_squarefree(M)}
        supports = [frozenset(i for i, x in enumerate(e) if x) for e in gens]
        expected = {
            tuple(sorted(c)) for c in bf.brute_minimal_covers(n, supports)
        }
        assert got == expected


def test_radical_graph_invariance():
    # bumping generator exponents never changes the minimal primes
    rng = random.Random(20240512)
    for _ in range(30):
        n = rng.randint(2, 5)
        ring = RingDescriptor(["v%d" % i for i in range(n)])
        gens = bf.random_squarefree_gens(rng, n, 4)
        M = MonomialIdealValue(ring, gens)
        reference = minimal_primes_squarefree(M)
        bumped = []
        for e in gens:
            bumped.append(tuple(
                x * rng.randint(1, 3) for x in e
            ))
        B = MonomialIdealValue(ring, bumped)
        assert minimal_primes_squarefree(radical_monomial(B)) == reference


def test_dimension_modulo_vars():
    segments = MonomialIdealValue(
        R6, [(1, 0, 0, 0, 1, 0), (1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 0, 1)]
    )
    # kill (a, b, f): generators all absorbed, c/d/e remain free
    assert dimension_modulo_vars(segments, {0, 1, 5}) == 3
    # kill (a, b, e, f)
    assert dimension_modulo_vars(segments, {0, 1, 4, 5}) == 2


def test_sum_and_intersection_helpers():
    A = MonomialIdealValue(R3, [(1, 0, 0)])
    B = MonomialIdealValue(R3, [(0, 1, 0)])
    assert set(sum_monomial(A, B).gens) == {(1, 0, 0), (0, 1, 0)}
    assert intersect_monomial(A, B).gens == ((1, 1, 0),)

import random
from fractions import Fraction

import pytest

from grobcon import (
    ContractViolation,
    IdealPresentation,
    MonomialOrder,
    Polynomial,
    RingDescriptor,
    buchberger,
    colon,
    eliminate,
    height_in_quotient,
    intersect,
    member,
    radical_member,
    same_ideal,
    zero_ideal,
)
from grobcon.ioformats import parse_polynomial, poly_to_string

import bruteforce as bf

R3 = RingDescriptor(["x", "y", "z"])
R4 = RingDescriptor(["x", "y", "z", "w"])
GREVLEX = MonomialOrder.grevlex()


def ideal(ring, *sources):
    return IdealPresentation(ring, [parse_polynomial(s, ring) for s in sources])


def monomial_ideal_presentation(ring, gens):
    return IdealPresentation(
        ring, [Polynomial.monomial(ring, e) for e in gens]
    )


# ---------------------------------------------------------------------------
# eliminate
# ---------------------------------------------------------------------------

def test_eliminate_twisted_cubic():
    I = ideal(R3, "y - x^2", "z - x^3")
    E = eliminate(I, ["y", "z"])
    assert [poly_to_string(g) for g in E.gens] == ["y^3 - z^2"]
    # parametric oracle: the eliminant vanishes on (t^2, t^3)
    for t in (Fraction(2), Fraction(-1), Fraction(3, 2), Fraction(-5, 3)):
        assert bf.eval_poly(E.gens[0], (0, t ** 2, t ** 3)) == 0


def test_eliminate_nothing_is_identity():
    I = ideal(R3, "y - x^2", "z - x^3")
    E = eliminate(I, ["x", "y", "z"])
    assert same_ideal(E, I)


def test_eliminate_surjective_projection():
    I = ideal(R3, "x - y")
    E = eliminate(I, ["y"])
    assert E.is_zero_presentation


def test_eliminate_everything():
    I = ideal(R3, "x - 1")
    E = eliminate(I, [])
    # contains the constant 1: contraction of the unit.. no: (x-1) is proper,
    # its contraction to the empty subring is zero
    assert E.is_zero_presentation
    U = ideal(R3, "x", "x - 1")
    assert not eliminate(U, []).is_zero_presentation


# ---------------------------------------------------------------------------
# intersect
# ---------------------------------------------------------------------------

def test_intersect_coprime_principal():
    got = intersect(ideal(R3, "x"), ideal(R3, "y"))
    assert same_ideal(got, ideal(R3, "x*y"))


def test_intersect_two_planes_example():
    got = intersect(ideal(R4, "x", "y"), ideal(R4, "z", "w"))
    expected = bf.brute_intersection(
        [(1, 0, 0, 0), (0, 1, 0, 0)], [(0, 0, 1, 0), (0, 0, 0, 1)]
    )
    assert sorted(g.terms[0][0] for g in got.gens) == sorted(expected)


def test_intersect_with_unit():
    I = ideal(R3, "x*y - z")
    got = intersect(I, ideal(R3, "1"))
    assert same_ideal(got, I)


def test_intersect_general_route_matches_shortcut():
    rng = random.Random(20240504)
    for _ in range(12):
        n = rng.randint(2, 4)
        ring = RingDescriptor(["x", "y", "z", "w"][:n])
        gi = bf.random_squarefree_gens(rng, n, 3)
        gj = bf.random_squarefree_gens(rng, n, 3)
        A = monomial_ideal_presentation(ring, gi)
        B = monomial_ideal_presentation(ring, gj)
        fast = intersect(A, B)
        slow = intersect(A, B, force_general=True)
        assert same_ideal(fast, slow)


def test_intersect_brute_force_lattice():
    rng = random.Random(20240505)
    for _ in range(15):
        n = rng.randint(2, 5)
        ring = RingDescriptor(["v%d" % i for i in range(n)])
        gi = [tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(rng.randint(1, 3))]
        gj = [tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(rng.randint(1, 3))]
        gi = bf.minimal_elements([g for g in gi if any(g)]) or [(1,) + (0,) * (n - 1)]
        gj = bf.minimal_elements([g for g in gj if any(g)]) or [(0,) * (n - 1) + (1,)]
        got = intersect(
            monomial_ideal_presentation(ring, gi),
            monomial_ideal_presentation(ring, gj),
        )
        assert sorted(g.terms[0][0] for g in got.gens) == sorted(
            bf.brute_intersection(gi, gj)
        )


# ---------------------------------------------------------------------------
# colon
# ---------------------------------------------------------------------------

def test_colon_monomial_example():
    got = colon(ideal(R3, "x*y"), parse_polynomial("x", R3))
    assert same_ideal(got, ideal(R3, "y"))


def test_colon_identity():
    I = ideal(R3, "x*y - z", "x^2")
    assert same_ideal(colon(I, Polynomial.one(R3)), I)


def test_colon_detects_hidden_element():
    # (x^2 - t*y, x^3 - t^3*z) : t contains x*y - t^2*z
    R = RingDescriptor(["x", "y", "z", "t"])
    J = ideal(R, "x^2 - t*y", "x^3 - t^3*z")
    C = colon(J, parse_polynomial("t", R))
    gb = buchberger(C, GREVLEX)
    assert member(parse_polynomial("x*y - t^2*z", R), gb)


def test_colon_brute_force_lattice():
    rng = random.Random(20240506)
    for _ in range(15):
        n = rng.randint(2, 5)
        ring = RingDescriptor(["v%d" % i for i in range(n)])
        gens = [tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(rng.randint(1, 3))]
        gens = bf.minimal_elements([g for g in gens if any(g)]) or [(1,) + (0,) * (n - 1)]
        f = tuple(rng.randint(0, 2) for _ in range(n))
        if not any(f):
            f = (1,) + (0,) * (n - 1)
        got = colon(
            monomial_ideal_presentation(ring, gens),
            Polynomial.monomial(ring, f),
        )
        expected = bf.brute_colon(gens, f)
        assert sorted(bf.minimal_elements([g.terms[0][0] for g in got.gens])) == sorted(expected)


# ---------------------------------------------------------------------------
# radical membership
# ---------------------------------------------------------------------------

def test_radical_member_examples():
    x = parse_polynomial("x", R3)
    assert radical_member(x, ideal(R3, "x^2"))
    assert not radical_member(parse_polynomial("z", R3), ideal(R3, "x"))
    # binomial oracle: (x+y)^3 lies in (x, y^3)
    I = ideal(R3, "x", "y^3")
    s = parse_polynomial("x + y", R3)
    gb = buchberger(I, GREVLEX)
    assert member(s ** 3, gb)
    assert radical_member(s, I)


def test_radical_member_brute_force_monomial():
    rng = random.Random(20240507)
    for _ in range(20):
        n = rng.randint(2, 4)
        ring = RingDescriptor(["v%d" % i for i in range(n)])
        gens = [tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(rng.randint(1, 3))]
        gens = bf.minimal_elements([g for g in gens if any(g)]) or [(1,) + (0,) * (n - 1)]
        I = monomial_ideal_presentation(ring, gens)
        f = tuple(rng.randint(0, 2) for _ in range(n))
        expected = bf.brute_radical_member_monomial(gens, f)
        assert radical_member(Polynomial.monomial(ring, f), I) == expected


# ---------------------------------------------------------------------------
# heights in quotients
# ---------------------------------------------------------------------------

def test_height_examples():
    amb = ideal(R3, "x*y*z")
    assert height_in_quotient(amb, ideal(R3, "x", "y")) == 1
    planes = ideal(R4, "x*z", "x*w", "y*z", "y*w")
    assert height_in_quotient(planes, ideal(R4, "x", "y", "z", "w")) == 2
    cubic = ideal(R3, "y - x^2", "z - x^3")
    assert height_in_quotient(cubic, cubic) == 0


def test_height_contract_violation():
    with pytest.raises(ContractViolation):
        height_in_quotient(ideal(R3, "x"), ideal(R3, "y"))
    with pytest.raises(ContractViolation):
        height_in_quotient(ideal(R3, "x"), zero_ideal(R3))


def test_height_radical_containment_allowed():
    # J contains the ambient only up to radical
    amb = ideal(R3, "x^2")
    assert height_in_quotient(amb, ideal(R3, "x")) == 0


def test_height_min_identity_on_random_variable_primes():
    # the height of (intersection + intersection) is the pairwise minimum,
    # measured against the zero ambient ideal
    rng = random.Random(20240508)
    for _ in range(25):
        n = rng.randint(2, 5)
        ring = RingDescriptor(["v%d" % i for i in range(n)])
        zero = zero_ideal(ring)

        def random_prime():
            size = rng.randint(1, n)
            vars_ = rng.sample(range(n), size)
            return IdealPresentation(
                ring, [Polynomial.variable(ring, i) for i in vars_]
            ), frozenset(vars_)

        Is = [random_prime() for _ in range(rng.randint(1, 3))]
        Js = [random_prime() for _ in range(rng.randint(1, 3))]
        inter_I = Is[0][0]
        for p, _ in Is[1:]:
            inter_I = intersect(inter_I, p)
        inter_J = Js[0][0]
        for p, _ in Js[1:]:
            inter_J = intersect(inter_J, p)
        got = height_in_quotient(zero, inter_I + inter_J)
        expected = min(
            len(vi | vj) for _, vi in Is for _, vj in Js
        )
        assert got == expected

import random
from fractions import Fraction

import pytest

from grobcon import (
    DimensionMismatch,
    MonomialOrder,
    Polynomial,
    RingMismatch,
    RingDescriptor,
    ZeroPolynomialError,
    cmp_monomials,
    leading_term,
    weight_degree,
)

R2 = RingDescriptor(["x", "y"])
R3 = RingDescriptor(["x", "y", "z"])
LEX = MonomialOrder.lex()
GREVLEX = MonomialOrder.grevlex()


def mono(ring, *exps):
    return tuple(exps)


def test_coefficient_representation():
    # lowest terms, positive denominator, zero uniquely 0/1
    c = Fraction(6, -4)
    assert (c.numerator, c.denominator) == (-3, 2)
    assert Fraction(0, 7) == Fraction(0, 1)
    assert Fraction(0, 7).denominator == 1


def test_ring_descriptor_validation():
    with pytest.raises(ValueError):
        RingDescriptor([])
    with pytest.raises(ValueError):
        RingDescriptor(["x", "x"])
    with pytest.raises(ValueError):
        RingDescriptor(["2x"])
    r = RingDescriptor(["x", "y"])
    assert r.n == 2
    assert r.fresh_name("t") == "t"
    assert r.fresh_name("x") == "x0"


def test_cmp_lex_example():
    # x^2 vs x*y
    assert cmp_monomials(LEX, (2, 0), (1, 1)) == 1


def test_cmp_grevlex_equal_degree_example():
    # y^2 vs x*z in 3 vars: equal degree, y^2 wins (smaller last entry)
    assert cmp_monomials(GREVLEX, (0, 2, 0), (1, 0, 1)) == 1


def test_cmp_weight_tiebreak_example():
    # w=(1,2), tie lex: x^2 vs y both weigh 2; lex picks x^2
    order = MonomialOrder.weight((1, 2), MonomialOrder.lex())
    assert cmp_monomials(order, (2, 0), (0, 1)) == 1


def test_cmp_dimension_error():
    with pytest.raises(DimensionMismatch):
        cmp_monomials(LEX, (1, 0), (1, 0, 0))
    with pytest.raises(DimensionMismatch):
        cmp_monomials(MonomialOrder.weight((1, 2)), (1, 0, 0), (0, 1, 0))


def test_grevlex_degree_two_table():
    # exhaustive fixture: all degree-2 monomials in 3 variables, descending
    expected = [
        (2, 0, 0),  # x^2
        (1, 1, 0),  # x*y
        (0, 2, 0),  # y^2
        (1, 0, 1),  # x*z
        (0, 1, 1),  # y*z
        (0, 0, 2),  # z^2
    ]
    import itertools

    degree2 = [e for e in itertools.product(range(3), repeat=3) if sum(e) == 2]
    key = lambda e: [cmp_monomials(GREVLEX, e, f) for f in degree2].count(1)
    got = sorted(degree2, key=key, reverse=True)
    assert got == expected


def test_poly_arith_examples():
    x = Polynomial.variable(R2, 0)
    y = Polynomial.variable(R2, 1)
    assert (x + y) + (-x) == y
    assert (x + y) * (x - y) == x * x - y * y
    zero = Polynomial.zero(R2)
    assert (x + y) * zero == zero


def test_poly_ring_mismatch():
    x2 = Polynomial.variable(R2, 0)
    x3 = Polynomial.variable(R3, 0)
    with pytest.raises(RingMismatch):
        x2 + x3


def test_canonical_form_is_structural():
    # same polynomial assembled in scrambled order, with mergeable terms
    a = Polynomial(R2, [((1, 1), Fraction(2)), ((0, 2), Fraction(1)), ((1, 1), Fraction(-1))])
    b = Polynomial(R2, [((0, 2), Fraction(1)), ((1, 1), Fraction(1))])
    assert a == b
    assert hash(a) == hash(b)
    assert a.terms[0][0] == (1, 1)  # grevlex puts x*y before y^2


def test_leading_term_examples():
    f = Polynomial(R3, [((1, 1, 0), Fraction(1)), ((0, 0, 1), Fraction(-1))])
    assert leading_term(LEX, f) == (Fraction(1), (1, 1, 0))
    order = MonomialOrder.weight((3, 5, 6), MonomialOrder.lex())
    g = Polynomial(R3, [((0, 2, 0), Fraction(1)), ((1, 0, 1), Fraction(-1))])
    assert leading_term(order, g) == (Fraction(1), (0, 2, 0))  # 10 > 9
    c = Polynomial.constant(R3, 5)
    assert leading_term(LEX, c) == (Fraction(5), (0, 0, 0))


def test_leading_term_of_zero_fails():
    with pytest.raises(ZeroPolynomialError):
        leading_term(LEX, Polynomial.zero(R3))


def test_weight_degree_examples():
    assert weight_degree((3, 5, 6), (2, 0, 0)) == 6
    assert weight_degree((3, 5, 6), (3, 0, 0)) == 9
    assert weight_degree((1, 1, 1), (2, 3, 1)) == 6
    with pytest.raises(DimensionMismatch):
        weight_degree((1, 2), (1, 0, 0))


def _random_orders(rng, n):
    orders = [MonomialOrder.lex(), MonomialOrder.grevlex()]
    w = tuple(rng.randint(1, 9) for _ in range(n))
    orders.append(MonomialOrder.weight(w, MonomialOrder.lex()))
    orders.append(MonomialOrder.weight(w, MonomialOrder.grevlex()))
    return orders


def test_order_axioms_on_random_triples():
    # totality, multiplicativity, 1 minimal: >= 10^4 cases over <= 6 vars
    rng = random.Random(20240501)
    cases = 0
    while cases < 10500:
        n = rng.randint(1, 6)
        a = tuple(rng.randint(0, 5) for _ in range(n))
        b = tuple(rng.randint(0, 5) for _ in range(n))
        c = tuple(rng.randint(0, 5) for _ in range(n))
        for order in _random_orders(rng, n):
            r = cmp_monomials(order, a, b)
            assert r == -cmp_monomials(order, b, a)
            assert (r == 0) == (a == b)
            shifted = cmp_monomials(
                order,
                tuple(x + z for x, z in zip(a, c)),
                tuple(y + z for y, z in zip(b, c)),
            )
            assert shifted == r
            one = (0,) * n
            if a != one:
                assert cmp_monomials(order, a, one) == 1
            cases += 1
    assert cases >= 10 ** 4


def test_arithmetic_is_exact_random():
    rng = random.Random(7)
    from bruteforce import random_polynomial

    for _ in range(200):
        f = random_polynomial(rng, R3)
        g = random_polynomial(rng, R3)
        assert (f + g) - g == f

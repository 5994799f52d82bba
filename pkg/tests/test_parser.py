import random
from fractions import Fraction

import pytest

from grobcon import ParseError, Polynomial, RingDescriptor
from grobcon.ioformats import parse_polynomial, poly_to_string

from bruteforce import random_polynomial

R = RingDescriptor(["x", "y", "z"])


def test_basic_terms():
    f = parse_polynomial("x*y^2 - 3/2*z", R)
    assert f.terms == (
        ((1, 2, 0), Fraction(1)),
        ((0, 0, 1), Fraction(-3, 2)),
    )


def test_double_star_rejected():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x**2", R)
    assert info.value.col == 3


def test_unary_minus_distributes():
    f = parse_polynomial("-(x - y)", R)
    assert f == parse_polynomial("y - x", R)


def test_parenthesized_products():
    f = parse_polynomial("(x + y)*(x - y)", R)
    assert f == parse_polynomial("x^2 - y^2", R)


def test_fraction_coefficients():
    f = parse_polynomial("2/4*x", R)
    assert f.terms[0][1] == Fraction(1, 2)


def test_unknown_variable_with_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x + 2*w", R)
    assert "w" in str(info.value)
    assert info.value.col == 7


def test_zero_denominator():
    with pytest.raises(ParseError):
        parse_polynomial("3/0*x", R)


def test_malformed_exponent():
    with pytest.raises(ParseError):
        parse_polynomial("x^", R)
    with pytest.raises(ParseError):
        parse_polynomial("x^y", R)


def test_implicit_multiplication_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("2 x", R)
    with pytest.raises(ParseError):
        parse_polynomial("x y", R)


def test_empty_and_trailing():
    with pytest.raises(ParseError):
        parse_polynomial("   ", R)
    with pytest.raises(ParseError):
        parse_polynomial("x + ", R)
    with pytest.raises(ParseError):
        parse_polynomial("(x", R)


def test_line_column_tracking():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x +\n q", R)
    assert info.value.line == 2
    assert info.value.col == 2


def test_print_fixed_forms():
    assert poly_to_string(Polynomial.zero(R)) == "0"
    assert poly_to_string(Polynomial.constant(R, Fraction(-3, 2))) == "-3/2"
    f = parse_polynomial("x*y^2 - 3/2*z", R)
    assert poly_to_string(f) == "x*y^2 - 3/2*z"
    g = parse_polynomial("-x + 1", R)
    assert poly_to_string(g) == "-x + 1"


def test_round_trip_random():
    rng = random.Random(20240502)
    for _ in range(1000):
        f = random_polynomial(rng, R)
        assert parse_polynomial(poly_to_string(f), R) == f


def test_round_trip_corpus(corpus_entries):
    for entry in corpus_entries:
        for f in entry.ideal:
            assert parse_polynomial(poly_to_string(f), entry.ring) == f
        for gens in entry.declared_min_primes or []:
            for g in gens:
                assert parse_polynomial(poly_to_string(g), entry.ring) == g

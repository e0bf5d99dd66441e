from fractions import Fraction as Q

import pytest

from riordan.fps import DomainError, Series
from riordan.parser import ParseError, parse, parse_series


def test_basic_rationals_and_x():
    assert parse_series("3/4", 3) == Series.const(Q(3, 4), 3)
    assert parse_series("x", 3) == Series.x(3)
    assert parse_series("1 + x*x", 4) == Series.from_poly([1, 0, 1], 4)


def test_precedence_and_parentheses():
    assert parse_series("1+2*3", 0) == Series.const(7, 0)
    assert parse_series("(1+2)*3", 0) == Series.const(9, 0)
    assert parse_series("1-1/2", 0) == Series.const(Q(1, 2), 0)


def test_geometric_series():
    assert parse_series("1/(1-x)", 6) == Series.geometric(6)


def test_whitespace_insignificant():
    a = parse_series(" 1 /(1 - x )", 5)
    assert a == Series.geometric(5)


def test_functions():
    assert parse_series("exp(x)", 4) == Series.x(4).exp()
    assert parse_series("log(1+x)", 4) == Series.from_poly([1, 1], 4).log()
    assert parse_series("sqrt(1+x)", 4) == Series.from_poly([1, 1], 4).pow(Q(1, 2))
    assert parse_series("pow(1+x, -3/2)", 4) == Series.from_poly([1, 1], 4).pow(Q(-3, 2))
    assert parse_series("rev(x-x*x)", 5) == Series([0, 1, 1, 2, 5, 14], 5)


def test_catalan_with_and_without_parens():
    want = Series([1, 1, 2, 5, 14], 4)
    assert parse_series("catalan", 4) == want
    assert parse_series("catalan()", 4) == want
    assert parse_series("genbin(2, 1)", 4) == want


def test_genbin_negative_arguments():
    got = parse_series("genbin(-1, -1)", 5)
    direct = parse_series("1/((1 + sqrt(1+4*x))/2)", 5)
    assert got == direct


def test_nested_expressions():
    got = parse_series("1 + x*(log(1/(1-x)) + exp(x))", 6)
    inner = Series.geometric(6).log() + Series.x(6).exp()
    assert got == Series.x(6) * inner + 1


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse("1 + ")
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse("1 + $")
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse("foo(x)")
    assert err.value.position == 0
    with pytest.raises(ParseError):
        parse("pow(x 2)")
    with pytest.raises(ParseError):
        parse("1/2/")


def test_trailing_input_rejected():
    with pytest.raises(ParseError):
        parse("1 2")


def test_evaluation_domain_errors_propagate():
    with pytest.raises(DomainError):
        parse_series("1/x", 4)
    with pytest.raises(DomainError):
        parse_series("log(2+x)", 4)
    with pytest.raises(DomainError):
        parse_series("rev(1+x)", 4)


def test_ast_shape():
    assert parse("x") == ("x",)
    assert parse("genbin(1/2, -1)") == ("genbin", Q(1, 2), Q(-1))
    kind, left, right = parse("1+x")
    assert kind == "add" and left == ("num", Q(1)) and right == ("x",)

"""Tests for the set expression language."""

import pytest
from hypothesis import given

from jinf.cli.expressions import (
    BinaryOp,
    Literal,
    Name,
    Per,
    canonical_expr,
    parse_set,
    parse_set_expr,
    render,
    render_set,
)
from jinf.core.setalg import EMPTY, EVENS, SetOpKind, from_elements, residue_class
from jinf.tests.strategies import periodic_sets
from jinf.utils.exceptions import (
    DomainError,
    EvalError,
    MalformedRepresentation,
    ParseError,
    PeriodLimitExceeded,
)


class TestParse:
    def test_tree(self):
        expr = parse_set_expr(" union( {1} , evens ) ")
        assert expr == BinaryOp(SetOpKind.UNION, Literal((1,)), Name("evens"))
        assert render(expr) == "union({1},evens)"

    def test_per_with_empty_prefix(self):
        assert parse_set_expr("per(;01)") == Per("", "01")

    @pytest.mark.parametrize(
        "text, line, col",
        [
            ("evens odds", 1, 7),
            ("evens + odds", 1, 7),
            ("union(evens\n, )", 2, 3),
            ("mod(2)", 1, 6),
            ("per(;)", 1, 6),
            ("per(2;1)", 1, 5),
            ("", 1, 1),
        ],
    )
    def test_errors_carry_position(self, text, line, col):
        with pytest.raises(ParseError) as info:
            parse_set_expr(text)
        assert (info.value.line, info.value.col) == (line, col)

    def test_error_names_expectation(self):
        with pytest.raises(ParseError) as info:
            parse_set_expr("complement(evens")
        assert info.value.expected == "')'"
        assert info.value.details["found"] == "end of input"


class TestEvaluate:
    def test_operations(self, evens_vertex, moved_evens):
        assert parse_set("inter(evens,mod(3,0))") == residue_class(6, 0)
        assert parse_set("union({1},diff(evens,{2}))") == moved_evens.set
        assert parse_set("complement(odds)") == EVENS
        assert parse_set("symdiff(evens,odds)") == ~EMPTY

    def test_per(self):
        assert parse_set("per(;01)") == EVENS
        assert parse_set("per(1;0)") == from_elements([1])

    def test_domain_error(self):
        with pytest.raises(EvalError) as info:
            parse_set("{0}")
        assert isinstance(info.value.cause, DomainError)

    def test_bad_modulus(self):
        with pytest.raises(EvalError) as info:
            parse_set("mod(0,1)")
        assert isinstance(info.value.cause, MalformedRepresentation)

    def test_period_limit(self):
        with pytest.raises(EvalError) as info:
            parse_set("inter(mod(3,0),mod(5,0))", limit=10)
        assert isinstance(info.value.cause, PeriodLimitExceeded)
        assert parse_set("inter(mod(3,0),mod(5,0))", limit=15) == residue_class(15, 0)


class TestRender:
    def test_canonical_text(self):
        assert render_set(EVENS) == "evens"
        assert render_set(from_elements([3, 1])) == "{1,3}"
        assert render_set(residue_class(3, 0)) == "per(;001)"
        assert render_set(EMPTY) == "per(;0)"
        assert render_set(parse_set("union({1},odds)")) == "odds"

    def test_canonical_expr(self):
        assert canonical_expr(EVENS) == Name("evens")
        assert canonical_expr(from_elements([2])) == Literal((2,))

    @given(periodic_sets())
    def test_rendering_evaluates_back(self, s):
        text = render_set(s)
        assert parse_set(text) == s
        assert render_set(parse_set(text)) == text

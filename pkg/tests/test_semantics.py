import pytest
from hypothesis import given, strategies as st

from slnkit.ast import Eq, Exists, Plus, Succ, Var, Zero, pa_num
from slnkit.normalize import normalize_bounded
from slnkit.parser import parse_pa
from slnkit.semantics import (
    VarAssignment, eval_bounded, eval_term, max_bound, parse_assignment,
    render_assignment,
)


def test_eval_term_examples():
    sigma = VarAssignment({"x": 2})
    assert eval_term(sigma, Plus(Var("x"), Succ(Var("x")))) == 5
    assert eval_term(sigma, pa_num(3)) == 3
    # the bound of the worked example at x = 1
    sigma1 = VarAssignment({"x": 1})
    bound = Plus(Var("x"), Plus(Var("x"), Succ(Var("x"))))
    assert eval_term(sigma1, bound) == 4


def test_eval_bounded_examples():
    sigma = VarAssignment({"x": 1})
    assert not eval_bounded(sigma, parse_pa("x + x <= x"))
    worked = parse_pa("forall y <= x + (x + s(x)). 0 <= x + (y * (x + y))")
    assert eval_bounded(VarAssignment(), worked)
    counter = parse_pa("exists (z = x + 0) !(z = x)")
    for v in range(6):
        assert not eval_bounded(VarAssignment({"x": v}), counter)


def test_eval_bounded_rejects_unbounded():
    with pytest.raises(ValueError):
        eval_bounded(VarAssignment(), Exists("x", Eq(Var("x"), Zero())))


def test_max_bound_closed_form():
    worked = normalize_bounded(
        parse_pa("forall y <= x + (x + s(x)). 0 <= x + (y * (x + y))"))
    for v in range(4):
        sigma = VarAssignment({"x": v})
        assert max_bound(sigma, worked) == v + (3 * v + 1) * (4 * v + 1)


def test_max_bound_equality_is_zero():
    assert max_bound(VarAssignment(), parse_pa("0 = 0")) == 0


def test_max_bound_quantifier_case():
    # forall y <= x. y <= x at x = 3: bound value and substituted body
    a = parse_pa("forall y <= x. y <= x")
    assert max_bound(VarAssignment({"x": 3}), a) == 3


@given(st.integers(0, 30), st.integers(0, 30))
def test_update_law(n, m):
    sigma = VarAssignment({"y": m})
    updated = sigma.update("x", n)
    assert updated("x") == n
    assert updated("y") == sigma("y")
    assert sigma("x") == 0  # the original is untouched


def test_assignment_text_format():
    sigma = parse_assignment("x=2,y=0")
    assert sigma("x") == 2 and sigma("y") == 0 and sigma("z") == 0
    assert parse_assignment("") == VarAssignment()
    assert render_assignment(VarAssignment({"b": 1, "a": 2})) == "a=2,b=1"
    with pytest.raises(ValueError):
        parse_assignment("x=-1")
    with pytest.raises(ValueError):
        parse_assignment("x=1,x=2")
    with pytest.raises(ValueError):
        parse_assignment("nonsense")

import pytest

from slnkit.gen import Generators
from slnkit.heap import Heap, simple_table_heap
from slnkit.parser import parse_pa, parse_sln
from slnkit.semantics import VarAssignment
from slnkit.verify import (
    Counterexample, SearchLimits, bounded_counterexample_search,
    verify_hn2forallh, verify_pa2hn, verify_representation,
    verify_sigma01_counterexample,
)

FAST_LIMITS = SearchLimits(max_assign_val=2, heap_samples=25, table_sizes=(0, 1, 2), seed=5)


def test_counterexample_revalidates():
    f = parse_sln("0 |-> 0")
    Counterexample(VarAssignment(), Heap(), f, False)  # fine: empty heap refutes
    with pytest.raises(ValueError):
        Counterexample(VarAssignment(), Heap({0: 0}), f, False)


def test_search_trivial_formula_has_no_counterexample():
    assert bounded_counterexample_search(parse_sln("0 = 0"), FAST_LIMITS) is None


def test_search_finds_falsifying_pair():
    found = bounded_counterexample_search(parse_sln("exists a (a |-> 0)"), FAST_LIMITS)
    assert found is not None
    assert len(found.heap) == 0  # the empty heap comes first


def test_search_finds_table_counterexample_for_invalid_translation():
    """The translation of forall x (x <= 0) fails on the first table heap
    carrying an inequality row for (0, 1)."""
    from slnkit.normalize import box_translate
    from slnkit.translate import circle_translate

    a = circle_translate(box_translate(parse_pa("forall x. x <= 0")))
    found = bounded_counterexample_search(a, FAST_LIMITS)
    assert found is not None
    assert found.heap == simple_table_heap(1)


def test_search_is_deterministic():
    f = parse_sln("x = s(y)")
    a = bounded_counterexample_search(f, FAST_LIMITS)
    b = bounded_counterexample_search(f, FAST_LIMITS)
    assert a is not None and b is not None
    assert a.assignment == b.assignment and a.heap == b.heap


def test_verify_pa2hn_known_cases():
    worked_body = parse_pa(
        "exists (x1 = x + s(x)) exists (x2 = x + x1) forall y <= x2. "
        "exists (x3 = x + y) exists (x4 = y * x3) exists (x5 = x + x4) 0 <= x5")
    report = verify_pa2hn(worked_body, VarAssignment({"x": 0}))
    assert report["agree"] and report["pa"] and report["n"] == 1

    leq0 = parse_pa("x <= 0")
    report = verify_pa2hn(leq0, VarAssignment({"x": 1}))
    assert report["agree"] and not report["pa"] and report["n"] == 1

    trivial = parse_pa("0 = 0")
    report = verify_pa2hn(trivial, VarAssignment())
    assert report["agree"] and report["pa"] and report["n"] == 0


def test_verify_hn2forallh():
    report = verify_hn2forallh(parse_pa("0 = 0"), VarAssignment(), samples=10)
    assert report["precondition"] and not report["failures"]
    # unsatisfied side: precondition reported, not raised
    report = verify_hn2forallh(parse_pa("x <= 0"), VarAssignment({"x": 1}), samples=5)
    assert report["precondition"] is False


def test_verify_representation_valid_and_invalid():
    valid = verify_representation(parse_pa("forall x. x <= x"), "valid", limits=FAST_LIMITS)
    assert valid["as_expected"]
    invalid = verify_representation(parse_pa("forall x. x + x <= x"), "invalid", 1,
                                    limits=FAST_LIMITS)
    assert invalid["as_expected"] and invalid["n"] == 2
    with pytest.raises(ValueError):
        verify_representation(parse_pa("exists x. x = 0"), "valid")


def test_sigma01_driver_small():
    report = verify_sigma01_counterexample(samples=20, seed=2)
    assert report["as_expected"]
    assert report["pa_witnesses"] == []


def test_generator_determinism():
    a = [Generators(9).pa_normal() for _ in range(5)]
    b = [Generators(9).pa_normal() for _ in range(5)]
    assert a == b
    ha = [Generators(9).sparse_heap() for _ in range(5)]
    hb = [Generators(9).sparse_heap() for _ in range(5)]
    assert ha == hb

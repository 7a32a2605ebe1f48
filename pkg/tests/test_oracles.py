"""The oracles get their own sanity tests: a cross-check is only as good
as the independence and correctness of the second route."""

from hypothesis import given, settings
from hypothesis import strategies as st

from scrollslopes.chow import ChowClass, make_scroll
from scrollslopes.oracles import (
    expand_free,
    free_ring_mul,
    hn_enumerate,
    reduce_words,
    rewrite_step,
)

from test_chow import scroll_with_classes


def test_expand_free_applies_no_relations():
    s = make_scroll([1, 1, 1])
    h = ChowClass(s, {(1, 0): 1})
    hh = expand_free(h, h)
    assert hh == {"HH": 1}
    r = ChowClass(s, {(0, 1): 1})
    assert expand_free(r, r) == {"RR": 1}


def test_rewrite_step_fires_once():
    # H^3 on a rank-3 scroll with c1=3 rewrites to 3 H^2 R in one step
    step = rewrite_step({"HHH": 1}, 3, 3, "h_first")
    assert step == {"HHR": 3}
    assert rewrite_step({"HHR": 3}, 3, 3, "h_first") is None


def test_reduce_kills_double_fiber():
    assert reduce_words({"HRR": 5}, 3, 3) == {}


def test_reduce_cancellation_drops_zero_terms():
    # c*c1 can cancel an existing coefficient exactly
    terms = {"HHH": 1, "HHR": -3}
    assert reduce_words(terms, 3, 3) == {}


@given(scroll_with_classes(2))
@settings(max_examples=300)
def test_rule_order_confluence(data):
    x, y = data
    assert free_ring_mul(x, y, "h_first") == free_ring_mul(x, y, "r_first")


def test_hn_enumerate_semistable():
    assert hn_enumerate([20, 20]) == [(2, 40)]


def test_hn_enumerate_two_steps():
    assert hn_enumerate([24, 20]) == [(1, 24), (1, 20)]


def test_hn_enumerate_grouping():
    assert hn_enumerate([5, 3, 3, 1]) == [(1, 5), (2, 6), (1, 1)]


def test_hn_enumerate_negative_degrees():
    assert hn_enumerate([-1, -1, -5]) == [(2, -2), (1, -5)]


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6))
@settings(max_examples=200)
def test_enumeration_pieces_account_for_everything(degrees):
    pieces = hn_enumerate(degrees)
    assert sum(r for r, _ in pieces) == len(degrees)
    assert sum(d for _, d in pieces) == sum(degrees)

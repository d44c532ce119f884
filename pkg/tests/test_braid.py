import math

import pytest
from hypothesis import given, strategies as st

from conftest import braid_words
from qtail.braid import (BraidWord, braid_props, components, connected_sum, format_braid,
                         load_named_braids, mirror_braid, parse_braid, permutation,
                         torus_braid, writhe)
from qtail.errors import BraidRangeError, BraidSyntaxError, NotAKnot


def test_parse_examples():
    assert parse_braid("2: 1 1 1") == BraidWord(2, (1, 1, 1))
    b = parse_braid("3: 1 -2 1 -2")
    assert b == BraidWord(3, (1, -2, 1, -2))
    assert components(b) == 1
    with pytest.raises(BraidRangeError):
        parse_braid("2: 3")


@pytest.mark.parametrize("text", ["2 1 1", "2: 1 x", "a: 1", "2: 1.5", ""])
def test_parse_rejects_malformed(text):
    with pytest.raises(BraidSyntaxError):
        parse_braid(text)


@pytest.mark.parametrize("text", ["2: 0", "3: -3", "0:"])
def test_parse_rejects_out_of_range(text):
    with pytest.raises(BraidRangeError):
        parse_braid(text)


def test_empty_word():
    b = parse_braid("3:")
    assert b.word == ()
    assert format_braid(b) == "3:"


def test_props_examples():
    assert braid_props(parse_braid("2: 1 1 1")) == {"writhe": 3, "permutation": (1, 0), "components": 1}
    p = braid_props(parse_braid("2: -1 -1 -1 -1"))
    assert (p["writhe"], p["components"]) == (-4, 2)
    p = braid_props(parse_braid("3:"))
    assert (p["writhe"], p["components"]) == (0, 3)


def test_torus_braid_examples():
    assert format_braid(torus_braid(2, 5)) == "2: 1 1 1 1 1"
    assert format_braid(torus_braid(2, -4)) == "2: -1 -1 -1 -1"
    assert components(torus_braid(3, 4)) == 1
    assert len(torus_braid(4, -3).word) == 9


@pytest.mark.parametrize("m", range(2, 6))
@pytest.mark.parametrize("p", [p for p in range(-10, 11) if p])
def test_torus_components(m, p):
    assert components(torus_braid(m, p)) == math.gcd(m, abs(p))


@given(braid_words())
def test_format_parse_round_trip(sw):
    b = BraidWord(*sw)
    assert parse_braid(format_braid(b)) == b


@given(braid_words())
def test_mirror(sw):
    b = BraidWord(*sw)
    m = mirror_braid(b)
    assert writhe(m) == -writhe(b)
    assert permutation(m) == permutation(b)
    assert mirror_braid(m) == b


@given(braid_words())
def test_permutation_is_bijection(sw):
    b = BraidWord(*sw)
    assert sorted(permutation(b)) == list(range(b.strands))


def test_connected_sum_examples():
    t = parse_braid("2: 1 1 1")
    assert format_braid(connected_sum(t, t)) == "3: 1 1 1 2 2 2"
    assert connected_sum(t, BraidWord(1, ())) == t
    with pytest.raises(NotAKnot):
        connected_sum(t, parse_braid("2: 1 1"))


def test_connected_sum_with_negative_letters():
    f8 = parse_braid("3: 1 -2 1 -2")
    s = connected_sum(f8, parse_braid("2: -1 -1 -1"))
    assert format_braid(s) == "4: 1 -2 1 -2 -3 -3 -3"
    assert components(s) == 1


def test_named_braids_load():
    named = load_named_braids()
    assert {"trefoil", "figure8", "9_20"} <= set(named)
    assert named["figure8"] == parse_braid("3: 1 -2 1 -2")
    assert components(named["9_20"]) == 1

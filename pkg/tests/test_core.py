import math

import pytest
from hypothesis import given, settings, strategies as st

from semitree import core
from semitree.core import from_gaps, from_generators, from_small_members, parse
from semitree.errors import GcdNotOne, IndexBelowConductor, NotClosed, NotMember, ParseError


def test_from_generators_examples():
    s = from_generators([2, 3])
    assert (s.gaps, s.conductor, s.genus) == ((1,), 2, 1)
    t = from_generators([1])
    assert t.is_trivial and t.genus == 0 and t.multiplicity == 1
    u = from_generators([3, 5, 7])
    assert (u.gaps, u.conductor, u.genus) == ((1, 2, 4), 5, 3)


def test_from_generators_rejects_common_factor():
    with pytest.raises(GcdNotOne):
        from_generators([4, 6])


def test_from_gaps_examples():
    assert from_gaps([]).is_trivial
    assert from_gaps({1, 2, 4}) == from_generators([3, 5, 7])
    assert from_gaps({1, 3}) == from_generators([2, 5])
    s = from_gaps({1, 2, 3, 5})
    assert core.minimal_generators(s) == [4, 6, 7, 9]
    assert (s.conductor, s.genus) == (6, 4)


def test_from_gaps_not_closed():
    # 1 + 1 = 2 is a gap while 1 is not
    with pytest.raises(NotClosed):
        from_gaps({2})


def test_contains():
    s = from_generators([3, 5, 7])
    assert 4 not in s and core.contains(s, 0)
    assert core.contains(from_generators([2, 3]), 10**6)
    assert -1 not in s


def test_lambda():
    s = from_generators([3, 5, 7])
    assert core.lambda_(s, 1) == 3
    assert core.lambda_(s, s.conductor - s.genus) == s.conductor
    triv = core.TRIVIAL
    assert [core.lambda_(triv, k) for k in range(5)] == list(range(5))
    assert core.lambda_index(s, 7) == 4
    with pytest.raises(NotMember):
        core.lambda_index(s, 4)


def test_minimal_generators_examples():
    assert core.minimal_generators(from_generators([3, 5, 7])) == [3, 5, 7]
    assert core.minimal_generators(from_small_members([0, 4, 5, 8, 9, 10], 12)) == [4, 5]
    assert core.minimal_generators(core.TRIVIAL) == [1]
    assert core.minimal_generators(from_small_members([0, 4, 7, 8, 9], 11)) == [4, 7, 9]


def test_d_set_and_nu():
    s = from_generators([2, 3])
    assert core.d_set(s, 1) == {1}
    assert core.d_set(core.TRIVIAL, 4) == set()
    t = from_generators([3, 5, 7])
    assert core.d_set(t, core.lambda_index(t, 5)) == {1, 4}
    assert core.nu(s, 1) == 2
    assert core.nu(t, 0) == 1


def test_generator_test_above_conductor():
    s = from_generators([2, 3])
    assert core.is_generator_above_conductor(s, 2)
    assert not core.is_generator_above_conductor(s, 3)
    ps3 = from_small_members([0, 3], 5)
    assert core.is_generator_above_conductor(ps3, core.lambda_index(ps3, 5))
    with pytest.raises(IndexBelowConductor):
        core.is_generator_above_conductor(from_generators([3, 5, 7]), 1)


def test_canonical_and_parse():
    s = from_generators([3, 5, 7])
    assert core.canonical_string(s) == "<3,5,7>"
    assert parse("G:{}").is_trivial
    t = parse("<2,9>")
    assert t.small_members == (0, 2, 4, 6) and t.conductor == 8 and t.genus == 4
    assert parse(" G:{ 1, 2,4 } ") == s
    assert parse("<7,3,5,6>") == s


@pytest.mark.parametrize("text,pos", [("3,5>", 0), ("<3,x>", 3), ("<3,5", 4), ("G:[1]", 2)])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == pos


def test_record_field_order():
    rec = core.to_record(from_generators([3, 5, 7]))
    assert list(rec) == ["gens", "gaps", "c", "g", "m"]
    assert rec == {"gens": [3, 5, 7], "gaps": [1, 2, 4], "c": 5, "g": 3, "m": 3}


def test_mask_invariants():
    s = from_generators([4, 6, 7, 9])
    assert s.mask & 1
    assert not (s.mask >> (s.conductor - 1)) & 1
    assert all((s.mask >> n) & 1 for n in range(s.conductor, s.bound))
    assert s.mask < (1 << s.bound)


gen_lists = st.lists(st.integers(min_value=2, max_value=23), min_size=1, max_size=5).filter(
    lambda xs: math.gcd(*xs) == 1)


def _closure(gens, limit):
    members = {0}
    for n in range(1, limit):
        if any(n - a in members for a in gens if a <= n):
            members.add(n)
    return members


@settings(max_examples=200, deadline=None)
@given(gen_lists)
def test_from_generators_matches_closure(gens):
    s = from_generators(gens)
    limit = s.conductor + 3 * max(gens)
    assert set(s.members(limit)) == _closure(gens, limit)
    assert from_gaps(s.gaps) == s
    assert parse(core.canonical_string(s)) == s
    assert from_generators(core.minimal_generators(s)) == s


@settings(max_examples=200, deadline=None)
@given(gen_lists)
def test_nu_identity_and_lambda(gens):
    s = from_generators(gens)
    c, g, m = s.conductor, s.genus, s.multiplicity
    for i in range(c - g + 2 * m + 1):
        assert core.nu(s, i) == core.nu_from_gaps(s, i)
        assert core.lambda_index(s, core.lambda_(s, i)) == i
    for i in range(c - g, c - g + 2 * m):
        assert core.lambda_(s, i) == i + g
        assert core.is_generator_above_conductor(s, i) == (core.nu(s, i) == 2)

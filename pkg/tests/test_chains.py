import pytest

from semitree import chains as ch
from semitree import oracles, tree
from semitree.core import TRIVIAL, canonical_string, from_generators, from_small_members, parse
from semitree.errors import BadParameter, NotApplicable, TrivialSemigroup


def names(ss):
    return [canonical_string(s) for s in ss]


def test_small_element_gcd():
    assert ch.small_element_gcd(from_generators([2, 5])) == 2
    assert ch.small_element_gcd(from_small_members([0, 8], 10)) == 8
    assert ch.small_element_gcd(from_generators([3, 4])) == 1
    assert ch.small_element_gcd(from_small_members([0], 5)) == 0
    with pytest.raises(TrivialSemigroup):
        ch.small_element_gcd(TRIVIAL)


def test_analyze_finite_subtree():
    v = ch.analyze(from_small_members([0, 4, 5], 7)).verdict
    assert isinstance(v, ch.FiniteSubtree)
    assert v.deepest == from_generators([4, 5]) and v.max_genus == 6


def test_analyze_one_chain():
    a = ch.analyze(from_generators([2, 5]))
    assert a.d == 2
    assert a.verdict.count == 1 and a.verdict.witnesses == (TRIVIAL,)


def test_analyze_two_chains():
    v = ch.analyze(from_small_members([0, 6, 10, 12], 13)).verdict
    assert isinstance(v, ch.FinitelyManyChains)
    assert v.count == 2
    assert sorted(names(v.witnesses)) == ["<3,5,7>", "<3,5>"]


def test_analyze_composite_and_ordinary():
    assert isinstance(ch.analyze(from_small_members([0, 8], 10)).verdict, ch.InfinitelyManyChains)
    assert isinstance(ch.analyze(from_small_members([0], 6)).verdict, ch.InfinitelyManyChains)
    with pytest.raises(TrivialSemigroup):
        ch.analyze(TRIVIAL)


def test_witnesses_satisfy_trace_condition():
    s = from_small_members([0, 6, 10, 12], 13)
    d = ch.small_element_gcd(s)
    bound = -(-s.conductor // d)
    for w in ch.analyze(s).verdict.witnesses:
        assert [x for x in w.members(bound)] == [x // d for x in s.small_members]


def test_literal_descendant_count_reported():
    # base of <2,5> is the whole of N0, whose subtree is infinite
    assert ch.analyze(from_generators([2, 5])).verdict.literal_descendant_count is None
    s = from_small_members([0, 6, 10, 12], 13)
    assert ch.base_semigroup(s, 2) == from_generators([3, 5, 7])
    assert ch.analyze(s).verdict.literal_descendant_count is None
    agree = parse("<8,10,13,14,15,17,19>")
    v = ch.analyze(agree).verdict
    assert v.count == v.literal_descendant_count == 3
    # the base <4,5,7> has conductor below ceil(c/d) here, so the literal count overshoots
    differ = parse("<8,10,14,17,19,21,23>")
    v = ch.analyze(differ).verdict
    assert ch.base_semigroup(differ, 2) == from_generators([4, 5, 7])
    assert (v.count, v.literal_descendant_count) == (1, 3)
    assert len(oracles.tracked_chains(differ, 2)) == 1


def test_chain_prefix_examples():
    assert names(ch.chain_prefix(2, TRIVIAL, 4)) == ["<1>", "<2,3>", "<2,5>", "<2,7>", "<2,9>"]
    # 3N0 U [j, inf) for j = 0..8, repetitions removed
    assert names(ch.chain_prefix(3, TRIVIAL, 4)) == ["<1>", "<2,3>", "<3,4,5>", "<3,5,7>", "<3,7,8>"]
    for d in (2, 3, 5):
        assert ch.chain_prefix(d, from_generators([2, 3]), 0) == [TRIVIAL]
    with pytest.raises(BadParameter):
        ch.chain_prefix(1, TRIVIAL, 3)


def test_chain_prefix_is_a_tree_path():
    for d in (2, 3, 4):
        for base in (TRIVIAL, from_generators([2, 3]), from_generators([3, 5, 7])):
            prefix = ch.chain_prefix(d, base, 14)
            for a, b in zip(prefix, prefix[1:]):
                assert tree.parent(b) == a


def test_bounds_check_examples():
    s = from_small_members([0, 8], 10)
    b = ch.effective_generator_bounds_check(s)
    assert b.effective_lb_ok and b.strong_rule == "single" and b.strong_lb_ok
    assert set(range(10, 18)) - {16} <= set(tree.effective_generators(s))
    assert tree.classify(s, 12) is tree.Strength.WEAK
    t = from_small_members([0, 6, 10, 12], 13)
    bt = ch.effective_generator_bounds_check(t)
    assert bt.strong_rule == "two-or-more" and bt.strong_lb_ok
    assert tree.classify(t, 13) is tree.Strength.STRONG
    h = ch.effective_generator_bounds_check(from_generators([2, 5]))
    assert h.strong_lb_ok and tree.classify(from_generators([2, 5]), 5) is tree.Strength.STRONG
    with pytest.raises(NotApplicable):
        ch.effective_generator_bounds_check(from_generators([3, 4]))


def test_oracles_on_examples():
    prof = oracles.subtree_profile(from_small_members([0, 4, 5], 7))
    assert prof.finite and prof.max_genus == 6 and prof.deepest == (from_generators([4, 5]),)
    assert not oracles.subtree_profile(from_generators([2, 5])).finite
    s = from_small_members([0, 6, 10, 12], 13)
    assert oracles.tracked_chains(s, 2) == list(ch.analyze(s).verdict.witnesses)


def test_parse_gap_form_chain_input():
    s = parse("G:{1,2,3,4,5,7,8,9,11}")
    assert s == from_small_members([0, 6, 10, 12], 13)

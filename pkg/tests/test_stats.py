import json

import pytest

from semitree import classes as cl
from semitree import stats as st
from semitree.errors import InsufficientRange
from semitree.oracles import naive_stats
from semitree import tree


def test_small_counts():
    table = st.aggregate(4)
    assert [r.n for r in table] == [1, 1, 2, 4, 7]


def test_row_invariants():
    for r in st.aggregate(14):
        assert r.n == sum(r.strong_hist.values()) == r.leaf + r.stick + r.bush
        assert r.irreducible == r.symmetric + r.pseudo_symmetric


@pytest.mark.parametrize("include", [False, True])
def test_matches_naive_oracle(include):
    fast = st.aggregate(12, include_ordinary=include)
    slow = naive_stats(12, include_ordinary=include)
    for a, b in zip(fast, slow):
        assert (a.n, a.strong, a.weak, a.strong_hist) == (b.n, b.strong, b.weak, b.hist)


def test_ordinary_convention_changes_only_ordinary_rows():
    ex, inc = st.aggregate(10), st.aggregate(10, include_ordinary=True)
    for a, b in zip(ex, inc):
        assert a.n == b.n
        assert b.strong + b.weak - (a.strong + a.weak) == (a.g + 1 if a.g else 1)


def test_merge_is_commutative_and_associative():
    rows = [st.GenusStats(3, 1, 2, 1, {0: 1}, leaf=1), st.GenusStats(3, 2, 0, 3, {1: 2}, bush=2),
            st.GenusStats(3, 1, 1, 1, {0: 1}, stick=1)]
    a, b, c = rows
    assert a.merge(b) == b.merge(a)
    assert a.merge(b).merge(c) == a.merge(b.merge(c))


def test_workers_do_not_change_output():
    serial = st.to_csv(st.aggregate(16))
    assert st.to_csv(st.aggregate(16, workers=3)) == serial
    assert st.to_csv(st.aggregate(16, workers=2, split_genus=5)) == serial


def test_csv_layout():
    text = st.to_csv(st.aggregate(5))
    lines = text.splitlines()
    assert lines[0] == "# strength convention: exclude-ordinary"
    assert lines[1].split(",")[:13] == st.COLUMNS
    assert lines[2].startswith("0,1,0,0,,")
    assert lines[6].split(",")[:2] == ["4", "7"]
    assert "include-ordinary" in st.to_csv(st.aggregate(3, include_ordinary=True), True)


def test_json_mirror():
    data = json.loads(st.to_json(st.aggregate(5)))
    assert data["convention"] == "exclude-ordinary"
    assert [r["n_g"] for r in data["rows"]] == [1, 1, 2, 4, 7, 12]


def test_bounds_report():
    rows = st.bounds_report(st.aggregate(12))
    assert (rows[0].g, rows[0].lower, rows[0].n, rows[0].upper) == (3, 4, 4, 4)
    assert (rows[1].lower, rows[1].n, rows[1].upper) == (6, 7, 7)
    assert all(r.lower_ok and r.upper_ok for r in rows)


def test_eo_diagonals_range():
    table = st.aggregate(10)
    eo = st.eo_diagonals(table, j_max=3)
    assert len(eo.e) == 4
    with pytest.raises(InsufficientRange):
        st.eo_diagonals(table, j_max=4)


def test_eo_genus_offset_pairs():
    table = st.aggregate(12)
    lit = st.eo_diagonals(table, j_max=2)
    off = st.eo_diagonals(table, j_max=2, genus_offset=1)
    # with the offset the even samples come from odd tree genus
    assert all(g % 2 == 1 for g, _ in off.e[0].samples)
    assert all(g % 2 == 0 for g, _ in lit.e[0].samples if g)


def test_superincreasing():
    assert st.is_superincreasing([2, 2, 5, 12, 21, 45])
    assert st.is_superincreasing([1, 2, 3, 8, 14, 34])
    assert not st.is_superincreasing([1, 2, 2])


def test_label_histograms():
    hist = st.tree_label_histograms(3)
    assert hist[3] == {4: 1, 2: 1, 0: 1, 1: 1}


def test_class_counts_against_slow_predicates():
    table = st.aggregate(10)
    want = [[0] * 4 for _ in range(11)]

    def visit(node):
        s = node.semigroup
        row = want[node.genus]
        row[0] += cl.is_symmetric(s)
        row[1] += cl.is_pseudo_symmetric(s)
        row[2] += cl.is_hyperelliptic(s)
        row[3] += cl.is_arf(s)
    tree.walk(10, visit)
    for r, w in zip(table, want):
        assert [r.symmetric, r.pseudo_symmetric, r.hyperelliptic, r.arf] == w


def test_plot_data():
    lines = st.plot_data(st.aggregate(4)).splitlines()
    assert lines[0] == "g,n_g,lower_2F_g,upper_1_3_2^(g-3)"
    assert lines[4] == "3,4,4,4"

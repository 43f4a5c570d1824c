"""Exhaustive property suites, one per group of structural claims.

Each suite walks the tree (or a parameter range) and returns a
``SuiteResult`` listing every violated property. Suites never stop at the
first failure so a report shows the whole picture.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from . import chains as ch
from . import classes as cl
from . import core
from . import oracles
from . import stats as st
from . import tree
from . import tree_a as ta
from .tree import Strength

MAX_MESSAGES = 40


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def check(self, cond: bool, message) -> bool:
        self.checked += 1
        if not cond:
            self.failure_count += 1
            if len(self.failures) < MAX_MESSAGES:
                self.failures.append(message() if callable(message) else message)
        return cond

    def summary(self) -> str:
        status = "ok" if self.ok else f"FAILED ({self.failure_count})"
        return f"{self.name}: {self.checked} checks, {status}"


def _nodes(max_genus: int) -> list[tree.TreeNode]:
    out: list[tree.TreeNode] = []
    tree.walk(max_genus, out.append)
    return out


def _name(s) -> str:
    return core.canonical_string(s)


# -- core ---------------------------------------------------------------------


def core_identities(max_genus: int = 12) -> SuiteResult:
    r = SuiteResult("core-identities")
    for node in _nodes(max_genus):
        s = node.semigroup
        c, g, m = s.conductor, s.genus, s.multiplicity
        r.check(core.from_gaps(s.gaps) == s, lambda: f"{_name(s)}: gap round trip")
        r.check(core.parse(_name(s)) == s, lambda: f"{_name(s)}: parse round trip")
        r.check(core.lambda_(s, c - g) == c, lambda: f"{_name(s)}: lambda_(c-g) != c")
        for i in range(c - g + 2 * m + 1):
            r.check(core.nu(s, i) == core.nu_from_gaps(s, i), lambda: f"{_name(s)}: nu identity at i={i}")
            if i >= c - g:
                r.check(core.lambda_(s, i) == i + g, lambda: f"{_name(s)}: lambda_{i} != {i + g}")
        gens = core.minimal_generators(s)
        for x in gens:
            rest = [y for y in gens if y != x]
            if rest and math.gcd(*rest) == 1:
                t = core.from_generators(rest)
                r.check(x not in t and all(y in s for y in t.small_members),
                        lambda: f"{_name(s)}: generator {x} is redundant")
        genset = set(gens)
        for x in range(c, c + 2 * m):
            i = core.lambda_index(s, x)
            by_d = core.is_generator_above_conductor(s, i)
            by_nu = core.nu(s, i) == 2
            r.check(by_d == by_nu == (x in genset), lambda: f"{_name(s)}: generator tests disagree at {x}")
    return r


# -- tree -----------------------------------------------------------------------


def lemma1(max_genus: int = 16, cascade_genus: int = 14) -> SuiteResult:
    r = SuiteResult("lemma1")
    for node in _nodes(max_genus):
        s = node.semigroup
        eff = [e for e, _ in node.effective_gens]
        kid_counts = []
        for j, (e, strength) in enumerate(node.effective_gens):
            child = tree.remove(s, e)
            r.check(tree.parent(child) == s, lambda: f"{_name(s)}: parent of child by {e} differs")
            got = tree.effective_generators(child)
            kid_counts.append(len(got))
            if node.ordinary:
                continue
            later = eff[j + 1:]
            want = later + [e + s.multiplicity] if strength is Strength.STRONG else later
            r.check(got == want, lambda: f"{_name(s)}: removing {e} gives {got}, expected {want}")
        all_weak = eff and all(x is Strength.WEAK for _, x in node.effective_gens)
        if all_weak and not node.ordinary and node.genus <= cascade_genus:
            r.check(sorted(kid_counts) == list(range(len(eff))),
                    lambda: f"{_name(s)}: all-weak children have {kid_counts} generators")
    return r


def strength_equivalence(max_genus: int = 16) -> SuiteResult:
    r = SuiteResult("strength-equivalence")
    for node in _nodes(max_genus):
        s = node.semigroup
        if node.ordinary:
            continue
        r.check(2 * s.multiplicity not in core.minimal_generators(s),
                lambda: f"{_name(s)}: twice the multiplicity is a generator")
        for e, walker in node.effective_gens:
            slow = tree.classify(s, e)
            fast = tree.classify(s, e, fast=True)
            r.check(slow is fast is walker,
                    lambda: f"{_name(s)}: {e} definitional={slow.value} nu={fast.value} walker={walker.value}")
    return r


# -- classes --------------------------------------------------------------------


def symmetric(max_genus: int = 16, hyper_max: int = 61) -> SuiteResult:
    r = SuiteResult("symmetric")
    # <2,3> is ordinary and has two effective generators; the family starts at n = 2
    for n in range(2, (hyper_max - 1) // 2 + 1):
        s = core.from_generators([2, 2 * n + 1])
        eff = tree.effective_generators(s)
        r.check(eff == [s.conductor + 1], lambda: f"{_name(s)}: effective generators {eff}")
        if eff:
            r.check(tree.classify(s, eff[0]) is Strength.STRONG, lambda: f"{_name(s)}: generator not strong")
    for node in _nodes(max_genus):
        s = node.semigroup
        if s.is_trivial or node.ordinary:
            continue
        if cl.is_hyperelliptic(s):
            r.check(node.effective_gens == ((s.conductor + 1, Strength.STRONG),),
                    lambda: f"{_name(s)}: hyperelliptic node is not a strong stick")
        elif cl.is_symmetric(s):
            r.check(not node.effective_gens, lambda: f"{_name(s)}: symmetric node is not a leaf")
    return r


def pseudo_symmetric(max_genus: int = 16) -> SuiteResult:
    r = SuiteResult("pseudo-symmetric")
    ps3 = cl.ps_family(3)
    for node in _nodes(max_genus):
        s = node.semigroup
        if not cl.is_pseudo_symmetric(s) or node.ordinary:
            continue
        g, c = s.genus, s.conductor
        if s.multiplicity == 3:
            k, rem = divmod(g, 3)
            variant = {0: "A", 2: "B"}.get(rem)
            r.check(variant is not None and k >= 1 and cl.ps_mult3_family(k, variant) == s,
                    lambda: f"{_name(s)}: not in the multiplicity-3 families")
            if s == ps3:
                continue
            r.check(node.effective_gens == ((c + 2, Strength.WEAK),),
                    lambda: f"{_name(s)}: expected a single weak generator {c + 2}")
            if node.effective_gens:
                child = tree.remove(s, node.effective_gens[0][0])
                r.check(cl.is_symmetric(child) and not cl.is_hyperelliptic(child)
                        and not tree.effective_generators(child),
                        lambda: f"{_name(s)}: child is not a symmetric leaf")
        elif cl.non_gap_intervals(s) >= 2:
            r.check(not node.effective_gens, lambda: f"{_name(s)}: multi-interval node is not a leaf")
        else:
            r.check(s == cl.ps_family(g), lambda: f"{_name(s)}: single interval but not the standard family")
    s = ps3
    r.check(tuple((e, tree.classify(s, e)) for e in tree.effective_generators(s))
            == ((5, Strength.STRONG), (7, Strength.WEAK)), "genus 3 family member: expected 5+ 7-")
    s = cl.ps_family(4)
    r.check(tuple((e, tree.classify(s, e)) for e in tree.effective_generators(s))
            == ((7, Strength.STRONG),), "genus 4 family member: expected 7+")
    for g in range(5, max_genus + 1):
        s = cl.ps_family(g)
        got = tuple((e, tree.classify(s, e)) for e in tree.effective_generators(s))
        r.check(got == ((s.conductor, Strength.WEAK),), lambda: f"{_name(s)}: expected a weak stick at c")
    return r


def arf(max_genus: int = 16) -> SuiteResult:
    r = SuiteResult("arf")
    for node in _nodes(max_genus):
        s = node.semigroup
        if s.is_trivial or not cl.is_arf(s):
            continue
        p = tree.parent(s)
        if not tree.is_ordinary(p):
            e = s.conductor - 1
            r.check(tree.classify(p, e) is Strength.STRONG,
                    lambda: f"{_name(s)}: removed generator {e} is weak in {_name(p)}")
        if cl.is_hyperelliptic(s):
            continue
        r.check(len(node.effective_gens) >= 2, lambda: f"{_name(s)}: Arf node is not a bush")
        arf_kids = [e for e, _ in node.effective_gens if cl.is_arf(tree.remove(s, e))]
        r.check(len(arf_kids) <= 2, lambda: f"{_name(s)}: Arf children by {arf_kids}")
    return r


# -- chains -----------------------------------------------------------------------


def chains(max_genus: int = 13, prefix_genus: int | None = None) -> SuiteResult:
    r = SuiteResult("chains")
    prime_cases = 0
    for node in _nodes(max_genus):
        s = node.semigroup
        if s.is_trivial:
            continue
        a = ch.analyze(s, literal=False)
        prof = oracles.subtree_profile(s)
        r.check(prof.finite == (a.d == 1), lambda: f"{_name(s)}: d={a.d} but finite={prof.finite}")
        v = a.verdict
        if isinstance(v, ch.FiniteSubtree):
            r.check(prof.max_genus == v.max_genus and prof.deepest == (v.deepest,),
                    lambda: f"{_name(s)}: deepest {[_name(x) for x in prof.deepest]} at {prof.max_genus}, "
                            f"predicted {_name(v.deepest)} at {v.max_genus}")
        elif isinstance(v, ch.FinitelyManyChains):
            prime_cases += 1
            tracked = oracles.tracked_chains(s, a.d)
            r.check(tracked == list(v.witnesses) and v.count == len(tracked),
                    lambda: f"{_name(s)}: {v.count} chains predicted, {len(tracked)} tracked")
        if a.d > 1 and not node.ordinary:
            b = ch.effective_generator_bounds_check(s)
            r.check(b.effective_lb_ok and b.strong_lb_ok, lambda: f"{_name(s)}: generator bounds {b}")
    r.notes.append(f"{prime_cases} nodes with prime d")
    special = core.from_small_members([0, 6, 10, 12], 13)
    v = ch.analyze(special).verdict
    r.check(isinstance(v, ch.FinitelyManyChains) and v.count == 2, "{0,6,10,12}+[13,inf) should have 2 chains")

    bases = [n.semigroup for n in _nodes(4)]
    if prefix_genus is None:
        # deep enough that each d*base is fixed below the last conductor
        prefix_genus = max(ch.scaled_union(d, b, d * b.conductor + 1).genus
                           for d in range(2, 6) for b in bases)
    seen = {}
    for d in range(2, 6):
        for base in bases:
            prefix = ch.chain_prefix(d, base, prefix_genus)
            for prev, nxt in zip(prefix, prefix[1:]):
                r.check(tree.parent(nxt) == prev, lambda: f"d={d} base={_name(base)}: broken parent link")
            for t in prefix:
                want = [x for x in range(t.conductor) if x % d == 0 and x // d in base]
                r.check(list(t.small_members) == want, lambda: f"d={d} base={_name(base)}: {_name(t)} leaves d*base")
            key = tuple(prefix)
            r.check(key not in seen, lambda: f"d={d} base={_name(base)} and {seen.get(key)} share a prefix")
            seen[key] = (d, _name(base))
    return r


# -- tree A -----------------------------------------------------------------------


def random_seed(rng: random.Random, l: int) -> ta.LabelMultiset:
    counts = {x: rng.randint(0, 4) for x in range(l - 1)}
    counts[l - 1] = 1
    counts[l + 1] = 1
    return ta.LabelMultiset.from_dict(counts)


def tail_dominated(small: dict, big: dict) -> bool:
    """An injection ``small -> big`` with non-decreasing labels exists."""
    top = max(list(small) + list(big), default=0)
    need = have = 0
    for t in range(top, -1, -1):
        need += small.get(t, 0)
        have += big.get(t, 0)
        if need > have:
            return False
    return True


def tree_a(max_genus: int = 14, a_max: int = 200, seeds: int = 50, rng_seed: int = 2024) -> SuiteResult:
    r = SuiteResult("tree-a")
    for g, level in enumerate(ta.a_levels(a_max)):
        if g >= 2:
            r.check(level.total == 2 * ta.fibonacci(g), lambda: f"|A_{g}| = {level.total}")
    rng = random.Random(rng_seed)
    for _ in range(seeds):
        l = rng.randint(2, 8)
        seed = random_seed(rng, l)
        k_max = 2 * l + 40
        levels = ta.l_recursion(l, seed, k_max)
        plain = ta.l_recursion(l, ta.LabelMultiset.from_dict({l - 1: 1, l + 1: 1}), k_max)
        for k in range(2 * l, k_max + 1):
            cur, p1, p2 = (levels[k - l].total, levels[k - l - 1].total, levels[k - l - 2].total)
            r.check(cur == p1 + p2, lambda: f"seed {seed.as_dict()} (l={l}): |L_{k}| = {cur} != {p1} + {p2}")
            r.check(cur == 2 * ta.fibonacci(k), lambda: f"seed {seed.as_dict()} (l={l}): |L_{k}| = {cur} != 2F_{k}")
            r.check(levels[k - l] == plain[k - l], lambda: f"seed {seed.as_dict()} (l={l}): L_{k} not stabilized")
    hists = st.tree_label_histograms(max_genus)
    per_label = []
    for g, (level, hist) in enumerate(zip(ta.a_levels(max_genus), hists)):
        a = level.as_dict()
        r.check(tail_dominated(a, hist), lambda: f"A_{g} {a} does not embed in tree level {hist}")
        if not ta.dominated(a, hist):
            per_label.append(g)
    r.notes.append(f"per-label domination fails at g in {per_label}")
    return r


# -- stats ------------------------------------------------------------------------


def bounds(max_genus: int = 26, workers: int = 1) -> SuiteResult:
    r = SuiteResult("bounds")
    counts = tree.level_counts(max_genus, workers=workers)
    for g, n in enumerate(counts):
        if g < 3:
            continue
        lo, hi = 2 * ta.fibonacci(g), 1 + 3 * 2 ** (g - 3)
        r.check(lo <= n <= hi, lambda: f"g={g}: n={n} outside [{lo}, {hi}]")
    return r


E_PREFIX = [2, 2, 5, 12, 21]
O_PREFIX = [1, 2, 3, 8, 14]


def histograms(max_genus: int = 22, workers: int = 1, include_ordinary: bool = False) -> SuiteResult:
    """Strong-count histogram claims read at the literal genus."""
    r = SuiteResult("histograms")
    table = st.aggregate(max_genus, include_ordinary=include_ordinary, workers=workers)
    for row in table[1:]:
        bound = (row.g - 1) // 2
        over = {i: v for i, v in row.strong_hist.items() if i > bound and v}
        r.check(not over, lambda: f"g={row.g}: nodes with more than {bound} strong generators: {over}")
    if max_genus < 4:
        return r
    eo = st.eo_diagonals(table)
    e, o = eo.e_prefix()[: len(E_PREFIX)], eo.o_prefix()[: len(O_PREFIX)]
    r.check(e == E_PREFIX, lambda: f"e diagonal {e}, expected {E_PREFIX}")
    r.check(o == O_PREFIX, lambda: f"o diagonal {o}, expected {O_PREFIX}")
    if max_genus >= 22:
        lo, hi = st.strong_weak_ratio(table[22]), st.strong_weak_ratio(table[12])
        r.check(lo < hi, lambda: f"S/W at 22 = {lo:.4f} not below S/W at 12 = {hi:.4f}")
    return r


SUITES = {
    "core-identities": core_identities,
    "lemma1": lemma1,
    "strength-equivalence": strength_equivalence,
    "symmetric": symmetric,
    "pseudo-symmetric": pseudo_symmetric,
    "arf": arf,
    "chains": chains,
    "tree-a": tree_a,
    "bounds": bounds,
    "histograms": histograms,
}

GROUPS = {
    "lemmas": ["lemma1", "strength-equivalence", "symmetric", "pseudo-symmetric", "arf"],
    "all": list(SUITES),
}

# suites whose size is not a genus bound on a tree walk take extra keywords
_TAKES_WORKERS = {"bounds", "histograms"}


def run_suite(name: str, max_genus: int | None = None, workers: int = 1) -> SuiteResult:
    fn = SUITES[name]
    kwargs = {}
    if max_genus is not None:
        kwargs["max_genus"] = max_genus
    if name in _TAKES_WORKERS:
        kwargs["workers"] = workers
    return fn(**kwargs)


def expand_names(name: str) -> list[str]:
    if name in GROUPS:
        return GROUPS[name]
    if name in SUITES:
        return [name]
    raise KeyError(name)

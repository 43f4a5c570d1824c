"""Infinite chains through a node of the semigroup tree.

A node lies on an infinite chain iff ``d``, the gcd of its nonzero members
below the conductor, differs from 1. For ``d == 1`` the subtree is finite and
its deepest node is the semigroup generated by those small members. For
``d`` prime the chains through the node are in bijection with the semigroups
``T`` whose members below ``ceil(c / d)`` are exactly the small members
divided by ``d`` (each chain is ``d*T U [j, inf)`` for growing ``j``).
Composite ``d`` gives infinitely many chains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import Semigroup, _build, from_generators
from .errors import BadParameter, NotApplicable, TrivialSemigroup
from .tree import Strength, classify, effective_generators, is_ordinary, walk_subtree


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, math.isqrt(n) + 1))


def small_element_gcd(s: Semigroup) -> int:
    """gcd of the nonzero members below the conductor; 0 for ordinary semigroups."""
    if s.is_trivial:
        raise TrivialSemigroup("the trivial semigroup has no small elements")
    return math.gcd(*s.small_members)


@dataclass(frozen=True)
class FiniteSubtree:
    deepest: Semigroup
    max_genus: int


@dataclass(frozen=True)
class FinitelyManyChains:
    count: int
    witnesses: tuple[Semigroup, ...]
    # descendants of the base semigroup read literally; None when that subtree is infinite
    literal_descendant_count: int | None = None


@dataclass(frozen=True)
class InfinitelyManyChains:
    pass


@dataclass(frozen=True)
class ChainAnalysis:
    d: int
    verdict: FiniteSubtree | FinitelyManyChains | InfinitelyManyChains


def trace_base(s: Semigroup, d: int) -> tuple[tuple[int, ...], int]:
    """Small members divided by ``d`` and the trace bound ``ceil(c / d)``."""
    return tuple(x // d for x in s.small_members), -(-s.conductor // d)


def base_semigroup(s: Semigroup, d: int) -> Semigroup:
    """``{lambda_i / d : i < c - g} U [ceil(c/d), inf)``."""
    trace, m = trace_base(s, d)
    small = 0
    for x in trace:
        small |= 1 << x
    c = m
    while c > 0 and (small >> (c - 1)) & 1:
        c -= 1
    return _build(small, c)


def trace_witnesses(trace, bound: int) -> list[Semigroup]:
    """All semigroups whose members below ``bound`` are exactly ``trace``.

    Every such semigroup contains the one generated by ``trace``, so it is
    that semigroup plus a closed choice of its gaps at or above ``bound``.
    Enumerated by DFS over those gaps in increasing order.
    """
    gens = [x for x in trace if x > 0]
    core = from_generators(gens) if gens else _build(0, 0)
    optional = [x for x in core.gaps if x >= bound]
    top = core.conductor
    base_small = core.small_mask
    found: list[Semigroup] = []

    def members_of(small, n):
        return n >= top or (small >> n) & 1

    def closed(small):
        mem = [n for n in range(1, top) if (small >> n) & 1]
        for i, a in enumerate(mem):
            for b in mem[i:]:
                if a + b >= top:
                    break
                if not (small >> (a + b)) & 1:
                    return False
        return True

    def dfs(pos, small):
        if pos == len(optional):
            if closed(small):
                c = top
                while c > 0 and (small >> (c - 1)) & 1:
                    c -= 1
                found.append(_build(small, c))
            return
        x = optional[pos]
        # skip x only if no chosen members already force it
        forced = any((small >> a) & 1 and members_of(small, x - a) for a in range(1, x))
        if not forced:
            dfs(pos + 1, small)
        dfs(pos + 1, small | (1 << x))

    dfs(0, base_small)
    found.sort(key=lambda t: (t.genus, t.mask))
    return found


def analyze(s: Semigroup, *, literal: bool = True) -> ChainAnalysis:
    """Chain verdict for ``s``; ordinary semigroups lie on infinitely many chains."""
    d = small_element_gcd(s)
    if d == 0:
        return ChainAnalysis(0, InfinitelyManyChains())
    if d == 1:
        deepest = from_generators([x for x in s.small_members if x > 0])
        return ChainAnalysis(1, FiniteSubtree(deepest, deepest.genus))
    if not _is_prime(d):
        return ChainAnalysis(d, InfinitelyManyChains())
    trace, m = trace_base(s, d)
    witnesses = tuple(trace_witnesses(trace, m))
    literal_count = literal_descendant_count(base_semigroup(s, d)) if literal else None
    return ChainAnalysis(d, FinitelyManyChains(len(witnesses), witnesses, literal_count))


def literal_descendant_count(base: Semigroup) -> int | None:
    """Number of nodes in the subtree of ``base`` (itself included), or None if infinite."""
    if base.is_trivial or is_ordinary(base):
        return None
    d = small_element_gcd(base)
    if d != 1:
        return None
    deepest = from_generators([x for x in base.small_members if x > 0])
    return sum(1 for _ in walk_subtree(base, deepest.genus))


def scaled_union(d: int, base: Semigroup, j: int) -> Semigroup:
    """``d * base U [j, inf)``."""
    small = 0
    for n in range(j):
        if n % d == 0 and (n // d) in base:
            small |= 1 << n
    c = j
    while c > 0 and (small >> (c - 1)) & 1:
        c -= 1
    return _build(small, c)


def chain_prefix(d: int, base: Semigroup, max_genus: int) -> list[Semigroup]:
    """Deduplicated ``d * base U [j, inf)`` for ``j = 0, 1, ...`` up to ``max_genus``."""
    if d < 2:
        raise BadParameter(f"d must be >= 2, got {d}")
    if max_genus < 0:
        raise BadParameter("max_genus must be non-negative")
    out: list[Semigroup] = []
    j = 0
    while True:
        t = scaled_union(d, base, j)
        if t.genus > max_genus:
            return out
        if not out or out[-1] != t:
            out.append(t)
        j += 1


@dataclass(frozen=True)
class BoundsCheck:
    d: int
    effective_lb_ok: bool
    strong_lb_ok: bool
    # which strong-generator statement applied: "two-or-more" or "single"
    strong_rule: str
    effective_count: int
    strong_count: int
    notes: tuple[str, ...] = field(default=())


def effective_generator_bounds_check(s: Semigroup) -> BoundsCheck:
    """Check the effective/strong generator lower bounds for a node with ``d > 1``."""
    if s.is_trivial or is_ordinary(s):
        raise NotApplicable("needs a non-ordinary semigroup")
    d = small_element_gcd(s)
    if d <= 1:
        raise NotApplicable(f"d = {d}; the node does not lie on an infinite chain")
    c, m = s.conductor, s.multiplicity
    eff = effective_generators(s)
    effset = set(eff)
    strengths = {e: classify(s, e) for e in eff}
    strong = [e for e in eff if strengths[e] is Strength.STRONG]
    notes = []

    non_multiples = [x for x in range(c, c + m) if x % d]
    eff_ok = all(x in effset for x in non_multiples) and len(eff) >= m - m // d
    if not eff_ok:
        notes.append("some non-multiple of d in [c, c + m) is not a generator")

    nonzero_small = [x for x in s.small_members if x > 0]
    if len(nonzero_small) >= 2:
        rule = "two-or-more"
        window = [x for x in range(c, c + d) if x % d]
        strong_ok = all(x in effset and strengths[x] is Strength.STRONG for x in window) and len(strong) >= d - 1
    else:
        rule = "single"
        strong_ok = any(strengths.get(x) is Strength.STRONG for x in (c, c + 1))
    return BoundsCheck(d, eff_ok, strong_ok, rule, len(eff), len(strong), tuple(notes))

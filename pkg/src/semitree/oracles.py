"""Slow, independent reference computations used to cross-check the fast paths.

Nothing here shares code with the incremental walker beyond the Semigroup
value type: semigroups are handled as plain Python sets of gaps, generators
are found by brute force, and strength is decided by recomputing the child.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import Semigroup, from_gaps
from .tree import expand, frame_of, frame_semigroup, iter_frames, width_for


# -- naive genus-by-genus enumeration --------------------------------------


def _member(gaps: frozenset, n: int) -> bool:
    return n >= 0 and n not in gaps


def _conductor(gaps: frozenset) -> int:
    return max(gaps) + 1 if gaps else 0


def _min_gens(gaps: frozenset) -> list[int]:
    c = _conductor(gaps)
    mult = next(n for n in range(1, c + 2) if _member(gaps, n))
    gens = []
    for n in range(1, c + mult + 1):
        if not _member(gaps, n):
            continue
        if any(_member(gaps, a) and _member(gaps, n - a) for a in range(1, n)):
            continue
        gens.append(n)
    return gens


def naive_levels(max_genus: int) -> list[list[frozenset]]:
    """Gap sets of all semigroups of each genus.

    Level ``g + 1`` is every ``gaps | {x}`` for ``x`` any minimal generator of
    a level-``g`` semigroup, deduplicated; no conductor condition is used.
    """
    levels = [[frozenset()]]
    for _ in range(max_genus):
        nxt = set()
        for gaps in levels[-1]:
            for x in _min_gens(gaps):
                nxt.add(gaps | {x})
        levels.append(sorted(nxt, key=sorted))
    return levels


def naive_effective(gaps: frozenset) -> list[int]:
    c = _conductor(gaps)
    return [x for x in _min_gens(gaps) if x >= c]


def naive_is_ordinary(gaps: frozenset) -> bool:
    c = _conductor(gaps)
    return all(n in gaps for n in range(1, c))


def naive_strengths(gaps: frozenset, include_ordinary: bool = False) -> list[bool] | None:
    """Strong flags for each effective generator, or None for an excluded ordinary node."""
    eff = naive_effective(gaps)
    ordinary = naive_is_ordinary(gaps)
    if ordinary and not include_ordinary:
        return None
    mult = next(n for n in range(1, _conductor(gaps) + 2) if _member(gaps, n))
    flags = []
    for e in eff:
        later = {x for x in eff if x > e}
        child = set(naive_effective(gaps | {e}))
        if ordinary:
            flags.append(bool(child - later))
        elif child == later:
            flags.append(False)
        elif child == later | {e + mult}:
            flags.append(True)
        else:
            raise AssertionError(f"gaps {sorted(gaps)}: removing {e} gives {sorted(child)}")
    return flags


@dataclass
class NaiveRow:
    g: int
    n: int
    strong: int
    weak: int
    hist: dict[int, int]


def naive_stats(max_genus: int, include_ordinary: bool = False) -> list[NaiveRow]:
    rows = []
    for g, level in enumerate(naive_levels(max_genus)):
        strong = weak = 0
        hist: Counter = Counter()
        for gaps in level:
            flags = naive_strengths(gaps, include_ordinary)
            if flags is None:
                hist[0] += 1
                continue
            s = sum(flags)
            strong += s
            weak += len(flags) - s
            hist[s] += 1
        rows.append(NaiveRow(g, len(level), strong, weak, dict(sorted(hist.items()))))
    return rows


# -- subtree exploration ----------------------------------------------------


@dataclass(frozen=True)
class SubtreeProfile:
    finite: bool
    size: int
    max_genus: int
    deepest: tuple[Semigroup, ...]  # nodes attaining max_genus (finite case only)


def subtree_profile(s: Semigroup) -> SubtreeProfile:
    """Walk the subtree of ``s`` until it ends or reaches an a-priori depth cap.

    Every descendant keeps the members of ``s`` below its conductor ``c``. If
    some of them are coprime, Schur's bound on the Frobenius number caps the
    genus of any descendant by ``(c - 2)**2``, so a finite subtree never
    reaches the cap ``g + (c - 1)**2``. Reaching it is reported as infinite.
    """
    cap = s.genus + (s.conductor - 1) ** 2 + 1
    width = width_for(cap)
    size = 0
    best = s.genus
    deepest: list = []
    for frame, _ in iter_frames([frame_of(s, width)], cap, width):
        size += 1
        g = frame[3]
        if g >= cap:
            return SubtreeProfile(False, size, g, ())
        if g > best:
            best = g
            deepest = [frame]
        elif g == best:
            deepest.append(frame)
    nodes = tuple(frame_semigroup(f) for f in deepest) if deepest else (s,)
    return SubtreeProfile(True, size, best, nodes)


def tracked_chains(s: Semigroup, d: int) -> list[Semigroup]:
    """Chains through ``s`` whose intersection is ``d`` times a semigroup.

    Walks the real tree below ``s`` keeping only nodes whose members below the
    conductor are all multiples of ``d`` (every node of such a chain has that
    form) and stops each path at the first node whose conductor reaches a
    depth where distinct chains have separated. Returns the reduced semigroup
    ``T`` of each chain, i.e. the members of the stop node below its
    conductor divided by ``d``, completed above.
    """
    trace = [x // d for x in s.small_members if x > 0]
    a, b = trace[0], trace[-1]
    limit = max(d * (a - 1) * (b - 1) + 2 * d, s.conductor + 3 * d)
    width = width_for(limit + 2)
    found = []
    stack = [frame_of(s, width)]
    while stack:
        frame = stack.pop()
        c = frame[2]
        if c >= limit:
            found.append(frame)
            continue
        _, kids = expand(frame, width)
        for kid in kids:
            kc = kid[2]
            small = kid[0] & ((1 << kc) - 1)
            if all(n % d == 0 for n in range(kc) if (small >> n) & 1):
                stack.append(kid)
    out = []
    for frame in found:
        mask, c = frame[0], frame[2]
        reduced = {n // d for n in range(c) if (mask >> n) & 1}
        top = -(-c // d)
        out.append(from_gaps({x for x in range(1, top) if x not in reduced}))
    out.sort(key=lambda t: (t.genus, t.mask))
    return out

"""Navigation in the tree of numerical semigroups.

The root is the trivial semigroup; the children of a node are obtained by
removing, one at a time, its effective generators (minimal generators at or
above the conductor). Children are always listed in ascending order of the
removed generator.

The exhaustive walker does not rebuild ``Semigroup`` objects. Each DFS frame
is a tuple ``(mask, rmask, c, g, m, eff)`` where ``mask`` has bit ``n`` set
iff ``n`` is a member (for ``n <= width``) and ``rmask`` is the same set
mirrored around ``width``. With both masks at hand

    nu(x) = popcount(mask & (rmask >> (width - x)))

counts the pairs ``(a, x - a)`` of members, which gives the generator test
(``nu == 2``) and the strong-generator test (``nu(e + m) == 4``) in a couple
of integer operations. Non-ordinary children inherit the tail of the parent's
effective list and gain ``e + m`` exactly when ``e`` is strong.
"""

from __future__ import annotations

import enum
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import Semigroup, _build, canonical_string, minimal_generators
from .errors import NotEffective, NotOrdinary, OrdinaryInput, RootHasNoParent


class Strength(enum.Enum):
    WEAK = "-"
    STRONG = "+"


class Kind(enum.Enum):
    LEAF = "L"
    STICK = "S"
    BUSH = "B"

    @classmethod
    def from_count(cls, n: int) -> "Kind":
        if n == 0:
            return cls.LEAF
        return cls.STICK if n == 1 else cls.BUSH


def is_ordinary(s: Semigroup) -> bool:
    return s.conductor == 0 or s.multiplicity == s.conductor


# -- semigroup-level operations ---------------------------------------------


def effective_generators(s: Semigroup) -> list[int]:
    return [x for x in minimal_generators(s) if x >= s.conductor]


def remove(s: Semigroup, e: int) -> Semigroup:
    """``s \\ {e}`` for an effective generator ``e``."""
    if e not in effective_generators(s):
        raise NotEffective(f"{e} is not an effective generator of {canonical_string(s)}")
    below = s.mask & ((1 << e) - 1)
    return _build(below, e + 1)


def parent(s: Semigroup) -> Semigroup:
    """``s`` with its Frobenius number added back."""
    if s.is_trivial:
        raise RootHasNoParent("the trivial semigroup is the root of the tree")
    # s | {c - 1} = small members | [c - 1, inf); slide the conductor down over members
    c = s.conductor - 1
    small = s.small_mask
    while c > 0 and (small >> (c - 1)) & 1:
        c -= 1
    return _build(small, c)


def children(s: Semigroup) -> list[Semigroup]:
    return [remove(s, e) for e in effective_generators(s)]


@dataclass(frozen=True)
class OrdinaryClassification:
    extra_generators: tuple[int, ...]

    @property
    def strength(self) -> Strength:
        return Strength.STRONG if self.extra_generators else Strength.WEAK


def classify_ordinary(s: Semigroup, e: int) -> OrdinaryClassification:
    """Effective generators gained by removing ``e`` from an ordinary semigroup."""
    if not is_ordinary(s):
        raise NotOrdinary(f"{canonical_string(s)} is not ordinary")
    eff = effective_generators(s)
    if e not in eff:
        raise NotEffective(f"{e} is not an effective generator of {canonical_string(s)}")
    later = {x for x in eff if x > e}
    child = effective_generators(remove(s, e))
    return OrdinaryClassification(tuple(x for x in child if x not in later))


def classify(s: Semigroup, e: int, *, fast: bool = False) -> Strength:
    """Weak/strong classification of an effective generator of a non-ordinary node.

    The default path compares the child's effective generators against the
    two shapes allowed by the inheritance lemma. ``fast=True`` instead checks
    whether ``e + m`` has exactly four divisor pairs in ``s``.
    """
    if is_ordinary(s):
        raise OrdinaryInput(f"{canonical_string(s)} is ordinary; use classify_ordinary")
    eff = effective_generators(s)
    if e not in eff:
        raise NotEffective(f"{e} is not an effective generator of {canonical_string(s)}")
    m = s.multiplicity
    if fast:
        x = e + m
        pairs = sum(1 for a in range(x + 1) if a in s and (x - a) in s)
        return Strength.STRONG if pairs == 4 else Strength.WEAK
    later = [x for x in eff if x > e]
    child = effective_generators(remove(s, e))
    if child == later:
        return Strength.WEAK
    if child == later + [e + m]:
        return Strength.STRONG
    raise AssertionError(
        f"child of {canonical_string(s)} by {e} has effective generators {child}, "
        f"neither {later} nor {later + [e + m]}"
    )


@dataclass(frozen=True)
class TreeNode:
    semigroup: Semigroup
    effective_gens: tuple[tuple[int, Strength], ...]

    @property
    def genus(self) -> int:
        return self.semigroup.genus

    @property
    def kind(self) -> Kind:
        return Kind.from_count(len(self.effective_gens))

    @property
    def ordinary(self) -> bool:
        return is_ordinary(self.semigroup)

    @property
    def strong_count(self) -> int:
        return sum(1 for _, st in self.effective_gens if st is Strength.STRONG)

    @classmethod
    def of(cls, s: Semigroup) -> "TreeNode":
        """Decorate ``s``; ordinary nodes use the extra-generator convention."""
        if is_ordinary(s):
            gens = tuple((e, classify_ordinary(s, e).strength) for e in effective_generators(s))
        else:
            gens = tuple((e, classify(s, e)) for e in effective_generators(s))
        return cls(s, gens)

    def dump_line(self) -> str:
        gens = " ".join(f"{e}{st.value}" for e, st in self.effective_gens)
        return f"{self.genus}\t{canonical_string(self.semigroup)}\t{gens}\t{self.kind.value}"


# -- fast frames --------------------------------------------------------------


def width_for(max_genus: int) -> int:
    # e + m < c + 2m <= 4g + 2 for every node of genus g
    return 4 * max_genus + 8


def root_frame(width: int) -> tuple:
    full = (1 << (width + 1)) - 1
    return (full, full, 0, 0, 1, (1,))


def frame_of(s: Semigroup, width: int) -> tuple:
    """DFS frame for an arbitrary semigroup (used to walk subtrees)."""
    full = (1 << (width + 1)) - 1
    mask = (s.mask | (full ^ ((1 << s.conductor) - 1))) & full
    rmask = 0
    for n in range(width + 1):
        if (mask >> n) & 1:
            rmask |= 1 << (width - n)
    return (mask, rmask, s.conductor, s.genus, s.multiplicity, tuple(effective_generators(s)))


def frame_semigroup(frame: tuple) -> Semigroup:
    mask, _, c = frame[0], frame[1], frame[2]
    return _build(mask & ((1 << c) - 1), c)


def _recompute_eff(mask: int, rmask: int, c: int, m: int, width: int) -> tuple:
    return tuple(x for x in range(c, c + m + 1) if (mask & (rmask >> (width - x))).bit_count() == 2)


def expand(frame: tuple, width: int, recompute: bool = False, with_children: bool = True):
    """Strength flags for ``frame``'s effective generators and its child frames."""
    mask, rmask, c, g, m, eff = frame
    ordinary = c == 0 or m == c
    kids = []
    if ordinary or recompute:
        strong = []
        g1 = g + 1
        n = len(eff)
        for j in range(n):
            e = eff[j]
            cmask = mask ^ (1 << e)
            crmask = rmask ^ (1 << (width - e))
            cm = e + 1 if e == m else m
            ceff = _recompute_eff(cmask, crmask, e + 1, cm, width)
            later = eff[j + 1:]
            if ordinary:
                strong.append(not set(ceff) <= set(later))
            elif ceff == later:
                strong.append(False)
            elif ceff == later + (e + m,):
                strong.append(True)
            else:
                raise AssertionError(f"inheritance shape violated at {frame_semigroup(frame)} removing {e}")
            if with_children:
                kids.append((cmask, crmask, e + 1, g1, cm, ceff))
        return tuple(strong), kids
    shift = width - m
    strong = tuple((mask & (rmask >> (shift - e))).bit_count() == 4 for e in eff)
    if with_children:
        g1 = g + 1
        n = len(eff)
        for j in range(n):
            e = eff[j]
            tail = eff[j + 1:]
            if strong[j]:
                tail = tail + (e + m,)
            kids.append((mask ^ (1 << e), rmask ^ (1 << (width - e)), e + 1, g1, m, tail))
    return strong, kids


def iter_frames(roots, max_genus: int, width: int, *, recompute: bool = False,
                stop_genus: int | None = None, frontier: list | None = None):
    """Depth-first preorder over the subtrees rooted at ``roots``.

    Yields ``(frame, strong_flags)``. Frames at ``stop_genus`` are appended to
    ``frontier`` instead of being visited.
    """
    stack = list(reversed(roots))
    while stack:
        frame = stack.pop()
        g = frame[3]
        if stop_genus is not None and g == stop_genus:
            frontier.append(frame)
            continue
        strong, kids = expand(frame, width, recompute, g < max_genus)
        yield frame, strong
        if kids:
            kids.reverse()
            stack.extend(kids)


def node_of_frame(frame: tuple, strong) -> TreeNode:
    s = frame_semigroup(frame)
    return TreeNode(s, tuple((e, Strength.STRONG if st else Strength.WEAK) for e, st in zip(frame[5], strong)))


# -- walking ----------------------------------------------------------------


def walk(max_genus: int, visitor, *, recompute: bool = False) -> None:
    """Visit every semigroup of genus <= ``max_genus`` once, depth first."""
    width = width_for(max_genus)
    for frame, strong in iter_frames([root_frame(width)], max_genus, width, recompute=recompute):
        visitor(node_of_frame(frame, strong))


def walk_subtree(s: Semigroup, max_genus: int, *, recompute: bool = False):
    """Yield the TreeNodes of the subtree under ``s`` down to ``max_genus``."""
    width = width_for(max(max_genus, s.genus))
    for frame, strong in iter_frames([frame_of(s, width)], max_genus, width, recompute=recompute):
        yield node_of_frame(frame, strong)


def _run_chunk(args):
    task, roots, max_genus, width, recompute = args
    return task(iter_frames(roots, max_genus, width, recompute=recompute), width)


def default_split(max_genus: int) -> int:
    return min(max_genus, 12)


def run_partitioned(max_genus: int, task, combine, *, workers: int = 1,
                    split_genus: int | None = None, recompute: bool = False):
    """Run ``task(frames, width)`` over the whole tree, optionally in parallel.

    Nodes above ``split_genus`` are processed in this process; each frame at
    ``split_genus`` roots an independent subtree handed to a worker. Partial
    results are folded with ``combine`` in a fixed order, so an associative
    and commutative ``combine`` gives the same answer for any ``workers``.
    """
    width = width_for(max_genus)
    root = root_frame(width)
    if workers <= 1:
        return task(iter_frames([root], max_genus, width, recompute=recompute), width)
    split = default_split(max_genus) if split_genus is None else split_genus
    frontier: list = []
    result = task(iter_frames([root], max_genus, width, recompute=recompute,
                              stop_genus=split, frontier=frontier), width)
    if not frontier:
        return result
    nchunks = min(len(frontier), workers * 4)
    jobs = [(task, frontier[i::nchunks], max_genus, width, recompute) for i in range(nchunks)]
    ctx = multiprocessing.get_context("fork")
    with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
        for part in pool.map(_run_chunk, jobs):
            result = combine(result, part)
    return result


class _VisitorTask:
    def __init__(self, make_visitor):
        self.make_visitor = make_visitor

    def __call__(self, frames, width):
        visitor = self.make_visitor()
        for frame, strong in frames:
            visitor(node_of_frame(frame, strong))
        return visitor


def _merge_visitors(a, b):
    return a.merge(b)


def walk_partitioned(max_genus: int, make_visitor, *, workers: int = 1,
                     split_genus: int | None = None, recompute: bool = False):
    """Parallel :func:`walk`.

    ``make_visitor`` builds a fresh visitor per worker; visitors are callables
    with a ``merge(other)`` method returning the combined visitor.
    """
    return run_partitioned(max_genus, _VisitorTask(make_visitor), _merge_visitors,
                           workers=workers, split_genus=split_genus, recompute=recompute)


def level_counts(max_genus: int, *, workers: int = 1) -> list[int]:
    return run_partitioned(max_genus, _CountTask(max_genus), _add_lists, workers=workers)


class _CountTask:
    def __init__(self, max_genus):
        self.max_genus = max_genus

    def __call__(self, frames, width):
        counts = [0] * (self.max_genus + 1)
        for frame, _ in frames:
            counts[frame[3]] += 1
        return counts


def _add_lists(a, b):
    return [x + y for x, y in zip(a, b)]


def dump_lines(max_genus: int) -> list[str]:
    lines: list[str] = []
    walk(max_genus, lambda node: lines.append(node.dump_line()))
    return lines

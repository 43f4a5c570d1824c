"""The abstract label tree A and its generalisation from arbitrary seeds.

A level is a multiset of labels; a node labelled ``m`` has children labelled
``0 .. m-1``. From level 2 on, one copy of ``k - 2`` is dropped and ``k + 1``
added (the ordinary semigroup's extra child). Counts are Python ints, so
totals stay exact far beyond 64 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BadSeed


@dataclass(frozen=True)
class LabelMultiset:
    counts: tuple[tuple[int, int], ...]  # (label, multiplicity), labels ascending, multiplicities > 0

    @classmethod
    def from_dict(cls, d: dict) -> "LabelMultiset":
        return cls(tuple(sorted((int(k), int(v)) for k, v in d.items() if v)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def total(self) -> int:
        return sum(v for _, v in self.counts)

    @property
    def max_label(self) -> int:
        return self.counts[-1][0] if self.counts else -1

    def __getitem__(self, label: int) -> int:
        return self.as_dict().get(label, 0)


def next_level(prev: LabelMultiset, k: int) -> LabelMultiset:
    """``{k+1} U (U_{m in prev} {0..m-1}) \\ {k-2}`` with multiset semantics."""
    counts = prev.as_dict()
    top = max(counts, default=0)
    new: dict[int, int] = {}
    # label x appears once for every m in prev with m > x
    above = 0
    for x in range(top - 1, -1, -1):
        above += counts.get(x + 1, 0)
        if above:
            new[x] = above
    drop = k - 2
    if new.get(drop, 0) == 0:
        raise ValueError(f"label {drop} absent at level {k}; cannot remove it")
    new[drop] -= 1
    new[k + 1] = new.get(k + 1, 0) + 1
    return LabelMultiset.from_dict(new)


def a_level(g: int) -> LabelMultiset:
    if g < 0:
        raise ValueError("level must be non-negative")
    level = LabelMultiset.from_dict({1: 1})
    if g == 0:
        return level
    level = LabelMultiset.from_dict({2: 1})
    for k in range(2, g + 1):
        level = next_level(level, k)
    return level


def a_levels(g_max: int) -> list[LabelMultiset]:
    out = [LabelMultiset.from_dict({1: 1})]
    if g_max >= 1:
        out.append(LabelMultiset.from_dict({2: 1}))
    for k in range(2, g_max + 1):
        out.append(next_level(out[-1], k))
    return out[: g_max + 1]


def check_seed(l: int, seed: LabelMultiset) -> None:
    if l < 2:
        raise BadSeed(f"l must be >= 2, got {l}")
    counts = seed.as_dict()
    if counts.get(l - 1) != 1 or counts.get(l + 1) != 1:
        raise BadSeed(f"seed must contain exactly one {l - 1} and one {l + 1}")
    bad = [x for x in counts if x not in (l - 1, l + 1) and not 0 <= x <= l - 2]
    if bad:
        raise BadSeed(f"seed labels {bad} are not allowed (only <= {l - 2}, {l - 1}, {l + 1})")


def l_recursion(l: int, seed: LabelMultiset, k_max: int) -> list[LabelMultiset]:
    """``[L_l, L_{l+1}, ..., L_{k_max}]`` starting from ``L_l = seed``."""
    check_seed(l, seed)
    out = [seed]
    for k in range(l + 1, k_max + 1):
        out.append(next_level(out[-1], k))
    return out


@lru_cache(maxsize=None)
def _fib_pair(n: int) -> tuple[int, int]:
    # fast doubling: returns (F(n), F(n+1))
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n // 2)
    c = a * (2 * b - a)
    d = a * a + b * b
    return (d, c + d) if n % 2 else (c, d)


def fibonacci(n: int) -> int:
    """``F_0 = 0, F_1 = F_2 = 1``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _fib_pair(n)[0]


def dominated(small: dict, big: dict) -> bool:
    """Per-label multiset inclusion."""
    return all(big.get(k, 0) >= v for k, v in small.items())

"""Class predicates: ordinary, symmetric, pseudo-symmetric, hyperelliptic, Arf."""

from __future__ import annotations

from dataclasses import dataclass, fields

from .core import Semigroup, _build, minimal_generators
from .errors import BadGenus, BadParameter
from .tree import is_ordinary


@dataclass(frozen=True)
class ClassFlags:
    ordinary: bool
    symmetric: bool
    pseudo_symmetric: bool
    hyperelliptic: bool
    arf: bool
    irreducible: bool

    def names(self) -> list[str]:
        return [f.name for f in fields(self) if getattr(self, f.name)]


def _mirror_ok(s: Semigroup, skip_middle: bool) -> bool:
    c = s.conductor
    for i in range(c):
        if skip_middle and 2 * i == c - 1:
            continue
        if (i in s) == ((c - 1 - i) in s):
            return False
    return True


def is_symmetric(s: Semigroup) -> bool:
    result = s.conductor == 2 * s.genus
    assert result == _mirror_ok(s, False), f"symmetry tests disagree on {s}"
    return result


def is_pseudo_symmetric(s: Semigroup) -> bool:
    c, g = s.conductor, s.genus
    result = g >= 1 and c == 2 * g - 1
    # the mirror property alone also holds for symmetric semigroups of odd c; there is none with c odd
    mirror = c % 2 == 1 and (c - 1) // 2 not in s and _mirror_ok(s, True)
    assert result == mirror, f"pseudo-symmetry tests disagree on {s}"
    return result


def is_hyperelliptic(s: Semigroup) -> bool:
    gens = minimal_generators(s)
    return len(gens) == 2 and gens[0] == 2 and gens[1] % 2 == 1 and gens[1] >= 3


def is_irreducible(s: Semigroup) -> bool:
    return is_symmetric(s) or is_pseudo_symmetric(s)


def is_arf(s: Semigroup) -> bool:
    """``l_i + l_j - l_k`` is a member whenever ``i >= j >= k``.

    Only triples with ``l_i`` below the conductor need checking: otherwise
    ``l_i + l_j - l_k >= l_i >= c``.
    """
    small = s.small_members
    for a, li in enumerate(small):
        for b in range(a + 1):
            lj = small[b]
            for k in range(b + 1):
                if (li + lj - small[k]) not in s:
                    return False
    return True


def non_gap_intervals(s: Semigroup) -> int:
    """Maximal runs of consecutive members strictly between 0 and the conductor."""
    runs = 0
    inside = False
    for n in range(1, s.conductor):
        if n in s:
            if not inside:
                runs += 1
            inside = True
        else:
            inside = False
    return runs


def class_flags(s: Semigroup) -> ClassFlags:
    sym = is_symmetric(s)
    psym = is_pseudo_symmetric(s)
    return ClassFlags(
        ordinary=is_ordinary(s),
        symmetric=sym,
        pseudo_symmetric=psym,
        hyperelliptic=is_hyperelliptic(s),
        arf=is_arf(s),
        irreducible=sym or psym,
    )


def _from_members(members, conductor: int) -> Semigroup:
    small = 0
    for n in members:
        small |= 1 << n
    return _build(small | 1, conductor)


def ps_family(g: int) -> Semigroup:
    """``{0, g, g+1, ..., 2g-3} U [2g-1, inf)``."""
    if g < 3:
        raise BadGenus(f"the single-interval pseudo-symmetric family needs g >= 3, got {g}")
    return _from_members(range(g, 2 * g - 2), 2 * g - 1)


def ps_mult3_family(k: int, variant: str) -> Semigroup:
    """Pseudo-symmetric semigroups of multiplicity 3.

    Variant ``A`` has genus ``3k`` and variant ``B`` genus ``3k + 2``.
    """
    if k < 1:
        raise BadParameter(f"k must be >= 1, got {k}")
    mult3 = [3 * i for i in range(k + 1)]
    if variant == "A":
        extra = [x for i in range(k + 1, 2 * k) for x in (3 * i - 1, 3 * i)]
        return _from_members(mult3 + extra, 3 * (2 * k - 1) + 2)
    if variant == "B":
        extra = [x for i in range(k + 1, 2 * k + 1) for x in (3 * i, 3 * i + 1)]
        return _from_members(mult3 + extra, 3 * (2 * k) + 3)
    raise BadParameter(f"variant must be 'A' or 'B', got {variant!r}")

"""Finite representation of numerical semigroups.

A numerical semigroup is stored as a bitmask over ``[0, bound)`` where
``bound = conductor + 2 * multiplicity``; every integer at or above the bound
is implicitly a member. Fixing the bound this way makes the mask canonical,
so two ``Semigroup`` values are equal exactly when they describe the same set.

Indices follow the enumeration ``lambda_0 = 0 < lambda_1 < ...`` of the
members. For members at or above the conductor ``lambda_i = i + genus``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GcdNotOne, IndexBelowConductor, NotClosed, NotMember, ParseError, SemigroupError


@dataclass(frozen=True)
class Semigroup:
    mask: int
    conductor: int
    genus: int
    multiplicity: int

    @property
    def bound(self) -> int:
        return self.conductor + 2 * self.multiplicity

    @property
    def is_trivial(self) -> bool:
        return self.conductor == 0

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def small_mask(self) -> int:
        """Members below the conductor, as a bitmask."""
        return self.mask & ((1 << self.conductor) - 1)

    @property
    def gaps(self) -> tuple[int, ...]:
        m = self.mask
        return tuple(n for n in range(1, self.conductor) if not (m >> n) & 1)

    @property
    def small_members(self) -> tuple[int, ...]:
        """``lambda_0, ..., lambda_{c-g-1}``: the members below the conductor."""
        m = self.mask
        return tuple(n for n in range(self.conductor) if (m >> n) & 1)

    def members(self, limit: int) -> list[int]:
        """Members in ``[0, limit)``."""
        return [n for n in range(limit) if self.__contains__(n)]

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool((self.mask >> n) & 1)

    def __str__(self) -> str:
        return canonical_string(self)


def _build(small_mask: int, conductor: int) -> Semigroup:
    """Assemble a Semigroup from the members below ``conductor``.

    ``small_mask`` must already be additively closed below the conductor and,
    for ``conductor > 0``, have bit 0 set and bit ``conductor - 1`` clear.
    """
    c = conductor
    small_mask &= (1 << c) - 1
    nonzero = small_mask & ~1
    if nonzero:
        mult = (nonzero & -nonzero).bit_length() - 1
    else:
        mult = c if c > 0 else 1
    genus = c - small_mask.bit_count()
    bound = c + 2 * mult
    mask = small_mask | (((1 << bound) - 1) ^ ((1 << c) - 1))
    return Semigroup(mask, c, genus, mult)


def from_small_members(members, conductor: int) -> Semigroup:
    """Semigroup whose members below ``conductor`` are exactly ``members``.

    No closure check; callers pass sets they know to be closed.
    """
    small = 0
    for n in members:
        if 0 <= n < conductor:
            small |= 1 << n
    if conductor > 0:
        small |= 1
    # normalise: the true conductor may be smaller than the one supplied
    c = conductor
    while c > 0 and (small >> (c - 1)) & 1:
        c -= 1
    return _build(small, c)


TRIVIAL = _build(0, 0)


def from_generators(gens) -> Semigroup:
    """Smallest submonoid of the non-negative integers containing ``gens``."""
    gens = sorted(set(int(a) for a in gens))
    if not gens:
        raise SemigroupError("need at least one generator")
    if gens[0] <= 0:
        raise SemigroupError("generators must be positive")
    if math.gcd(*gens) != 1:
        raise GcdNotOne(gens)
    a, b = gens[0], gens[-1]
    # Schur's bound puts the Frobenius number below (a-1)(b-1), so b*b suffices
    limit = max(b * b, 2) + a
    reach = bytearray(limit + 1)
    reach[0] = 1
    for n in range(1, limit + 1):
        for k in gens:
            if k > n:
                break
            if reach[n - k]:
                reach[n] = 1
                break
    conductor = 0
    for n in range(limit, -1, -1):
        if not reach[n]:
            conductor = n + 1
            break
    small = 0
    for n in range(conductor):
        if reach[n]:
            small |= 1 << n
    return _build(small, conductor)


def from_gaps(gaps) -> Semigroup:
    """Semigroup whose gap set is ``gaps``; raises NotClosed if it is not one."""
    gaps = set(int(x) for x in gaps)
    if any(x <= 0 for x in gaps):
        raise SemigroupError("gaps must be positive integers")
    if not gaps:
        return TRIVIAL
    c = max(gaps) + 1
    members = [n for n in range(1, c) if n not in gaps]
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b >= c:
                break
            if a + b in gaps:
                raise NotClosed(a, b)
    small = 1
    for n in members:
        small |= 1 << n
    return _build(small, c)


def contains(s: Semigroup, n: int) -> bool:
    return n in s


def lambda_(s: Semigroup, i: int) -> int:
    """The i-th member of ``s`` in increasing order (``lambda_0 = 0``)."""
    if i < 0:
        raise SemigroupError(f"negative index {i}")
    small = s.small_members
    if i < len(small):
        return small[i]
    return i + s.genus


def lambda_index(s: Semigroup, n: int) -> int:
    """Inverse of :func:`lambda_`."""
    if n not in s:
        raise NotMember(f"{n} is not a member of {canonical_string(s)}")
    if n >= s.conductor:
        return n - s.genus
    return (s.mask & ((1 << n) - 1)).bit_count()


def gaps_below(s: Semigroup, n: int) -> int:
    """Number of gaps smaller than ``n``."""
    return sum(1 for x in s.gaps if x < n)


def minimal_generators(s: Semigroup) -> list[int]:
    # every minimal generator is below conductor + multiplicity (inclusive for the trivial case)
    top = s.conductor + s.multiplicity
    gens = []
    for n in range(1, top + 1):
        if n not in s:
            continue
        if not any(a in s and (n - a) in s for a in range(1, n // 2 + 1)):
            gens.append(n)
    return gens


def d_set(s: Semigroup, i: int) -> set[int]:
    """Gaps ``l`` such that ``lambda_i - l`` is also a gap."""
    x = lambda_(s, i)
    return {l for l in s.gaps if l < x and (x - l) not in s}


def nu(s: Semigroup, i: int) -> int:
    """``#{j : lambda_i - lambda_j in s}``, counted directly."""
    x = lambda_(s, i)
    return sum(1 for a in range(x + 1) if a in s and (x - a) in s)


def nu_from_gaps(s: Semigroup, i: int) -> int:
    """Same quantity through ``i - g(i) + #D(i) + 1``."""
    x = lambda_(s, i)
    return i - gaps_below(s, x) + len(d_set(s, i)) + 1


def is_generator_above_conductor(s: Semigroup, i: int) -> bool:
    """Generator test for ``lambda_i >= c`` via ``#D(i) == g - i + 1``."""
    x = lambda_(s, i)
    if x < s.conductor:
        raise IndexBelowConductor(f"lambda_{i} = {x} is below the conductor {s.conductor}")
    return len(d_set(s, i)) == s.genus - i + 1


def canonical_string(s: Semigroup) -> str:
    return "<" + ",".join(str(a) for a in minimal_generators(s)) + ">"


def to_record(s: Semigroup) -> dict:
    return {
        "gens": minimal_generators(s),
        "gaps": list(s.gaps),
        "c": s.conductor,
        "g": s.genus,
        "m": s.multiplicity,
    }


def _parse_int_list(text: str, start: int, offset: int) -> list[int]:
    values = []
    if text.strip() == "":
        return values
    pos = 0
    for piece in text.split(","):
        stripped = piece.strip()
        lead = len(piece) - len(piece.lstrip())
        if not stripped.isdigit():
            raise ParseError(f"expected a non-negative integer, got {stripped!r}", offset + start + pos + lead)
        values.append(int(stripped))
        pos += len(piece) + 1
    return values


def parse(text: str) -> Semigroup:
    """Parse ``<a1,a2,...>`` (generators) or ``G:{g1,g2,...}`` (gaps)."""
    offset = len(text) - len(text.lstrip())
    body = text.strip()
    if body.startswith("<"):
        if not body.endswith(">"):
            raise ParseError("missing closing '>'", offset + len(body))
        values = _parse_int_list(body[1:-1], 1, offset)
        if not values:
            raise ParseError("empty generator list", offset + 1)
        if 0 in values:
            values = [v for v in values if v]
            if not values:
                raise ParseError("generator list has no positive entry", offset + 1)
        return from_generators(values)
    if body.startswith("G:"):
        rest = body[2:]
        lead = len(rest) - len(rest.lstrip())
        rest = rest.strip()
        if not rest.startswith("{"):
            raise ParseError("expected '{'", offset + 2 + lead)
        if not rest.endswith("}"):
            raise ParseError("missing closing '}'", offset + len(body))
        values = _parse_int_list(rest[1:-1], 3 + lead, offset)
        return from_gaps(values)
    raise ParseError("expected '<' or 'G:'", offset)

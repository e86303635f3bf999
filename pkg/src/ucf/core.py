"""Set families over a small ground set, stored as integer bitmasks.

Element i of the ground set {1, ..., n} corresponds to bit i-1, so the
full ground set is the mask 2^n - 1 and the empty set is 0.  A family is
a strictly ascending tuple of such masks; all arithmetic is exact integer
work on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DegenerateFamily,
    NoNonemptyMember,
    NotApplicable,
    PreconditionViolation,
)

Mask = int

MIN_GROUND_SIZE = 2
MAX_GROUND_SIZE = 12


def full_mask(n: int) -> Mask:
    """Mask of the whole ground set {1, ..., n}."""
    return (1 << n) - 1


def mask_from_elements(elements: Iterable[int], n: int) -> Mask:
    """Build a mask from 1-based element labels, validating the range."""
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def elements_of_mask(mask: Mask) -> tuple[int, ...]:
    """1-based element labels of a mask, ascending."""
    out = []
    label = 1
    while mask:
        if mask & 1:
            out.append(label)
        mask >>= 1
        label += 1
    return tuple(out)


def relabel_mask(mask: Mask, perm: Sequence[int]) -> Mask:
    """Apply a 0-based bit permutation: bit b of the input moves to perm[b]."""
    out = 0
    b = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[b]
        mask >>= 1
        b += 1
    return out


@dataclass(frozen=True)
class SetFamily:
    """A family of subsets of {1, ..., n} as strictly ascending masks.

    The ascending-mask invariant makes equality of families structural
    equality of the dataclass, and keeps every derived artifact (files,
    canonical keys, reports) deterministic.
    """

    n: int
    members: tuple[Mask, ...]

    def __post_init__(self) -> None:
        if not MIN_GROUND_SIZE <= self.n <= MAX_GROUND_SIZE:
            raise ValueError(
                f"ground set size {self.n} outside "
                f"{MIN_GROUND_SIZE}..{MAX_GROUND_SIZE}"
            )
        top = full_mask(self.n)
        prev = -1
        for mask in self.members:
            if not isinstance(mask, int) or not 0 <= mask <= top:
                raise ValueError(f"mask {mask!r} outside 0..{top}")
            if mask <= prev:
                raise ValueError("members must be strictly ascending masks")
            prev = mask

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[Mask]) -> "SetFamily":
        """Family from masks in any order; duplicates collapse."""
        return cls(n, tuple(sorted(set(masks))))

    @classmethod
    def from_sets(cls, n: int, sets_: Iterable[Iterable[int]]) -> "SetFamily":
        """Family from iterables of 1-based element labels."""
        return cls.from_masks(n, (mask_from_elements(s, n) for s in sets_))

    @property
    def m(self) -> int:
        """Number of member sets (the empty set counts)."""
        return len(self.members)

    def __contains__(self, mask: Mask) -> bool:
        return mask in set(self.members)

    def members_of_size(self, k: int) -> tuple[Mask, ...]:
        return tuple(mask for mask in self.members if mask.bit_count() == k)

    def as_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of_mask(mask) for mask in self.members)


class LevelProfile(NamedTuple):
    """counts[k] = number of members of cardinality k, for k = 0..n."""

    counts: tuple[int, ...]

    def count(self, k: int) -> int:
        return self.counts[k]


class FrequencyProfile(NamedTuple):
    """Element frequencies of a family.

    freq[i-1] is the number of members containing element i, m is the
    total member count (empty set included), and abundant holds the
    1-based elements with 2 * freq >= m.
    """

    freq: tuple[int, ...]
    m: int
    abundant: frozenset[int]


class Lemma12Result(NamedTuple):
    min_freq: int
    holds: bool


def is_union_closed(family: SetFamily) -> bool:
    """True iff the union of any two members is again a member."""
    present = set(family.members)
    members = family.members
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if a | b not in present:
                return False
    return True


def union_closure(family: SetFamily) -> SetFamily:
    """Smallest union-closed family containing the input.

    Fixed point of adding pairwise unions; never adds the empty set on
    its own and never leaves the power set of the input's union.
    """
    members = set(family.members)
    frontier = set(family.members)
    while frontier:
        added = set()
        for a in frontier:
            for b in members:
                u = a | b
                if u not in members and u not in added:
                    added.add(u)
        members |= added
        frontier = added
    return SetFamily.from_masks(family.n, members)


def t_value(family: SetFamily) -> int:
    """T(F): minimum cardinality over nonempty members."""
    best = None
    for mask in family.members:
        if mask:
            c = mask.bit_count()
            if best is None or c < best:
                best = c
    if best is None:
        raise NoNonemptyMember("family has no nonempty member")
    return best


def level_profile(family: SetFamily) -> LevelProfile:
    counts = [0] * (family.n + 1)
    for mask in family.members:
        counts[mask.bit_count()] += 1
    return LevelProfile(tuple(counts))


def frequency_profile(family: SetFamily) -> FrequencyProfile:
    freq = [0] * family.n
    for mask in family.members:
        b = 0
        while mask:
            if mask & 1:
                freq[b] += 1
            mask >>= 1
            b += 1
    m = len(family.members)
    # integer threshold: element i is abundant iff 2*freq >= m
    abundant = frozenset(i + 1 for i in range(family.n) if 2 * freq[i] >= m)
    return FrequencyProfile(tuple(freq), m, abundant)


def frankl_holds(family: SetFamily) -> bool:
    """Some element lies in at least half of the members.

    Assumes the family is union-closed; raises DegenerateFamily when
    there is no nonempty member to speak about.
    """
    if all(mask == 0 for mask in family.members):
        raise DegenerateFamily("no nonempty member; the statement is vacuous")
    return bool(frequency_profile(family).abundant)


def s_frankl_holds(family: SetFamily) -> bool:
    """At least T(F) elements lie in at least half of the members.

    Defined for union-closed families with T(F) >= 2; T(F) = 1 raises
    NotApplicable since the statement quantifies over k >= 2.
    """
    t = t_value(family)
    if t == 1:
        raise NotApplicable("T(F) = 1; the strengthened statement needs T >= 2")
    return len(frequency_profile(family).abundant) >= t


def lemma_1_2_bound(m_mask: Mask, coatoms: SetFamily) -> Lemma12Result:
    """Minimum element frequency within a family of co-atoms of M.

    Input is a mask M with |M| >= 2 and a family of at least two distinct
    subsets of M of cardinality |M| - 1.  Every element of M misses at
    most one co-atom, so the minimum frequency is at least |G| - 1; the
    result reports the measured minimum and that comparison.
    """
    size = m_mask.bit_count()
    if size < 2:
        raise PreconditionViolation("M must have at least 2 elements")
    if coatoms.m < 2:
        raise PreconditionViolation("need at least 2 co-atoms")
    for mask in coatoms.members:
        if mask | m_mask != m_mask:
            raise PreconditionViolation(f"co-atom {mask} not a subset of M")
        if mask.bit_count() != size - 1:
            raise PreconditionViolation(
                f"co-atom {mask} does not have cardinality |M| - 1"
            )
    min_freq = None
    for b in range(m_mask.bit_length()):
        if m_mask >> b & 1:
            f = sum(1 for mask in coatoms.members if mask >> b & 1)
            if min_freq is None or f < min_freq:
                min_freq = f
    assert min_freq is not None
    return Lemma12Result(min_freq, min_freq >= coatoms.m - 1)


def relabel_family(family: SetFamily, perm: Sequence[int]) -> SetFamily:
    """Rename elements by a 0-based bit permutation of length n."""
    if sorted(perm) != list(range(family.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return SetFamily.from_masks(
        family.n, (relabel_mask(mask, perm) for mask in family.members)
    )

"""Structural devices for union-closed families: the four-way shape
taxonomy of n=6, T=3 families, pair decompositions of level slices, and
abundance witnesses certifying the at-least-T-abundant-elements claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    LevelProfile,
    Mask,
    SetFamily,
    frequency_profile,
    full_mask,
    is_union_closed,
    level_profile,
    t_value,
)
from .errors import (
    NoNonemptyMember,
    NotInScope,
    PreconditionViolation,
    WitnessUnavailable,
)

SHAPE_TAGS = ("G3", "G3_G5", "G3_G4", "G3_G4_G5")


@dataclass(frozen=True)
class ShapeClass:
    """Which levels between T=3 and n=6 are populated."""

    tag: str
    levels: LevelProfile


@dataclass(frozen=True)
class PairDecomposition:
    """A maximum matching of a slice into pairs with a fixed union.

    pairs holds the matched mask pairs, residue the unmatched masks,
    k = len(pairs).  With target = M_n, each matched pair covers every
    element of the ground set at least once, so every element belongs
    to at least k of the 2k matched sets.
    """

    pairs: tuple[tuple[Mask, Mask], ...]
    residue: tuple[Mask, ...]
    k: int
    target: Mask

    def __post_init__(self) -> None:
        if self.k != len(self.pairs):
            raise ValueError("k must equal len(pairs)")
        for a, b in self.pairs:
            if a | b != self.target:
                raise ValueError(f"pair ({a},{b}) does not reach the target union")


@dataclass(frozen=True)
class AbundanceWitness:
    """Elements in at least half the members, with their certificates.

    counts[i] pairs with elements[i]; every entry satisfies
    2 * counts[i] >= m.
    """

    elements: tuple[int, ...]
    m: int
    counts: tuple[int, ...]

    def certificate(self, element: int) -> tuple[int, int]:
        return self.counts[self.elements.index(element)], self.m


def _shape_tag(has_4: bool, has_5: bool) -> str:
    if has_4:
        return "G3_G4_G5" if has_5 else "G3_G4"
    return "G3_G5" if has_5 else "G3"


def classify_shape(family: SetFamily) -> ShapeClass:
    """Tag an n=6, T=3 family by which of the 4/5 levels are populated.

    The empty set and the full ground set are required members; the
    3-level is nonempty because T=3.  NotInScope on any precondition
    failure rather than guessing.
    """
    if family.n != 6:
        raise NotInScope(f"shape taxonomy is defined for n=6 families, got n={family.n}")
    members = set(family.members)
    if 0 not in members:
        raise NotInScope("the empty set must be a member")
    if full_mask(6) not in members:
        raise NotInScope("the full ground set must be a member")
    try:
        t = t_value(family)
    except NoNonemptyMember:  # only {...} without nonempty sets
        raise NotInScope("no nonempty member")
    if t != 3:
        raise NotInScope(f"shape taxonomy needs T(F)=3, got T={t}")
    if not is_union_closed(family):
        raise NotInScope("family is not union-closed")
    levels = level_profile(family)
    return ShapeClass(_shape_tag(levels.counts[4] > 0, levels.counts[5] > 0), levels)


def _matching_size(remaining: int, nbr: list[int], memo: dict[int, int]) -> int:
    """Maximum matching size on the vertex subset given as a bitmask."""
    if remaining == 0:
        return 0
    cached = memo.get(remaining)
    if cached is not None:
        return cached
    low = remaining & -remaining
    v = low.bit_length() - 1
    rest = remaining ^ low
    best = _matching_size(rest, nbr, memo)  # leave v unmatched
    cand = nbr[v] & rest
    while cand:
        wl = cand & -cand
        cand ^= wl
        got = 1 + _matching_size(rest ^ wl, nbr, memo)
        if got > best:
            best = got
    memo[remaining] = best
    return best


def pair_decompose(slice_masks: Sequence[Mask], target: Mask) -> PairDecomposition:
    """Maximum matching of the slice into pairs whose union is target.

    Deterministic tie-break: among maximum matchings, the pair list that
    is lexicographically least under the input index order (so the
    lowest index is matched whenever some maximum matching does so, with
    the smallest possible partner).  Exhaustive via memoized search;
    exact for the slice sizes that occur here (single levels over M_6).
    """
    masks = list(slice_masks)
    seen: set[Mask] = set()
    for mask in masks:
        if mask in seen:
            raise PreconditionViolation(f"slice members must be distinct, {mask} repeats")
        seen.add(mask)
        if mask | target != target:
            raise PreconditionViolation(f"slice member {mask} is not a subset of the target universe")
    size = len(masks)
    nbr = [0] * size
    for i in range(size):
        for j in range(i + 1, size):
            if masks[i] | masks[j] == target:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
    memo: dict[int, int] = {}
    pairs: list[tuple[Mask, Mask]] = []
    residue: list[Mask] = []
    remaining = (1 << size) - 1
    while remaining:
        low = remaining & -remaining
        v = low.bit_length() - 1
        rest = remaining ^ low
        k_here = _matching_size(remaining, nbr, memo)
        partner = -1
        cand = nbr[v] & rest
        while cand:
            wl = cand & -cand
            w = wl.bit_length() - 1
            cand ^= wl
            if 1 + _matching_size(rest ^ wl, nbr, memo) == k_here:
                partner = w
                break  # ascending scan: smallest workable partner
        if partner < 0:
            residue.append(masks[v])
            remaining = rest
        else:
            pairs.append((masks[v], masks[partner]))
            remaining = rest ^ (1 << partner)
    return PairDecomposition(tuple(pairs), tuple(residue), len(pairs), target)


def residue_union_signature(residue: Sequence[Mask]) -> dict[tuple[int, int], Mask]:
    """Union mask of every residue index pair (i, j), i < j."""
    out: dict[tuple[int, int], Mask] = {}
    for i in range(len(residue)):
        for j in range(i + 1, len(residue)):
            out[(i, j)] = residue[i] | residue[j]
    return out


def abundance_witness(family: SetFamily) -> AbundanceWitness:
    """Certify that at least T(F) elements are abundant (at least one
    when T(F) = 1, which is the plain Frankl statement).

    WitnessUnavailable when too few elements qualify; that is exactly
    how a counterexample would surface.
    """
    t = t_value(family)
    prof = frequency_profile(family)
    need = t
    elements = tuple(sorted(prof.abundant))
    if len(elements) < need:
        raise WitnessUnavailable(
            f"only {len(elements)} abundant element(s), need {need}: "
            f"freq={prof.freq}, m={prof.m}"
        )
    return AbundanceWitness(elements, prof.m, tuple(prof.freq[e - 1] for e in elements))

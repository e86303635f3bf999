"""Exhaustive and isomorph-free enumeration of union-closed families.

Enumerated families live over {1..n}, always contain the empty set,
have every nonempty member of cardinality >= t, and optionally must
contain the full ground set (which equals requiring union(F) = M_n for
a union-closed family).  Two independent routes exist:

* an orderly depth-first search over candidate masks that maintains
  union-closure incrementally and can restrict itself to one canonical
  representative per relabeling orbit, and
* ``brute_force_enumerate``, a vectorized subset scan used as an oracle.

The search decides candidates in descending mask order by default.  A
union of two masks is numerically >= both, so when a candidate is
accepted every union constraint it creates points at already-decided
candidates: closure is a pure look-back test, and each accepted prefix
is itself a complete union-closed family.  The ascending order is kept
as an independent cross-check; there closure propagates forward as
forced candidates.

Isomorph rejection is canonical augmentation.  Encode a family as
sum(2^mask) over its members (over complemented members for the
ascending order) and call it canonical when the identity relabeling
attains the orbit maximum of that encoding.  Removing the smallest
member (largest, in the ascending order) preserves canonicity: if some
relabeling strictly beat the shrunk family, padding both sides back
with the removed member would beat the full family too, because the
removed member's power-of-two term is smaller than any gap between
distinct encodings of the remaining members.  Prefixes of canonical
families are therefore canonical, and non-canonical nodes prune whole
subtrees without losing any class.  For the ascending order the kept
representative coincides with the public CanonicalKey.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .core import (
    MAX_GROUND_SIZE,
    MIN_GROUND_SIZE,
    Mask,
    SetFamily,
    full_mask,
    relabel_mask,
)
from .errors import InfeasibleScale

MAX_ENUM_GROUND = 6
MAX_CANONICAL_GROUND = 7
BRUTE_FORCE_POOL_CAP = 22

ORDERS = ("desc", "asc")

Visit = Callable[[SetFamily], None]


@dataclass(frozen=True)
class EnumerationConstraints:
    """What to enumerate: ground size, minimum nonempty member size,
    whether M_n must be a member, and whether to collapse orbits."""

    n: int
    t: int
    require_universe: bool = True
    up_to_iso: bool = False

    def __post_init__(self) -> None:
        if not MIN_GROUND_SIZE <= self.n <= MAX_GROUND_SIZE:
            raise ValueError(f"n={self.n} outside {MIN_GROUND_SIZE}..{MAX_GROUND_SIZE}")
        if not 1 <= self.t <= self.n:
            raise ValueError(f"t={self.t} outside 1..{self.n}")


def ensure_enumerable(constraints: EnumerationConstraints, unbounded: bool = False) -> None:
    """Reject configurations outside the exhaustive envelope.

    n >= 7 is out of scope unconditionally; n = 6 with t <= 2 is a
    known census-scale blowup and needs the explicit acknowledgment.
    """
    n, t = constraints.n, constraints.t
    if n > MAX_ENUM_GROUND:
        raise InfeasibleScale(f"exhaustive enumeration is supported for n <= {MAX_ENUM_GROUND}, got n={n}")
    if n == MAX_ENUM_GROUND and t <= 2 and not unbounded:
        raise InfeasibleScale(
            "n=6 with t<=2 is census-scale; pass unbounded=True (--unbounded) to run anyway"
        )


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Lexicographically least relabeled member tuple of a family's orbit."""

    n: int
    members: tuple[Mask, ...]


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[tuple[int, ...], ...]:
    # lexicographic, identity first
    return tuple(itertools.permutations(range(n)))


@lru_cache(maxsize=None)
def _mask_images(n: int) -> np.ndarray:
    """(n!, 2^n) table: row p maps every mask to its image under perm p."""
    masks = np.arange(1 << n, dtype=np.uint16)
    rows = []
    for perm in _perms(n):
        img = np.zeros_like(masks)
        for b, pb in enumerate(perm):
            img |= ((masks >> b) & 1) << pb
        rows.append(img)
    return np.vstack(rows)


def _comp_encodings(n: int, members: Sequence[Mask]) -> np.ndarray:
    """Per-permutation encoding sum(2^image(complement(mask))).

    Larger encoding = lexicographically smaller ascending member list,
    so the orbit maximum marks the public canonical representative.
    """
    top = full_mask(n)
    table = _mask_images(n)
    imgs = table[:, [top ^ m for m in members]].astype(np.uint64)
    return (np.uint64(1) << imgs).sum(axis=1, dtype=np.uint64)


def canonical_key(family: SetFamily) -> CanonicalKey:
    """Orbit-invariant key; two families share it iff relabel-isomorphic."""
    if family.n > MAX_CANONICAL_GROUND:
        raise InfeasibleScale(f"canonical keys need an S_n scan; supported for n <= {MAX_CANONICAL_GROUND}")
    if not family.members:
        return CanonicalKey(family.n, ())
    enc = _comp_encodings(family.n, family.members)
    perm = _perms(family.n)[int(np.argmax(enc))]
    return CanonicalKey(family.n, tuple(sorted(relabel_mask(m, perm) for m in family.members)))


def canonical_form(family: SetFamily) -> SetFamily:
    """The family relabeled to its canonical representative."""
    return SetFamily(family.n, canonical_key(family).members)


@dataclass
class _Search:
    """Precomputed search tables for one (n, t, universe, order) setting."""

    n: int
    t: int
    require_universe: bool
    order: str
    full: Mask
    pool: tuple[Mask, ...]
    utab: tuple[tuple[int, ...], ...]
    enc_pow: np.ndarray
    comp_pow: np.ndarray
    nperms: int

    @property
    def size(self) -> int:
        return len(self.pool)


@lru_cache(maxsize=64)
def _search_context(n: int, t: int, require_universe: bool, order: str) -> _Search:
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}")
    full = full_mask(n)
    hi = n - 1 if require_universe else n
    cands = [m for m in range(1, full + 1) if t <= m.bit_count() <= hi]
    pool = tuple(sorted(cands, reverse=(order == "desc")))
    pos = {mask: i for i, mask in enumerate(pool)}
    # utab[i][j]: pool position of pool[i]|pool[j], or -1 when the union
    # is one of the two sets or the always-present forced universe
    utab = []
    for a in pool:
        row = []
        for b in pool:
            u = a | b
            if u == a or u == b or (require_universe and u == full):
                row.append(-1)
            else:
                row.append(pos[u])
        utab.append(tuple(row))
    table = _mask_images(n)
    raw = table[:, list(pool)].astype(np.uint64)
    comp = table[:, [full ^ m for m in pool]].astype(np.uint64)
    one = np.uint64(1)
    raw_pow = np.ascontiguousarray((one << raw).T)
    comp_pow = np.ascontiguousarray((one << comp).T)
    enc_pow = raw_pow if order == "desc" else comp_pow
    return _Search(
        n=n,
        t=t,
        require_universe=require_universe,
        order=order,
        full=full,
        pool=pool,
        utab=tuple(utab),
        enc_pow=enc_pow,
        comp_pow=comp_pow,
        nperms=len(_perms(n)),
    )


def _context_for(c: EnumerationConstraints, order: str) -> _Search:
    return _search_context(c.n, c.t, c.require_universe, order)


def _emit(ctx: _Search, iso: bool, visit: Visit | None, chosen: list[int]) -> SetFamily | None:
    if visit is None:
        return None
    masks = [ctx.pool[p] for p in chosen]
    if iso and ctx.order == "desc" and masks:
        # translate the search-internal representative into the public
        # canonical one (ascending-order search already produces it)
        enc = ctx.comp_pow[chosen].sum(axis=0)
        perm = _perms(ctx.n)[int(np.argmax(enc))]
        masks = [relabel_mask(m, perm) for m in masks]
    masks.append(0)
    if ctx.require_universe:
        masks.append(ctx.full)
    family = SetFamily(ctx.n, tuple(sorted(masks)))
    visit(family)
    return family


def _canonical_step(enc: np.ndarray, col: np.ndarray) -> np.ndarray | None:
    """Extend an orbit-encoding vector by one member; None if not canonical."""
    enc2 = enc + col
    if enc2.max() != enc2[0]:
        return None
    return enc2


def _filter_viable(ctx: _Search, viable: int, p: int, present: int) -> int:
    """Drop candidates below p whose union with pool[p] is absent."""
    row = ctx.utab[p]
    out = 0
    rem = viable & ~((1 << (p + 1)) - 1)
    while rem:
        low = rem & -rem
        q = low.bit_length() - 1
        rem ^= low
        u = row[q]
        if u < 0 or (present >> u) & 1:
            out |= low
    return out


def _walk_desc(
    ctx: _Search,
    iso: bool,
    visit: Visit | None,
    pos0: int,
    present: int,
    viable: int,
    enc: np.ndarray | None,
    chosen: list[int],
) -> int:
    # every node is a complete family: unions of accepted masks are
    # numerically larger, hence already decided and present
    _emit(ctx, iso, visit, chosen)
    count = 1
    rem = viable & ~((1 << pos0) - 1)
    while rem:
        low = rem & -rem
        p = low.bit_length() - 1
        rem ^= low
        if iso:
            enc2 = _canonical_step(enc, ctx.enc_pow[p])
            if enc2 is None:
                continue
        else:
            enc2 = None
        chosen.append(p)
        count += _walk_desc(
            ctx,
            iso,
            visit,
            p + 1,
            present | low,
            _filter_viable(ctx, viable, p, present),
            enc2,
            chosen,
        )
        chosen.pop()
    return count


def _walk_asc(
    ctx: _Search,
    iso: bool,
    visit: Visit | None,
    pos0: int,
    present: int,
    forced: int,
    enc: np.ndarray | None,
    chosen: list[int],
) -> int:
    pending = forced >> pos0
    if pending:
        count = 0
        hi = pos0 + (pending & -pending).bit_length() - 1  # must take the
        # lowest forced candidate no later than its own position
    else:
        _emit(ctx, iso, visit, chosen)
        count = 1
        hi = ctx.size - 1
    for p in range(pos0, hi + 1):
        if iso:
            enc2 = _canonical_step(enc, ctx.enc_pow[p])
            if enc2 is None:
                continue
        else:
            enc2 = None
        forced2 = forced
        row = ctx.utab[p]
        for b in chosen:
            u = row[b]
            if u >= 0:
                forced2 |= 1 << u
        chosen.append(p)
        count += _walk_asc(ctx, iso, visit, p + 1, present | (1 << p), forced2, enc2, chosen)
        chosen.pop()
    return count


def _fresh_enc(ctx: _Search, iso: bool) -> np.ndarray | None:
    return np.zeros(ctx.nperms, dtype=np.uint64) if iso else None


def enumerate_families(
    c: EnumerationConstraints,
    visit: Visit | None = None,
    *,
    order: str = "desc",
    unbounded: bool = False,
) -> int:
    """Visit every family satisfying c (one per orbit when up_to_iso).

    Returns the count; the visit stream is deterministic for a given
    (constraints, order).  Families arrive union-closed with the empty
    set included, and in up_to_iso mode each is its orbit's canonical
    representative.
    """
    ensure_enumerable(c, unbounded)
    ctx = _context_for(c, order)
    enc = _fresh_enc(ctx, c.up_to_iso)
    if order == "desc":
        viable = (1 << ctx.size) - 1
        return _walk_desc(ctx, c.up_to_iso, visit, 0, 0, viable, enc, [])
    return _walk_asc(ctx, c.up_to_iso, visit, 0, 0, 0, enc, [])


def job_depth(c: EnumerationConstraints, order: str = "desc") -> int:
    """How many leading candidate decisions define one work unit."""
    return max(0, min(10, _context_for(c, order).size - 6))


def subtree_jobs(c: EnumerationConstraints, order: str = "desc") -> list[int]:
    """All job ids: assignments of the first job_depth() candidates."""
    return list(range(1 << job_depth(c, order)))


def job_label(c: EnumerationConstraints, job: int, order: str = "desc") -> str:
    """Human-readable root of a job's subtree: its accepted masks."""
    ctx = _context_for(c, order)
    masks = [str(ctx.pool[i]) for i in range(job_depth(c, order)) if job >> i & 1]
    return ",".join(masks) if masks else "-"


def enumerate_job(
    c: EnumerationConstraints,
    job: int,
    visit: Visit | None = None,
    *,
    order: str = "desc",
    unbounded: bool = False,
) -> int:
    """Enumerate one subtree; summing over subtree_jobs equals the full count.

    Replays the job's fixed decisions with the same closure and
    canonicity tests the full search applies, so invalid assignments
    cost nothing and no family is visited by two different jobs.
    """
    ensure_enumerable(c, unbounded)
    ctx = _context_for(c, order)
    depth = job_depth(c, order)
    iso = c.up_to_iso
    enc = _fresh_enc(ctx, iso)
    chosen: list[int] = []
    present = 0
    if order == "desc":
        viable = (1 << ctx.size) - 1
        for i in range(depth):
            if not job >> i & 1:
                continue
            if not viable >> i & 1:
                return 0
            if iso:
                enc = _canonical_step(enc, ctx.enc_pow[i])
                if enc is None:
                    return 0
            viable = _filter_viable(ctx, viable, i, present)
            present |= 1 << i
            chosen.append(i)
        return _walk_desc(ctx, iso, visit, depth, present, viable, enc, chosen)
    forced = 0
    for i in range(depth):
        if job >> i & 1:
            if iso:
                enc = _canonical_step(enc, ctx.enc_pow[i])
                if enc is None:
                    return 0
            row = ctx.utab[i]
            for b in chosen:
                u = row[b]
                if u >= 0:
                    forced |= 1 << u
            present |= 1 << i
            chosen.append(i)
        elif forced >> i & 1:
            return 0
    return _walk_asc(ctx, iso, visit, depth, present, forced, enc, chosen)


def brute_force_enumerate(c: EnumerationConstraints) -> list[SetFamily]:
    """Oracle route: filter every subset of the candidate pool.

    The pool is every mask of cardinality t..n (M_n included), capped
    at 22 candidates (2^22 subsets) which covers all of n <= 4 plus the
    constrained n=6 slices with t >= 4.  Intentionally shares no code
    with the orderly search.
    """
    if c.n > MAX_ENUM_GROUND:
        raise InfeasibleScale(f"oracle is supported for n <= {MAX_ENUM_GROUND}, got n={c.n}")
    full = full_mask(c.n)
    pool = [m for m in range(1, full + 1) if c.t <= m.bit_count()]
    size = len(pool)
    if size > BRUTE_FORCE_POOL_CAP:
        raise InfeasibleScale(
            f"candidate pool has {size} sets; the oracle scans 2^pool and caps at {BRUTE_FORCE_POOL_CAP}"
        )
    pos = {mask: i for i, mask in enumerate(pool)}
    subs = np.arange(1 << size, dtype=np.uint32)
    ok = np.ones(subs.shape, dtype=bool)
    for i in range(size):
        for j in range(i + 1, size):
            u = pool[i] | pool[j]
            if u == pool[i] or u == pool[j]:
                continue
            if c.require_universe and u == full:
                continue  # implied by the universe filter below
            bad = (subs >> np.uint32(i)) & (subs >> np.uint32(j)) & ~(subs >> np.uint32(pos[u])) & np.uint32(1)
            ok &= bad == 0
    if c.require_universe:
        ok &= ((subs >> np.uint32(pos[full])) & np.uint32(1)) == 1
    families = []
    for s in np.nonzero(ok)[0].tolist():
        masks = [0] + [pool[i] for i in range(size) if s >> i & 1]
        families.append(SetFamily.from_masks(c.n, masks))
    if c.up_to_iso:
        by_key: dict[CanonicalKey, SetFamily] = {}
        for family in families:
            key = canonical_key(family)
            if key not in by_key:
                by_key[key] = SetFamily(c.n, key.members)
        families = [by_key[k] for k in sorted(by_key)]
    return families

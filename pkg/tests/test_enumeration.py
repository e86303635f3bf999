from __future__ import annotations

import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_canonical_members
from ucf import (
    CanonicalKey,
    EnumerationConstraints,
    InfeasibleScale,
    SetFamily,
    brute_force_enumerate,
    canonical_form,
    canonical_key,
    enumerate_families,
    enumerate_job,
    ensure_enumerable,
    full_mask,
    is_union_closed,
    job_depth,
    job_label,
    relabel_family,
    subtree_jobs,
    t_value,
)

# counts frozen from the brute-force oracle at n <= 4 and cross-checked
# between the two candidate orderings at n = 5
KNOWN_COUNTS = {
    (2, 1): (4, 3),  # (raw, up_to_iso)
    (2, 2): (1, 1),
    (3, 3): (1, 1),
    (4, 1): (2271, 165),
    (4, 2): (378, 40),
    (4, 3): (16, 5),
    (4, 4): (1, 1),
    (5, 2): (241805, 2900),
    (5, 3): (4945, 119),
    (5, 4): (32, 6),
    (5, 5): (1, 1),
    (6, 5): (64, 7),
}


def collect(c: EnumerationConstraints, **kw) -> list[SetFamily]:
    out: list[SetFamily] = []
    n = enumerate_families(c, out.append, **kw)
    assert n == len(out)
    return out


def family_strategy(n: int):
    return st.sets(
        st.integers(min_value=0, max_value=full_mask(n)), min_size=0, max_size=8
    ).map(lambda ms: SetFamily.from_masks(n, ms))


class TestConstraints:
    def test_validation(self):
        with pytest.raises(ValueError):
            EnumerationConstraints(1, 1)
        with pytest.raises(ValueError):
            EnumerationConstraints(13, 1)
        with pytest.raises(ValueError):
            EnumerationConstraints(4, 0)
        with pytest.raises(ValueError):
            EnumerationConstraints(4, 5)

    def test_envelope(self):
        with pytest.raises(InfeasibleScale):
            ensure_enumerable(EnumerationConstraints(7, 3))
        with pytest.raises(InfeasibleScale):
            ensure_enumerable(EnumerationConstraints(7, 3), unbounded=True)
        with pytest.raises(InfeasibleScale):
            ensure_enumerable(EnumerationConstraints(6, 2))
        ensure_enumerable(EnumerationConstraints(6, 2), unbounded=True)
        ensure_enumerable(EnumerationConstraints(6, 3))

    def test_enumerate_respects_envelope(self):
        with pytest.raises(InfeasibleScale):
            enumerate_families(EnumerationConstraints(6, 1))
        with pytest.raises(InfeasibleScale):
            enumerate_families(EnumerationConstraints(7, 3))


class TestCanonicalKey:
    def test_empty_family(self):
        assert canonical_key(SetFamily(4, ())) == CanonicalKey(4, ())

    def test_scale_cap(self):
        with pytest.raises(InfeasibleScale):
            canonical_key(SetFamily(8, (0, 1)))

    @settings(max_examples=60)
    @given(family_strategy(4))
    def test_matches_permutation_scan(self, family):
        assert canonical_key(family).members == naive_canonical_members(family)

    @settings(max_examples=40)
    @given(family_strategy(4))
    def test_orbit_invariance_all_perms(self, family):
        key = canonical_key(family)
        for perm in itertools.permutations(range(4)):
            assert canonical_key(relabel_family(family, perm)) == key

    @settings(max_examples=40)
    @given(family_strategy(4))
    def test_canonical_form_is_fixed_point(self, family):
        form = canonical_form(family)
        assert canonical_key(form).members == form.members
        assert canonical_form(form) == form

    def test_distinct_orbits_get_distinct_keys(self):
        a = SetFamily.from_sets(3, [[1], [1, 2]])
        b = SetFamily.from_sets(3, [[1], [2, 3]])
        assert canonical_key(a) != canonical_key(b)

    def test_keys_order_totally(self):
        a = canonical_key(SetFamily.from_sets(3, [[1]]))
        b = canonical_key(SetFamily.from_sets(3, [[1], [1, 2]]))
        assert (a < b) != (b < a)


class TestEnumerateFamilies:
    @pytest.mark.parametrize("n,t", sorted(KNOWN_COUNTS))
    @pytest.mark.parametrize("order", ["desc", "asc"])
    def test_known_counts(self, n, t, order):
        raw, iso = KNOWN_COUNTS[(n, t)]
        assert enumerate_families(EnumerationConstraints(n, t), order=order) == raw
        assert (
            enumerate_families(EnumerationConstraints(n, t, up_to_iso=True), order=order)
            == iso
        )

    def test_family_shape_contract(self):
        c = EnumerationConstraints(4, 2)
        for family in collect(c):
            assert family.members[0] == 0
            assert family.members[-1] == full_mask(4)
            assert is_union_closed(family)
            assert t_value(family) >= 2

    def test_no_universe_variant(self):
        c = EnumerationConstraints(3, 1, require_universe=False)
        families = collect(c)
        assert any(full_mask(3) not in f for f in families)
        # {0} alone qualifies once the universe is optional
        assert SetFamily(3, (0,)) in families

    def test_orders_agree_on_visit_sets(self):
        c = EnumerationConstraints(4, 2)
        desc = {f.members for f in collect(c, order="desc")}
        asc = {f.members for f in collect(c, order="asc")}
        assert desc == asc

    def test_iso_emits_canonical_representatives(self):
        c = EnumerationConstraints(4, 2, up_to_iso=True)
        for order in ("desc", "asc"):
            families = collect(c, order=order)
            for f in families:
                assert f.members == canonical_key(f).members

    def test_iso_collapses_raw_orbits_exactly(self):
        raw_keys = {canonical_key(f) for f in collect(EnumerationConstraints(4, 2))}
        iso = collect(EnumerationConstraints(4, 2, up_to_iso=True))
        assert {canonical_key(f) for f in iso} == raw_keys
        assert len(iso) == len(raw_keys)

    def test_visit_stream_deterministic(self):
        c = EnumerationConstraints(4, 1)
        first = [f.members for f in collect(c)]
        second = [f.members for f in collect(c)]
        assert first == second

    def test_count_without_visitor(self):
        c = EnumerationConstraints(4, 1)
        assert enumerate_families(c) == 2271

    def test_bad_order_rejected(self):
        with pytest.raises(ValueError):
            enumerate_families(EnumerationConstraints(3, 1), order="sideways")


class TestJobPartition:
    def test_job_depth_small_pool_runs_serial(self):
        # n=2, t=1: pool has 2 candidates, so a single job covers it
        c = EnumerationConstraints(2, 1)
        assert job_depth(c) == 0
        assert subtree_jobs(c) == [0]

    def test_job_label(self):
        c = EnumerationConstraints(4, 1)
        assert job_label(c, 0) == "-"
        depth = job_depth(c)
        assert depth > 0
        label = job_label(c, (1 << depth) - 1)
        assert len(label.split(",")) == depth

    @pytest.mark.parametrize("order", ["desc", "asc"])
    @pytest.mark.parametrize("iso", [False, True])
    def test_jobs_partition_the_search(self, order, iso):
        c = EnumerationConstraints(4, 1, up_to_iso=iso)
        serial = collect(c, order=order)
        total = 0
        seen: list[tuple[int, ...]] = []
        for job in subtree_jobs(c, order):
            got: list[SetFamily] = []
            total += enumerate_job(c, job, got.append, order=order)
            seen.extend(f.members for f in got)
        assert total == len(serial)
        assert sorted(seen) == sorted(f.members for f in serial)

    def test_job_respects_envelope(self):
        with pytest.raises(InfeasibleScale):
            enumerate_job(EnumerationConstraints(6, 2), 0)


class TestBruteForceOracle:
    def test_scale_caps(self):
        with pytest.raises(InfeasibleScale):
            brute_force_enumerate(EnumerationConstraints(7, 3))
        with pytest.raises(InfeasibleScale):
            # pool of 31 candidates exceeds the 2^22 subset budget
            brute_force_enumerate(EnumerationConstraints(5, 1))

    def test_singleton_configuration(self):
        families = brute_force_enumerate(EnumerationConstraints(3, 3))
        assert len(families) == 1
        assert families[0].members == (0, 7)

    def test_n2_census(self):
        families = brute_force_enumerate(EnumerationConstraints(2, 1))
        assert len(families) == 4
        assert all(0 in f and 3 in f for f in families)

    @pytest.mark.parametrize("n,t", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
    @pytest.mark.parametrize("universe", [True, False])
    @pytest.mark.parametrize("iso", [False, True])
    def test_agrees_with_orderly_search(self, n, t, universe, iso):
        c = EnumerationConstraints(n, t, universe, iso)
        oracle = brute_force_enumerate(c)
        search = collect(c)
        assert Counter(f.members for f in oracle) == Counter(f.members for f in search)

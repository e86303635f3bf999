"""The co-atom frequency floor, exercised over every universe size.

Take a set M with |M| >= 2 and any family G of at least two distinct
co-atoms (subsets of M missing exactly one element).  Each element of
M is absent from at most one co-atom, so every element belongs to at
least |G| - 1 of them.  lemma_1_2_bound measures the actual minimum
and reports the comparison.
"""

from __future__ import annotations

import itertools

from ucf import SetFamily, full_mask, lemma_1_2_bound

for size in range(2, 8):
    m_mask = full_mask(size)
    coatoms = [m_mask ^ (1 << b) for b in range(size)]
    worst = None
    cases = 0
    for g_size in range(2, size + 1):
        for combo in itertools.combinations(coatoms, g_size):
            result = lemma_1_2_bound(m_mask, SetFamily.from_masks(size, combo))
            assert result.holds
            slack = result.min_freq - (g_size - 1)
            worst = slack if worst is None else min(worst, slack)
            cases += 1
    print(f"|M| = {size}: {cases:3d} co-atom families, "
          f"floor |G|-1 holds in all, tightest slack {worst}")

# the floor is tight: two co-atoms meet in |M| - 2 elements, and each
# of the two elements outside the intersection sits in exactly one set
m_mask = full_mask(4)
pair = SetFamily.from_sets(4, [[1, 2, 3], [1, 2, 4]])
print("\nexample with |G| = 2 over {1,2,3,4}:",
      "min frequency =", lemma_1_2_bound(m_mask, pair).min_freq)

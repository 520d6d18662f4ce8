#!/usr/bin/env python3
"""Avoidance sequences: how many compositions of n avoid each statistic.

Setting y = 0 in a counting series keeps exactly the occurrence-free
compositions; setting z = 1 forgets the number of parts.  What remains is
one integer sequence per statistic.  The exact series machinery makes
these cheap to extend to moderate n.
"""

from comppat import PartSet, PatternId, avoidance_sequence

nat = PartSet.naturals()

print("compositions of n avoiding each statistic (n = 0..20):")
for p in PatternId:
    seq = avoidance_sequence(p, nat, 20)
    print(f"  {p.value:>6}: {seq}")

# Ordering the statistics by how fast their avoiders grow: peak-avoiding
# compositions are scarcest, 123-avoiding most plentiful.
print("\navoiders of n = 20, ascending:")
rows = sorted((avoidance_sequence(p, nat, 20)[20], p.value)
              for p in PatternId)
for count, name in rows:
    print(f"  {name:>6}: {count}")

# Part-set restrictions compose naturally: compositions over {1,2} that
# avoid 111 satisfy a Padovan-like recurrence (no three equal neighbours
# means no 111 run of 1s or 2s).
seq = avoidance_sequence(PatternId.P111, PartSet.of(1, 2), 15)
print(f"\n111-avoiders over {{1,2}}, n = 0..15: {seq}")

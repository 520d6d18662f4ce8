#!/usr/bin/env python3
"""Words over a finite alphabet as a special case of compositions.

Forgetting the sizes of the parts (x := 1) turns the composition series
over the parts {1..k} into the occurrence series for words in {1..k}^m.
Symmetries that are unavailable for compositions appear here: the
complement map w_i -> k+1-w_i swaps 112 with 221 and peak with valley, so
those pairs have identical word statistics.
"""

from comppat import (PatternId, brute_force_word_table, u_poly, word_gf,
                     word_table)

# Ternary words and their peak counts, exactly.
k = 3
series = word_gf(PatternId.PEAK, k, 8)
table = word_table(series)
print(f"words over [{k}] with r peaks (rows m <= 6):")
for (m, r), count in sorted(table.items()):
    if m <= 6:
        print(f"  m={m} r={r}: {count}")

# The enumeration oracle agrees cell by cell.
oracle = brute_force_word_table(PatternId.PEAK, k, 8)
assert table == oracle.counts
print("series == enumeration oracle: OK")

# Symmetry classes: 112/221 and peak/valley coincide for words...
assert word_gf(PatternId.P112, 4, 10) == word_gf(PatternId.P221, 4, 10)
assert word_gf(PatternId.PEAK, 4, 10) == word_gf(PatternId.VALLEY, 4, 10)
print("word series: 112 == 221 and peak == valley: OK")

# ...but not for compositions, where no complement map exists.
from comppat import PartSet, avoidance_sequence
nat = PartSet.naturals()
print("composition avoiders differ:",
      avoidance_sequence(PatternId.P112, nat, 10), "(112) vs",
      avoidance_sequence(PatternId.P221, nat, 10), "(221)")

# The helper polynomial family behind one of the 123 closed forms has a
# strikingly periodic value pattern at y = 0.
print("\nU_n(0) for n = 0..17:", [u_poly(n)[0] for n in range(18)])

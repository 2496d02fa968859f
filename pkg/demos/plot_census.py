"""
A census of small parameters
============================

Classify every pair G(l, m; k1), G(l, m; k2) with |l| <= 18 and k <= 6 and
list the pairs that are images of each other without being isomorphic.
Which pair comes first depends on how "small" is measured.
"""

from collections import Counter

from brunner_groups import census

result = census(18, 6)
print("pairs classified:", len(result.rows))
print(Counter(str(r.verdict.condition.value if r.verdict.condition else r.verdict.tag.value)
              for r in result.rows))

for name, rows in result.orderings().items():
    print(f"\nordered by {name}:")
    for row in rows:
        print(f"  G({row.l},{row.m};{row.k1})  G({row.l},{row.m};{row.k2})")

# Nothing of this kind exists below |l| = 12
print("\nmutual images with |l| <= 11:", census(11, 6).mutual_epi_rows())

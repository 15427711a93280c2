"""Exhaustive square census for short binary words, against the ceiling
ceil(n + 1 - sqrt(n) - log2(sqrt(n))).

Run after installing the package:  python3 demos/census_small.py
"""

import sys

from sqcycles import census_rows, conjecture_ceiling, write_tsv

N_MAX = 14

print(f"max distinct squares over all binary words up to length {N_MAX}:")
rows = list(census_rows(N_MAX, sigma=2, jobs=1))
write_tsv(rows, sys.stdout)
print()

tight = [r.n for r in rows if r.max_sq == r.conjecture_rhs]
print(f"lengths where the ceiling is attained exactly: {tight}")
print()

print("the ceiling keeps growing roughly like n - sqrt(n):")
for n in (50, 100, 500, 1000):
    print(f"  n={n}: ceiling {conjecture_ceiling(n)}")

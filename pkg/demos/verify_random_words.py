"""Run the whole bound battery over random words and show one full report.

Every check is an exact rational comparison; a single failure anywhere
would be a counterexample to a published inequality, so the expected
output is a clean sweep.

Run after installing the package:  python3 demos/verify_random_words.py
"""

import random

from sqcycles import verify_all

rng = random.Random(2024)

worst = None
fails = 0
for i in range(200):
    sigma = rng.randint(1, 4)
    n = rng.randint(1, 40)
    w = "".join(rng.choice("abcd"[:sigma]) for _ in range(n))
    report = verify_all(w)
    if not report.passed:
        fails += 1
        print(f"FAILED: {w}")
    if worst is None or report.sq_total > worst.sq_total:
        worst = report

print(f"200 random words checked, {fails} failures")
print()
print(f"densest word seen ({worst.sq_total} squares): {worst.word!r}")
print("its full report:")
print(worst.to_json(indent=2))

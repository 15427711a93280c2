"""Tour of the word-level primitives: rotations, conjugacy powers, Lyndon roots.

Run after installing the package:  python3 demos/conjugacy_and_roots.py
"""

from sqcycles import (
    LyndonRoot,
    conj_power_set,
    fractional_power,
    is_lyndon,
    is_primitive,
    lyndon_factors,
    lyndon_root_of_square,
    lyndon_rotation,
    smallest_period,
)

z = LyndonRoot("aab")
print(f"root {z.z}: rotations {z.rotations}")
print(f"is_lyndon({z.z}) = {is_lyndon(z.z)}")
print()

print("conjugacy powers [aab]_m, the length-m factors of (aab)^infinity:")
for m in range(7):
    members = sorted(conj_power_set(z, m).members)
    print(f"  m={m}: {members}")
print()

w = "abaab"
print(f"fractional powers of {w!r}: ", end="")
print(", ".join(repr(fractional_power(w, m)) for m in (3, 5, 8, 12)))
print(f"smallest period of 'aabaabaa' = {smallest_period('aabaabaa')}")
print()

for x in ("aabaabaa", "abab", "ba"):
    if is_primitive(x):
        root, i = lyndon_rotation(x)
        print(f"{x!r} is primitive; least rotation {root.z!r} (x = rotation {i})")
    else:
        print(f"{x!r} is not primitive")
print()

sq = "abaaba"
root, i, r = lyndon_root_of_square(sq)
print(f"square {sq!r} = rotation {i} of {root.z!r} raised to 2*{r}")

w = "aabaabaa"
roots = sorted(lyndon_factors(w), key=lambda t: (len(t.z), t.z))
print(f"Lyndon factors of {w!r}: {[t.z for t in roots]}")

"""Distinct squares, their per-root statistics, and the circuit families
they pin inside the stacked Rauzy graphs.

Run after installing the package:  python3 demos/squares_and_circuits.py
"""

from sqcycles import (
    build_union,
    cs_set,
    cycle_vector,
    cyclomatic_number,
    independence_rank,
    lyndon_factors,
    report_order,
    root_stats,
    squares_by_root,
    to_dot,
)

w = "aabaabaa"
inv = squares_by_root(w)
print(f"word {w!r}: {inv.total} distinct squares, largest half-length {inv.max_half_length}")
for z in inv.roots:
    group = inv.by_root[z]
    st = root_stats(w, z)
    print(f"  root {z.z!r}: {report_order(group)}")
    print(
        f"    r={st.r} s={st.s} k={st.k_list} g={st.g} M={st.M};"
        f" |SQ| = |z|(r-1)+s = {st.sq_count}"
    )
print()

u = build_union(w)
print(f"stacked Rauzy graphs: {u.n_v} vertices, {u.n_a} arcs, {u.n_c} components")
print(f"cyclomatic number = {cyclomatic_number(u)} = |w|")
print()

circuits = []
for z in sorted(lyndon_factors(w), key=lambda t: (len(t.z), t.z)):
    family = cs_set(w, z)
    circuits.extend(family)
    arcs = ["(" + ",".join(c.arcs) + ")" for c in family]
    print(f"CS({z.z}): {' '.join(arcs) if arcs else '(empty)'}")
vecs = [cycle_vector(c, u) for c in circuits]
print(f"\n{len(circuits)} circuits, independence rank {independence_rank(vecs)},"
      f" word length {len(w)}")
print()

print("DOT export of the order-2 graph (paste into graphviz):")
print(to_dot(u.graph(2)))

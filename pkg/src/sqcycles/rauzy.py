"""Rauzy graphs, conjugacy-power circuits and exact cycle-space rank.

The order-l graph has the length-l factors as vertices and the length-(l+1)
factors as arcs; arc u runs from u[:-1] to u[1:].  The union over all orders
keeps each layer's vertices distinct (a word of length l is a vertex only at
order l), so the union's vertices are all factors and its arcs are all
nonempty factors.  Circuits over the rotations of a Lyndon root give a
triangular family whose cycle-vectors are independent; the rank computation
is exact integer arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .words import LyndonRoot, conj_power_set, factor_set, factors, fractional_power

Word = str


@dataclass(frozen=True)
class RauzyGraph:
    order: int
    vertices: frozenset[str]
    arcs: frozenset[str]

    def arc_ends(self, arc: str) -> tuple[str, str]:
        """(initial, terminal) vertices of an arc word."""
        if arc not in self.arcs:
            raise KeyError(f"not an arc at order {self.order}: {arc!r}")
        return arc[:-1], arc[1:]


def build_rauzy(w: str, order: int) -> RauzyGraph:
    if not 0 <= order <= len(w):
        raise ValueError(f"order {order} out of range for |w|={len(w)}")
    verts = frozenset(factor_set(w, order))
    arcs = (
        frozenset(factor_set(w, order + 1)) if order < len(w) else frozenset()
    )
    return RauzyGraph(order, verts, arcs)


class RauzyUnion:
    """All Rauzy graphs of w, with one deterministic arc index.

    Arc identity is the arc's word value: a nonempty factor of length l+1 is
    an arc at order l and nowhere else, so (length, lex) keys every arc of
    the union uniquely.  The same word also names a vertex one layer up; the
    two are distinct graph objects.
    """

    __slots__ = ("word", "graphs", "arc_order", "arc_index", "n_v", "n_a", "n_c")

    def __init__(self, w: str):
        self.word = w
        self.graphs = tuple(build_rauzy(w, l) for l in range(len(w) + 1))
        all_factors = factors(w)
        self.arc_order = sorted(
            (f for f in all_factors if f), key=lambda s: (len(s), s)
        )
        self.arc_index = {arc: i for i, arc in enumerate(self.arc_order)}
        self.n_v = len(all_factors)
        self.n_a = len(self.arc_order)
        self.n_c = sum(_component_count(g) for g in self.graphs)

    def graph(self, order: int) -> RauzyGraph:
        if not 0 <= order < len(self.graphs):
            raise ValueError(f"order {order} out of range")
        return self.graphs[order]

    def __repr__(self) -> str:
        return (
            f"RauzyUnion(word={self.word!r}, n_v={self.n_v}, "
            f"n_a={self.n_a}, n_c={self.n_c})"
        )


def build_union(w: str) -> RauzyUnion:
    return RauzyUnion(w)


def _component_count(g: RauzyGraph) -> int:
    """Components of the undirected shadow; loops and multiplicity ignored."""
    parent = {v: v for v in g.vertices}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for arc in g.arcs:
        a, b = find(arc[:-1]), find(arc[1:])
        if a != b:
            parent[a] = b
    return sum(1 for v in parent if find(v) == v)


def cyclomatic_number(g: "RauzyUnion | RauzyGraph") -> int:
    """n_a - n_v + n_c, the maximum size of an independent cycle set."""
    if isinstance(g, RauzyUnion):
        return g.n_a - g.n_v + g.n_c
    return len(g.arcs) - len(g.vertices) + _component_count(g)


@dataclass(frozen=True)
class Circuit:
    """Closed arc walk visiting the rotations of a root at power length m.

    The arc sequence is (x_1^{m/|z|}, ..., x_{|z|}^{m/|z|}) in rotation
    order; consecutive arcs chain because each rotation drops the first
    letter of the previous one's power.  Lives at order m - 1.
    """

    root: LyndonRoot
    m: int
    arcs: tuple[str, ...]

    @property
    def order(self) -> int:
        return self.m - 1

    @property
    def arc_set(self) -> frozenset[str]:
        return frozenset(self.arcs)

    @property
    def smallest_arc(self) -> str:
        # the root is the least rotation, so its power is the least arc
        return self.arcs[0]

    def __len__(self) -> int:
        return len(self.arcs)


def circuit_for(w: str, z: "LyndonRoot | str", m: int) -> Circuit:
    """The rotation circuit of z at power length m inside w's Rauzy graph."""
    root = z if isinstance(z, LyndonRoot) else LyndonRoot(z)
    if m < 1:
        raise ValueError("power length must be at least 1")
    arcs = tuple(fractional_power(x, m) for x in root.rotations)
    for arc in set(arcs):
        if arc not in w:
            raise ValueError(f"{arc!r} is not a factor of {w!r}")
    for cur, nxt in zip(arcs, arcs[1:] + arcs[:1]):
        if cur[1:] != nxt[:-1]:
            raise ValueError(f"arcs {cur!r} -> {nxt!r} do not chain")
    return Circuit(root, m, arcs)


def cs_set(w: str, z: "LyndonRoot | str") -> list[Circuit]:
    """Circuits of z with arc set [z]_m for every feasible m >= |z|.

    Feasible m form the interval [|z| .. M_max] because losing containment
    at m rules out every larger power; the list is empty exactly when some
    rotation of z is missing from w.
    """
    root = z if isinstance(z, LyndonRoot) else LyndonRoot(z)
    if root.z not in w:
        raise ValueError(f"{root.z!r} is not a factor of {w!r}")
    return list(_cs_circuits(w, root))


@lru_cache(maxsize=4096)
def _cs_circuits(w: str, root: LyndonRoot) -> tuple[Circuit, ...]:
    out = []
    for m in range(len(root), len(w) + 1):
        if all(fractional_power(x, m) in w for x in root.rotations):
            out.append(circuit_for(w, root, m))
        else:
            break
    return tuple(out)


@dataclass(frozen=True)
class CycleVector:
    """Sparse signed traversal counts over a union arc index."""

    entries: tuple[tuple[int, int], ...]
    dim: int

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def cycle_vector(c: Circuit, idx: "RauzyUnion | dict[str, int]") -> CycleVector:
    """+1 per forward traversal of each arc; repeats accumulate."""
    index = idx.arc_index if isinstance(idx, RauzyUnion) else idx
    counts: dict[int, int] = {}
    for arc in c.arcs:
        if arc not in index:
            raise KeyError(f"arc {arc!r} missing from index")
        pos = index[arc]
        counts[pos] = counts.get(pos, 0) + 1
    return CycleVector(tuple(sorted(counts.items())), len(index))


def independence_rank(vs) -> int:
    """Rank over the rationals of the given cycle-vectors.

    Fraction-free elimination on sparse integer rows: the update
    a*row - b*pivot keeps everything integral, and each surviving row is
    divided by its gcd to stop growth.  No floating point anywhere.
    """
    vectors = list(vs)
    if not vectors:
        return 0
    dim = vectors[0].dim
    if any(v.dim != dim for v in vectors):
        raise ValueError("cycle-vectors span different arc indexes")
    rows = [v.as_dict() for v in vectors if v.entries]
    rank = 0
    while rows:
        col = min(min(r) for r in rows)
        pick = next(i for i, r in enumerate(rows) if col in r)
        pivot = rows.pop(pick)
        a = pivot[col]
        rank += 1
        reduced = []
        for r in rows:
            b = r.get(col)
            if not b:
                reduced.append(r)
                continue
            combo = {}
            for k in r.keys() | pivot.keys():
                val = a * r.get(k, 0) - b * pivot.get(k, 0)
                if val:
                    combo[k] = val
            if combo:
                g = 0
                for val in combo.values():
                    g = gcd(g, val)
                reduced.append({k: v // g for k, v in combo.items()})
        rows = reduced
    return rank


def _dot_name(v: str) -> str:
    label = v if v else "ε"
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    g: "RauzyUnion | RauzyGraph",
    marked: "set[str] | frozenset[str] | None" = None,
    name: str = "rauzy",
) -> str:
    """Graphviz DOT for one graph or the whole union.

    marked arcs render dashed; pass smallest_cs_arcs(w) to highlight the
    smallest arc of each circuit.
    """
    marked = marked or set()
    graphs = g.graphs if isinstance(g, RauzyUnion) else (g,)
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for layer in graphs:
        if not layer.vertices:
            continue
        lines.append(f"  // order {layer.order}")
        for v in sorted(layer.vertices):
            lines.append(f"  {_dot_name(v)};")
        for arc in sorted(layer.arcs, key=lambda s: (len(s), s)):
            style = ', style=dashed' if arc in marked else ""
            lines.append(
                f"  {_dot_name(arc[:-1])} -> {_dot_name(arc[1:])}"
                f" [label={_dot_name(arc)}{style}];"
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def smallest_cs_arcs(w: str) -> set[str]:
    """Lexicographically smallest arc of every circuit of every root of w."""
    from .words import lyndon_factors

    out: set[str] = set()
    for root in lyndon_factors(w):
        for c in _cs_circuits(w, root):
            out.add(c.smallest_arc)
    return out

"""Distinct-square enumeration and per-root statistics.

A square is a factor xx with x nonempty.  Squares are grouped by the
Lyndon root of x's primitive root; for each root z the numbers (r, s, g, M)
summarize how far the rotations of z extend as squares inside the word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import LyndonRoot, fractional_power, lyndon_root_of_square

Word = str


def distinct_squares(w: str) -> set[str]:
    """All distinct square factors of w, as word values.

    Row-by-row longest-common-extension scan: ext[j] is the common extension
    of w[i:] and w[j:], built downward in i, so w[i:i+2p] is a square exactly
    when ext[i+p] >= p.  O(n^2) time, O(n) extra space.
    """
    n = len(w)
    out: set[str] = set()
    if n < 2:
        return out
    below = [0] * (n + 1)
    ext = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        for j in range(n - 1, i, -1):
            ext[j] = below[j + 1] + 1 if w[i] == w[j] else 0
        for p in range(1, (n - i) // 2 + 1):
            if ext[i + p] >= p:
                out.add(w[i:i + 2 * p])
        below, ext = ext, below
    return out


def report_order(words) -> list[str]:
    """Deterministic listing order used in reports: length, then lexicographic."""
    return sorted(words, key=lambda s: (len(s), s))


def max_square_half_length(w: str) -> int:
    """Largest |x| over square factors xx of w; 0 when w is squarefree."""
    sq = distinct_squares(w)
    return max(len(s) for s in sq) // 2 if sq else 0


@dataclass(frozen=True)
class SquareInventory:
    """Distinct squares of a word partitioned by Lyndon root."""

    word: str
    by_root: dict[LyndonRoot, frozenset[str]]
    total: int
    max_half_length: int

    @property
    def squares(self) -> set[str]:
        out: set[str] = set()
        for group in self.by_root.values():
            out |= group
        return out

    @property
    def roots(self) -> list[LyndonRoot]:
        return list(self.by_root)


def squares_by_root(w: str) -> SquareInventory:
    """Partition distinct_squares(w) by Lyndon root; roots keyed (length, lex)."""
    groups: dict[LyndonRoot, set[str]] = {}
    half = 0
    for sq in distinct_squares(w):
        z, _, _ = lyndon_root_of_square(sq)
        groups.setdefault(z, set()).add(sq)
        half = max(half, len(sq) // 2)
    by_root = {
        z: frozenset(groups[z])
        for z in sorted(groups, key=lambda root: (len(root.z), root.z))
    }
    total = sum(len(g) for g in by_root.values())
    return SquareInventory(w, by_root, total, half)


@dataclass(frozen=True)
class RootStats:
    """Square statistics of one Lyndon root z inside a word.

    r is the largest d with some rotation's 2d-power a factor; k_list holds
    the 1-based rotation indices attaining it and s counts them; g is the
    largest cyclic gap between consecutive k's (wrapping at k_1 + |z|); M is
    2|z|r - g + 1, the guaranteed conjugacy-power coverage length.
    """

    z: LyndonRoot
    r: int
    s: int
    k_list: tuple[int, ...]
    g: int
    M: int

    @property
    def sq_count(self) -> int:
        # |z|(r-1) + s, the exact size of the root's square set
        return len(self.z) * (self.r - 1) + self.s


def root_stats(w: str, z: "LyndonRoot | str") -> RootStats:
    root = z if isinstance(z, LyndonRoot) else LyndonRoot(z)
    p = len(root)
    n = len(w)
    best: dict[int, int] = {}
    for i, x in enumerate(root.rotations, start=1):
        d = 0
        while 2 * p * (d + 1) <= n and fractional_power(x, 2 * p * (d + 1)) in w:
            d += 1
        if d:
            best[i] = d
    if not best:
        raise ValueError(f"root {root.z!r} has no squares in {w!r}")
    r = max(best.values())
    k_list = tuple(sorted(i for i, d in best.items() if d == r))
    s = len(k_list)
    wrapped = list(k_list) + [k_list[0] + p]
    g = max(b - a for a, b in zip(wrapped, wrapped[1:]))
    return RootStats(root, r, s, k_list, g, 2 * p * r - g + 1)

"""Primitive word operations: factors, periods, conjugacy and Lyndon roots.

Words are plain Python strings.  Letters compare by code point, which is
byte order for ASCII input; the empty string is the empty word.  Rotation
indices are 1-based throughout the public API: rotation i of z is
``z[i-1:] + z[:i-1]``, so rotation 1 is z itself.
"""

from __future__ import annotations

from dataclasses import dataclass

Word = str

_BRUTE_PERIOD_MAX = 64


def factor_set(w: str, length: int) -> set[str]:
    """Distinct factors of w with the given length (length 0 gives {""})."""
    if not 0 <= length <= len(w):
        raise ValueError(f"factor length {length} out of range for |w|={len(w)}")
    if length == 0:
        return {""}
    return {w[i:i + length] for i in range(len(w) - length + 1)}


def factors(w: str) -> set[str]:
    """All distinct factors of w, the empty word included."""
    out = {""}
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            out.add(w[i:j])
    return out


def smallest_period(w: str) -> int:
    """Smallest p >= 1 such that w[i] == w[i-p] for all i >= p.

    The period need not divide |w|: "aabaa" has period 3.  Short words are
    scanned directly; longer ones go through the failure function, and the
    two paths are tested to agree.
    """
    if not w:
        raise ValueError("the empty word has no period")
    if len(w) <= _BRUTE_PERIOD_MAX:
        return _period_brute(w)
    return _period_failure(w)


def _period_brute(w: str) -> int:
    n = len(w)
    for p in range(1, n):
        if all(w[i] == w[i - p] for i in range(p, n)):
            return p
    return n


def _period_failure(w: str) -> int:
    n = len(w)
    pi = [0] * n
    k = 0
    for q in range(1, n):
        while k and w[k] != w[q]:
            k = pi[k - 1]
        if w[k] == w[q]:
            k += 1
        pi[q] = k
    return n - pi[-1]


def primitive_root(w: str) -> tuple[str, int]:
    """Shortest x with w == x**k; returns (x, k), x primitive and k maximal."""
    if not w:
        raise ValueError("the empty word has no primitive root")
    n = len(w)
    for p in range(1, n):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p], n // p
    return w, 1


def is_primitive(w: str) -> bool:
    """True iff w cannot be written as x**k with k >= 2."""
    return primitive_root(w)[1] == 1


def fractional_power(x: str, m: int) -> str:
    """Length-m word cyclically repeating x, e.g. ("aab", 5) -> "aabaa"."""
    if m < 0:
        raise ValueError("power length must be non-negative")
    if m == 0:
        return ""
    if not x:
        raise ValueError("cannot extend the empty word")
    return (x * (m // len(x) + 1))[:m]


def is_lyndon(w: str) -> bool:
    """True iff w is primitive and strictly smallest among its rotations.

    Single left-to-right scan: w stays a prefix of a power of a Lyndon word
    of length p, and is itself Lyndon exactly when p == |w| at the end.
    """
    if not w:
        raise ValueError("the empty word is not eligible")
    p = 1
    for j in range(1, len(w)):
        c, d = w[j], w[j - p]
        if c < d:
            return False
        if c > d:
            p = j + 1
    return p == len(w)


class LyndonRoot:
    """A certified Lyndon word z with its rotation list x_1..x_|z|.

    rotations[i-1] is rotation i, so rotations[0] is z itself; the
    rotations of a primitive word are pairwise distinct.
    """

    __slots__ = ("z", "rotations")

    def __init__(self, z: str):
        if not is_lyndon(z):
            raise ValueError(f"not a Lyndon word: {z!r}")
        self.z = z
        self.rotations = tuple(z[i:] + z[:i] for i in range(len(z)))

    def rotation(self, i: int) -> str:
        """Rotation x_i, 1-based."""
        if not 1 <= i <= len(self.z):
            raise ValueError(f"rotation index {i} out of range")
        return self.rotations[i - 1]

    def __len__(self) -> int:
        return len(self.z)

    def __eq__(self, other) -> bool:
        return isinstance(other, LyndonRoot) and self.z == other.z

    def __hash__(self) -> int:
        return hash((LyndonRoot, self.z))

    def __lt__(self, other: "LyndonRoot") -> bool:
        return (len(self.z), self.z) < (len(other.z), other.z)

    def __repr__(self) -> str:
        return f"LyndonRoot({self.z!r})"


def _as_root(z: "LyndonRoot | str") -> LyndonRoot:
    return z if isinstance(z, LyndonRoot) else LyndonRoot(z)


@dataclass(frozen=True)
class ConjPowerSet:
    """The length-m fractional powers of all rotations of a Lyndon root.

    Equivalently the set of length-m factors of the infinite repetition of
    the root.  Has |z| members whenever m >= |z|, fewer only for short m.
    """

    root: LyndonRoot
    m: int
    members: frozenset[str]

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item) -> bool:
        return item in self.members


def conj_power_set(z: "LyndonRoot | str", m: int) -> ConjPowerSet:
    """Deduplicated set {fractional_power(x, m) for rotations x of z}."""
    root = _as_root(z)
    return ConjPowerSet(
        root, m, frozenset(fractional_power(x, m) for x in root.rotations)
    )


def lyndon_rotation(x: str) -> tuple[LyndonRoot, int]:
    """Least rotation z of a primitive word x, plus the index i with x = x_i."""
    if not is_primitive(x):
        raise ValueError(f"not primitive: {x!r}")
    n = len(x)
    best = min(range(n), key=lambda i: x[i:] + x[:i])
    z = x[best:] + x[:best]
    return LyndonRoot(z), (n - best) % n + 1


def lyndon_root_of_square(s: str) -> tuple[LyndonRoot, int, int]:
    """Decompose a square s as (x_i)^(2r) with x_i a rotation of a Lyndon z."""
    n = len(s)
    if n == 0 or n % 2 or s[: n // 2] != s[n // 2:]:
        raise ValueError(f"not a square: {s!r}")
    x, r = primitive_root(s[: n // 2])
    z, i = lyndon_rotation(x)
    return z, i, r


def lyndon_factors(w: str) -> set[LyndonRoot]:
    """All Lyndon words occurring as factors of w."""
    seen: set[str] = set()
    out: set[LyndonRoot] = set()
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            f = w[i:j]
            if f not in seen:
                seen.add(f)
                if is_lyndon(f):
                    out.add(LyndonRoot(f))
    return out

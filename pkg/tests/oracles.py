"""Independent brute-force reference implementations.

Everything here is written against the definitions only, as naively as
possible, and deliberately shares no code with the package.  Tests freeze
values computed by these oracles and cross-check the fast paths against
them.
"""

from __future__ import annotations

import itertools

import mpmath


def naive_factors(w: str) -> set[str]:
    out = {""}
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            out.add(w[i:j])
    return out


def naive_distinct_squares(w: str) -> set[str]:
    """Try every start and every even length; O(n^3)."""
    out = set()
    n = len(w)
    for i in range(n):
        for j in range(i + 2, n + 1, 2):
            h = (j - i) // 2
            if w[i:i + h] == w[i + h:j]:
                out.add(w[i:j])
    return out


def naive_smallest_period(w: str) -> int:
    n = len(w)
    for p in range(1, n + 1):
        if all(w[i] == w[i % p] for i in range(n)):
            return p
    raise AssertionError("unreachable for nonempty w")


def naive_rotations(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))]


def naive_is_primitive(w: str) -> bool:
    n = len(w)
    return not any(
        n % k == 0 and w[: n // k] * k == w for k in range(2, n + 1)
    )


def naive_is_lyndon(w: str) -> bool:
    if not w or not naive_is_primitive(w):
        return False
    return all(w < r for r in naive_rotations(w)[1:])


def naive_conj_powers(z: str, m: int) -> set[str]:
    return {(r * (m // len(r) + 1))[:m] for r in naive_rotations(z)}


def all_words(n: int, sigma: int):
    letters = [chr(97 + i) for i in range(sigma)]
    for tup in itertools.product(letters, repeat=n):
        yield "".join(tup)


def naive_max_squares(n: int, sigma: int) -> tuple[int, list[str]]:
    """Max distinct-square count over all sigma^n words, with attainers."""
    best = -1
    witnesses: list[str] = []
    for w in all_words(n, sigma):
        c = len(naive_distinct_squares(w))
        if c > best:
            best, witnesses = c, [w]
        elif c == best:
            witnesses.append(w)
    return best, witnesses


def naive_canonical(w: str) -> str:
    """Rename letters by first occurrence: the canonical representative."""
    mapping: dict[str, str] = {}
    out = []
    for ch in w:
        if ch not in mapping:
            mapping[ch] = chr(97 + len(mapping))
        out.append(mapping[ch])
    return "".join(out)


def oracle_ceiling(n: int) -> int:
    """ceil(n + 1 - sqrt(n) - log2(sqrt(n))) at fixed high precision.

    Separate code path from the package (plain mp floats, not intervals);
    asserts the value is comfortably far from the nearest integer unless
    it is exactly one.
    """
    with mpmath.workdps(60):
        v = mpmath.mpf(n + 1) - mpmath.sqrt(n) - mpmath.log(n, 2) / 2
        nearest = mpmath.nint(v)
        assert v == nearest or abs(v - nearest) > mpmath.mpf(10) ** -40
        return int(mpmath.ceil(v))

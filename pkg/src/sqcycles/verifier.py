"""Machine-checkable certificates for every square-counting bound.

Each check compares exact integers or rationals and returns a record with
the two sides of the inequality; nothing here ever rounds.  A failing
record carries a witness payload for post-mortem, but on correct inputs a
failure is impossible: it would contradict a proved statement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .rauzy import build_union, cs_set, cycle_vector, cyclomatic_number, independence_rank
from .squares import (
    distinct_squares,
    max_square_half_length,
    root_stats,
    squares_by_root,
)
from .words import LyndonRoot, fractional_power, lyndon_factors

Word = str


@dataclass(frozen=True)
class CheckRecord:
    name: str
    lhs: "int | Fraction"
    rhs: "int | Fraction"
    relation: str
    passed: bool
    note: str = ""
    witness: "dict | None" = field(default=None, compare=False)

    def as_json_dict(self) -> dict:
        out = {
            "name": self.name,
            "lhs": _json_num(self.lhs),
            "rhs": _json_num(self.rhs),
            "pass": self.passed,
        }
        if self.note:
            out["note"] = self.note
        if self.witness is not None and not self.passed:
            out["witness"] = self.witness
        return out


def _json_num(v: "int | Fraction"):
    """Exact JSON value: integers as numbers, other rationals as "p/q"."""
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return int(v)
        return f"{v.numerator}/{v.denominator}"
    return v


def _cmp(relation: str, lhs, rhs) -> bool:
    if relation == "<=":
        return lhs <= rhs
    if relation == ">=":
        return lhs >= rhs
    if relation == "==":
        return lhs == rhs
    raise ValueError(f"unknown relation {relation!r}")


def _record(name, lhs, rhs, relation, note="", witness=None) -> CheckRecord:
    return CheckRecord(
        name, lhs, rhs, relation, _cmp(relation, lhs, rhs), note, witness
    )


def check_sigma_bound(w: str) -> CheckRecord:
    """|SQ(w)| <= n - sigma, sigma the number of distinct letters."""
    if not w:
        raise ValueError("needs a nonempty word")
    total = len(distinct_squares(w))
    rhs = len(w) - len(set(w))
    return _record("sigma_bound", total, rhs, "<=", witness={"word": w})


def check_sqs_cs(w: str, z: "LyndonRoot | str") -> tuple[CheckRecord, ...]:
    """Square count identity and circuit-count lower bound for one root.

    Two records: |SQ_w(z)| == |z|(r-1)+s, and |CS_w(z)| >= 2|z|(r-1)+s+1.
    A root with no squares yields a single skip record (the statistics r, s
    are undefined there).
    """
    root = z if isinstance(z, LyndonRoot) else LyndonRoot(z)
    tag = root.z
    group = squares_by_root(w).by_root.get(root)
    if not group:
        return (
            CheckRecord(
                f"sqs_cs[{tag}]", 0, 0, "==", True, note="skipped: no squares"
            ),
        )
    st = root_stats(w, root)
    p = len(root)
    n_circuits = len(cs_set(w, root))
    witness = {
        "word": w,
        "root": tag,
        "r": st.r,
        "s": st.s,
        "k_list": list(st.k_list),
        "g": st.g,
        "M": st.M,
        "squares": sorted(group, key=lambda x: (len(x), x)),
        "cs_count": n_circuits,
    }
    eq = _record(
        f"sqs_cs_count[{tag}]", len(group), p * (st.r - 1) + st.s, "==",
        witness=witness,
    )
    low = _record(
        f"cs_lower_bound[{tag}]", n_circuits, 2 * p * (st.r - 1) + st.s + 1,
        ">=", witness=witness,
    )
    return eq, low


def check_avg_bound(w: str, z: "LyndonRoot | str") -> CheckRecord:
    """Per-circuit square load of a root: |SQ_w(z)|/|CS_w(z)| <= |z|/(|z|+1).

    Compared by cross-multiplying in integers; the record carries the two
    fractions for readability.
    """
    root = z if isinstance(z, LyndonRoot) else LyndonRoot(z)
    circuits = cs_set(w, root)
    if not circuits:
        raise ValueError(f"root {root.z!r} has no circuits in {w!r}")
    group = squares_by_root(w).by_root.get(root, frozenset())
    p = len(root)
    ok = len(group) * (p + 1) <= p * len(circuits)
    rec = CheckRecord(
        f"avg_bound[{root.z}]",
        Fraction(len(group), len(circuits)),
        Fraction(p, p + 1),
        "<=",
        ok,
        witness={"word": w, "root": root.z, "sq": len(group), "cs": len(circuits)},
    )
    return rec


def check_sqload(w: str) -> CheckRecord:
    """Every circuit at order l carries load at most (l+1)/(l+2).

    The load of a circuit is its root's AVG; the binding case is the lowest
    order, and the record reports the circuit with the worst margin.
    """
    inventory = squares_by_root(w)
    worst: "tuple[Fraction, Fraction, str, int] | None" = None
    all_ok = True
    for root in sorted(lyndon_factors(w), key=lambda r: (len(r.z), r.z)):
        circuits = cs_set(w, root)
        if not circuits:
            continue
        load = Fraction(len(inventory.by_root.get(root, ())), len(circuits))
        for c in circuits:
            bound = Fraction(c.order + 1, c.order + 2)
            if load > bound:
                all_ok = False
            if worst is None or load - bound > worst[0] - worst[1]:
                worst = (load, bound, root.z, c.order)
    if worst is None:
        return CheckRecord(
            "sqload", Fraction(0), Fraction(1), "<=", True, note="no circuits"
        )
    load, bound, root_tag, order = worst
    return CheckRecord(
        "sqload",
        load,
        bound,
        "<=",
        all_ok,
        note=f"worst margin at root {root_tag}, order {order}",
        witness={"word": w, "root": root_tag, "order": order},
    )


def _harmonic(k: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, k + 1)), Fraction(0))


def check_counting_bound(w: str) -> CheckRecord:
    """Square-count ceiling from the circuit loads.

    L is the longest square half-length.  Short branch (L*L < n): every
    root with a square has |z| <= L, so each of the at most n circuits
    carries at most L/(L+1) squares and |SQ(w)| <= n*L/(L+1); this is the
    integer-exact form of the n - sqrt(n) bound (the irrational version
    fails at n=2, "aa", where rounding |z| < sqrt(n) down to sqrt(n)-1 is
    invalid).  Long branch (L*L >= n): |SQ| <= n - (H_{L+1} - 1), the
    harmonic number summed as an exact rational, from loading the circuit
    chain guaranteed by a square of length 2L.
    """
    n = len(w)
    if n == 0:
        raise ValueError("needs a nonempty word")
    total = len(distinct_squares(w))
    half = max_square_half_length(w)
    if half * half < n:
        return _record(
            "counting_bound", Fraction(total), Fraction(n * half, half + 1),
            "<=",
            note=f"short branch, L={half}",
            witness={"word": w, "sq_total": total, "L": half},
        )
    rhs = Fraction(n) - (_harmonic(half + 1) - 1)
    return _record(
        "counting_bound", Fraction(total), rhs, "<=",
        note=f"long branch, L={half}",
        witness={"word": w, "sq_total": total, "L": half},
    )


@dataclass(frozen=True)
class VerificationReport:
    word: str
    n: int
    sigma: int
    sq_total: int
    checks: tuple[CheckRecord, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_json_dict(self) -> dict:
        return {
            "word": self.word,
            "n": self.n,
            "sigma": self.sigma,
            "sq_total": self.sq_total,
            "pass": self.passed,
            "checks": [c.as_json_dict() for c in self.checks],
        }

    def to_json(self, indent: "int | None" = None) -> str:
        return json.dumps(self.as_json_dict(), indent=indent, sort_keys=False)


def verify_all(w: str) -> VerificationReport:
    """Run every check plus the graph invariants; never raises on failures.

    The extra graph records certify cyclomatic(union) = |w|, rank of all
    circuit vectors = total circuit count <= |w|, and that containment of
    [z]_m at the top power length persists one step down for every root.
    """
    if not w:
        return VerificationReport("", 0, 0, 0, ())
    checks: list[CheckRecord] = [check_sigma_bound(w)]
    checks.append(check_counting_bound(w))
    checks.append(check_sqload(w))
    roots = sorted(lyndon_factors(w), key=lambda r: (len(r.z), r.z))
    union = build_union(w)
    vectors = []
    cs_total = 0
    reduce_ok = 0
    reduce_all = 0
    for root in roots:
        checks.extend(check_sqs_cs(w, root))
        circuits = cs_set(w, root)
        if circuits:
            checks.append(check_avg_bound(w, root))
            cs_total += len(circuits)
            vectors.extend(cycle_vector(c, union) for c in circuits)
            top = circuits[-1]
            reduce_all += 1
            if all(fractional_power(x, top.m - 1) in w for x in root.rotations):
                reduce_ok += 1
    checks.append(
        _record("cyclomatic_union", cyclomatic_number(union), len(w), "==",
                witness={"word": w})
    )
    checks.append(
        _record("rank_equals_cs_total", independence_rank(vectors), cs_total,
                "==", witness={"word": w})
    )
    checks.append(
        _record("cs_total_within_word", cs_total, len(w), "<=",
                witness={"word": w})
    )
    checks.append(
        _record("conjm_reduce", reduce_ok, reduce_all, "==",
                note="containment persists one power length down",
                witness={"word": w})
    )
    return VerificationReport(
        w, len(w), len(set(w)), len(distinct_squares(w)), tuple(checks)
    )

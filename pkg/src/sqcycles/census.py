"""Exhaustive distinct-square maxima over all words of a given length.

Words are enumerated in first-occurrence canonical form (first letter 'a',
each new letter introduced in order), since renaming letters cannot change
the square count.  The square count is maintained incrementally along the
search tree: a square ending at the last position is counted exactly when
that position closes its first occurrence, so each distinct value is
counted once per word.

The search space is split by fixed-length canonical prefixes; partitions
are independent, results merge by taking the max and concatenating witness
lists in prefix order, so output is identical for any worker count.
"""

from __future__ import annotations

import json
import os
import zlib
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import get_context
from typing import Iterable, Iterator, TextIO

import mpmath

from .verifier import verify_all

DEFAULT_CAP = 22
WITNESS_LIMIT = 100
_PARTITION_PREFIX = 6
_SPOT_MASK = 1023  # verify roughly one enumerated word in 2**10

TSV_HEADER = "n\tsigma\tmax_sq\tconjecture_rhs\tpass\twitness_count\tfirst_witness"

_CHECKPOINT_FORMAT = "square-census-checkpoint"
_CHECKPOINT_VERSION = 1


class CensusCapError(ValueError):
    """Requested length exceeds the configured census cap."""


class CheckpointError(Exception):
    """Checkpoint file is unreadable or belongs to a different run."""


def census_cap() -> int:
    """Current n cap: SQUARE_CENSUS_CAP when set, else the default."""
    raw = os.environ.get("SQUARE_CENSUS_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise CensusCapError(f"SQUARE_CENSUS_CAP must be an integer, got {raw!r}")
    if cap < 1:
        raise CensusCapError(f"SQUARE_CENSUS_CAP must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class CensusRow:
    """Result of one exhaustive length: the maximum and who attains it.

    conjecture_rhs is the exact ceiling of n + 1 - sqrt(n) - log2(sqrt(n));
    its pass column is only meaningful evidence for sigma = 2, and is
    reported as data for other alphabets.
    """

    n: int
    sigma: int
    max_sq: int
    witnesses: tuple[str, ...]
    witness_count: int
    conjecture_rhs: int
    conjecture_pass: bool

    @property
    def density(self) -> Fraction:
        return Fraction(self.max_sq, self.n)

    def tsv_line(self) -> str:
        first = self.witnesses[0] if self.witnesses else ""
        return "\t".join(
            (
                str(self.n),
                str(self.sigma),
                str(self.max_sq),
                str(self.conjecture_rhs),
                "true" if self.conjecture_pass else "false",
                str(self.witness_count),
                first,
            )
        )


def conjecture_ceiling(n: int) -> int:
    """ceil(n + 1 - sqrt(n) - log2(sqrt(n))) as an exact integer.

    When n is an even power of two both sqrt(n) and log2(sqrt(n)) are
    integers and the value is computed directly.  Otherwise the value is
    irrational; interval arithmetic at growing precision pins its ceiling
    once the interval is narrow and excludes every integer.
    """
    if n < 1:
        raise ValueError("n must be positive")
    e = n.bit_length() - 1
    if n == 1 << e and e % 2 == 0:
        return n + 1 - (1 << (e // 2)) - e // 2
    iv = mpmath.iv
    old_prec = iv.prec
    try:
        for prec in (80, 160, 320, 640, 1280, 2560, 5120, 10240):
            iv.prec = prec
            val = iv.mpf(n + 1) - iv.sqrt(n) - iv.log(n) / (2 * iv.log(2))
            lo = int(mpmath.ceil(val.a))
            hi = int(mpmath.ceil(val.b))
            if lo == hi and val.delta < mpmath.mpf(10) ** -30:
                return lo
    finally:
        iv.prec = old_prec
    raise ArithmeticError(f"interval never separated an integer for n={n}")


def canonical_words(n: int, sigma: int) -> Iterator[str]:
    """All length-n words in first-occurrence canonical form, lex order."""
    if n < 0:
        raise ValueError("length must be non-negative")
    sigma_eff = max(1, min(sigma, n if n else 1))
    stack = [("", 0)]
    while stack:
        prefix, used = stack.pop()
        if len(prefix) == n:
            yield prefix
            continue
        for c in range(min(used + 1, sigma_eff) - 1, -1, -1):
            stack.append((prefix + chr(97 + c), max(used, c + 1)))


def _new_suffix_squares(w: str) -> int:
    """Distinct squares whose first occurrence ends at the last position."""
    t = len(w)
    count = 0
    for p in range(1, t // 2 + 1):
        if w[t - 2 * p:t - p] == w[t - p:] and w.find(w[t - 2 * p:]) == t - 2 * p:
            count += 1
    return count


def count_distinct_squares_incremental(w: str) -> int:
    """Square total via the incremental rule; cross-check for the scanner."""
    return sum(_new_suffix_squares(w[:t]) for t in range(1, len(w) + 1))


def _spot_verify(w: str) -> None:
    if zlib.crc32(w.encode()) & _SPOT_MASK:
        return
    report = verify_all(w)
    if not report.passed:
        raise RuntimeError(
            "bound violated during census, counterexample follows\n"
            + report.to_json(indent=2)
        )


def _search_partition(task: tuple[int, int, str, bool]) -> tuple[str, int, int, tuple[str, ...]]:
    """Exhaust one canonical prefix; returns (prefix, best, attained, witnesses)."""
    n, sigma_eff, prefix, spot = task
    base = count_distinct_squares_incremental(prefix)
    used0 = (max(map(ord, prefix)) - 96) if prefix else 0
    best = -1
    attained = 0
    witnesses: list[str] = []

    def walk(w: str, used: int, count: int) -> None:
        nonlocal best, attained
        if len(w) == n:
            if spot:
                _spot_verify(w)
            if count > best:
                best = count
                attained = 1
                witnesses.clear()
                witnesses.append(w)
            elif count == best:
                attained += 1
                if len(witnesses) < WITNESS_LIMIT:
                    witnesses.append(w)
            return
        for c in range(min(used + 1, sigma_eff)):
            nxt = w + chr(97 + c)
            walk(nxt, max(used, c + 1), count + _new_suffix_squares(nxt))

    walk(prefix, used0, base)
    return prefix, best, attained, tuple(witnesses)


def _merge_partitions(
    parts: "dict[str, tuple[int, int, tuple[str, ...]]]",
) -> tuple[int, int, tuple[str, ...]]:
    """Fold per-prefix results; prefix order keeps witnesses lex-sorted."""
    best = max(r[0] for r in parts.values())
    attained = 0
    witnesses: list[str] = []
    for prefix in sorted(parts):
        local_best, local_attained, local_witnesses = parts[prefix]
        if local_best != best:
            continue
        attained += local_attained
        for w in local_witnesses:
            if len(witnesses) < WITNESS_LIMIT:
                witnesses.append(w)
    return best, attained, tuple(witnesses)


def _partition_prefixes(n: int, sigma_eff: int) -> list[str]:
    return list(canonical_words(min(n, _PARTITION_PREFIX), sigma_eff))


class _Checkpoint:
    """Append-only JSONL journal of finished partitions and rows."""

    def __init__(self, path: str, sigma: int):
        self.path = path
        self.sigma = sigma
        self.parts: dict[int, dict[str, tuple[int, int, tuple[str, ...]]]] = {}
        self.rows: dict[int, CensusRow] = {}
        exists = os.path.exists(path)
        if exists:
            self._load()
        self._fh = open(path, "a", encoding="utf-8")
        if not exists:
            self._append(
                {
                    "format": _CHECKPOINT_FORMAT,
                    "version": _CHECKPOINT_VERSION,
                    "sigma": sigma,
                }
            )

    def _load(self) -> None:
        try:
            with open(self.path, encoding="utf-8") as fh:
                lines = [ln for ln in fh.read().splitlines() if ln.strip()]
        except OSError as exc:
            raise CheckpointError(f"cannot read checkpoint: {exc}") from exc
        if not lines:
            return
        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError as exc:
            raise CheckpointError("corrupt checkpoint header") from exc
        if (
            header.get("format") != _CHECKPOINT_FORMAT
            or header.get("version") != _CHECKPOINT_VERSION
        ):
            raise CheckpointError("unrecognized checkpoint format")
        if header.get("sigma") != self.sigma:
            raise CheckpointError(
                f"checkpoint was built for sigma={header.get('sigma')}"
            )
        for ln in lines[1:]:
            try:
                rec = json.loads(ln)
            except json.JSONDecodeError as exc:
                raise CheckpointError("corrupt checkpoint line") from exc
            kind = rec.get("kind")
            if kind == "part":
                self.parts.setdefault(rec["n"], {})[rec["prefix"]] = (
                    rec["max_sq"],
                    rec["attained"],
                    tuple(rec["witnesses"]),
                )
            elif kind == "row":
                self.rows[rec["n"]] = CensusRow(
                    rec["n"],
                    self.sigma,
                    rec["max_sq"],
                    tuple(rec["witnesses"]),
                    rec["witness_count"],
                    rec["conjecture_rhs"],
                    rec["conjecture_pass"],
                )
            else:
                raise CheckpointError(f"unknown checkpoint record {kind!r}")

    def _append(self, rec: dict) -> None:
        self._fh.write(json.dumps(rec, sort_keys=True) + "\n")
        self._fh.flush()

    def record_part(
        self, n: int, prefix: str, result: tuple[int, int, tuple[str, ...]]
    ) -> None:
        self.parts.setdefault(n, {})[prefix] = result
        best, attained, witnesses = result
        self._append(
            {
                "kind": "part",
                "n": n,
                "prefix": prefix,
                "max_sq": best,
                "attained": attained,
                "witnesses": list(witnesses),
            }
        )

    def record_row(self, row: CensusRow) -> None:
        self.rows[row.n] = row
        self._append(
            {
                "kind": "row",
                "n": row.n,
                "max_sq": row.max_sq,
                "witnesses": list(row.witnesses),
                "witness_count": row.witness_count,
                "conjecture_rhs": row.conjecture_rhs,
                "conjecture_pass": row.conjecture_pass,
            }
        )

    def close(self) -> None:
        self._fh.close()


def _census_one(
    n: int,
    sigma: int,
    jobs: int,
    checkpoint: "_Checkpoint | None",
    spot_verify: bool,
) -> CensusRow:
    sigma_eff = min(sigma, n)
    done: dict[str, tuple[int, int, tuple[str, ...]]] = {}
    if checkpoint is not None:
        done.update(checkpoint.parts.get(n, {}))
    prefixes = _partition_prefixes(n, sigma_eff)
    pending = [p for p in prefixes if p not in done]
    tasks = [(n, sigma_eff, p, spot_verify) for p in pending]
    if jobs > 1 and len(tasks) > 1:
        with get_context("spawn").Pool(jobs) as pool:
            results = pool.map(_search_partition, tasks)
    else:
        results = [_search_partition(t) for t in tasks]
    for prefix, best, attained, witnesses in results:
        done[prefix] = (best, attained, witnesses)
        if checkpoint is not None:
            checkpoint.record_part(n, prefix, done[prefix])
    best, attained, witnesses = _merge_partitions(done)
    rhs = conjecture_ceiling(n)
    row = CensusRow(n, sigma, best, witnesses, attained, rhs, best <= rhs)
    if checkpoint is not None:
        checkpoint.record_row(row)
    return row


def census_rows(
    n_max: int,
    sigma: int = 2,
    jobs: int = 1,
    checkpoint_path: "str | None" = None,
    spot_verify: bool = True,
) -> Iterator[CensusRow]:
    """Stream one CensusRow per n in [1..n_max], resuming from a checkpoint.

    Arguments and the checkpoint are validated before the first row, so a
    bad request fails before any output is produced.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if sigma < 1:
        raise ValueError("sigma must be positive")
    if jobs < 1:
        raise ValueError("jobs must be positive")
    cap = census_cap()
    if n_max > cap:
        raise CensusCapError(
            f"n_max={n_max} exceeds cap {cap}; raise SQUARE_CENSUS_CAP to override"
        )
    checkpoint = _Checkpoint(checkpoint_path, sigma) if checkpoint_path else None
    return _census_row_stream(n_max, sigma, jobs, checkpoint, spot_verify)


def _census_row_stream(
    n_max: int,
    sigma: int,
    jobs: int,
    checkpoint: "_Checkpoint | None",
    spot_verify: bool,
) -> Iterator[CensusRow]:
    try:
        for n in range(1, n_max + 1):
            if checkpoint is not None and n in checkpoint.rows:
                row = checkpoint.rows[n]
                if row.sigma != sigma:
                    raise CheckpointError("checkpoint sigma mismatch")
                yield row
                continue
            yield _census_one(n, sigma, jobs, checkpoint, spot_verify)
    finally:
        if checkpoint is not None:
            checkpoint.close()


def max_distinct_squares(
    n: int,
    sigma: int,
    jobs: int = 1,
    spot_verify: bool = True,
) -> CensusRow:
    """Exact maximum of the distinct-square count over all length-n words.

    The alphabet is clipped to n letters: extra letters beyond the word
    length can never be used by a canonical word.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if sigma < 1:
        raise ValueError("sigma must be positive")
    cap = census_cap()
    if n > cap:
        raise CensusCapError(
            f"n={n} exceeds cap {cap}; raise SQUARE_CENSUS_CAP to override"
        )
    return _census_one(n, sigma, jobs, None, spot_verify)


def check_conjecture(n: int, jobs: int = 1) -> CensusRow:
    """Exhaustive binary-alphabet row with the ceiling comparison filled in."""
    return max_distinct_squares(n, 2, jobs=jobs)


def density_table(n_range: Iterable[int], sigma: int = 2) -> list[CensusRow]:
    """Census rows for each n in n_range; densities are row.density."""
    return [max_distinct_squares(n, sigma) for n in n_range]


def write_tsv(rows: Iterable[CensusRow], out: TextIO) -> None:
    out.write(TSV_HEADER + "\n")
    for row in rows:
        out.write(row.tsv_line() + "\n")

"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input
(bad word, order out of range, cap exceeded), 3 I/O trouble including a
corrupt checkpoint.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import (
    CensusCapError,
    CheckpointError,
    census_rows,
    conjecture_ceiling,
    max_distinct_squares,
    TSV_HEADER,
)
from .rauzy import build_rauzy, build_union, smallest_cs_arcs, to_dot
from .squares import report_order, root_stats, squares_by_root
from .verifier import verify_all
from .words import is_primitive, lyndon_factors, lyndon_rotation


def _decode_word(raw: str, use_hex: bool) -> str:
    if use_hex:
        try:
            return bytes.fromhex(raw).decode("latin-1")
        except ValueError as exc:
            raise ValueError(f"not a hex string: {raw!r}") from exc
    if not raw.isascii():
        raise ValueError("word must be ASCII; pass --hex for arbitrary bytes")
    return raw


def _open_out(path: "str | None"):
    return open(path, "w", encoding="utf-8") if path else sys.stdout


def _close_out(fh) -> None:
    if fh is not sys.stdout:
        fh.close()


def cmd_squares(args) -> int:
    w = _decode_word(args.word, args.hex)
    if not w:
        raise ValueError("squares needs a nonempty word")
    if not args.hex and not w.isprintable():
        raise ValueError("word must consist of printable letters")
    inv = squares_by_root(w)
    roots = []
    for root, group in inv.by_root.items():
        st = root_stats(w, root)
        roots.append(
            {
                "root": root.z,
                "count": len(group),
                "squares": report_order(group),
                "r": st.r,
                "s": st.s,
                "k_list": list(st.k_list),
                "g": st.g,
                "M": st.M,
            }
        )
    if args.json:
        print(json.dumps({"word": w, "total": inv.total, "roots": roots}))
        return 0
    print(f"word: {w}")
    print(f"distinct squares: {inv.total}")
    for rec in roots:
        print(
            f"root {rec['root']}: {rec['count']} squares"
            f" (r={rec['r']}, s={rec['s']}, k={tuple(rec['k_list'])},"
            f" g={rec['g']}, M={rec['M']})"
        )
        for sq in rec["squares"]:
            print(f"  {sq}")
    return 0


def cmd_lyndon(args) -> int:
    w = _decode_word(args.word, args.hex)
    roots = sorted(lyndon_factors(w), key=lambda r: (len(r.z), r.z))
    if args.json:
        out = {"word": w, "lyndon_factors": [r.z for r in roots]}
        if w and is_primitive(w):
            z, i = lyndon_rotation(w)
            out["least_rotation"] = z.z
            out["rotation_index"] = i
        print(json.dumps(out))
        return 0
    print(f"word: {w}")
    print(f"lyndon factors: {len(roots)}")
    for r in roots:
        print(f"  {r.z}")
    if w and is_primitive(w):
        z, i = lyndon_rotation(w)
        print(f"least rotation: {z.z} (input is rotation {i})")
    return 0


def cmd_rauzy(args) -> int:
    w = _decode_word(args.word, args.hex)
    marked = smallest_cs_arcs(w) if args.mark_cs else set()
    out = _open_out(args.out)
    try:
        if args.order is not None:
            target = build_rauzy(w, args.order)
            graphs = (target,)
        else:
            target = build_union(w)
            graphs = target.graphs
        if args.dot:
            out.write(to_dot(target, marked))
            return 0
        payload = {
            "word": w,
            "orders": [
                {
                    "order": g.order,
                    "vertices": sorted(g.vertices),
                    "arcs": [
                        {"word": a, "from": a[:-1], "to": a[1:]}
                        for a in sorted(g.arcs, key=lambda s: (len(s), s))
                    ],
                }
                for g in graphs
            ],
        }
        if args.mark_cs:
            payload["marked_arcs"] = sorted(marked, key=lambda s: (len(s), s))
        out.write(json.dumps(payload) + "\n")
        return 0
    finally:
        _close_out(out)


def cmd_verify(args) -> int:
    if args.file is not None:
        with open(args.file, encoding="utf-8") as fh:
            words = [ln.rstrip("\n") for ln in fh]
        words = [w for w in words if w]
    else:
        words = [_decode_word(args.word or "", args.hex)]
    reports = [verify_all(w) for w in words]
    ok = all(r.passed for r in reports)
    out = _open_out(args.out)
    try:
        if len(reports) == 1:
            out.write(reports[0].to_json(indent=2) + "\n")
        else:
            out.write(
                json.dumps([r.as_json_dict() for r in reports], indent=2) + "\n"
            )
    finally:
        _close_out(out)
    return 0 if ok else 1


def cmd_census(args) -> int:
    rows = census_rows(
        args.n_max,
        sigma=args.sigma,
        jobs=args.jobs,
        checkpoint_path=args.checkpoint,
        spot_verify=not args.no_spot_verify,
    )
    out = _open_out(args.out)
    try:
        out.write(TSV_HEADER + "\n")
        out.flush()
        for row in rows:
            out.write(row.tsv_line() + "\n")
            out.flush()
    finally:
        _close_out(out)
    return 0


def cmd_conjecture(args) -> int:
    rhs = conjecture_ceiling(args.n)
    if not args.check:
        print(rhs)
        return 0
    row = max_distinct_squares(args.n, 2, jobs=args.jobs)
    print(TSV_HEADER)
    print(row.tsv_line())
    return 0 if row.conjecture_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqcycles",
        description="distinct squares, Lyndon roots, Rauzy circuits, census",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("squares", help="distinct squares grouped by Lyndon root")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.add_argument("--hex", action="store_true", help="word is hex-encoded bytes")
    p.set_defaults(func=cmd_squares)

    p = sub.add_parser("lyndon", help="Lyndon factors and least rotation")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.add_argument("--hex", action="store_true")
    p.set_defaults(func=cmd_lyndon)

    p = sub.add_parser("rauzy", help="Rauzy graphs as JSON or DOT")
    p.add_argument("word")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--order", type=int, default=None)
    group.add_argument("--all", action="store_true", help="every order (default)")
    p.add_argument("--dot", action="store_true")
    p.add_argument(
        "--mark-cs",
        action="store_true",
        help="dash the smallest arc of each circuit",
    )
    p.add_argument("--out", default=None)
    p.add_argument("--hex", action="store_true")
    p.set_defaults(func=cmd_rauzy)

    p = sub.add_parser("verify", help="check every bound on a word or corpus")
    p.add_argument("word", nargs="?", default=None)
    p.add_argument("--file", default=None, help="one word per line")
    p.add_argument("--out", default=None)
    p.add_argument("--hex", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="exhaustive max distinct squares per n")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--no-spot-verify", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("conjecture", help="ceiling bound, optionally checked")
    p.add_argument("n", type=int)
    p.add_argument("--check", action="store_true", help="run the census at n")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_conjecture)

    return parser


def entry(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.word is None and args.file is None:
        args.word = ""
    try:
        return args.func(args)
    except CensusCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CheckpointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(entry())

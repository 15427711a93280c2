"""CLI plumbing: argument handling, output formats, exit codes.

Substance values (square counts, census maxima) are frozen in the other
test modules; here the point is that the front end pipes them through
intact and maps errors to the documented exit codes.
"""

import json
import os
import subprocess
import sys

import pytest

from sqcycles import cli
from sqcycles.verifier import CheckRecord, VerificationReport

PKG_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run_cli(*argv, env=None):
    cmd = [sys.executable, "-m", "sqcycles", *argv]
    full_env = dict(os.environ, PYTHONPATH=os.path.join(PKG_ROOT, "src"))
    if env:
        full_env.update(env)
    return subprocess.run(
        cmd, capture_output=True, text=True, env=full_env, timeout=300
    )


# ---------------------------------------------------------------- squares


def test_squares_json(capsys):
    rc = cli.entry(["squares", "aabaabaa", "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["word"] == "aabaabaa"
    assert payload["total"] == 4
    by_root = {rec["root"]: rec for rec in payload["roots"]}
    assert set(by_root) == {"a", "aab"}
    assert by_root["a"]["squares"] == ["aa"]
    assert by_root["aab"]["count"] == 3
    assert by_root["aab"]["squares"] == ["aabaab", "abaaba", "baabaa"]
    assert by_root["aab"]["r"] == 1
    assert by_root["aab"]["s"] == 3
    assert by_root["aab"]["k_list"] == [1, 2, 3]
    assert by_root["aab"]["g"] == 1
    assert by_root["aab"]["M"] == 6


def test_squares_text(capsys):
    rc = cli.entry(["squares", "aabaabaa"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "distinct squares: 4" in out
    assert "root aab: 3 squares" in out
    assert "  abaaba" in out


def test_squares_rejects_bad_words(capsys):
    assert cli.entry(["squares", ""]) == 2
    assert cli.entry(["squares", "café"]) == 2
    assert cli.entry(["squares", "a\tb"]) == 2
    err = capsys.readouterr().err
    assert err.count("error:") == 3


def test_hex_word(capsys):
    rc = cli.entry(["squares", "--hex", "616161", "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["word"] == "aaa"
    assert payload["total"] == 1
    assert cli.entry(["squares", "--hex", "61zz"]) == 2


# ----------------------------------------------------------------- lyndon


def test_lyndon_json(capsys):
    rc = cli.entry(["lyndon", "aabaabaa", "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lyndon_factors"] == ["a", "b", "ab", "aab"]
    assert payload["least_rotation"] == "aaaabaab"
    assert payload["rotation_index"] == 3


def test_lyndon_imprimitive_word_has_no_rotation(capsys):
    rc = cli.entry(["lyndon", "abab", "--json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert "least_rotation" not in payload
    assert payload["lyndon_factors"] == ["a", "b", "ab"]


# ------------------------------------------------------------------ rauzy


def test_rauzy_single_order_json(capsys):
    rc = cli.entry(["rauzy", "aab", "--order", "1"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["orders"]) == 1
    layer = payload["orders"][0]
    assert layer["order"] == 1
    assert layer["vertices"] == ["a", "b"]
    assert layer["arcs"] == [
        {"word": "aa", "from": "a", "to": "a"},
        {"word": "ab", "from": "a", "to": "b"},
    ]


def test_rauzy_union_json(capsys):
    rc = cli.entry(["rauzy", "aab", "--all", "--mark-cs"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    # orders 0..|w|, arcs across layers = all nonempty factors
    assert [o["order"] for o in payload["orders"]] == [0, 1, 2, 3]
    arc_words = [a["word"] for o in payload["orders"] for a in o["arcs"]]
    assert sorted(arc_words, key=lambda s: (len(s), s)) == [
        "a", "b", "aa", "ab", "aab",
    ]
    assert payload["marked_arcs"] == ["a", "b", "aa"]


def test_rauzy_dot(capsys):
    rc = cli.entry(["rauzy", "aab", "--dot", "--mark-cs"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph")
    assert out.count("->") == 5
    assert out.count("style=dashed") == 3
    assert '"ε"' in out  # the empty-word vertex of the order-0 layer


def test_rauzy_out_file(tmp_path, capsys):
    path = tmp_path / "g.json"
    rc = cli.entry(["rauzy", "aab", "--out", str(path)])
    assert rc == 0
    assert capsys.readouterr().out == ""
    payload = json.loads(path.read_text())
    assert payload["word"] == "aab"


def test_rauzy_order_out_of_range():
    assert cli.entry(["rauzy", "aab", "--order", "99"]) == 2


# ----------------------------------------------------------------- verify


def test_verify_single_word(capsys):
    rc = cli.entry(["verify", "aabaabaa"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["pass"] is True
    assert payload["sq_total"] == 4


def test_verify_empty_word_is_vacuous(capsys):
    rc = cli.entry(["verify"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["word"] == ""
    assert payload["checks"] == []


def test_verify_corpus_file(tmp_path, capsys):
    corpus = tmp_path / "words.txt"
    corpus.write_text("aabaab\n\naaaa\nabab\n")
    rc = cli.entry(["verify", "--file", str(corpus)])
    assert rc == 0
    reports = json.loads(capsys.readouterr().out)
    assert [r["word"] for r in reports] == ["aabaab", "aaaa", "abab"]
    assert all(r["pass"] for r in reports)


def test_verify_exit_one_on_failed_check(monkeypatch, capsys):
    bad = VerificationReport(
        word="xy",
        n=2,
        sigma=2,
        sq_total=0,
        checks=(CheckRecord("synthetic", 2, 1, "<=", False),),
    )
    monkeypatch.setattr(cli, "verify_all", lambda w: bad)
    rc = cli.entry(["verify", "xy"])
    assert rc == 1
    assert json.loads(capsys.readouterr().out)["pass"] is False


# ----------------------------------------------------------------- census


def test_census_stdout(capsys):
    rc = cli.entry(["census", "--n-max", "3"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n\tsigma\tmax_sq\tconjecture_rhs\tpass\twitness_count\tfirst_witness"
    assert lines[1] == "1\t2\t0\t1\ttrue\t1\ta"
    assert lines[2] == "2\t2\t1\t2\ttrue\t1\taa"
    assert lines[3] == "3\t2\t1\t2\ttrue\t3\taaa"


def test_census_cap_blocks_before_header(capsys):
    rc = cli.entry(["census", "--n-max", "99"])
    assert rc == 2
    captured = capsys.readouterr()
    assert captured.out == ""  # nothing written before validation
    assert "error:" in captured.err


def test_census_cap_env(tmp_path):
    res = run_cli("census", "--n-max", "6", env={"SQUARE_CENSUS_CAP": "5"})
    assert res.returncode == 2
    res = run_cli("census", "--n-max", "5", env={"SQUARE_CENSUS_CAP": "5"})
    assert res.returncode == 0
    assert len(res.stdout.splitlines()) == 6


def test_census_jobs_byte_identical(tmp_path):
    f1, f2 = tmp_path / "one.tsv", tmp_path / "two.tsv"
    r1 = run_cli("census", "--n-max", "9", "--jobs", "1", "--out", str(f1))
    r2 = run_cli("census", "--n-max", "9", "--jobs", "2", "--out", str(f2))
    assert r1.returncode == 0 and r2.returncode == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_census_corrupt_checkpoint(tmp_path):
    ckpt = tmp_path / "bad.jsonl"
    ckpt.write_text("this is not a checkpoint\n")
    rc = cli.entry(["census", "--n-max", "4", "--checkpoint", str(ckpt)])
    assert rc == 3


def test_census_checkpoint_resume_cli(tmp_path):
    ckpt = tmp_path / "resume.jsonl"
    out1 = tmp_path / "first.tsv"
    out2 = tmp_path / "second.tsv"
    assert (
        cli.entry(
            ["census", "--n-max", "6", "--checkpoint", str(ckpt), "--out", str(out1)]
        )
        == 0
    )
    assert (
        cli.entry(
            ["census", "--n-max", "8", "--checkpoint", str(ckpt), "--out", str(out2)]
        )
        == 0
    )
    first = out1.read_text().splitlines()
    second = out2.read_text().splitlines()
    assert second[: len(first)] == first
    assert len(second) == len(first) + 2


# ------------------------------------------------------------- conjecture


def test_conjecture_value(capsys):
    rc = cli.entry(["conjecture", "8"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "5"


def test_conjecture_check(capsys):
    rc = cli.entry(["conjecture", "4", "--check"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1].split("\t")[:5] == ["4", "2", "2", "2", "true"]


def test_module_entrypoint_runs():
    res = run_cli("squares", "aa", "--json")
    assert res.returncode == 0
    assert json.loads(res.stdout)["total"] == 1


def test_unknown_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.entry(["frobnicate"])
    assert exc.value.code == 2

"""Command line contract: byte-exact golden outputs, exit codes, stream
separation, and determinism."""

import json
from pathlib import Path

import pytest

from orbit_entropy import cli
from orbit_entropy.report import IdentityReport

GOLDEN = Path(__file__).parent / "golden"


def run_cli(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


GOLDEN_CASES = [
    (
        ["count", "reflection", "--family", "B", "--n", "8", "--dist", "1/2,1/2"],
        "count_reflection_b8.jsonl",
    ),
    (
        ["count", "symplectic", "--n", "2", "--q", "2", "--dist", "1/2,1/2"],
        "count_symplectic_n2q2.jsonl",
    ),
    (
        ["count", "reflection", "--family", "A", "--n", "4", "--dist", "1/2,1/2"],
        "count_reflection_a4.jsonl",
    ),
    (
        [
            "count", "reflection", "--family", "B", "--n", "8",
            "--dist", "1/2,1/2", "--format", "csv",
        ],
        "count_reflection_b8.csv",
    ),
    (["entropy", "--dist", "1/2,1/2"], "entropy_half.jsonl"),
    (["entropy", "--dist", "1"], "entropy_point.jsonl"),
    (["entropy", "--dist", "1/3,1/3,1/3"], "entropy_uniform3.jsonl"),
    (
        [
            "converge", "reflection", "--family", "B",
            "--dist", "1/2,1/2", "--n", "8,16,32,64",
        ],
        "converge_reflection_b.jsonl",
    ),
    (
        ["converge", "symplectic", "--q", "2", "--dist", "1/2,1/2", "--n", "8,16,32,64"],
        "converge_symplectic_q2.jsonl",
    ),
    (
        [
            "chain-check", "--target", "symplectic-cardinality", "--n", "4",
            "--q", "2", "--dist", "1/4,1/4,1/2", "--blocks", "2,1",
        ],
        "chain_symplectic_card.jsonl",
    ),
    (
        ["chain-check", "--target", "shannon", "--dist", "1/2,1/4,1/4", "--blocks", "2,1"],
        "chain_shannon.jsonl",
    ),
    (
        [
            "chain-check", "--target", "poincare", "--family", "A", "--n", "6",
            "--dist", "1/6,2/6,3/6", "--blocks", "2,1",
        ],
        "chain_poincare_a6.jsonl",
    ),
]


@pytest.mark.parametrize("argv,golden", GOLDEN_CASES, ids=[g for _, g in GOLDEN_CASES])
def test_golden_output(argv, golden, capsys):
    code, out, err = run_cli(argv, capsys)
    assert code == 0
    assert err == ""
    assert out == (GOLDEN / golden).read_text()


def test_repeat_runs_are_byte_identical(capsys):
    argv = ["converge", "symplectic", "--q", "3", "--dist", "1/4,1/4,1/2", "--n", "8,16,32"]
    _, first, _ = run_cli(argv, capsys)
    _, second, _ = run_cli(argv, capsys)
    assert first == second


def test_quotient_object_uses_partial_flag():
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(
            ["count", "symplectic", "--n", "2", "--q", "2", "--dist", "1/2,1/2",
             "--object", "quotient"]
        )
    assert code == 0
    record = json.loads(buf.getvalue())
    assert record["object"] == "quotient"
    assert record["value"] == "15"


def test_isotropic_count_record(capsys):
    code, out, err = run_cli(["count", "isotropic", "--s", "1", "--n", "2", "--q", "2"], capsys)
    assert code == 0
    record = json.loads(out)
    assert record["value"] == "15"


def test_dist_echo_is_normalized(capsys):
    _, out, _ = run_cli(
        ["count", "reflection", "--family", "A", "--n", "6", "--dist", "1/6,2/6,3/6"],
        capsys,
    )
    assert json.loads(out)["dist"] == "1/6,1/3,1/2"


def test_decimal_probability_is_a_parse_error(capsys):
    code, out, err = run_cli(
        ["count", "reflection", "--family", "B", "--n", "8", "--dist", "0.5,0.5"],
        capsys,
    )
    assert code == 2
    assert out == ""
    assert "error:" in err
    assert "fraction" in err


def test_non_integral_split_is_a_domain_error(capsys):
    code, out, err = run_cli(
        ["count", "reflection", "--family", "B", "--n", "5", "--dist", "1/2,1/2"],
        capsys,
    )
    assert code == 3
    assert out == ""
    assert err != ""


def test_inadmissible_schedule_point_is_named(capsys):
    code, out, err = run_cli(
        ["converge", "reflection", "--family", "B", "--dist", "1/2,1/2", "--n", "8,9"],
        capsys,
    )
    assert code == 3
    assert "9" in err


def test_small_blocks_are_rejected_for_reflection_schedules(capsys):
    # n*p must exceed 3 for every entry, so n=6 fails for a half split
    code, _, err = run_cli(
        ["converge", "reflection", "--family", "B", "--dist", "1/2,1/2", "--n", "6,8"],
        capsys,
    )
    assert code == 3
    assert "n=6" in err


def test_symplectic_schedule_only_needs_integrality(capsys):
    code, out, _ = run_cli(
        ["converge", "symplectic", "--q", "2", "--dist", "1/2,1/2", "--n", "2,4"],
        capsys,
    )
    assert code == 0
    assert len(out.splitlines()) == 2


def test_mismatched_blocks_are_a_parse_error(capsys):
    code, _, err = run_cli(
        ["chain-check", "--target", "shannon", "--dist", "1/2,1/4,1/4", "--blocks", "2,2"],
        capsys,
    )
    assert code == 2
    assert "block sizes sum to 4" in err


def test_missing_required_flag_is_a_parse_error(capsys):
    code, _, err = run_cli(["count", "reflection", "--n", "4", "--dist", "1/2,1/2"], capsys)
    assert code == 2
    assert "family" in err


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_identity_failure_exits_one(monkeypatch, capsys):
    monkeypatch.setattr(
        cli, "symplectic_chain_identity_check", lambda *a, **k: IdentityReport(1, 2)
    )
    code, out, _ = run_cli(
        ["chain-check", "--target", "symplectic-cardinality", "--n", "4", "--q", "2",
         "--dist", "1/4,1/4,1/2", "--blocks", "2,1"],
        capsys,
    )
    assert code == 1
    assert '"holds": false' in out


def test_oracle_verify_reflection_subset(capsys):
    code, out, err = run_cli(["oracle-verify", "--scope", "reflection", "--max-rank", "2"], capsys)
    assert code == 0
    lines = out.splitlines()
    records = [json.loads(line) for line in lines]
    assert all(r["match"] for r in records)
    summary = records[-1]
    assert summary["check"] == "summary"
    assert "failures=0" in summary["case"]


def test_oracle_verify_csv_header(capsys):
    code, out, _ = run_cli(
        ["oracle-verify", "--scope", "words", "--format", "csv"], capsys
    )
    assert code == 0
    assert out.splitlines()[0] == "command,check,case,oracle,closed,match"


def test_every_json_line_parses(capsys):
    _, out, _ = run_cli(
        ["converge", "reflection", "--family", "D", "--dist", "1/4,1/4,1/2", "--n", "8,16"],
        capsys,
    )
    for line in out.splitlines():
        record = json.loads(line)
        assert record["command"] == "converge"

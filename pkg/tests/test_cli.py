"""End-to-end command-line behavior: formats, exit codes, budgets."""

import csv
import io
import json

import pytest

from overlap_lab.cli import (
    BUDGET_ENV_VAR,
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_PRECISION,
    EXIT_USAGE,
    main,
    parse_word,
    render_word,
)
from overlap_lab.errors import InvalidInputError


def run(capsys, *argv: str):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def test_parse_word_forms():
    assert parse_word("0101", 2).symbols == (0, 1, 0, 1)
    assert parse_word("3,11,0", 12).symbols == (3, 11, 0)
    assert parse_word("abz", 26, letters=True).symbols == (0, 1, 25)


def test_parse_word_errors_name_the_position():
    with pytest.raises(InvalidInputError, match="position 2"):
        parse_word("012", 2)
    with pytest.raises(InvalidInputError, match="position 1"):
        parse_word("0,99,1", 12)
    with pytest.raises(InvalidInputError, match="position 0"):
        parse_word("A", 26, letters=True)
    with pytest.raises(InvalidInputError, match="not a digit"):
        parse_word("0x1", 2)
    with pytest.raises(InvalidInputError, match="empty"):
        parse_word("", 2)


def test_render_word_round_trips():
    for text, k, letters in [("0101", 2, False), ("3,11,0", 12, False), ("abz", 26, True)]:
        assert render_word(parse_word(text, k, letters=letters), letters=letters) == text


def test_analyze_plain(capsys):
    code, out, _ = run(capsys, "analyze", "010", "101", "--k", "2")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert "class: mutually-bordered" in lines
    assert "so(u,v): 10  lso(u,v): 2" in lines
    assert "so(v,u): 01  lso(v,u): 2" in lines


def test_analyze_letters_json(capsys):
    code, out, _ = run(
        capsys, "analyze", "overlap", "lapse", "--letters", "--format", "json"
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["pair_class"] == "right-bordered"
    assert doc["so_uv"] == "lap"
    assert doc["lso_uv"] == 3
    assert doc["so_vu"] is None
    assert doc["lso_vu"] == 0
    assert doc["left_border_lengths"] == []


def test_analyze_csv(capsys):
    code, out, _ = run(
        capsys, "analyze", "0110001", "1000101", "--k", "2", "--format", "csv"
    )
    assert code == EXIT_OK
    rows = parse_csv(out)
    assert len(rows) == 1
    row = rows[0]
    assert row["right_border_lengths"] == "1 5"
    assert row["so_uv"] == "1"
    assert row["lso_uv"] == "1"


def test_analyze_no_overlap_csv_has_empty_cells(capsys):
    code, out, _ = run(capsys, "analyze", "0", "1", "--k", "2", "--format", "csv")
    assert code == EXIT_OK
    row = parse_csv(out)[0]
    assert row["so_uv"] == ""
    assert row["lso_uv"] == "0"
    assert row["pair_class"] == "mutually-unbordered"


def test_analyze_parse_error(capsys):
    code, _, err = run(capsys, "analyze", "012", "101", "--k", "2")
    assert code == EXIT_USAGE
    assert "position 2" in err


def test_analyze_needs_exactly_one_alphabet_flag(capsys):
    code, _, _ = run(capsys, "analyze", "01", "10")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "analyze", "ab", "ba", "--k", "2", "--letters")
    assert code == EXIT_USAGE


def test_count_csv_matches_frozen_rows(capsys):
    code, out, _ = run(capsys, "count", "--k", "2", "--n", "15", "--format", "csv")
    assert code == EXIT_OK
    rows = parse_csv(out)
    assert len(rows) == 15
    assert rows[2] == {"n": "3", "M": "26", "R": "14", "U": "10"}
    assert rows[14] == {
        "n": "15",
        "M": "575664422",
        "R": "210525818",
        "U": "77025766",
    }


def test_count_quantities_come_out_in_canonical_order(capsys):
    code, out, _ = run(
        capsys,
        "count", "--k", "2", "--n", "3",
        "--quantities", "u,M",
        "--format", "csv",
    )
    assert code == EXIT_OK
    header = out.splitlines()[0]
    assert header == "n,M,u"


def test_count_json_round_trip(capsys):
    code, out, _ = run(
        capsys,
        "count", "--k", "3", "--n", "30",
        "--quantities", "M,R,U,u",
        "--format", "json",
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["command"] == "count"
    assert doc["k"] == 3 and doc["n_max"] == 30
    last = doc["rows"][-1]
    # counts beyond 2^53 travel as strings so double parsers stay exact
    assert isinstance(last["M"], str)
    assert isinstance(doc["rows"][0]["M"], int)
    total = sum(int(last[q]) for q in ("M", "U")) + 2 * int(last["R"])
    assert total == 3**60


def test_count_rejects_bad_quantities(capsys):
    code, _, err = run(capsys, "count", "--k", "2", "--n", "3", "--quantities", "X")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "count", "--k", "2", "--n", "0")
    assert code == EXIT_USAGE
    assert "--n" in err


def test_oracle_census_csv(capsys):
    code, out, _ = run(
        capsys, "oracle", "--k", "2", "--m", "3", "--n", "4", "--format", "csv"
    )
    assert code == EXIT_OK
    rows = parse_csv(out)
    cell = next(r for r in rows if r["m"] == "3" and r["n"] == "4")
    assert cell["mutually_bordered"] == "50"
    assert cell["right_bordered"] == "30"
    assert cell["left_bordered"] == "30"
    assert cell["mutually_unbordered"] == "18"


def test_oracle_checks_pass_on_small_inputs(capsys):
    code, out, _ = run(
        capsys,
        "oracle", "--k", "2", "--n", "5",
        "--checks", "lemmas,fourthirds,lso-histogram",
        "--format", "json",
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert all(entry["violation_count"] == 0 for entry in doc["results"]["lemmas"])
    assert all(entry["ok"] for entry in doc["results"]["fourthirds"])
    assert all(entry["ok"] for entry in doc["results"]["lso-histogram"])


def test_oracle_budget_refusal(capsys):
    code, out, err = run(capsys, "oracle", "--k", "2", "--n", "31")
    assert code == EXIT_BUDGET
    assert out == ""
    assert str(2**62) in err


def test_oracle_env_budget(capsys, monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "100")
    code, _, err = run(capsys, "oracle", "--k", "2", "--n", "4")
    assert code == EXIT_BUDGET
    assert "100" in err
    monkeypatch.setenv(BUDGET_ENV_VAR, "not-a-number")
    code, _, err = run(capsys, "oracle", "--k", "2", "--n", "2")
    assert code == EXIT_USAGE
    assert BUDGET_ENV_VAR in err


def test_limits_plain(capsys):
    code, out, _ = run(capsys, "limits", "--k", "2", "--terms", "40")
    assert code == EXIT_OK
    assert "M_limit" in out and "0.536" in out
    assert "R_limit" in out and "0.196" in out
    assert "U_limit" in out and "0.072" in out
    assert "expected_lso" in out and "1.156" in out
    assert "unbordered_density" in out and "0.268" in out


def test_limits_json(capsys):
    code, out, _ = run(
        capsys, "limits", "--k", "2", "--terms", "40", "--format", "json"
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    by_name = {r["quantity"]: r for r in doc["reports"]}
    assert by_name["M_limit"]["decimal"] == "0.536"
    lo_num, lo_den = by_name["M_limit"]["lo"].split("/")
    assert int(lo_den) > 0
    assert 0 < int(lo_num) / int(lo_den) < 1


def test_limits_csv(capsys):
    code, out, _ = run(
        capsys, "limits", "--k", "3", "--terms", "40", "--format", "csv"
    )
    assert code == EXIT_OK
    rows = parse_csv(out)
    decimals = {r["quantity"]: r["decimal"] for r in rows}
    assert decimals["M_limit"] == "0.196"
    assert decimals["R_limit"] == "0.247"
    assert decimals["U_limit"] == "0.310"
    assert decimals["expected_lso"] == "0.605"


def test_limits_refuses_uncertifiable_precision(capsys):
    code, out, err = run(
        capsys, "limits", "--k", "2", "--terms", "2", "--precision", "8"
    )
    assert code == EXIT_PRECISION
    assert out == ""
    assert "--terms" in err


def test_limits_rejects_unit_alphabet(capsys):
    code, _, err = run(capsys, "limits", "--k", "1", "--terms", "10")
    assert code == EXIT_USAGE


def test_unknown_subcommand(capsys):
    code, _, _ = run(capsys, "bogus")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys)
    assert code == EXIT_USAGE

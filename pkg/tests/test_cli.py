"""End-to-end command-line behavior: every subcommand, formats, exit codes."""

import json

import pytest

import oracles
from richwords.cli import main

W1 = "123999322399932442399932255223993"
W2 = "123999599932239949"
WF = "110101100110011"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- richness checking -------------------------------------------------------


NOT_RICH = next(s for s in oracles.all_words(2, 8) if not oracles.is_rich(s))


def test_check_plain(capsys):
    assert run(capsys, "check", "010") == (0, "rich\n", "")
    assert run(capsys, "check", "--q", "2", NOT_RICH) == (0, "not rich\n", "")


def test_check_json_and_csv(capsys):
    code, out, _ = run(capsys, "check", "--format", "json", "010")
    assert code == 0
    assert json.loads(out) == {"word": "010", "rich": True}
    code, out, _ = run(capsys, "check", "--format", "csv", "010")
    assert out == "010,rich\n"


def test_check_file(tmp_path, capsys):
    path = tmp_path / "words.txt"
    path.write_text(f"q=2\n010\n\n{NOT_RICH}\n")
    code, out, _ = run(capsys, "check", "--file", str(path))
    assert code == 0
    assert out.splitlines() == ["010 rich", f"{NOT_RICH} not rich"]


def test_check_requires_word_or_file(capsys):
    code, _, err = run(capsys, "check")
    assert code == 2
    assert "provide a word" in err


def test_invalid_letter_is_domain_error(capsys):
    code, _, err = run(capsys, "check", "--q", "2", "012")
    assert code == 1
    assert err.startswith("error:")


# -- factor / palindrome commands ------------------------------------------------


def test_factors_matches_oracle(capsys):
    code, out, _ = run(capsys, "factors", "--q", "2", "0100")
    assert code == 0
    expected = sorted(oracles.pal_set("0100"), key=lambda c: (len(c), c))
    assert out.splitlines() == expected


def test_factors_csv_and_json(capsys):
    _, out, _ = run(capsys, "factors", "--format", "csv", "--q", "2", "010")
    rows = [line.split(",") for line in out.splitlines()]
    assert rows == [["0", ""], ["1", "0"], ["1", "1"], ["3", "010"]]
    _, out, _ = run(capsys, "factors", "--format", "json", "--q", "2", "010")
    assert json.loads(out)["palindromic_factors"] == ["", "0", "1", "010"]


def test_flexed_plain_lines(capsys):
    code, out, _ = run(capsys, "flexed", "--q", "2", WF)
    assert code == 0
    assert out.splitlines() == [
        "0 3 111",
        "010 5 11011",
        "00 9 101101",
        "001100 13 1011001101",
    ]


def test_flexed_json(capsys):
    _, out, _ = run(capsys, "flexed", "--format", "json", "--q", "2", WF)
    record = json.loads(out)
    assert record["word"] == WF
    assert record["flexed"][0] == {
        "palindrome": "0",
        "position": 3,
        "replacement": "111",
    }


def test_closure_and_extend(capsys):
    assert run(capsys, "closure", "12399") == (0, "12399321\n", "")
    assert run(capsys, "extend", "12399") == (0, "123993\n", "")
    assert run(capsys, "extend", "--steps", "3", "12399") == (0, "12399321\n", "")
    _, out, _ = run(capsys, "extend", "--format", "json", "--steps", "3", "12399")
    assert json.loads(out) == {"word": "12399", "steps": 3, "result": "12399321"}


def test_profile_lines(capsys):
    code, out, _ = run(capsys, "profile", "--q", "2", WF)
    assert code == 0
    assert out.splitlines() == [
        "1,2", "2,2", "3,2", "4,2", "5,1", "6,2", "7,1", "8,2", "10,1",
    ]
    _, out, _ = run(capsys, "profile", "--format", "json", "--q", "2", WF)
    assert json.loads(out)["profile"]["10"] == 1


# -- reducibility pipeline ------------------------------------------------------


def test_gamma_accepts(capsys):
    assert run(capsys, "gamma", W2, "999") == (0, "reducible\n", "")
    _, out, _ = run(capsys, "gamma", "--format", "json", W2, "999")
    record = json.loads(out)
    assert record["reducible"] is True
    assert record["parse"] == {"span": "1239995999", "forced": "32", "tail": "239949"}


def test_gamma_rejects_with_condition_number(capsys):
    code, out, err = run(capsys, "gamma", W1, "999")
    assert code == 1
    assert out == ""
    assert err == "error: condition 5: a longer flexed palindrome exists (length 4)\n"


def test_parse_plain_and_json(capsys):
    code, out, _ = run(capsys, "parse", W2, "999")
    assert code == 0
    assert out.splitlines() == ["span 1239995999", "forced 32", "tail 239949"]
    _, out, _ = run(capsys, "parse", "--format", "json", W2, "999")
    record = json.loads(out)
    assert record["span"] == "1239995999"
    assert record["word"] == W2


def test_reduce_result_and_trace(capsys):
    assert run(capsys, "reduce", W2, "999") == (0, "1239932239949\n", "")
    code, out, _ = run(capsys, "reduce", "--trace", W2, "999")
    assert code == 0
    assert out.count("\n") == 1
    record = json.loads(out)
    assert record["case"] == "closure"
    assert record["result"] == "1239932239949"
    assert record["maximal"] is True


def test_eliminate_cli(capsys):
    assert run(capsys, "eliminate", "--q", "2", "000000001011", "00", "11") == (
        0,
        "0011\n",
        "",
    )
    code, out, _ = run(
        capsys, "eliminate", "--trace", "--q", "2", "000000001011", "00", "11"
    )
    record = json.loads(out)
    assert record["iterations"] == 1
    assert record["final"] == "0011"
    _, out, _ = run(
        capsys, "eliminate", "--format", "json", "--q", "2", "000000001011", "00", "11"
    )
    assert json.loads(out)["final"] == "0011"


def test_ruo_cli(capsys):
    assert run(capsys, "ruo", "--q", "2", "010", "0", "0") == (0, "0\n", "")
    code, _, err = run(capsys, "ruo", "--q", "2", "00", "0", "00")
    assert code == 1
    assert err.startswith("error:")


# -- bounds ----------------------------------------------------------------------


def test_bound_small_plain(capsys):
    code, out, _ = run(capsys, "bound", "--m", "1", "--q", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "flex_bound 3"
    assert lines[1] == "length_bound 32"
    assert lines[2] == "growth_bound 16"
    assert lines[3].startswith("log10_flex_bound 0.4771212547")
    assert lines[4].startswith("log10_length_bound 1.5051499783")


def test_bound_huge_exact_is_printable(capsys):
    code, out, _ = run(capsys, "bound", "--m", "2", "--q", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "flex_bound 98304"
    digits = lines[1].split(" ", 1)[1]
    assert len(digits) == 29594 and digits.isdigit()


def test_bound_over_cap_uses_log_form(capsys):
    code, out, _ = run(capsys, "bound", "--m", "4", "--q", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[1].startswith("length_bound ~10^")
    assert lines[2].startswith("growth_bound ~10^")
    code, _, err = run(capsys, "bound", "--m", "4", "--q", "2", "--exact")
    assert code == 1
    assert "error:" in err and "digits" in err


def test_bound_json(capsys):
    _, out, _ = run(capsys, "bound", "--format", "json", "--m", "1", "--q", "2")
    record = json.loads(out)
    assert record["flex_bound"] == 3
    assert record["length_bound"] == 32
    assert record["digit_cap"] == 100_000


# -- enumeration and search ---------------------------------------------------------


def test_enumerate_count_lines(capsys):
    code, out, _ = run(capsys, "enumerate", "--q", "2", "--max-length", "3", "--count")
    assert code == 0
    assert out.splitlines() == ["0,1", "1,2", "2,4", "3,8"]


def test_enumerate_plain_and_json(capsys):
    _, out, _ = run(capsys, "enumerate", "--q", "2", "--max-length", "2")
    words = out.splitlines()
    assert sorted(words) == ["", "0", "00", "01", "1", "10", "11"]
    _, out, _ = run(
        capsys, "enumerate", "--format", "json", "--q", "1", "--max-length", "2"
    )
    records = [json.loads(line) for line in out.splitlines()]
    assert records == [
        {"word": "", "length": 0},
        {"word": "0", "length": 1},
        {"word": "00", "length": 2},
    ]


def test_enumerate_canonical_flag(capsys):
    _, out, _ = run(
        capsys, "enumerate", "--q", "2", "--max-length", "2", "--canonical"
    )
    assert sorted(out.splitlines()) == ["", "0", "00", "01"]


def test_search_cli(capsys):
    assert run(capsys, "search", "--q", "2", "00", "11") == (0, "witness 0011\n", "")
    code, out, _ = run(
        capsys,
        "search", "--q", "2", "00", "11", "--max-length", "2", "--max-nodes", "5",
    )
    assert code == 0
    assert out == "exhausted-budget explored=5\n"
    _, out, _ = run(capsys, "search", "--format", "json", "--q", "2", "00", "11")
    record = json.loads(out)
    assert record["status"] == "witness"
    assert record["witness"] == "0011"
    assert record["explored"] == 28


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["bound", "--m", "1"])
    assert exc.value.code == 2
    capsys.readouterr()

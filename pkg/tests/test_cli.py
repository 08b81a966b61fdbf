import json

import pytest

from closedwords.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "abca", "ababa", "", "--format", "json")
    assert code == 0
    docs = [json.loads(line) for line in out.splitlines()]
    assert docs[0]["closed_count"] == 5 and docs[0]["cr_poor"] is True
    assert "bitonic" not in docs[0]
    assert docs[1]["closed_count"] == 8 and docs[1]["rich"] is True
    assert docs[1]["violation"] == [[0, 2], [2, 4]]
    assert docs[2]["length"] == 0 and docs[2]["closed_count"] == 1


def test_analyze_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("abca\n\nab\n"))
    code, out, _ = run(capsys, "analyze", "--format", "tsv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].split("\t")[:3] == ["word", "length", "closed_count"]
    assert [line.split("\t")[0] for line in lines[1:]] == ["abca", "", "ab"]


def test_analyze_bad_letter(capsys):
    code, _, err = run(capsys, "analyze", "a b")
    assert code == 2 and "invalid letter" in err


def test_factors(capsys):
    code, out, _ = run(capsys, "factors", "ababa", "--kind", "closed")
    assert code == 0
    assert out.split("\n")[:-1] == ["", "a", "b", "aba", "bab", "abab", "baba", "ababa"]
    _, out, _ = run(capsys, "factors", "abca", "--kind", "pal")
    assert out == "\na\nb\nc\n"
    _, out, _ = run(capsys, "factors", "a", "--format", "json")
    assert json.loads(out)["factors"] == ["", "a"]


def test_enum_crpoor(capsys):
    code, out, _ = run(capsys, "enum-crpoor", "-n", "3")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 9 and lines[-1] == "8"
    _, out, _ = run(capsys, "enum-crpoor", "-n", "1")
    assert out.splitlines() == ["a", "b", "2"]
    _, out, _ = run(capsys, "enum-crpoor", "-n", "4", "-s", "abc")
    from closedwords.classify import is_cr_poor_by_count
    from oracles import words

    expected = sum(is_cr_poor_by_count(w) for w in words("abc", 4, min_len=4))
    assert out.splitlines()[-1] == str(expected)


def test_enum_crpoor_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr("closedwords.cli.cr_poor_count_formula", lambda n: -1)
    code, _, err = run(capsys, "enum-crpoor", "-n", "3")
    assert code == 3 and "expected" in err


def test_round_trip(capsys):
    _, out, _ = run(capsys, "enum-crpoor", "-n", "5", "-s", "abc")
    listed = out.splitlines()[:-1]
    code, out, _ = run(capsys, "analyze", "--format", "json", *listed)
    assert code == 0
    assert all(json.loads(line)["cr_poor"] for line in out.splitlines())


def test_max_table(capsys):
    code, out, _ = run(capsys, "max-table", "--to", "10")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n\tmax\twitness"
    assert lines[-1].startswith("10\t21\t")
    _, out, _ = run(capsys, "max-table", "--to", "1")
    assert out.splitlines()[1] == "1\t2\ta"


def test_max_table_deterministic_across_jobs(capsys):
    _, one, _ = run(capsys, "max-table", "--to", "11", "--jobs", "1")
    _, two, _ = run(capsys, "max-table", "--to", "11", "--jobs", "2")
    assert one == two


def test_max_table_out_of_range(capsys):
    code, _, _ = run(capsys, "max-table", "--to", "30")
    assert code == 2


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "-n", "8")
    assert code == 0 and out == "aabbaabb\n"
    _, out, _ = run(capsys, "witness", "-n", "5", "--count")
    assert out.splitlines() == ["ababa", "count 8", "bound 3"]
    _, out, _ = run(capsys, "witness", "-n", "5", "--count", "--format", "json")
    assert json.loads(out) == {"n": 5, "k": 1, "word": "ababa", "count": 8, "bound": 3}
    code, _, err = run(capsys, "witness", "-n", "4")
    assert code == 2 and err


@pytest.mark.parametrize(
    "suite, max_len", [("binary-equiv", "10"), ("intersection", "15"), ("characterizations", "9")]
)
def test_verify_suites(capsys, suite, max_len):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--max-len", max_len)
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_verify_table_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "table", "--max-len", "12")
    assert code == 0 and "FAIL" not in out


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2

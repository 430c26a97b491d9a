import csv
import io
import json

import pytest

from dedekind.cli import main, render_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sum_text(capsys):
    code, out, _ = run(capsys, "sum", "41", "200")
    assert code == 0
    assert "S(41,200) = 501/100 (5.0100000000)" in out


def test_sum_little_and_oracle(capsys):
    code, out, _ = run(capsys, "sum", "41", "200", "--oracle", "--little")
    assert code == 0
    assert "501/100 (5.0100000000)" in out
    assert "s(41,200) = 167/400 (0.4175000000)" in out


def test_sum_trivial_modulus(capsys):
    code, out, _ = run(capsys, "sum", "1", "1")
    assert code == 0
    assert "0/1 (0.0000000000)" in out


def test_sum_negative_decimal(capsys):
    code, out, _ = run(capsys, "sum", "4943", "493493")
    assert code == 0
    assert "-2.9998966551" in out


def test_sum_digits_flag(capsys):
    code, out, _ = run(capsys, "--digits", "3", "sum", "41", "200")
    assert code == 0
    assert "(5.010)" in out


def test_sum_rejects_common_factor(capsys):
    code, out, err = run(capsys, "sum", "2", "4")
    assert code == 2
    assert out == ""
    assert "gcd(2, 4) = 2" in err


def test_sum_json_round_trips(capsys):
    code, out, _ = run(capsys, "--format", "json", "sum", "41", "200")
    assert code == 0
    payload = json.loads(out)
    assert payload["S"] == {"num": "501", "den": "100", "decimal": "5.0100000000"}
    assert render_json(payload) == out.rstrip("\n")


def test_sum_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "sum", "41", "200", "--little")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["quantity", "m", "n", "exact", "decimal"]
    assert rows[1] == ["S", "41", "200", "501/100", "5.0100000000"]
    assert rows[2][0] == "s" and rows[2][3] == "167/400"


def test_check_pair(capsys):
    code, out, _ = run(capsys, "check-pair", "41", "81", "200")
    assert code == 0
    assert "relation: non-obvious-equal" in out
    assert "necessary condition" in out and "yes" in out


def test_classes_25(capsys):
    code, out, _ = run(capsys, "classes", "25")
    assert code == 0
    assert "members 6 11 16 21" in out
    assert "(6,11)" in out


def test_classes_non_singleton(capsys):
    _, full, _ = run(capsys, "classes", "25")
    _, reduced, _ = run(capsys, "classes", "25", "--non-singleton")
    assert len(reduced.splitlines()) < len(full.splitlines())
    assert "members 6 11 16 21" in reduced


def test_classes_243_filter(capsys):
    code, out, _ = run(capsys, "classes", "243", "--filter", "1mod9")
    assert code == 0
    pair_line = next(
        line for line in out.splitlines() if line.startswith("non-obvious pairs")
    )
    assert "(37,127)" in pair_line
    assert "(100,145)" in pair_line


def test_classes_17017_bounds_and_pivots(capsys):
    code, out, _ = run(
        capsys, "classes", "17017", "--non-singleton", "--bounds", "--pivot", "2..6"
    )
    assert code == 0
    for m1, partners, cluster in (
        (2, 16, 6), (3, 16, 6), (4, 16, 8), (5, 16, 10), (6, 8, 4)
    ):
        assert f"pivot m1={m1}: partners={partners} largest-equal-cluster={cluster}" in out
    assert "<= 2^r = 16" in out


def test_classes_limit(capsys):
    code, _, err = run(capsys, "classes", "2000000")
    assert code == 2
    assert "--limit" in err
    code, _, _ = run(capsys, "classes", "25", "--limit", "10")
    assert code == 2


def test_classes_json_round_trips(capsys):
    code, out, _ = run(capsys, "--format", "json", "classes", "25")
    assert code == 0
    payload = json.loads(out)
    assert render_json(payload) == out.rstrip("\n")
    six = next(c for c in payload["classes"] if 6 in c["members"])
    assert six["members"] == [6, 11, 16, 21]

    code, out, _ = run(capsys, "--format", "json", "classes", "15", "--bounds")
    assert code == 0
    payload = json.loads(out)
    assert payload["bounds"]["bound_2r"] == 4
    assert payload["bounds"]["max_class_size"] == 2
    code, _, err = run(capsys, "classes", "25", "--bounds")
    assert code == 2 and "square" in err


def test_family_theorem1(capsys):
    code, out, _ = run(capsys, "family", "theorem1", "-d", "8", "-n", "5")
    assert code == 0
    assert "members (4): 41 81 121 161" in out
    assert "value: 501/100 (5.0100000000)" in out
    assert "verification: ok (4/4 members match)" in out


def test_family_corollary1_violation(capsys):
    code, _, err = run(capsys, "family", "corollary1",
                       "-l", "6", "-k", "4", "-r", "2", "-q", "5")
    assert code == 2
    assert "must divide" in err


def test_family_corollary2(capsys):
    code, out, _ = run(capsys, "family", "corollary2", "-p", "5", "-k", "2", "-r", "1")
    assert code == 0
    assert "members (4): 6 11 16 21" in out


def test_family_quad(capsys):
    code, out, _ = run(capsys, "family", "quad", "-t", "7", "-p", "11,13,17,29")
    assert code == 0
    assert "solutions (16):" in out
    assert "4943 58535 79556 94669 148261" in out
    assert "-2.9998966551" in out
    assert "verification: ok (16/16 members match)" in out


def test_family_quad_shift(capsys):
    code, out, _ = run(capsys, "family", "quad", "-t", "7", "-p", "11,13,17,29",
                       "--shift", "2")
    assert code == 0
    assert "t=141005" in out
    assert "-0.9999007076" in out


def test_family_quad_bad_prime(capsys):
    code, _, err = run(capsys, "family", "quad", "-t", "7", "-p", "3")
    assert code == 2
    assert "not a quadratic residue" in err


def test_family_eps_flag(capsys):
    code, out, _ = run(capsys, "family", "theorem1", "-d", "8", "-n", "5",
                       "--eps", "-1")
    assert code == 0
    assert "value: -501/100" in out


def test_table1_all_rows(capsys):
    code, out, _ = run(capsys, "table1")
    assert code == 0
    assert "1    5   1  11,19,29,31,41,59" in out
    assert "5   29   1  7,13,23,53,59,67" in out
    assert "3   13   1  17,23,29,43,53,61" in out
    assert "10   26   2  11,17,19,23,37,59" in out


def test_table1_single_row_and_rejection(capsys):
    code, out, _ = run(capsys, "table1", "--t", "7")
    assert code == 0
    assert "53" in out and "11,13,17,29,37,43" in out
    code, _, err = run(capsys, "table1", "--t", "4")
    assert code == 2
    assert "square-free" in err


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "FAIL" not in out
    assert "0 failed" in out


def test_verify_paper_list_and_only(capsys):
    code, out, _ = run(capsys, "verify-paper", "--list")
    assert code == 0
    items = out.split()
    assert len(items) >= 17
    assert "table1/t7" in items and "quad/t7-family" in items

    code, out, _ = run(capsys, "verify-paper", "--only", "table1")
    assert code == 0
    assert len([l for l in out.splitlines() if l.startswith("PASS")]) == 7


def test_verify_paper_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "verify-paper", "--only", "sum")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["item", "status", "detail"]
    assert all(row[1] == "PASS" for row in rows[1:])


def test_verify_paper_mismatch_exits_one(capsys, monkeypatch):
    import dedekind.golden as golden

    def broken():
        golden._expect("S(41,200)", golden.Rational(1, 2), golden.Rational(501, 100))
        return "unreachable"

    monkeypatch.setattr(golden, "ITEMS", [("sum/family-200", broken)])
    code, out, _ = run(capsys, "verify-paper")
    assert code == 1
    assert "FAIL" in out and "501/100" in out and "1/2" in out


def test_classes_parallel_path_through_cli(capsys, monkeypatch):
    import dedekind.cli as cli

    _, serial, _ = run(capsys, "classes", "2520", "--non-singleton")
    monkeypatch.setattr(cli, "_PARALLEL_MIN", 100)
    code, parallel, _ = run(capsys, "--threads", "2", "classes", "2520",
                            "--non-singleton")
    assert code == 0
    assert parallel == serial


def test_bad_arguments_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classes", "25", "--filter", "banana"])
    assert exc.value.code == 2

import csv
import subprocess
import sys
from fractions import Fraction

import pytest

from akx.cli import main
from akx.closed_form import w_closed
from akx.family import SetFamily, dumps_setfam, frankl, loads_setfam


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_w_command(capsys):
    code, out, _ = run(capsys, "w", "--n", "4", "--t", "2", "--p", "3/10")
    assert code == 0
    assert out.split("\t")[:3] == ["9/100", "0.09", "r={0}"]


def test_w_star(capsys):
    code, out, _ = run(capsys, "w", "--n", "3", "--t", "1", "--p", "1/4")
    assert code == 0 and out.startswith("1/4\t")


@pytest.mark.parametrize("argv", [["w", "--n", "2", "--t", "3", "--p", "1/2"],
                                  ["w", "--n", "3", "--t", "1", "--p", "0.5"],
                                  ["verify", "--suite", "bogus"],
                                  ["table", "--out", "/nonexistent-dir/x.csv"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_table_rows(tmp_path, capsys):
    path = tmp_path / "w.csv"
    assert run(capsys, "table", "--n", "20", "--tmax", "5", "--grid", "200", "--out", str(path))[0] == 0
    rows = list(csv.DictReader(path.open()))
    assert list(rows[0]) == ["t", "p_num", "p_den", "w_num", "w_den", "optimal_r", "w_float"]
    seen = set()
    for row in rows:
        t, p = int(row["t"]), Fraction(int(row["p_num"]), int(row["p_den"]))
        assert (t, p) not in seen
        seen.add((t, p))
        assert Fraction(int(row["w_num"]), int(row["w_den"])) == w_closed(20, t, p).value
    assert (1, Fraction(1, 4)) in seen and (2, Fraction(1, 3)) in seen


def test_compress_star(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("SETFAM 1\nn=3\n3\n1,3\n2,3\n1,2,3\n")
    out, trace = tmp_path / "out.txt", tmp_path / "trace.txt"
    code, stdout, _ = run(capsys, "compress", "--in", str(src), "--out", str(out), "--trace", str(trace), "--p", "1/3")
    assert code == 0
    assert loads_setfam(out.read_text()) == frankl(3, 1, 0)
    assert trace.read_text() == "3 1\n"
    assert "measure before: 1/3" in stdout and "measure after: 1/3" in stdout


def test_compress_frankl_identity(tmp_path, capsys):
    src, out = tmp_path / "in.txt", tmp_path / "out.txt"
    src.write_text(dumps_setfam(frankl(5, 2, 1)))
    assert run(capsys, "compress", "--in", str(src), "--out", str(out))[0] == 0
    assert out.read_text() == src.read_text()


def test_stabilize_reports_intersection(tmp_path, capsys):
    src, out = tmp_path / "in.txt", tmp_path / "out.txt"
    src.write_text(dumps_setfam(SetFamily.from_sets(4, [(1, 2), (2, 3), (1, 3)])))
    code, stdout, _ = run(capsys, "stabilize", "--t", "1", "--in", str(src), "--out", str(out))
    assert code == 0 and "1-intersecting after: yes" in stdout


def test_stabilize_rejects_bad_input(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text(dumps_setfam(SetFamily.from_sets(3, [(1,), (2,)])))
    assert run(capsys, "stabilize", "--t", "1", "--in", str(src), "--out", str(tmp_path / "o"))[0] == 2


def test_parse_error_has_line_number(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("SETFAM 1\nn=3\n1\n7\n")
    code, _, err = run(capsys, "compress", "--in", str(src), "--out", str(tmp_path / "o"))
    assert code == 2 and "line 4" in err


def test_verify_cross_agreeing_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "katona")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS\tkatona\t") for line in lines[:-1])
    assert lines[-1].startswith("SUMMARY\tkatona\tpassed=")


def test_console_script_module():
    out = subprocess.run([sys.executable, "-m", "akx.cli", "w", "--n", "5", "--t", "2", "--p", "1/3"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("1/9\t")

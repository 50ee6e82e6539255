import json
import subprocess
import sys

import pytest

from hexpoly import cli, columndp
from reference_data import CC_GF, TABLE, column


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def row(n):
    return ",".join(str(x) for x in (n,) + TABLE[n])


def test_table_small(capsys):
    code, out, _ = run(capsys, "table", "--max-area", "1")
    assert code == 0
    assert out.splitlines() == ["area,cc,cheesy1,cheesy2,cheesy3,all", "1,1,1,1,1,1"]
    code, out, _ = run(capsys, "table", "--max-area", "4")
    assert out.splitlines()[-1] == "4,42,43,43,43,44"


@pytest.mark.slow
def test_table_full(capsys):
    code, out, _ = run(capsys, "table", "--max-area", "12", "--threads", "2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 13
    assert lines[-1] == "12,2081612,3398081,3997185,4211222,8182213"
    assert lines[1:] == [row(n) for n in range(1, 13)]


def test_table_cap(capsys):
    code, _, err = run(capsys, "table", "--max-area", "15")
    assert code == 2 and "cap" in err


def test_gf_cc(capsys):
    code, out, _ = run(capsys, "gf", "--family", "cc")
    rec = json.loads(out)
    assert code == 0
    assert rec["gf"]["num"] == list(CC_GF[0]) and rec["gf"]["den"] == list(CC_GF[1])
    assert rec["terms"] == [str(x) for x in column("cc")]
    assert rec["schema"] == "hexpoly/1" and rec["engine"] == "gf"


def test_asym_level2(capsys):
    code, out, _ = run(capsys, "asym", "--family", "cheesy:2")
    asym = json.loads(out)["asym"]
    assert code == 0
    assert asym["growth"] == "4.231836" and asym["amplitude"] == "0.121042"
    assert "truncated" in asym["precision"]


def test_series_level4(capsys):
    code, out, _ = run(capsys, "series", "--family", "cheesy:4", "--terms", "12", "--engine", "dp")
    terms = [int(x) for x in json.loads(out)["terms"]]
    assert code == 0 and len(terms) == 12
    assert all(lo <= x <= hi for lo, x, hi in zip(column("cheesy:3"), terms, column("all")))


def test_series_check_passes(capsys):
    code, out, _ = run(capsys, "series", "--family", "cheesy:1", "--terms", "9", "--engine", "gf", "--check")
    assert code == 0
    assert json.loads(out)["terms"] == [str(x) for x in column("cheesy:1", 9)]


def test_series_check_mismatch(capsys, monkeypatch):
    real = columndp.count

    def off_by_one(level, n):
        vals = real(level, n)
        vals[-1] += 1
        return vals

    monkeypatch.setattr(columndp, "count", off_by_one)
    code, out, err = run(capsys, "series", "--family", "cc", "--terms", "8", "--engine", "gf", "--check")
    assert code == 3 and out == "" and "area 8" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["gf", "--family", "all"],
        ["gf", "--family", "cheesy:4"],
        ["asym", "--family", "cheesy:7"],
        ["series", "--family", "all", "--terms", "5", "--engine", "dp"],
        ["series", "--family", "cheesy:0", "--terms", "5"],
        ["series", "--family", "blob", "--terms", "5"],
        ["series", "--family", "cc", "--terms", "0"],
        ["extrapolate", "--levels", "1"],
        ["solve", "--family", "cheesy:3"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("hexpoly: error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["series", "--family", "cc", "--terms", "3", "--engine", "magic"])
    assert exc.value.code == 2


def test_enumerate_engine_and_threads_deterministic(capsys):
    outs = [run(capsys, "series", "--family", "all", "--terms", "9", "--engine", "enumerate", "--threads", str(k))[1]
            for k in (1, 3)]
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["terms"] == [str(x) for x in column("all", 9)]


def test_output_repeatable(capsys):
    a = run(capsys, "gf", "--family", "cheesy:2")[1]
    b = run(capsys, "gf", "--family", "cheesy:2")[1]
    assert a == b


def test_extrapolate(capsys):
    code, out, _ = run(capsys, "extrapolate", "--levels", "3")
    rec = json.loads(out)
    assert code == 0
    assert [g["growth"] for g in rec["growths"]] == ["3.863130", "4.114907", "4.231836", "4.288630"]
    assert rec["limit"].startswith("4.34")


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "--family", "cheesy:1")
    assert code == 0 and set(json.loads(out)) == {"C1", "D1"}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hexpoly", "table", "--max-area", "3"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.splitlines()[-1] == "3,11,11,11,11,11"

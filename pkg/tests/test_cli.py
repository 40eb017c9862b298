import csv
import io
import json
import re

import pytest

from hypkac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_roots_csv(capsys):
    code, out, _ = run(capsys, "roots", "--a", "3", "--smax", "2", "--tmax", "2")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["s"], r["t"]) for r in rows] == [("0", "1"), ("1", "0"), ("1", "1"), ("1", "2"), ("2", "1"), ("2", "2")]
    assert rows[0]["kind"] == "real" and rows[2]["f"] == "-1"


def test_roots_minimal_box(capsys):
    code, out, _ = run(capsys, "roots", "--a", "3", "--smax", "0", "--tmax", "1")
    assert code == 0 and out.splitlines()[1:] == ["0,1,1,real"]


def test_roots_json(capsys):
    code, out, _ = run(capsys, "roots", "--a", "4", "--smax", "1", "--tmax", "1", "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(recs) == 3 and recs[0] == {"a": 4, "root": [0, 1], "f": 1, "kind": "real"}


@pytest.mark.parametrize(
    "argv,code",
    [
        (["roots", "--a", "2", "--smax", "1", "--tmax", "1"], 2),
        (["classify", "--a", "3", "--i", "0", "--j", "3"], 3),
        (["classify", "--a", "3", "--i", "1", "--j", "1", "--root", "5,5"], 4),
        (["census", "--a", "3", "--i", "1", "--j", "1", "--lmax", "1"], 2),
        (["census", "--a", "3", "--i", "1", "--j", "1", "--lmax", "x"], 2),
        (["figure", "--a", "3", "--i", "1", "--j", "1", "--out", "fig.bmp"], 2),
    ],
)
def test_exit_codes(capsys, tmp_path, monkeypatch, argv, code):
    monkeypatch.chdir(tmp_path)
    try:
        got, _, err = run(capsys, *argv)
    except SystemExit as exc:  # argparse rejects malformed values itself
        got, err = exc.code, capsys.readouterr().err
    assert got == code
    assert "error" in err


def test_bad_a_message(capsys):
    _, _, err = run(capsys, "roots", "--a", "2", "--smax", "1", "--tmax", "1")
    assert "a must be >= 3" in err


def test_classify_records(capsys):
    code, out, _ = run(capsys, "classify", "--a", "3", "--i", "1", "--j", "1")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert sorted(tuple(r["root"]) for r in recs) == [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]
    assert list(recs[0])[:6] == ["a", "i", "j", "root", "lambda", "root_type"]
    by_root = {tuple(r["root"]): r for r in recs}
    assert by_root[(1, 0)]["root_type"] == "B" and by_root[(1, 0)]["eight_mu"] == "-9/4"
    assert by_root[(2, 1)]["partner"] == [1, 0]


def test_classify_single_root(capsys):
    code, out, _ = run(capsys, "classify", "--a", "4", "--i", "1", "--j", "1", "--root", "1,0")
    (rec,) = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and rec["kind"] == "unitary_principal" and rec["eight_mu"] == "-32/25"


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "--a", "3", "--i", "1", "--j", "1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 5
    assert {r["root"] for r in rows} >= {"1;0", "0;1"}


def test_sweep_summary(capsys):
    code, out, _ = run(capsys, "sweep", "--amax", "6", "--imax", "4", "--shape", "ij")
    assert code == 0
    assert "# summary: 5 unitary_principal tuples: (3,1,0) (3,2,1) (3,3,2) (3,4,3) (4,1,0)" in out
    assert "DISCREPANCY" not in out


def test_sweep_pairing_reports_discrepancies(capsys):
    code, out, _ = run(capsys, "sweep", "--amax", "6", "--imax", "4", "--variant", "pairing")
    assert code == 0
    assert "# DISCREPANCY: 4 rows differ from star" in out
    assert "# monotonicity n: checked" in out


def test_census_output(capsys):
    code, out, _ = run(capsys, "census", "--a", "3", "--i", "1", "--j", "2", "--lmax", "4")
    assert code == 0
    assert out.startswith("side,lambda,d_H,p_lo,p_hi,new_lo,new_hi,new_form,conservation\n")
    assert "# note: boundary real root (0,1)" in out
    assert out.endswith("# conservation: OK\n# mirror: OK\n")
    sides = {line.split(",")[0] for line in out.splitlines() if not line.startswith(("#", "side"))}
    assert sides == {"lowest", "highest"}


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--a", "3", "--i", "1", "--j", "1", "--lmax", "3", "--format", "json")
    recs = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    assert code == 0 and recs[0]["side"] == "lowest" and recs[0]["lambda"] == "2"


def test_figure_csv_is_byte_stable(capsys, tmp_path):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "figure", "--a", "3", "--i", "2", "--j", "2", "--out", str(p1))[0] == 0
    assert run(capsys, "figure", "--a", "3", "--i", "2", "--j", "2", "--out", str(p2))[0] == 0
    assert p1.read_bytes() == p2.read_bytes()
    assert sum(1 for line in p1.read_text().splitlines() if line.startswith("imaginary,")) == 25


def test_figure_svg_is_byte_stable(capsys, tmp_path):
    p1, p2 = tmp_path / "a.svg", tmp_path / "b.svg"
    run(capsys, "figure", "--a", "3", "--i", "1", "--j", "2", "--out", str(p1))
    run(capsys, "figure", "--a", "3", "--i", "1", "--j", "2", "--out", str(p2))
    text = p1.read_text()
    assert text == p2.read_text()
    assert text.startswith("<svg") or text.startswith("<?xml")
    assert text.count("<circle") >= 12


def test_figure_png(capsys, tmp_path):
    p = tmp_path / "fig.png"
    assert run(capsys, "figure", "--a", "3", "--i", "1", "--j", "1", "--out", str(p))[0] == 0
    assert p.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_report_writes_files(capsys, tmp_path):
    code, out, _ = run(capsys, "report", "--a", "3", "--i", "1", "--j", "1", "--lmax", "4", "--outdir", str(tmp_path))
    assert code == 0
    for section in ("# CLASSIFY", "# CENSUS", "# FILES"):
        assert section in out
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == [
        "a3_i1_j1_census.csv",
        "a3_i1_j1_census.png",
        "a3_i1_j1_classify.json",
        "a3_i1_j1_figure.csv",
        "a3_i1_j1_figure.png",
        "a3_i1_j1_figure.svg",
    ]
    for p in tmp_path.iterdir():
        assert p.stat().st_size > 0


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--a", "3", "--i", "2", "--j", "2", "--format", "csv"],
        ["sweep", "--amax", "5", "--imax", "3", "--variant", "pairing"],
        ["census", "--a", "4", "--i", "1", "--j", "1", "--lmax", "5"],
    ],
)
def test_outputs_have_no_floats(capsys, argv):
    _, out, _ = run(capsys, *argv)
    assert not re.search(r"\d\.\d", out)

import json
import subprocess
import sys

from dehnlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_z2_n4(capsys):
    code, out, _ = run_cli(capsys, "count", "--group", "z2", "--n", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# dehnlab config=")
    assert lines[1].startswith("# config_hash=")
    assert lines[2] == "n,vertex,count"
    assert "4,(0,0),36" in lines
    # mass conservation over the emitted rows
    total = sum(int(l.rsplit(",", 1)[1]) for l in lines[3:])
    assert total == 4**4


def test_count_nonbacktracking(capsys):
    code, out, _ = run_cli(capsys, "count", "--group", "z2", "--n", "4", "--nonbacktracking")
    assert code == 0
    assert "4,(0,0),8" in out.splitlines()


def test_count_torsion_vertex_format(capsys):
    code, out, _ = run_cli(capsys, "count", "--group", "z10", "--n", "10")
    assert code == 0
    assert any(line.startswith("10,(;0),") for line in out.splitlines())


def test_cogrowth_table(capsys):
    code, out, _ = run_cli(capsys, "cogrowth", "--n-max", "20")
    assert code == 0
    lines = out.splitlines()
    assert lines[2] == "n,g_n,f_n,ratio"
    f4 = [l for l in lines if l.startswith("4,")]
    assert f4 and f4[0].startswith("4,36,8,")


def test_dehn_exact_smean(capsys):
    code, out, _ = run_cli(
        capsys, "dehn", "--group", "z2", "--kind", "smean", "--n", "4", "--exact"
    )
    assert code == 0
    row = out.splitlines()[3]
    assert row.startswith("4,smean,2/9,")


def test_dehn_json_schema(capsys):
    code, out, _ = run_cli(
        capsys,
        "dehn", "--group", "z2", "--kind", "osmean", "--n", "4",
        "--samples", "500", "--seed", "9", "--emit", "json",
    )
    assert code == 0
    doc = json.loads(out)
    rep = doc["report"]
    assert rep["n"] == 4 and rep["kind"] == "osmean"
    assert set(rep["value"]) == {"estimate", "ci_low", "ci_high", "samples", "seed"}
    assert rep["value"]["samples"] == 500 and rep["value"]["seed"] == 9
    assert "normalized" in rep
    assert doc["config"]["combing"] == "staircase"


def test_dehn_sampling_requires_seed(capsys):
    code, _, err = run_cli(
        capsys, "dehn", "--group", "z2", "--kind", "osmean", "--n", "4", "--samples", "10"
    )
    assert code == 2
    assert "seed" in err


def test_dehn_lazy_kind(capsys):
    code, out, _ = run_cli(capsys, "dehn", "--group", "z2", "--kind", "lazy", "--n", "4")
    assert code == 0
    assert "4,lazy-mean,8/61," in out


def test_area_subcommand(capsys, monkeypatch, tmp_path):
    words = tmp_path / "words.txt"
    words.write_text("a1 a2 A1 A2\na1 A1\n")
    code, out, _ = run_cli(capsys, "area", "--group", "z2", "--words-file", str(words))
    assert code == 0
    lines = out.splitlines()
    assert lines[2] == "word,lower,upper,exact"
    assert lines[3] == "a1.a2.A1.A2,1,1,true"
    assert lines[4] == "a1.A1,0,0,true"


def test_area_rejects_open_word(capsys, tmp_path):
    words = tmp_path / "words.txt"
    words.write_text("a1 a2\n")
    code, _, err = run_cli(capsys, "area", "--group", "z2", "--words-file", str(words))
    assert code == 2
    assert "closed" in err or "trivial" in err


def test_bad_group_is_config_error(capsys):
    code, _, err = run_cli(capsys, "count", "--group", "nope", "--n", "2")
    assert code == 2
    assert "builtin" in err


def test_budget_exhaustion_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "dehn", "--group", "z2", "--kind", "smean", "--n", "40", "--exact"
    )
    assert code == 3
    assert "budget" in err.lower()


def test_byte_identical_reruns(capsys, tmp_path):
    argv = [
        "dehn", "--group", "z2", "--kind", "osmean", "--n", "6",
        "--samples", "400", "--seed", "31", "--emit", "json",
    ]
    _, out1, _ = run_cli(capsys, *argv)
    _, out2, _ = run_cli(capsys, *argv)
    assert out1 == out2
    out_path = tmp_path / "a.json"
    code = main(argv + ["--output", str(out_path)])
    assert code == 0
    assert out_path.read_text() == out1


def test_output_file_and_headers(tmp_path, capsys):
    path = tmp_path / "counts.csv"
    code = main(["count", "--group", "z2", "--n", "2", "--output", str(path)])
    assert code == 0
    text = path.read_text()
    assert text.startswith("# dehnlab config=")
    assert "config_hash" in text


def test_version_banner():
    proc = subprocess.run(
        [sys.executable, "-m", "dehnlab.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "PCG64" in proc.stdout
    assert "K_1d=1.35" in proc.stdout
    assert "2.7" in proc.stdout
    assert "staircase" in proc.stdout


def test_console_entry_point():
    proc = subprocess.run(["dehnlab", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("dehnlab ")

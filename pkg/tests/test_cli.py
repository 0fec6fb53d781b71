import subprocess
import sys

import pytest

import pmclique as pq
from pmclique.cli import main


C4_TEXT = "4 4\n1 2\n2 3\n3 4\n1 4\n"
C4_LINES = sorted(["1 2 3", "1 2 4", "1 3 4", "2 3 4"])


@pytest.fixture
def c4_file(tmp_path):
    f = tmp_path / "c4.txt"
    f.write_text(C4_TEXT)
    return str(f)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_default(capsys, c4_file):
    code, out, err = run(capsys, "enumerate", c4_file)
    assert code == 0
    assert sorted(out.splitlines()) == C4_LINES


def test_enumerate_sorted_is_byte_stable(capsys, c4_file):
    code, out, _ = run(capsys, "enumerate", c4_file, "--sorted")
    assert code == 0
    assert out.splitlines() == C4_LINES
    code2, out2, _ = run(capsys, "enumerate", c4_file, "--sorted")
    assert out2 == out


@pytest.mark.parametrize("algo", pq.ALGOS)
def test_enumerate_each_algo(capsys, c4_file, algo):
    code, out, err = run(capsys, "enumerate", c4_file, "--algo", algo)
    assert code == 0
    assert sorted(out.splitlines()) == C4_LINES
    if algo == "bt":
        assert "exponential space" in err  # the space warning goes to stderr


def test_enumerate_metrics_stderr(capsys, c4_file):
    code, out, err = run(capsys, "enumerate", c4_file, "--metrics")
    assert code == 0
    lines = err.strip().splitlines()
    assert lines[0] == pq.CSV_HEADER
    row = lines[1].split(",")
    assert row[0].endswith("c4.txt")
    assert row[1:4] == ["4", "4", "dfs"]
    assert row[4] == "4"  # pmcs
    assert row[5] == "2"  # seps


def test_enumerate_metrics_file(capsys, c4_file, tmp_path):
    mfile = tmp_path / "m.csv"
    run(capsys, "enumerate", c4_file, "--metrics", str(mfile))
    run(capsys, "enumerate", c4_file, "--metrics", str(mfile))
    lines = mfile.read_text().strip().splitlines()
    assert lines[0] == pq.CSV_HEADER
    assert len(lines) == 3  # header written once, then appended rows


def test_enumerate_seeded_order_same_set(capsys, c4_file):
    _, base, _ = run(capsys, "enumerate", c4_file, "--sorted")
    for seed in ("1", "2", "3"):
        _, out, _ = run(capsys, "enumerate", c4_file, "--sorted",
                        "--order", "seeded", "--seed", seed)
        assert out == base


def test_enumerate_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(C4_TEXT))
    code, out, _ = run(capsys, "enumerate", "-", "--sorted")
    assert code == 0
    assert out.splitlines() == C4_LINES


def test_separators(capsys, c4_file):
    code, out, _ = run(capsys, "separators", c4_file)
    assert code == 0
    assert out.splitlines() == ["1 3", "2 4"]  # ascending set order
    # --sorted collects and re-sorts; the stream order already agrees
    code, out, _ = run(capsys, "separators", c4_file, "--sorted")
    assert out.splitlines() == ["1 3", "2 4"]


def test_check(capsys, c4_file):
    code, out, _ = run(capsys, "check", c4_file, "--set", "1,2,3")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "check", c4_file, "--set", "1,3")
    assert code == 0 and out.strip() == "false"
    code, out, _ = run(capsys, "check", c4_file, "--set", "1,3",
                       "--kind", "separator")
    assert code == 0 and out.strip() == "true"


def test_oracle(capsys, c4_file):
    for method in ("scan", "triangulation"):
        code, out, _ = run(capsys, "oracle", c4_file, "--method", method)
        assert code == 0
        assert out.splitlines() == C4_LINES


def test_validate_agreement(capsys, c4_file):
    code, out, _ = run(capsys, "validate", c4_file)
    assert code == 0
    assert "agree" in out


def test_validate_exhaustive(capsys):
    code, out, _ = run(capsys, "validate", "--exhaustive-n", "3")
    assert code == 0
    assert "agree" in out


def test_validate_disagreement_exit_2(capsys, tmp_path):
    # disabling the not-yet-seen gate makes the streams duplicate on this
    # graph, which validate reports as a disagreement
    g = pq.random_graph(8, 0.6, seed=4202)
    assert len(list(pq.enumerate_nondup(g, disable_gate="i"))) > len(
        pq.enumerate_bt(g))  # the fixture really does duplicate
    f = tmp_path / "g.txt"
    f.write_text(pq.dump_edgelist(g))
    code, out, _ = run(capsys, "validate", str(f), "--disable-gate", "i")
    assert code == 2
    assert "duplicate" in out
    # the report pins a reproducible offender
    assert "counterexample:" in out and "duplicated set={" in out


def test_gen_roundtrip(capsys, tmp_path):
    out_file = tmp_path / "theta.txt"
    code, _, _ = run(capsys, "gen", "--family", "theta", "--k", "2",
                     "-o", str(out_file))
    assert code == 0
    g = pq.load_graph(out_file.read_text())
    assert g.n == 6 and g.edge_count == 6
    code, out, _ = run(capsys, "gen", "--family", "cycle", "--n", "4",
                       "--out-format", "dimacs")
    assert code == 0 and out.startswith("p edge 4 4")


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--family", "theta", "--kmin", "2",
                       "--kmax", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == pq.CSV_HEADER
    assert len(lines) == 1 + 2 * 3  # two graphs x three algos
    for row in lines[1:]:
        fields = row.split(",")
        assert fields[3] in pq.ALGOS
        assert int(fields[4]) > 0


def test_bench_bt_cutoff(capsys):
    code, out, _ = run(capsys, "bench", "--family", "theta", "--kmin", "2",
                       "--kmax", "2", "--bt-cutoff", "5")
    assert code == 0
    skipped = [r for r in out.splitlines() if ",skipped," in r]
    assert len(skipped) == 1 and skipped[0].split(",")[3] == "bt"


def test_bench_known_counts(capsys):
    # complete graphs have exactly one PMC, C4 has four — on every algo row
    code, out, _ = run(capsys, "bench", "--family", "complete", "--n", "6")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 3 and all(r.split(",")[4] == "1" for r in rows)
    code, out, _ = run(capsys, "bench", "--family", "cycle", "--n", "4")
    rows = out.strip().splitlines()[1:]
    assert all(r.split(",")[4] == "4" for r in rows)


def test_enumerate_single_vertex(capsys, tmp_path):
    f = tmp_path / "k1.txt"
    f.write_text("1 0\n")
    code, out, _ = run(capsys, "enumerate", str(f))
    assert code == 0 and out.strip() == "1"


def test_validate_k5(capsys, tmp_path):
    f = tmp_path / "k5.txt"
    f.write_text(pq.dump_edgelist(pq.complete_graph(5)))
    code, out, _ = run(capsys, "validate", str(f))
    assert code == 0
    assert "agreement: yes" in out
    assert "bt: 1 pmcs" in out


def test_parse_error_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 3 4\n")
    code, _, err = run(capsys, "enumerate", str(bad))
    assert code == 1
    assert err.strip()


def test_missing_file_exit_1(capsys):
    code, _, err = run(capsys, "enumerate", "/no/such/file.txt")
    assert code == 1
    assert err.strip()


def test_usage_error_exit_1(capsys):
    assert main(["bogus"]) == 1
    capsys.readouterr()
    assert main(["enumerate"]) == 1  # missing path
    capsys.readouterr()


def test_check_requires_valid_set(capsys, c4_file):
    code, _, err = run(capsys, "check", c4_file, "--set", "1,9")
    assert code == 1 and err.strip()


def test_console_script_installed():
    r = subprocess.run(["pmclique", "--help"], capture_output=True, text=True)
    assert r.returncode == 0
    for sub in ("enumerate", "separators", "check", "oracle", "validate",
                "bench", "gen"):
        assert sub in r.stdout


def test_console_script_end_to_end(tmp_path):
    f = tmp_path / "c4.txt"
    f.write_text(C4_TEXT)
    r = subprocess.run(["pmclique", "enumerate", str(f), "--sorted"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.splitlines() == C4_LINES

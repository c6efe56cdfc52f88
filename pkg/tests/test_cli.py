import json

from qgrass.cli import run_command
from qgrass.io import load_family


def test_qbinom(capsys):
    assert run_command(["qbinom", "--a", "4", "--b", "2", "--q", "2"]) == 0
    assert capsys.readouterr().out.strip() == "35"


def test_nprime_and_evals(capsys):
    assert run_command(["nprime", "--m1", "0", "--h1", "0", "--m", "2", "--h", "1", "--e", "3", "--l", "2", "--q", "2"]) == 0
    assert capsys.readouterr().out.strip() == "42"
    run_command(["f-eval", "--which", "f1", "--n", "12", "--k", "3", "--t", "1", "--s", "1", "--x", "2", "--q", "2"])
    assert capsys.readouterr().out.strip() == "21486"
    run_command(["g-eval", "--which", "g1", "--n", "6", "--k", "2", "--t", "1", "--s", "1", "--q", "2"])
    assert capsys.readouterr().out.strip() == "128"


def test_construct_and_certify(tmp_path):
    f, g, c = tmp_path / "f.json", tmp_path / "g.json", tmp_path / "cert.json"
    rc = run_command(["construct", "--which", "almost", "--q", "2", "--n", "6", "--k", "2", "--t", "1", "--s", "1",
                      "--out-f", str(f), "--out-g", str(g)])
    assert rc == 0
    assert len(load_family(f)) == 4 and len(load_family(g)) == 32
    assert run_command(["certify-pair", "--F", str(f), "--G", str(g), "--t", "1", "--s", "1", "--out", str(c)]) == 0
    cert = json.loads(c.read_text())
    assert cert["verdict"] == "pass" and cert["enumerated"] == "128"
    # the same pair is not 0-almost, so the claim fails
    assert run_command(["certify-pair", "--F", str(f), "--G", str(g), "--t", "1", "--s", "0", "--out", str(c)]) == 1


def test_tau_closure_sequence(tmp_path, capsys):
    f, g = tmp_path / "f.json", tmp_path / "g.json"
    run_command(["construct", "--which", "cover", "--q", "2", "--n", "5", "--k", "2", "--t", "1",
                 "--out-f", str(f), "--out-g", str(g), "--out", str(tmp_path / "c.json")])
    assert run_command(["tau", "--F", str(g), "--t", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["tau"] == 2
    assert run_command(["sequence", "--F", str(f), "--G", str(g), "--t", "1"]) == 0
    tr = json.loads(capsys.readouterr().out)
    assert tr["m"] == 0 and tr["cover_witness"] == 0
    assert run_command(["closure", "--F", str(f), "--G", str(g), "--t", "1", "--s", "0"]) == 0


def test_lemma_check_inline_and_default(capsys):
    rc = run_command(["lemma-check", "--id", "basic-bounds.iv", "--grid", '[{"n":4,"k":2,"t":1,"s":1,"q":2}]'])
    assert rc == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("lemma_id,") and out[1].endswith(",35,35")
    assert run_command(["lemma-check", "--id", "g1-lt-g2"]) == 0


def test_identity(capsys):
    assert run_command(["identity", "--which", "eq1", "--n", "20", "--k", "6", "--t", "1", "--q", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["holds"]
    assert run_command(["identity", "--which", "eq66", "--enumerate", "--n", "6", "--k", "3", "--t", "1", "--q", "2"]) == 0


def test_suite(tmp_path, capsys):
    out = tmp_path / "r.csv"
    assert run_command(["suite", "--name", "grassmannian", "--out", str(out)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["failed"] == 0 and summary["passed"] == 47


def test_exit_code_two_on_errors(capsys):
    assert run_command(["bogus"]) == 2
    rc = run_command(["construct", "--which", "almost", "--q", "2", "--n", "3", "--k", "2", "--t", "1", "--s", "5"])
    assert rc == 2
    assert "q^((k-t)(k-t+1))" in capsys.readouterr().err
    assert run_command(["qbinom", "--a", "4", "--b", "2"]) == 2
    assert run_command(["suite", "--name", "unknown-suite"]) == 2


def test_enumerate_and_count(tmp_path, capsys):
    assert run_command(["enumerate", "--q", "2", "--n", "5", "--k", "2", "--t", "1", "--count"]) == 0
    assert capsys.readouterr().out.strip() == "15"
    out = tmp_path / "v.json"
    assert run_command(["enumerate", "--q", "2", "--n", "4", "--k", "2", "--out", str(out)]) == 0
    assert len(load_family(out)) == 35
    rc = run_command(["count", "--kind", "type-count", "--q", "2", "--e", "3", "--l", "2", "--m", "2", "--h", "1"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["enumerated"] == "42"
    assert run_command(["enumerate", "--q", "2", "--n", "8", "--k", "4", "--count", "--budget", "100"]) == 2

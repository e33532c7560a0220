"""Command-line entry points: parsing, reports, exit codes, determinism."""

from qklr.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def test_tw_twisted_generator(capsys):
    rc, out, _ = run(capsys, "tw", "--type", "A2", "--word", "1",
                     "--gen", "e1")
    assert rc == 0
    assert out.strip() == "T_[1](e1) = (-1*q^2)*f1t1^-1"


def test_tw_empty_word(capsys):
    rc, out, _ = run(capsys, "tw", "--type", "A2", "--word", "",
                     "--gen", "f1")
    assert rc == 0
    assert out.strip() == "T_[](f1) = (1)*f1"


def test_tw_length_two(capsys):
    rc, out, _ = run(capsys, "tw", "--type", "A2", "--word", "1,2",
                     "--gen", "f1")
    assert rc == 0
    assert out.strip() == "T_[1, 2](f1) = (1)*f2"


def test_tw_rejects_non_reduced(capsys):
    rc, out, err = run(capsys, "tw", "--type", "A2", "--word", "1,2,1,2",
                       "--gen", "f1")
    assert rc == 2
    assert "not reduced" in err
    assert "deleting positions" in err


def test_tw_bad_generator(capsys):
    rc, _, err = run(capsys, "tw", "--type", "A2", "--word", "1",
                     "--gen", "g1")
    assert rc == 2


def test_braid_check(capsys):
    rc, out, _ = run(capsys, "braid-check", "--type", "A1xA1")
    assert rc == 0
    assert "PASS" in out


def test_vj_dim_with_oracle(capsys):
    rc, out, _ = run(capsys, "vj-dim", "--type", "A2", "--hw", "1,0",
                     "--height", "2")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "beta_1,beta_2,dim,oracle"
    assert "0,0,1,1" in lines
    assert "1,1,1,1" in lines
    assert "2,0,0,0" in lines


def test_vj_dim_zero_weight_free(capsys):
    rc, out, _ = run(capsys, "vj-dim", "--type", "A2", "--jset", "",
                     "--height", "2")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "beta_1,beta_2,dim"
    assert "1,1,2" in lines


def test_vj_dim_rejects_negative_weight(capsys):
    rc, _, err = run(capsys, "vj-dim", "--type", "A2", "--hw=-1,0")
    assert rc == 2
    assert "dominant" in err


def test_verify_serre(capsys):
    rc, out, _ = run(capsys, "verify", "serre", "--type", "A2")
    assert rc == 0
    assert out.strip().splitlines()[-1] == "PASS"
    assert "suite: serre" in out


def test_verify_unknown_suite(capsys):
    rc, _, err = run(capsys, "verify", "nonsense", "--type", "A2")
    assert rc == 2
    assert "unknown suite" in err


def test_verify_nilhecke_args(capsys):
    rc, out, _ = run(capsys, "verify", "nilhecke-vanishing", "--l", "1",
                     "--n", "2")
    assert rc == 0
    assert "PASS" in out


def test_json_output_deterministic(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        rc, _, _ = run(capsys, "verify", "hilbert", "--type", "A2",
                       "--json", "--seed", "7", "--out", str(p))
        assert rc == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert b'"suite": "hilbert"' in paths[0].read_bytes()


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[cartan]\ntype = B2\n\n[bounds]\nheight = 2\n")
    rc, out, _ = run(capsys, "tw", "--config", str(cfg), "--word", "2",
                     "--gen", "f2")
    assert rc == 0
    assert "f2" in out


def test_config_missing_file(capsys):
    rc, _, err = run(capsys, "tw", "--config", "/no/such/file.ini",
                     "--word", "1", "--gen", "f1")
    assert rc == 2


def test_usage_error_exit_code(capsys):
    rc, _, _ = run(capsys, "tw", "--type", "A2")
    assert rc == 2

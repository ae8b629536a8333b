import pytest

from deltaplus.cli import main


@pytest.fixture()
def eps1(tmp_path):
    path = tmp_path / "eps1.ddf"
    path.write_text("DDF v1\njump 1 1\n")
    return str(path)


@pytest.fixture()
def two_step(tmp_path):
    path = tmp_path / "two_step.ddf"
    path.write_text("DDF v1\njump 1 1/2\njump 2 1\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tau_prints_ddf(capsys, eps1):
    code, out, _ = run(capsys, "tau", "--tnorm", "M", "--conorm", "plus", "--f", eps1, "--g", eps1)
    assert code == 0
    assert out == "DDF v1\njump 2 1\n"


def test_tau_at_prints_both_values(capsys, eps1):
    code, out, _ = run(
        capsys, "tau", "--tnorm", "M", "--conorm", "plus", "--f", eps1, "--g", eps1, "--at", "2"
    )
    assert code == 0
    assert out == "regularized 0  raw 0\n"


def test_tau_emit_points(capsys, eps1, two_step):
    code, out, _ = run(
        capsys,
        "tau", "--tnorm", "M", "--conorm", "plus",
        "--f", eps1, "--g", two_step, "--emit-points",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "DDF v1"
    points = [line for line in lines if line.startswith("point ")]
    assert points and all(len(line.split()) == 3 for line in points)


def test_tau_missing_file_names_the_path(capsys, eps1):
    code, _, err = run(capsys, "tau", "--tnorm", "M", "--conorm", "plus", "--f", "/nope.ddf", "--g", eps1)
    assert code == 64
    assert "/nope.ddf" in err


def test_tau_parse_error_names_file_and_line(capsys, tmp_path, eps1):
    bad = tmp_path / "bad.ddf"
    bad.write_text("DDF v1\njump 1 1/2\njump 1 3/4\n")
    code, _, err = run(capsys, "tau", "--tnorm", "M", "--conorm", "plus", "--f", str(bad), "--g", eps1)
    assert code == 64
    assert "bad.ddf" in err and "line 3" in err


def test_classify_exit_codes(capsys):
    code, out, _ = run(capsys, "classify", "--tnorm", "D", "--conorm", "plus")
    assert code == 0 and "verdict Triangle" in out
    assert out.startswith("pair tnorm=D tconorm=plus budget=1000 seed=0")
    code, out, _ = run(capsys, "classify", "--tnorm", "D", "--conorm", "max")
    assert code == 1 and "verdict NotTriangle" in out
    assert "c_left_when_nonarchimedean" in out
    code, out, _ = run(capsys, "classify", "--tnorm", "M", "--conorm", "osum_trunc:2")
    assert code == 1 and "a_LCS" in out


def test_check_passes_with_exit_zero(capsys):
    code, out, _ = run(
        capsys, "check", "--tnorm", "W", "--conorm", "plus",
        "--law", "associativity", "--budget", "40",
    )
    assert code == 0
    assert out.startswith("PASS")


def test_mine_fails_with_exit_two_and_witness(capsys):
    code, out, _ = run(
        capsys, "mine", "--tnorm", "nM_hat", "--conorm", "plus",
        "--budget", "120", "--seed", "42",
    )
    assert code == 3  # inconclusive: no step-function witness exists
    code, out, _ = run(
        capsys, "mine", "--tnorm", "M", "--conorm", "osum_trunc:2",
        "--budget", "5000", "--seed", "42", "--output", "records",
    )
    assert code == 2
    assert out.startswith("report tnorm=M tconorm=osum_trunc:2")
    assert "witness law=closure" in out


def test_mine_output_is_deterministic(capsys):
    args = ("mine", "--tnorm", "M", "--conorm", "drastic", "--budget", "300", "--seed", "9",
            "--output", "records")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert (code1, out1) == (code2, out2) == (2, out1)


def test_usage_errors_exit_64(capsys):
    code, _, err = run(capsys, "check", "--tnorm", "W", "--conorm", "plus", "--law", "nosuchlaw")
    assert code == 64 and "nosuchlaw" in err
    code, _, err = run(capsys, "classify", "--tnorm", "Q", "--conorm", "plus")
    assert code == 64 and "unknown t-norm" in err
    code, _, err = run(capsys, "classify", "--tnorm", "M", "--conorm", "osum_trunc:-1")
    assert code == 64
    with pytest.raises(SystemExit) as exit_info:
        main(["frobnicate"])
    assert exit_info.value.code == 64


def test_catalog_lists_all_families(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    lines = out.splitlines()
    assert len([l for l in lines if l.startswith("tnorm ")]) == 6
    assert len([l for l in lines if l.startswith("tconorm ")]) == 6
    assert any("nM_hat" in l and "weakly_left_continuous=no" in l for l in lines)
    assert any(
        "nilpotent_rat" in l
        and "conditionally_strictly_increasing=yes" in l
        and "strictly_increasing=no" in l
        for l in lines
    )

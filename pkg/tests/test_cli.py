import pandas as pd
import pytest

from gadget_qec import cli
from gadget_qec.cli import EXIT_INVARIANT, EXIT_NO_DISCOVERY, EXIT_OK, EXIT_USAGE, main
from gadget_qec.environment import Circuit
from gadget_qec.exceptions import InvariantViolation
from gadget_qec.pipeline import read_manifest, write_dataset

_TINY = [
    "--n", "5", "--k", "1", "--d", "2", "--epochs", "2",
    "--set", "hidden=16", "--set", "n_envs=2", "--set", "rollout_len=8",
    "--set", "minibatch=8", "--set", "ppo_epochs=1",
]  # fmt: skip


@pytest.fixture
def circuit_dir(tmp_path, steane_circuit):
    c = steane_circuit
    directory = tmp_path / "raw"
    directory.mkdir()
    c.write(directory / "a.circuit")
    Circuit(c.n, c.k, c.d, c.init, [], c.cx + [(5, 6), (5, 6)]).write(
        directory / "b.circuit"
    )
    Circuit(c.n, c.k, c.d, c.init, [], c.cx[:-1]).write(directory / "c.circuit")
    return directory


# --------------------------------------- qhb ----------------------------------------
def test_qhb_golay(capsys):
    assert main(["qhb", "23", "1", "7", "--variant", "self-dual-css"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "2048 = 2048 -> perfect" in out


def test_qhb_both_variants(capsys):
    assert main(["qhb", "4", "1", "3"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    assert all(line.endswith("-> violated") for line in lines)


def test_usage_errors_exit_with_one():
    with pytest.raises(SystemExit) as exc:
        main(["qhb", "7", "1"])
    assert exc.value.code == EXIT_USAGE


def test_invariant_violation_exit_code(monkeypatch, capsys):
    def broken(*args, **kwargs):
        raise InvariantViolation("rows stopped commuting")

    monkeypatch.setattr(cli, "qhb", broken)
    assert main(["qhb", "7", "1", "3"]) == EXIT_INVARIANT
    assert "invariant violation" in capsys.readouterr().err


# -------------------------------------- verify --------------------------------------
def test_verify_bundled_steane(capsys, tmp_path):
    csv = tmp_path / "kl.csv"
    assert main(["verify", "--csv", str(csv)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "distance >= 3: PASS" in out
    assert "sigma_kl(d=3) = 0" in out
    assert "qhb self-dual-css: perfect" in out
    assert len(pd.read_csv(csv)) > 0


def test_verify_fails_beyond_the_distance(capsys):
    assert main(["verify", "--d", "4"]) == EXIT_NO_DISCOVERY
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "undetected:" in out


def test_verify_bad_files(tmp_path, capsys):
    assert main(["verify", str(tmp_path / "missing.circuit")]) == EXIT_USAGE
    bad = tmp_path / "bad.circuit"
    bad.write_text("7 1\ninit\n")
    assert main(["verify", str(bad)]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


# ------------------------------------- gadgets --------------------------------------
def test_gadgets_rules(capsys):
    assert main(["gadgets", "--level", "dcx4", "--rules"]) == EXIT_OK
    assert "XIII → XIXI" in capsys.readouterr().out


def test_gadgets_curve_and_actions(capsys, tmp_path):
    assert main(["gadgets", "--curve"]) == EXIT_OK
    assert "max_weight" in capsys.readouterr().out
    csv = tmp_path / "actions.csv"
    argv = ["gadgets", "--actions", "8", "--levels", "cx,dcx", "--csv", str(csv)]
    assert main(argv) == EXIT_OK
    assert len(pd.read_csv(csv)) == 32


def test_gadgets_default_summary(capsys):
    assert main(["gadgets", "--level", "dcx8"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "cx gates: 32" in out
    assert "max propagated weight: 5" in out
    assert "static: True" in out


def test_gadgets_unknown_level(capsys):
    assert main(["gadgets", "--level", "dcx64"]) == EXIT_USAGE


# -------------------------------- preprocess & stats --------------------------------
def test_preprocess_and_stats(circuit_dir, tmp_path, capsys):
    out = tmp_path / "clean"
    assert main(["preprocess", str(circuit_dir), "--out", str(out)]) == EXIT_OK
    assert "[[7,1]]: kept 2, discarded 1, rejected 0" in capsys.readouterr().out
    manifest = read_manifest(out)
    assert manifest["circuit_id"].tolist() == ["a", "c"]
    assert (out / "motifs.csv").exists()

    csv = tmp_path / "stats.csv"
    assert main(["stats", str(out), "--csv", str(csv)]) == EXIT_OK
    stats = pd.read_csv(csv)
    assert stats["n_circuits"].tolist() == [2]
    assert stats["dataset"].tolist() == ["clean"]


def test_preprocess_empty_directory(tmp_path):
    assert main(["preprocess", str(tmp_path)]) == EXIT_USAGE


def test_stats_of_an_empty_dataset(tmp_path, capsys):
    write_dataset(tmp_path / "empty", [])
    assert main(["stats", str(tmp_path / "empty")]) == EXIT_USAGE
    assert "lists no circuits" in capsys.readouterr().err


# -------------------------------- train & compare -----------------------------------
def test_train_writes_artifacts(tmp_path, capsys):
    code = main(["train", *_TINY, "--out", str(tmp_path)])
    assert code in (EXIT_OK, EXIT_NO_DISCOVERY)
    (run_dir,) = [p for p in tmp_path.iterdir() if p.is_dir()]
    assert run_dir.name.startswith("n5k1d2_")
    for name in ("train_log.csv", "checkpoint.npz", "curves.csv", "summary.json"):
        assert (run_dir / name).exists()
    assert "dedup:" in capsys.readouterr().out


def test_train_rejects_unknown_keys(tmp_path, capsys):
    argv = ["train", *_TINY, "--out", str(tmp_path), "--set", "foo=1"]
    assert main(argv) == EXIT_USAGE
    assert "config[foo]" in capsys.readouterr().err


def test_compare(tmp_path):
    argv = ["compare", *_TINY, "--out", str(tmp_path)]
    argv += ["--level-sets", "cx", "cx,dcx", "--seeds", "0"]
    assert main(argv) in (EXIT_OK, EXIT_NO_DISCOVERY)
    (run_dir,) = list(tmp_path.iterdir())
    summary = pd.read_csv(run_dir / "compare_summary.csv", dtype={"levels": str})
    assert summary["levels"].tolist() == ["0", "0,1"]

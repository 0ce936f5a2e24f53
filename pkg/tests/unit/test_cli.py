"""Tests for CLI commands using click.testing.CliRunner."""

import json
import math
from pathlib import Path

import numpy as np
import pandas as pd
import pytest
from click.testing import CliRunner

from tests.conftest import PAIR_SEED, make_random_pair
from tvband.application.oracle import verify as verify_module
from tvband.cli.commands import sequences as sequences_cmd
from tvband.domain.models import BandlimitPair
from tvband.infrastructure.storage.artifacts import write_pair


def get_cli():
    """Get CLI instance - import lazily to avoid conflicts in parallel execution."""
    from tvband.cli.main import cli as tvband_cli

    return tvband_cli


def write_random_pair(path: Path) -> BandlimitPair:
    pair = make_random_pair(np.random.default_rng(PAIR_SEED + 6), 6)
    write_pair(path, pair)
    return pair


@pytest.mark.unit
class TestCliMain:
    """Test main CLI group and global options."""

    def test_cli_help(self) -> None:
        """Test CLI help output lists every command."""
        result = CliRunner().invoke(get_cli(), ["--help"])
        assert result.exit_code == 0
        for name in (
            "normalize",
            "paley-wiener",
            "sequences",
            "spectral",
            "kernel",
            "filter",
            "reconstruct",
            "bandlimit",
            "verify",
            "config",
        ):
            assert name in result.output

    def test_cli_version(self) -> None:
        result = CliRunner().invoke(get_cli(), ["--version"])
        assert result.exit_code == 0
        assert "tvband" in result.output

    def test_cli_invalid_command(self) -> None:
        result = CliRunner().invoke(get_cli(), ["invalid-command"])
        assert result.exit_code == 2


@pytest.mark.unit
class TestPairCommands:
    """Tests for paley-wiener and normalize."""

    def test_paley_wiener_file(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(get_cli(), ["paley-wiener", "-N", "3", "--out", "pw.json"])
            assert result.exit_code == 0
            document = json.loads(Path("pw.json").read_text(encoding="utf-8"))
            assert document["indices"] == {"lo": -3, "hi": 3}
            assert document["normalized"] is True
            assert document["admissibility_sum"] == pytest.approx(math.pi, rel=1e-14)
            assert document["truncation_of"]["half_width"] == 3

    def test_normalize_rescales(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            Path("raw.json").write_text(
                json.dumps(
                    {
                        "indices": {"lo": 0, "hi": 2},
                        "nodes": [-1.0, 0.5, 3.0],
                        "weights": [1.0, 1.0, 1.0],
                    },
                ),
                encoding="utf-8",
            )
            result = runner.invoke(
                get_cli(),
                ["normalize", "--pair", "raw.json", "--out", "norm.json"],
            )
            assert result.exit_code == 0
            document = json.loads(Path("norm.json").read_text(encoding="utf-8"))
            assert document["normalized"] is True
            assert document["admissibility_sum"] == pytest.approx(math.pi, rel=1e-14)
            assert document["scale"] != 1.0

    def test_normalize_rejects_invalid_pair(self) -> None:
        """Decreasing nodes exit with the validation code."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            Path("bad.json").write_text(
                json.dumps(
                    {"indices": {"lo": 0, "hi": 1}, "nodes": [1.0, 0.0], "weights": [1.0, 1.0]},
                ),
                encoding="utf-8",
            )
            result = runner.invoke(get_cli(), ["normalize", "--pair", "bad.json"])
            assert result.exit_code == 2
            assert "Error" in result.output


@pytest.mark.unit
class TestSequenceCommands:
    """Tests for sequences and spectral."""

    def test_sequences_with_sidecar(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            runner.invoke(get_cli(), ["paley-wiener", "-N", "4", "--out", "pw.json"])
            result = runner.invoke(
                get_cli(),
                ["sequences", "--pair", "pw.json", "--theta", "0,0.25", "--out", "seq.csv"],
            )
            assert result.exit_code == 0
            frame = pd.read_csv("seq.csv")
            assert list(frame.columns) == ["theta", "n", "t", "t_prime"]
            level = frame[(frame["theta"] == 0.25) & (frame["n"].abs() <= 1)]
            np.testing.assert_allclose(level["t"], level["n"] + 0.25, atol=0.1)
            sidecar = json.loads(Path("seq.json").read_text(encoding="utf-8"))
            assert sidecar["theta_star"] == pytest.approx(0.5, abs=1e-12)
            assert sidecar["exceptional"] == []

    def test_sequences_need_a_pair(self) -> None:
        result = CliRunner().invoke(get_cli(), ["sequences", "--theta", "0.1"])
        assert result.exit_code == 2

    def test_theta_out_of_range(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            write_random_pair(Path("pair.json"))
            result = runner.invoke(
                get_cli(),
                ["sequences", "--pair", "pair.json", "--theta", "1.5"],
            )
            assert result.exit_code == 2

    def test_unnormalized_pair_rejected(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            runner.invoke(get_cli(), ["paley-wiener", "-N", "3", "--raw", "--out", "raw.json"])
            result = runner.invoke(get_cli(), ["sequences", "--pair", "raw.json"])
            assert result.exit_code == 2

    def test_spectral_table(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            lo = write_random_pair(Path("pair.json")).indices.lo
            result = runner.invoke(
                get_cli(),
                ["spectral", "--pair", "pair.json", f"--range={lo}:{lo + 1}", "--out", "s.csv"],
            )
            assert result.exit_code == 0
            frame = pd.read_csv("s.csv")
            assert list(frame.columns) == ["s", "t", "t_prime"]
            assert frame["t"].is_monotonic_increasing
            assert (frame["t_prime"] > 0).all()

    @pytest.mark.parametrize(
        ("file_tol", "flag", "expected"),
        [(1e-7, None, 1e-7), (None, None, None), (1e-7, "1e-10", 1e-10)],
    )
    def test_spectral_tolerance_sources(
        self,
        monkeypatch: pytest.MonkeyPatch,
        file_tol: float | None,
        flag: str | None,
        expected: float | None,
    ) -> None:
        """The ODE tolerance comes from --tol, then --config, else from settings."""
        seen: list[float | None] = []
        real_solver = sequences_cmd.solve_spectral_ode

        def recording_solver(pair, s_range, *, rtol=None, samples_per_unit=16):
            seen.append(rtol)
            return real_solver(pair, s_range, rtol=rtol, samples_per_unit=samples_per_unit)

        monkeypatch.setattr(sequences_cmd, "solve_spectral_ode", recording_solver)
        runner = CliRunner()
        with runner.isolated_filesystem():
            lo = write_random_pair(Path("pair.json")).indices.lo
            run = {"pair_path": "pair.json"}
            if file_tol is not None:
                run["tol"] = file_tol
            Path("run.json").write_text(json.dumps(run), encoding="utf-8")
            args = ["spectral", "--config", "run.json", f"--range={lo}:{lo + 1}", "--out", "s.csv"]
            if flag is not None:
                args += ["--tol", flag]
            result = runner.invoke(get_cli(), args)
            assert result.exit_code == 0, result.output
        assert seen == [expected]


@pytest.mark.unit
class TestKernelAndBandlimit:
    """Tests for kernel and bandlimit."""

    def test_kernel_grid(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            write_random_pair(Path("pair.json"))
            result = runner.invoke(
                get_cli(),
                ["kernel", "--pair", "pair.json", "--grid", "-1:0.5:5", "--out", "k.csv"],
            )
            assert result.exit_code == 0
            frame = pd.read_csv("k.csv")
            assert len(frame) == 25
            diagonal = frame[frame["t"] == frame["s"]]["K"]
            np.testing.assert_allclose(diagonal, 1.0, atol=1e-12)

    def test_kernel_needs_grid(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            write_random_pair(Path("pair.json"))
            result = runner.invoke(get_cli(), ["kernel", "--pair", "pair.json"])
            assert result.exit_code == 2

    def test_bandlimit_with_report(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            write_random_pair(Path("pair.json"))
            result = runner.invoke(
                get_cli(),
                [
                    "bandlimit",
                    "--pair",
                    "pair.json",
                    "--grid",
                    "-2:0.25:17",
                    "--window",
                    "-2:2",
                    "--out",
                    "omega.csv",
                    "--report",
                    "nyquist.json",
                ],
            )
            assert result.exit_code == 0
            frame = pd.read_csv("omega.csv")
            assert list(frame.columns) == ["t", "tau", "tau_prime", "omega"]
            assert (frame["omega"] > 0).all()
            report = json.loads(Path("nyquist.json").read_text(encoding="utf-8"))
            assert report["window"] == [-2.0, 2.0]
            assert 0.0 < report["w_star"] < 1.0


@pytest.mark.unit
class TestSignalCommands:
    """Tests for filter and reconstruct."""

    def test_filter_writes_signal_and_report(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            write_random_pair(Path("pair.json"))
            times = np.linspace(-3.0, 3.0, 61)
            pd.DataFrame({"t": times, "value": np.exp(-(times**2))}).to_csv(
                "signal.csv",
                index=False,
            )
            result = runner.invoke(
                get_cli(),
                [
                    "filter",
                    "--pair",
                    "pair.json",
                    "--signal",
                    "signal.csv",
                    "--theta",
                    "0",
                    "--out",
                    "filtered.csv",
                    "--report",
                    "lowpass.json",
                ],
            )
            assert result.exit_code == 0
            filtered = pd.read_csv("filtered.csv")
            assert list(filtered.columns) == ["t", "value"]
            assert len(filtered) == 61
            report = json.loads(Path("lowpass.json").read_text(encoding="utf-8"))
            assert report["theta"] == 0.0
            assert report["mu_w"] is None
            assert report["coefficients"] == 6

    def test_filter_takes_one_theta(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            write_random_pair(Path("pair.json"))
            pd.DataFrame({"t": [0.0, 1.0], "value": [1.0, 1.0]}).to_csv("s.csv", index=False)
            result = runner.invoke(
                get_cli(),
                ["filter", "--pair", "pair.json", "--signal", "s.csv", "--theta", "0,0.5"],
            )
            assert result.exit_code == 2

    def test_reconstruct_from_lattice_samples(self) -> None:
        """Samples read back from ``sequences`` rebuild a signal on the grid."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            write_random_pair(Path("pair.json"))
            runner.invoke(
                get_cli(),
                ["sequences", "--pair", "pair.json", "--theta", "0.2", "--out", "seq.csv"],
            )
            lattice = pd.read_csv("seq.csv", float_precision="round_trip")
            pd.DataFrame({"t": lattice["t"], "value": np.ones(len(lattice))}).to_csv(
                "samples.csv",
                index=False,
                float_format="%.17g",
            )
            result = runner.invoke(
                get_cli(),
                [
                    "reconstruct",
                    "--pair",
                    "pair.json",
                    "--samples",
                    "samples.csv",
                    "--theta",
                    "0.2",
                    "--grid",
                    "-1:0.5:5",
                    "--out",
                    "rebuilt.csv",
                ],
            )
            assert result.exit_code == 0
            assert len(pd.read_csv("rebuilt.csv")) == 5

    def test_reconstruct_rejects_foreign_times(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            write_random_pair(Path("pair.json"))
            Path("samples.csv").write_text("t,value\n0.123,1\n", encoding="utf-8")
            result = runner.invoke(
                get_cli(),
                [
                    "reconstruct",
                    "--pair",
                    "pair.json",
                    "--samples",
                    "samples.csv",
                    "--grid",
                    "0:1:3",
                ],
            )
            assert result.exit_code == 2
            assert "do not match" in result.output


@pytest.mark.unit
class TestVerifyCommand:
    """Tests for verify."""

    def test_verify_passes(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            write_random_pair(Path("pair.json"))
            result = runner.invoke(
                get_cli(),
                ["verify", "--pair", "pair.json", "--theta", "0,0.3", "--out", "report.json"],
            )
            assert result.exit_code == 0
            report = json.loads(Path("report.json").read_text(encoding="utf-8"))
            assert report["pair_size"] == 6
            assert all(check["status"] == "pass" for check in report["checks"])

    @pytest.mark.parametrize("half_width", [0, 6])
    def test_verify_paley_wiener_output(self, half_width: int) -> None:
        """Default levels pass on paley-wiener output, including the one-node pair."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            runner.invoke(get_cli(), ["paley-wiener", "-N", str(half_width), "--out", "pw.json"])
            result = runner.invoke(get_cli(), ["verify", "--pair", "pw.json", "--out", "report.json"])
            assert result.exit_code == 0, result.output
            report = json.loads(Path("report.json").read_text(encoding="utf-8"))
            assert report["pair_size"] == 2 * half_width + 1
            assert report["thetas"] == [0.0, 0.25, 0.5, 0.75]
            overlaps = [c for c in report["checks"] if c["name"].startswith("kernel_overlap")]
            assert len(overlaps) == 3
            assert all(check["status"] == "pass" for check in report["checks"])

    def test_verify_failure_exit_code(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """A failing check exits with the numeric-failure code."""
        monkeypatch.setattr(verify_module, "SEQUENCE_TOL", -1.0)
        runner = CliRunner()
        with runner.isolated_filesystem():
            write_random_pair(Path("pair.json"))
            result = runner.invoke(
                get_cli(),
                ["verify", "--pair", "pair.json", "--theta", "0.3", "--out", "report.json"],
            )
            assert result.exit_code == 3
            assert "FAIL oracle_sequence" in result.output


@pytest.mark.unit
class TestConfigCommands:
    """Tests for the config group."""

    def test_set_then_get(self) -> None:
        runner = CliRunner()
        result = runner.invoke(get_cli(), ["config", "set", "tol", "1e-6"])
        assert result.exit_code == 0
        result = runner.invoke(get_cli(), ["config", "get", "tol"])
        assert result.exit_code == 0
        assert json.loads(result.output) == 1e-6

    def test_unknown_key(self) -> None:
        result = CliRunner().invoke(get_cli(), ["config", "get", "nope"])
        assert result.exit_code == 2

    def test_user_thetas_feed_sequences(self) -> None:
        """User defaults apply when no flag or --config overrides them."""
        runner = CliRunner()
        with runner.isolated_filesystem():
            write_random_pair(Path("pair.json"))
            runner.invoke(get_cli(), ["config", "set", "thetas", "[0.1, 0.6]"])
            result = runner.invoke(
                get_cli(),
                ["sequences", "--pair", "pair.json", "--out", "seq.csv"],
            )
            assert result.exit_code == 0
            frame = pd.read_csv("seq.csv", float_precision="round_trip")
            assert sorted(frame["theta"].unique()) == [0.1, 0.6]

    def test_reset(self) -> None:
        runner = CliRunner()
        runner.invoke(get_cli(), ["config", "set", "alpha", "0.5"])
        result = runner.invoke(get_cli(), ["config", "reset", "--yes"])
        assert result.exit_code == 0
        shown = runner.invoke(get_cli(), ["config", "get", "alpha"])
        assert json.loads(shown.output) == 0.0

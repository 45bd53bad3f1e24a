"""Command-line surface: subcommands, flags, config file, exit codes."""

import subprocess
import sys

from diamondchain.cli import main


def test_point_writes_csv(tmp_path, capsys):
    out = tmp_path / "point.csv"
    code = main(
        [
            "point",
            "--delta", "1.0",
            "--h", "0.5",
            "--gamma", "0.8",
            "--eta", "-0.8",
            "--T", "0.05",
            "--out", str(out),
        ]
    )
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 2
    header = lines[0].split(",")
    assert header[:6] == ["T", "h", "Delta", "alpha", "gamma", "eta"]
    row = dict(zip(header, lines[1].split(",")))
    assert float(row["T"]) == 0.05
    assert float(row["concurrence_imp"]) > 0.99


def test_point_defaults_to_stdout(capsys):
    code = main(["point", "--T", "1.0"])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out.startswith("T,h,Delta,alpha,gamma,eta,")


def test_sweep_preset_with_overrides(tmp_path):
    out = tmp_path / "fig2a.csv"
    code = main(["sweep", "--preset", "fig2a", "--t-steps", "8", "--out", str(out)])
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 1 + 3 * 8  # header + three fields x eight temperatures
    assert "concurrence_imp" in lines[0]


def test_sweep_field_list_axis(tmp_path):
    out = tmp_path / "sweep.csv"
    code = main(
        [
            "sweep",
            "--h", "0.5,2.0",
            "--delta", "1.0",
            "--gamma", "0.8",
            "--eta", "-0.8",
            "--t-min", "0.05",
            "--t-max", "0.5",
            "--t-steps", "4",
            "--observables", "concurrence,coherence",
            "--out", str(out),
        ]
    )
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 1 + 2 * 4
    assert lines[0] == (
        "T,h,Delta,alpha,gamma,eta,"
        "concurrence_imp,concurrence_ref,coherence_imp,coherence_ref"
    )


def test_threshold_subcommand(tmp_path):
    out = tmp_path / "threshold.csv"
    code = main(
        [
            "threshold",
            "--delta", "1.0",
            "--h", "2.0",
            "--gamma", "0.8",
            "--eta", "-0.8",
            "--scan-points", "400",
            "--out", str(out),
        ]
    )
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].endswith("root_index,T_root,transition")
    assert len(lines) == 3  # birth and death of the re-entrant window
    assert lines[1].endswith("D->E")
    assert lines[2].endswith("E->D")


def test_contour_subcommand(tmp_path):
    out = tmp_path / "contour.csv"
    code = main(
        [
            "contour",
            "--preset", "fig5a",
            "--delta", "0.5,1.0,2.0",
            "--t-steps", "12",
            "--out", str(out),
        ]
    )
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "model,branch,Delta,T"
    assert any(line.startswith("imp,") for line in lines[1:])


def test_config_file_with_flag_override(tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text(
        "# fig2a-like point\n"
        "delta = 1.0\n"
        "h = 0.5\n"
        "gamma = 0.8\n"
        "eta = -0.8\n"
        "t = 0.05\n",
        encoding="utf-8",
    )
    out = tmp_path / "from_config.csv"
    code = main(["point", "--config", str(config), "--out", str(out)])
    assert code == 0
    row = out.read_text(encoding="utf-8").splitlines()[1].split(",")
    assert float(row[0]) == 0.05  # T came from the file

    out2 = tmp_path / "override.csv"
    code = main(["point", "--config", str(config), "--T", "0.2", "--out", str(out2)])
    assert code == 0
    row2 = out2.read_text(encoding="utf-8").splitlines()[1].split(",")
    assert float(row2[0]) == 0.2  # flag wins over the file


def test_configuration_errors_exit_nonzero(capsys):
    code = main(["sweep", "--t-min", "1.0", "--t-max", "0.5"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.err.startswith("error:")
    assert len(captured.err.strip().splitlines()) == 1

    code = main(["sweep", "--observables", "bogus"])
    captured = capsys.readouterr()
    assert code == 2
    assert "bogus" in captured.err

    code = main(["contour", "--delta", "1.0"])  # no grid
    assert code == 2
    capsys.readouterr()

    code = main(["threshold", "--preset", "fig2a"])  # wrong preset kind
    assert code == 2
    capsys.readouterr()

    code = main(["point", "--config", "/nonexistent/file.cfg"])
    assert code == 2
    capsys.readouterr()


def test_bad_config_line_reports_location(tmp_path, capsys):
    config = tmp_path / "broken.cfg"
    config.write_text("delta 1.0\n", encoding="utf-8")
    code = main(["point", "--config", str(config)])
    captured = capsys.readouterr()
    assert code == 2
    assert "broken.cfg:1" in captured.err


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "diamondchain.cli", "point", "--T", "0.5"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("T,h,Delta")

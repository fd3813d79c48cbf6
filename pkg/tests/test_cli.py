"""End-to-end tests of the command-line interface and its file artifacts."""

import filecmp
import json
import math

import pytest

from wgrover import csvio, grover_core
from wgrover.amplitudes import load_spec
from wgrover.cli import main

UNIFORM20 = '{"kind":"uniform","n":20}'
UNIFORM4 = '{"kind":"uniform","n":4}'
COHERENT08 = '{"kind":"coherent","alpha_re":0.8,"alpha_im":0.0,"q1":1,"n":20}'
COHERENT32 = '{"kind":"coherent","alpha_re":3.2,"alpha_im":0.0,"q1":1,"n":20}'


def run(*argv):
    return main(list(argv))


class TestDistCommand:
    def test_coherent_rows_sum_to_one(self, tmp_path):
        assert run("dist", "--inline", COHERENT08, "--out", str(tmp_path)) == 0
        rows = csvio.read_distribution(tmp_path / "dist.csv")
        assert len(rows) == 21
        assert [k for k, _ in rows] == list(range(1, 22))
        assert abs(sum(p for _, p in rows) - 1.0) <= 1e-9

    def test_uniform_rows(self, tmp_path):
        assert run("dist", "--inline", UNIFORM20, "--out", str(tmp_path)) == 0
        rows = csvio.read_distribution(tmp_path / "dist.csv")
        assert all(p == pytest.approx(0.05, abs=1e-15) for _, p in rows)

    def test_svg_flag(self, tmp_path):
        run("dist", "--inline", UNIFORM4, "--out", str(tmp_path), "--svg")
        text = (tmp_path / "dist.svg").read_text()
        assert text.startswith("<svg") and "</svg>" in text

    def test_spec_file(self, tmp_path):
        spec = tmp_path / "db.json"
        spec.write_text(COHERENT08)
        assert run("dist", "--spec", str(spec), "--out", str(tmp_path / "o")) == 0
        assert (tmp_path / "o" / "dist.csv").exists()

    def test_malformed_json_exits_1(self, tmp_path, capsys):
        assert run("dist", "--inline", "{oops", "--out", str(tmp_path)) == 1
        assert "invalid JSON" in capsys.readouterr().err

    def test_invalid_spec_exits_1(self, tmp_path):
        assert run("dist", "--inline", '{"kind":"uniform","n":1}', "--out", str(tmp_path)) == 1

    def test_spec_and_inline_are_exclusive(self, tmp_path):
        spec = tmp_path / "db.json"
        spec.write_text(UNIFORM20)
        assert run("dist", "--spec", str(spec), "--inline", UNIFORM20) == 1


class TestSimulateCommand:
    def test_summary_and_csv(self, tmp_path, capsys):
        assert run("simulate", "--inline", UNIFORM20, "--target", "1",
                   "--out", str(tmp_path)) == 0
        assert "r*=3" in capsys.readouterr().out
        rows = csvio.read_trajectory(tmp_path / "trajectory.csv")
        assert len(rows) == 201
        r, a, b, prob = rows[3]
        assert r == 3
        assert a.real == pytest.approx(-0.008, abs=1e-12)
        assert b.real == pytest.approx(1.0017584539199058, abs=1e-12)
        assert prob == pytest.approx(0.9999392, abs=1e-7)

    def test_one_step_certainty(self, tmp_path, capsys):
        assert run("simulate", "--inline", UNIFORM4, "--target", "1",
                   "--out", str(tmp_path)) == 0
        out = capsys.readouterr().out
        assert "r*=1" in out and "prob=1" in out

    def test_round_trip_is_exact(self, tmp_path):
        run("simulate", "--inline", COHERENT08, "--target", "3", "--rmax", "20",
            "--out", str(tmp_path))
        traj = grover_core.iterate(load_spec(json.loads(COHERENT08)), 3, 20)
        rows = csvio.read_trajectory(tmp_path / "trajectory.csv")
        for pt, (r, a, b, prob) in zip(traj.points, rows):
            assert (pt.r, pt.state.a, pt.state.b, pt.success_prob) == (r, a, b, prob)

    def test_missing_target_exits_1(self, tmp_path, capsys):
        assert run("simulate", "--inline", UNIFORM20, "--out", str(tmp_path)) == 1
        assert "--target" in capsys.readouterr().err

    def test_no_peak_exits_3_with_advice(self, tmp_path, capsys):
        assert run("simulate", "--inline", UNIFORM20, "--target", "1",
                   "--rmax", "1", "--out", str(tmp_path)) == 3
        assert "r_max" in capsys.readouterr().err
        # the trajectory itself is still written
        assert (tmp_path / "trajectory.csv").exists()


class TestContinuumCommand:
    def test_summary_values(self, tmp_path, capsys):
        assert run("continuum", "--inline", UNIFORM20, "--target", "1",
                   "--out", str(tmp_path)) == 0
        out = capsys.readouterr().out
        assert "T=14.4146" in out
        assert "x*=3.05156" in out

    def test_curve_samples(self, tmp_path):
        run("continuum", "--inline", UNIFORM20, "--target", "1", "--out", str(tmp_path))
        rows = csvio.read_continuum(tmp_path / "continuum.csv")
        assert rows[0] == (0.0, pytest.approx(0.8), pytest.approx(2 / math.sqrt(20)))
        xs = [r[0] for r in rows]
        assert xs[1] == pytest.approx(0.01)
        assert xs[-1] == pytest.approx(3 * 14.41461568291336, abs=0.01)

    def test_equal_split_period(self, tmp_path, capsys):
        run("continuum", "--inline", '{"kind":"weights","weights":[0.5,0.5]}',
            "--target", "1", "--out", str(tmp_path))
        out = capsys.readouterr().out
        assert f"T={2 * math.pi:.6g}" in out


class TestCompareCommand:
    def test_coherent_08_flags_first_element(self, tmp_path, capsys):
        assert run("compare", "--inline", COHERENT08, "--out", str(tmp_path)) == 0
        out = capsys.readouterr().out
        assert "global speedup: False" in out
        assert "fails for k = [1]" in out

    def test_coherent_32_no_failures(self, tmp_path, capsys):
        assert run("compare", "--inline", COHERENT32, "--out", str(tmp_path)) == 0
        assert "holds for every k" in capsys.readouterr().out

    def test_uniform_global_verdict(self, tmp_path, capsys):
        assert run("compare", "--inline", UNIFORM20, "--out", str(tmp_path)) == 0
        assert "global speedup: True" in capsys.readouterr().out

    def test_csv_round_trip(self, tmp_path):
        run("compare", "--inline", COHERENT08, "--out", str(tmp_path))
        rows = csvio.read_comparison(tmp_path / "comparison.csv")
        assert len(rows) == 21
        assert rows[0].discrete_peak == 2
        assert rows[-1].discrete_peak is None
        for row in rows:
            assert row.recip_classical * row.classical_steps == pytest.approx(1.0, abs=1e-12)

    def test_svg_outputs(self, tmp_path):
        run("compare", "--inline", COHERENT32, "--out", str(tmp_path), "--svg")
        assert (tmp_path / "comparison_recip.svg").exists()
        assert (tmp_path / "comparison_log.svg").exists()


class TestReproCommand:
    def test_fig2_artifacts(self, tmp_path):
        assert run("repro", "fig2", "--out", str(tmp_path)) == 0
        base = tmp_path / "fig2"
        for name in ("trajectory.csv", "trajectory.svg", "continuum.csv", "continuum.svg"):
            assert (base / name).exists()

    def test_fig3_four_alphas(self, tmp_path):
        assert run("repro", "fig3", "--out", str(tmp_path)) == 0
        for alpha in ("0.8", "1.6", "2.4", "3.2"):
            rows = csvio.read_distribution(tmp_path / "fig3" / f"alpha_{alpha}.csv")
            assert len(rows) == 21
            assert abs(sum(p for _, p in rows) - 1.0) <= 1e-9

    def test_fig4_targets_k3(self, tmp_path):
        assert run("repro", "fig4", "--out", str(tmp_path)) == 0
        rows = csvio.read_trajectory(tmp_path / "fig4" / "trajectory.csv")
        probs = [prob for _, _, _, prob in rows]
        assert probs[3] == pytest.approx(0.9998405317851912, abs=1e-9)
        assert probs[3] >= probs[2] and probs[3] >= probs[4]

    def test_fig5_fig6_tables(self, tmp_path):
        assert run("repro", "fig5", "--out", str(tmp_path)) == 0
        assert run("repro", "fig6", "--out", str(tmp_path)) == 0
        recip = csvio.read_comparison(tmp_path / "fig5" / "alpha_0.8.csv")
        assert [r.k for r in recip] == list(range(1, 22))
        assert (tmp_path / "fig5" / "alpha_0.8_recip.svg").exists()
        assert (tmp_path / "fig6" / "alpha_0.8_log.svg").exists()

    def test_fig2_byte_determinism(self, tmp_path):
        run("repro", "fig2", "--out", str(tmp_path / "a"))
        run("repro", "fig2", "--out", str(tmp_path / "b"))
        names = ["trajectory.csv", "trajectory.svg", "continuum.csv", "continuum.svg"]
        match, mismatch, errors = filecmp.cmpfiles(
            tmp_path / "a" / "fig2", tmp_path / "b" / "fig2", names, shallow=False
        )
        assert mismatch == [] and errors == []
        assert sorted(match) == sorted(names)


class TestExitCodes:
    def test_io_error_exits_2(self, tmp_path, capsys):
        blocker = tmp_path / "blocker"
        blocker.write_text("not a directory")
        code = run("dist", "--inline", UNIFORM4, "--out", str(blocker / "sub"))
        assert code == 2
        assert "i/o error" in capsys.readouterr().err

    def test_unknown_figure_exits_1(self):
        assert run("repro", "fig9") == 1

    def test_bad_rmax_exits_1(self, tmp_path):
        assert run("simulate", "--inline", UNIFORM4, "--target", "1",
                   "--rmax", "0", "--out", str(tmp_path)) == 1

    def test_unknown_target_exits_1(self, tmp_path):
        assert run("simulate", "--inline", UNIFORM4, "--target", "9",
                   "--out", str(tmp_path)) == 1


class TestOutputDirDefaults:
    def test_env_var_fallback(self, tmp_path, monkeypatch):
        monkeypatch.setenv("WGROVER_OUT", str(tmp_path / "envout"))
        assert run("dist", "--inline", UNIFORM4) == 0
        assert (tmp_path / "envout" / "dist.csv").exists()

    def test_cwd_default(self, tmp_path, monkeypatch):
        monkeypatch.delenv("WGROVER_OUT", raising=False)
        monkeypatch.chdir(tmp_path)
        assert run("dist", "--inline", UNIFORM4) == 0
        assert (tmp_path / "out" / "dist.csv").exists()

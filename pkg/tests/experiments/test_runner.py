import csv

import pytest

from src.config import Config
from src.errors import ConfigInvalidError, ExperimentError
from src.experiments import run_experiment


def calabi_config():
    return Config(experiment="calabi-discontinuity", seed=7, calabi={"indices": [2, 4]})


def test_calabi_discontinuity_writes_tables_and_report(tmp_path):
    report = run_experiment(calabi_config(), tmp_path)

    assert report.passed
    assert report.output_dir == tmp_path / "calabi-discontinuity"
    assert [row["i"] for row in report.rows["calabi"]] == [2, 4]
    assert {check.name for check in report.checks} >= {"calabi[i=2]", "c0_decreasing"}

    with (report.output_dir / "calabi.csv").open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 2
    assert {row["config_hash"] for row in rows} == {report.provenance.config_hash}

    text = (report.output_dir / "report.txt").read_text(encoding="utf-8")
    assert "Result: PASSED" in text
    assert report.provenance.config_hash in text
    assert "numpy" in report.provenance.versions
    assert "calabi-discontinuity" in report.provenance.wall_times


def test_reruns_are_reproducible(tmp_path):
    first = run_experiment(calabi_config(), tmp_path / "a")
    second = run_experiment(calabi_config(), tmp_path / "b")
    assert first.reproducible_rows() == second.reproducible_rows()
    table = "calabi-discontinuity/calabi.csv"
    assert (tmp_path / "a" / table).read_bytes() == (tmp_path / "b" / table).read_bytes()


def test_disc_hamiltonian_in_gg_proposition_is_rejected(tmp_path):
    config = Config(
        experiment="gg-proposition",
        seed=1,
        hamiltonians=[{"name": "q", "preset": "quadratic"}],
    )
    with pytest.raises(ConfigInvalidError):
        run_experiment(config, tmp_path)


def test_module_errors_name_the_experiment(tmp_path):
    config = Config(
        experiment="fragment-demo",
        seed=1,
        hamiltonians=[
            {"name": "wide", "preset": "bump", "domain": "disc", "radius": 0.1, "mass": 0.01}
        ],
        fragment={"epsilon": 0.05, "grid": 65},
    )
    with pytest.raises(ExperimentError, match=r"\[fragment-demo\] DisplacementTooLargeError"):
        run_experiment(config, tmp_path)


@pytest.mark.slow
def test_moser_demo_writes_first_map(tmp_path):
    config = Config(
        experiment="moser-demo",
        seed=3,
        moser={"grid": 33, "cases": 2, "amplitudes": [0.04, 0.02], "check_refinement": True},
    )
    report = run_experiment(config, tmp_path)

    assert len(report.rows["moser"]) == 4
    assert {row["case"] for row in report.rows["moser"]} == {0, 1}
    grids = report.output_dir / "grids"
    for name in ("omega_case0.grid", "moser_case0.grid", "moser_case0.csv"):
        assert (grids / name).exists()
    assert (report.output_dir / "moser.csv").exists()
    assert [row["grid"] for row in report.rows["refinement"]] == [33, 65, 129]
    assert all(check.passed for check in report.checks if check.name.startswith("refinement"))


@pytest.mark.slow
def test_curve_demo_summarizes_each_epsilon(tmp_path):
    config = Config(
        experiment="curve-demo",
        seed=5,
        curve={"epsilons": [0.05], "curves": 2, "vertices": 64, "grid": 33},
    )
    report = run_experiment(config, tmp_path)

    assert len(report.rows["curves"]) == 2
    assert len(report.rows["curve_summary"]) == 1
    assert {check.name for check in report.checks} == {"vertices[eps=0.05]", "boundary[eps=0.05]"}


@pytest.mark.slow
def test_gg_proposition_checks_the_extrapolated_estimate(tmp_path):
    config = Config(
        experiment="gg-proposition",
        seed=4,
        hamiltonians=[{"name": "b", "preset": "bump", "radius": 0.25, "mass": 0.1}],
        estimator={"kernels": ["ab", "aab"], "p_schedule": [1, 2], "n_samples": 200},
        flow={"method": "exact-radial"},
    )
    report = run_experiment(config, tmp_path)

    rows = [row for row in report.rows["estimates"] if row["kernel"] == "aab"]
    assert [row["extrapolated"] for row in rows] == [False, False, True]
    assert rows[-1]["p"] == 2
    assert {check.name for check in report.checks} == {"gg[ab, b]", "gg[aab, b]"}

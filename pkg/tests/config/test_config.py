import logging
from pathlib import Path

import pytest
from pydantic import ValidationError

from src.config import (
    CalabiConfig,
    Config,
    CurveConfig,
    ExperimentType,
    HamiltonianSpec,
    KernelSpec,
    LoggingConfig,
    LoopConfig,
    MoserConfig,
    ProbeConfig,
    RuntimeConfig,
    build_kernel,
)
from src.fgword import Word, commutator_value, qm_eval
from src.hamflow import HamiltonianPreset, calabi
from src.punctured import PathOptions


def make_config(**kwargs):
    kwargs.setdefault("experiment", ExperimentType.CALABI_DISCONTINUITY)
    kwargs.setdefault("seed", 1)
    return Config(**kwargs)


def test_minimal_config_uses_module_defaults():
    config = make_config()
    assert config.estimator.p_schedule == [1, 2, 4, 8, 16]
    assert config.calabi.indices == [2, 4, 8, 16]
    assert config.loop.to_options(config.flow.method) == PathOptions()


def test_dump_dir_reaches_the_path_options():
    config = make_config(paths={"dump_dir": "dumps"})
    options = config.loop.to_options(config.flow.method, config.paths.dump_dir)
    assert options.dump_dir == Path("dumps")


def test_seed_and_experiment_are_required():
    with pytest.raises(ValidationError) as info:
        Config()
    missing = {error["loc"][0] for error in info.value.errors()}
    assert missing == {"experiment", "seed"}


def test_unknown_sections_are_rejected():
    with pytest.raises(ValidationError):
        make_config(plots={"dpi": 150})


def test_custom_kernel_builds_weighted_terms():
    spec = KernelSpec(name="mixed", terms=[("ab", 1.0), ("ba", -1.0)])
    mu = spec.build()
    assert mu.pairs() == [("ab", 1.0), ("ba", -1.0)]
    assert commutator_value(mu) == pytest.approx(2.0)
    assert qm_eval(mu, Word.parse("abab")) == 0.0


def test_kernel_terms_must_use_the_alphabet():
    with pytest.raises(ValidationError, match="aAbB"):
        KernelSpec(name="weird", terms=[("abc", 1.0)])


def test_unknown_kernel_without_terms_is_rejected():
    with pytest.raises(ValidationError, match="not a library kernel"):
        KernelSpec(name="xyz")


def test_build_kernel_prefers_configured_specs():
    specs = [KernelSpec(name="ab", weight=2.0)]
    assert commutator_value(build_kernel("ab", specs)) == pytest.approx(2.0)
    assert commutator_value(build_kernel("ab", [])) == pytest.approx(1.0)
    with pytest.raises(ValueError, match="Unknown kernel"):
        build_kernel("nope", specs)


def test_hamiltonian_spec_builds_preset():
    spec = HamiltonianSpec(name="b", preset=HamiltonianPreset.BUMP, radius=0.2, mass=0.01)
    F = spec.build()
    assert F.name == "b"
    assert not spec.on_disc
    assert calabi(F) == pytest.approx(0.01, abs=1e-3)


def test_quadratic_lives_on_the_disc():
    assert HamiltonianSpec(name="q", preset=HamiltonianPreset.QUADRATIC).on_disc
    assert HamiltonianSpec(
        name="d", preset=HamiltonianPreset.BUMP, domain="disc", radius=0.3, mass=0.01
    ).on_disc


def test_section_validators():
    with pytest.raises(ValidationError, match="base_steps"):
        LoopConfig(base_steps=128, max_steps=64)
    with pytest.raises(ValidationError, match="strictly increasing"):
        CalabiConfig(indices=[4, 2])
    with pytest.raises(ValidationError, match="pi/4"):
        ProbeConfig(areas=[0.1, 0.9])
    with pytest.raises(ValidationError, match="no skeleton"):
        MoserConfig(mode="vanish_on_skeleton")
    with pytest.raises(ValidationError, match="strictly decreasing"):
        MoserConfig(amplitudes=[0.01, 0.02])
    with pytest.raises(ValidationError, match="epsilons"):
        CurveConfig(epsilons=[0.1])


def test_logging_level_falls_back_to_info():
    assert LoggingConfig(level="debug").get_level() == logging.DEBUG
    assert LoggingConfig(level="verbose").get_level() == logging.INFO


def test_worker_cap_from_environment(monkeypatch):
    runtime = RuntimeConfig(workers=8)
    monkeypatch.delenv("QMC_MAX_WORKERS", raising=False)
    assert runtime.effective_workers() == 8
    monkeypatch.setenv("QMC_MAX_WORKERS", "2")
    assert runtime.effective_workers() == 2


def test_hash_ignores_paths_logging_and_runtime():
    base = make_config()
    moved = make_config(
        paths={"output_dir": "/tmp/elsewhere", "dump_dir": "/tmp/dumps"},
        logging={"level": "DEBUG"},
        runtime={"workers": 4, "chunk_size": 17},
    )
    assert base.config_hash() == moved.config_hash()
    assert base.config_hash() != make_config(seed=2).config_hash()
    assert len(base.config_hash()) == 64


def test_from_file(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("experiment: moser-demo\nseed: 3\nmoser:\n  grid: 33\n")
    config = Config.from_file(path)
    assert config.experiment is ExperimentType.MOSER_DEMO
    assert config.moser.grid == 33

    with pytest.raises(FileNotFoundError):
        Config.from_file(tmp_path / "missing.yaml")
    other = tmp_path / "run.json"
    other.write_text("{}")
    with pytest.raises(ValueError, match="YAML"):
        Config.from_file(other)


def test_reference_errors_name_the_field():
    config = make_config(
        experiment=ExperimentType.GG_PROPOSITION,
        hamiltonians=[{"name": "h", "preset": "bump", "radius": 0.2, "mass": 0.01}],
        estimator={"kernels": ["ab", "zz"], "hamiltonians": ["h", "g"]},
    )
    assert config.reference_errors() == [
        "estimator.kernels.1: unknown kernel 'zz'",
        "estimator.hamiltonians.1: unknown Hamiltonian 'g'",
    ]


def test_duplicate_names_are_reported():
    spec = {"name": "h", "preset": "bump", "radius": 0.2, "mass": 0.01}
    config = make_config(hamiltonians=[spec, spec])
    assert config.reference_errors() == ["hamiltonians.1.name: duplicate name 'h'"]


def test_fragment_demo_needs_disc_hamiltonians():
    torus = {"name": "t", "preset": "bump", "radius": 0.2, "mass": 0.01}
    config = make_config(experiment=ExperimentType.FRAGMENT_DEMO, hamiltonians=[torus])
    assert config.reference_errors() == [
        "hamiltonians: fragment-demo needs at least one disc Hamiltonian"
    ]
    named = make_config(
        experiment=ExperimentType.FRAGMENT_DEMO,
        hamiltonians=[torus],
        fragment={"hamiltonians": ["t"]},
    )
    assert named.reference_errors() == ["fragment.hamiltonians: 't' does not live on the disc"]


def test_gg_proposition_needs_hamiltonians():
    config = make_config(experiment=ExperimentType.GG_PROPOSITION)
    assert config.reference_errors() == [
        "hamiltonians: gg-proposition needs at least one Hamiltonian"
    ]

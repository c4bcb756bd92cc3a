from pathlib import Path

import pytest

from src.errors import ConfigInvalidError
from src.experiments import load_config, validate_config

ROOT = Path(__file__).resolve().parents[2]
SHIPPED = sorted((ROOT / "configs").glob("*.yaml"))


def write(tmp_path, text, name="run.yaml"):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_example_config_is_valid():
    assert validate_config(ROOT / "config-example.yaml") == []


@pytest.mark.parametrize("path", SHIPPED, ids=lambda p: p.stem)
def test_shipped_presets_are_valid(path):
    assert validate_config(path) == []


def test_every_experiment_has_a_preset():
    assert len(SHIPPED) == 7


def test_empty_config_is_invalid(tmp_path):
    path = write(tmp_path, "")
    diagnostics = validate_config(path)
    assert sorted(d.split(":")[0] for d in diagnostics) == ["experiment", "seed"]
    with pytest.raises(ConfigInvalidError) as info:
        load_config(path)
    assert info.value.diagnostics == diagnostics


def test_foreign_kernel_symbol_names_the_field(tmp_path):
    path = write(
        tmp_path,
        "experiment: cocycle-audit\nseed: 1\nkernels:\n  - name: odd\n    terms: [[ac, 1.0]]\n",
    )
    diagnostics = validate_config(path)
    assert len(diagnostics) == 1
    assert diagnostics[0].startswith("kernels.0.terms:")
    assert "'ac'" in diagnostics[0]


def test_missing_seed_gives_one_diagnostic(tmp_path):
    diagnostics = validate_config(write(tmp_path, "experiment: curve-demo\n"))
    assert diagnostics == ["seed: Field required"]


def test_unknown_hamiltonian_reference(tmp_path):
    text = (
        "experiment: fragment-demo\nseed: 1\n"
        "hamiltonians:\n  - {name: q, preset: quadratic}\n"
        "fragment:\n  hamiltonians: [q, missing]\n"
    )
    diagnostics = validate_config(write(tmp_path, text))
    assert diagnostics == ["fragment.hamiltonians.1: unknown Hamiltonian 'missing'"]


def test_probe_areas_must_fit_in_the_torus(tmp_path):
    text = "experiment: continuity-probe\nseed: 1\nprobe:\n  areas: [0.1, 1.5]\n"
    diagnostics = validate_config(write(tmp_path, text))
    assert len(diagnostics) == 1
    assert diagnostics[0].startswith("probe.areas:")


def test_non_mapping_document_is_reported(tmp_path):
    diagnostics = validate_config(write(tmp_path, "- 1\n- 2\n"))
    assert len(diagnostics) == 1


def test_missing_file_raises(tmp_path):
    with pytest.raises(FileNotFoundError):
        validate_config(tmp_path / "absent.yaml")
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "absent.yaml")


def test_load_config_returns_validated_config():
    config = load_config(ROOT / "configs" / "calabi-discontinuity.yaml")
    assert config.calabi.indices == [2, 4, 8, 16]

import json

import pytest
from numpy.testing import assert_allclose

from phasefield_core.harness import (
    AnsatzSpec,
    DiagnosticsSpec,
    ExperimentConfig,
    GridSpec,
)
from phasefield_core.potential import QuarticWell


def test_harness_config_defaults():
    cfg = ExperimentConfig()
    assert cfg.eps == (0.1, 0.05, 0.025)
    assert cfg.ansatz.kind == "flat_interface"
    assert cfg.diagnostics.levels == (0.5, 0.9)
    assert isinstance(cfg.make_well(), QuarticWell)


def test_harness_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(eps=(0.05, 0.1))
    with pytest.raises(ValueError):
        ExperimentConfig(eps=(0.1, 0.1))
    with pytest.raises(ValueError):
        ExperimentConfig(eps=())
    with pytest.raises(ValueError):
        ExperimentConfig(grid=GridSpec(resolution=4.0))
    with pytest.raises(ValueError):
        ExperimentConfig(grid=GridSpec(shape=(11, 11)))
    with pytest.raises(ValueError):
        GridSpec(box=((0.0, 1.0),) * 4)
    with pytest.raises(ValueError):
        GridSpec(refinement=0.5)
    with pytest.raises(ValueError):
        DiagnosticsSpec(levels=(0.5, 1.0))


def test_harness_config_grid_spacing():
    assert_allclose(GridSpec(resolution=10.0).spacing(0.05, 0.1), 0.005)
    assert_allclose(GridSpec(resolution=10.0, refinement=2.0).spacing(0.05, 0.1), 0.0025)
    spec = GridSpec(box=((0.0, 1.0), (0.0, 2.0)), shape=(11, 41))
    assert_allclose(spec.spacing(0.5, 1.0), 0.1)
    grid = GridSpec(box=((-1.0, 1.0),), resolution=10.0).build(0.05, 0.05)
    assert grid.shape == (401,)


def test_harness_config_json(tmp_path):
    cfg = ExperimentConfig(
        eps=(0.1, 0.05),
        ansatz=AnsatzSpec("sphere_shell", center=(0.0, 0.1)),
        diagnostics=DiagnosticsSpec(levels=(0.9,)),
        seed=7,
    )
    assert ExperimentConfig.from_dict(json.loads(cfg.to_json())) == cfg

    path = tmp_path / "config.json"
    path.write_text(cfg.to_json())
    assert ExperimentConfig.from_json(path) == cfg

    with pytest.raises(ValueError):
        ExperimentConfig.from_dict({"eps": [0.1], "colour": "red"})


def test_harness_config_overrides():
    cfg = ExperimentConfig().with_overrides(
        ["eps=[0.2, 0.1]", "ansatz.kind=double_layer", "diagnostics.slicing=false"]
    )
    assert cfg.eps == (0.2, 0.1)
    assert cfg.ansatz.kind == "double_layer"
    assert not cfg.diagnostics.slicing

    with pytest.raises(ValueError):
        ExperimentConfig().with_overrides(["seed"])
    with pytest.raises(ValueError):
        ExperimentConfig().with_overrides(["solve.colour=1"])
    with pytest.raises(ValueError):
        ExperimentConfig().with_overrides(["seed.value=1"])
    with pytest.raises(ValueError):
        ExperimentConfig().with_overrides(["ansatz.kind=helix"])

    assert ExperimentConfig().replace(seed=3).seed == 3

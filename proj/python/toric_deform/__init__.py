"""Exact computations for deformations of semiample hypersurfaces in toric varieties."""

import json

from ._toric_deform import (
    DomainError,
    Model,
    ModelParseError,
    lattice_points,
    preset_json,
    preset_names,
    smith_normal_form,
)

__all__ = [
    "DomainError",
    "Model",
    "ModelParseError",
    "lattice_points",
    "load",
    "preset_json",
    "preset_names",
    "run",
    "smith_normal_form",
]


def load(source):
    """Model from a preset name, a path, or a JSON string."""
    if source in preset_names():
        return Model.preset(source)
    if source.lstrip().startswith("{"):
        return Model.from_json(source)
    return Model.load(source)


def run(command, model, root=None, orientation=None):
    """Run a pipeline command and return the report as a dict."""
    if isinstance(model, str):
        model = load(model)
    return json.loads(model.run(command, root=root, orientation=orientation))

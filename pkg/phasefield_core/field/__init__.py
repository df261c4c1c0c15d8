"""
Uniform-grid fields and discrete calculus.

Grids, scalar/vector/tensor fields, second-order difference operators,
trapezoidal integration over ball and box masks, the blow-up rescaling and the
ACVF binary format.
"""
from ._blowup import blowup
from ._bump import bump, random_bumps, random_vector_fields
from ._calculus import (
    gradient,
    hessian,
    integrate,
    laplacian,
    second_difference,
    staggered_gradient_energy,
)
from ._field import ScalarField, TensorField, VectorField
from ._grid import Grid
from ._io import read_field, write_field
from ._region import Ball, Box, region_mask

__all__ = [
    "Ball",
    "Box",
    "Grid",
    "ScalarField",
    "TensorField",
    "VectorField",
    "blowup",
    "bump",
    "gradient",
    "hessian",
    "integrate",
    "laplacian",
    "random_bumps",
    "random_vector_fields",
    "read_field",
    "region_mask",
    "second_difference",
    "staggered_gradient_energy",
    "write_field",
]

"""
Level sets on fiber planes.

Marching-squares slices of a phase field on the planes spanned by the first
two axes, total curvature and turning angle of slice curves, the slice
curvature estimate, fiber classification and Hausdorff distances of level
bands.
"""
from ._coarea import level_surface_integral, slice_curvature_check
from ._contour import extract_slice, fiber_index, fiber_points, fiber_values, regular_level
from ._curve import SliceCurve, curvature_integral, turning_angle
from ._fiber import (
    FiberClassification,
    FiberParams,
    c3_constant,
    classify_fiber,
    classify_fibers,
    exceptional_fraction,
)
from ._hausdorff import hausdorff_distance, level_band
from ._io import write_classification_csv, write_curves_csv

__all__ = [
    "FiberClassification",
    "FiberParams",
    "SliceCurve",
    "c3_constant",
    "classify_fiber",
    "classify_fibers",
    "curvature_integral",
    "exceptional_fraction",
    "extract_slice",
    "fiber_index",
    "fiber_points",
    "fiber_values",
    "hausdorff_distance",
    "level_band",
    "level_surface_integral",
    "regular_level",
    "slice_curvature_check",
    "turning_angle",
    "write_classification_csv",
    "write_curves_csv",
]

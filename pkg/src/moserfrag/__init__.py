"""Grid primitives, Moser equalization, skeletons, disc fragmentation and curve extension."""

from .curve import CurveExtension, curve_extend, self_intersections, winding
from .fragment import FragmentResult, RescaledIsotopy, default_method, disc_fragment
from .grid import Grid, GridDiffeo, GridForm, OneForm, in_box, rk4_flow, support_box
from .moser import (
    PerturbationRow,
    RefinementRow,
    moser_equalize,
    perturbation_suite,
    pullback_residual,
    pushforward_density,
    refinement_study,
)
from .primitive import (
    Skeleton,
    c0_ratio,
    cell_average,
    discrete_exterior_derivative,
    primitive_on_rectangle,
    primitive_residual,
    tangential_on_skeleton,
)
from .serialize import export_csv, read_grid, write_grid
from .skeleton import Edge, edge_residual, skeleton_adjust
from .types import BoundaryMode, GridKind

__all__ = [
    "BoundaryMode",
    "CurveExtension",
    "Edge",
    "FragmentResult",
    "Grid",
    "GridDiffeo",
    "GridForm",
    "GridKind",
    "OneForm",
    "PerturbationRow",
    "RefinementRow",
    "RescaledIsotopy",
    "Skeleton",
    "c0_ratio",
    "cell_average",
    "curve_extend",
    "default_method",
    "disc_fragment",
    "discrete_exterior_derivative",
    "edge_residual",
    "export_csv",
    "in_box",
    "moser_equalize",
    "perturbation_suite",
    "primitive_on_rectangle",
    "primitive_residual",
    "pullback_residual",
    "pushforward_density",
    "read_grid",
    "refinement_study",
    "rk4_flow",
    "self_intersections",
    "skeleton_adjust",
    "support_box",
    "tangential_on_skeleton",
    "winding",
    "write_grid",
]

"""Integer kernel selection: compiled extension if available, else pure Python.

Set ``SIXPOINT_PURE_KERNEL=1`` to force the pure lane (useful for the
benchmark and for debugging).  Both lanes implement the same functions on
arbitrary-precision ints and return identical values.
"""

import os

from . import pure

if os.environ.get("SIXPOINT_PURE_KERNEL"):
    _impl = pure
    IMPLEMENTATION = "pure"
else:
    try:
        from . import _core as _impl
        IMPLEMENTATION = "compiled"
    except ImportError:
        _impl = pure
        IMPLEMENTATION = "pure"

norm_pair = _impl.norm_pair
norm_point = _impl.norm_point
norm_line = _impl.norm_line
cross3 = _impl.cross3
dot3 = _impl.dot3
det3 = _impl.det3
section_combine = _impl.section_combine
section_solve = _impl.section_solve
combine3 = _impl.combine3
area_num_den = _impl.area_num_den
ceva_residual = _impl.ceva_residual
menelaus_residual = _impl.menelaus_residual
six_concurrence_residual = _impl.six_concurrence_residual
six_collinearity_residual = _impl.six_collinearity_residual
cevian_edge_factor = _impl.cevian_edge_factor
cevian_vertex_factor = _impl.cevian_vertex_factor
edge_vertex_coeffs = _impl.edge_vertex_coeffs
hat_coeffs = _impl.hat_coeffs

KERNEL_NAMES = (
    "norm_pair", "norm_point", "norm_line", "cross3", "dot3", "det3",
    "section_combine", "section_solve", "combine3", "area_num_den",
    "ceva_residual", "menelaus_residual",
    "six_concurrence_residual", "six_collinearity_residual",
    "cevian_edge_factor", "cevian_vertex_factor",
    "edge_vertex_coeffs", "hat_coeffs",
)

"""Dispatch module re-exporting the active kernel implementation."""

from .backend import USE_NUMBA

if USE_NUMBA:
    from ._kernels_numba import (  # noqa: F401
        det_mod,
        inv_mod,
        invert_mod,
        matmul_mod,
        min_weight_enum,
        nearest_scan,
        rref_mod,
    )
else:
    from ._kernels_numpy import (  # noqa: F401
        det_mod,
        inv_mod,
        invert_mod,
        matmul_mod,
        min_weight_enum,
        nearest_scan,
        rref_mod,
    )

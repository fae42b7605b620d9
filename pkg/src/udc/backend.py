"""Kernel backend selection.

Hot integer kernels (mod-p matrix products, exact elimination, codebook
scans) have two interchangeable implementations: numba-jitted loops and
pure-numpy vectorized code.  The active backend is chosen once at import
time from the UDC_BACKEND environment variable:

    UDC_BACKEND=numba   require numba (ImportError if unavailable)
    UDC_BACKEND=numpy   force the pure-numpy fallback
    unset / auto        use numba when importable, else numpy

Both paths compute identical results; see benchmarks/bench_backends.py
for a speed comparison.
"""

import os

_requested = os.environ.get("UDC_BACKEND", "auto").strip().lower()

if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"UDC_BACKEND must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    NUMBA_AVAILABLE = False
    USE_NUMBA = False
else:
    try:
        import numba  # noqa: F401

        NUMBA_AVAILABLE = True
    except ImportError:
        NUMBA_AVAILABLE = False
    if _requested == "numba" and not NUMBA_AVAILABLE:
        raise ImportError("UDC_BACKEND=numba but numba is not importable")
    USE_NUMBA = NUMBA_AVAILABLE


def backend_name() -> str:
    """Name of the active kernel backend ('numba' or 'numpy')."""
    return "numba" if USE_NUMBA else "numpy"

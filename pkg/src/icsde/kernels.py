"""Kernel backend selection: compiled extension if available, numpy otherwise.

Set ICSDE_PURE_PYTHON=1 to force the numpy fallback (used by the benchmark
script and as an escape hatch on platforms without a C compiler).
"""

import os

if os.environ.get("ICSDE_PURE_PYTHON") == "1":
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

min_shifted_distances = _impl.min_shifted_distances

"""Backend selection for the pairwise interaction kernels.

The compiled extension is preferred; the numpy fallback keeps the package
usable from a plain source tree.  ``CC_INDEX_KERNELS`` forces a backend:
"c" (fail if the extension is missing), "py", or "auto" (default).
"""

import os

_choice = os.environ.get("CC_INDEX_KERNELS", "auto").lower()

if _choice not in ("auto", "c", "py"):
    raise ValueError(f"CC_INDEX_KERNELS must be 'auto', 'c' or 'py', got {_choice!r}")

if _choice == "py":
    from . import _pykernels as _impl

    BACKEND = "py"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        if _choice == "c":
            raise
        from . import _pykernels as _impl

        BACKEND = "py"

min_pair_distance = _impl.min_pair_distance
potential_value = _impl.potential_value
mass_gradient = _impl.mass_gradient
euclidean_hessian = _impl.euclidean_hessian

__all__ = [
    "BACKEND",
    "min_pair_distance",
    "potential_value",
    "mass_gradient",
    "euclidean_hessian",
]

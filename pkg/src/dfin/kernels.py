"""Backend selection for the merge kernels.

The compiled extension is preferred when present; the pure-Python twin is
the fallback. Set DFIN_KERNELS=py or DFIN_KERNELS=c before import to force
a backend (the default, auto, tries the compiled one first).
"""

import os

_requested = os.environ.get("DFIN_KERNELS", "auto").lower()
if _requested not in ("auto", "c", "py"):
    raise ImportError(
        f"DFIN_KERNELS must be 'auto', 'c', or 'py', got {_requested!r}"
    )

if _requested == "py":
    from . import _kernels_py as _impl

    BACKEND = "py"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        if _requested == "c":
            raise
        from . import _kernels_py as _impl

        BACKEND = "py"

build_pair_diff = _impl.build_pair_diff
build_pair_nodeset = _impl.build_pair_nodeset
pairs_difference = _impl.pairs_difference
pairs_intersect = _impl.pairs_intersect
sum_counts = _impl.sum_counts

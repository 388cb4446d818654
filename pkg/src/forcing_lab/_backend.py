"""Kernel backend selection.

The compiled extension is preferred when present; the pure-Python twin is
the fallback.  ``FORCING_LAB_BACKEND=python`` (or ``compiled``) forces a
choice, which the benchmark and the parity tests rely on.
"""

from __future__ import annotations

import os

_choice = os.environ.get("FORCING_LAB_BACKEND", "auto").strip().lower()

if _choice in ("auto", ""):
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]
elif _choice in ("compiled", "c"):
    from . import _ckernels as _impl  # type: ignore[attr-defined, no-redef]
elif _choice in ("python", "pure", "py"):
    from . import _kernels_py as _impl  # type: ignore[no-redef]
else:
    raise ImportError(f"unknown FORCING_LAB_BACKEND value: {_choice!r}")

BACKEND_NAME = _impl.BACKEND_NAME

make_handle = _impl.make_handle
pm_count = _impl.pm_count
pm_exists = _impl.pm_exists
pm_enumerate = _impl.pm_enumerate
alt_cycles = _impl.alt_cycles
mis = _impl.mis
pack_masks = _impl.pack_masks

# optional whole-search fast paths (compiled backend only); the solver falls
# back to the witness-producing Python search when these are absent
forcing_value = getattr(_impl, "forcing_value", None)
anti_forcing_value = getattr(_impl, "anti_forcing_value", None)

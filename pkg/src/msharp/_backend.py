"""Kernel backend selection.

Prefers the compiled extension ``msharp._kernels`` and falls back to the
pure-Python kernels.  Set ``MSHARP_BACKEND=python`` or ``MSHARP_BACKEND=cython``
to force a lane; forcing the compiled lane raises if it was not built.
Both lanes produce exactly equal results; only speed differs.
"""

import os

_requested = os.environ.get("MSHARP_BACKEND", "auto").strip().lower() or "auto"

if _requested in ("auto", "cython", "c", "compiled"):
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:
        if _requested != "auto":
            raise ImportError(
                "MSHARP_BACKEND requested the compiled kernels but "
                "msharp._kernels is not built; install with Cython and a C "
                "compiler, or set MSHARP_BACKEND=python"
            )
        from . import _kernels_py as _impl

        BACKEND = "python"
elif _requested in ("python", "pure", "py"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    raise ValueError(f"unknown MSHARP_BACKEND value: {_requested!r}")

conv_trunc = _impl.conv_trunc
recip_trunc = _impl.recip_trunc
submul = _impl.submul

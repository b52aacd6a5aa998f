"""Select the kernel implementation at import time.

The compiled extension is used when it is importable; set ``IFDIST_PURE=1``
to force the pure NumPy fallback.
"""
import os

if os.environ.get("IFDIST_PURE"):
    from ifdist import _pykernels as kernels
else:
    try:
        from ifdist import _ckernels as kernels
    except ImportError:  # extension not built
        from ifdist import _pykernels as kernels

BACKEND = "compiled" if kernels.__name__.endswith("_ckernels") else "pure"

IF1, IF2, IF3, GENERAL = 0, 1, 2, 3

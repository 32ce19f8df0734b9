"""Hot numeric kernels with a compiled core and a pure-Python fallback.

``rank_mod`` and ``batch_consistency`` are provided by the Cython extension
``_ckernels`` when it was built, otherwise by ``_pykernels``.  Set the
environment variable ``CLIFFORDLAB_PURE_PYTHON=1`` to force the fallback
(useful for benchmarking the two against each other).
"""

from __future__ import annotations

import os

if os.environ.get("CLIFFORDLAB_PURE_PYTHON") == "1":
    from . import _pykernels as _impl

    HAVE_COMPILED = False
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        HAVE_COMPILED = True
    except ImportError:
        from . import _pykernels as _impl

        HAVE_COMPILED = False

rank_mod = _impl.rank_mod
batch_consistency = _impl.batch_consistency

__all__ = ["rank_mod", "batch_consistency", "HAVE_COMPILED"]

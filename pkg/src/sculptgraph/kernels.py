"""Backend selection for the integer kernels.

The compiled extension is used when it imports; setting the environment
variable ``SCULPTGRAPH_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _kernels_py

BACKENDS = {"python": _kernels_py}

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None
else:
    BACKENDS["compiled"] = _compiled

if _compiled is not None and os.environ.get("SCULPTGRAPH_PURE_PYTHON", "") in ("", "0"):
    BACKEND = "compiled"
else:
    BACKEND = "python"

_impl = BACKENDS[BACKEND]
permanent_int = _impl.permanent_int
directed_pms = _impl.directed_pms
count_directed_pms = _impl.count_directed_pms

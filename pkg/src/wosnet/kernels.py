"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module. ``WOSNET_BACKEND=python`` forces the fallback.
"""
import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels

if os.environ.get("WOSNET_BACKEND", "").lower() == "python" or _ckernels is None:
    BACKEND = "python"
else:
    BACKEND = "compiled"

_impl = BACKENDS[BACKEND]
cooccurrence = _impl.cooccurrence
component_roots = _impl.component_roots

"""Backend selection for the batch kernels.

The compiled extension is used when it imports; otherwise the numpy
implementation is.  Setting ``GAUGECA_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

fallback = _pykernels

if os.environ.get("GAUGECA_PURE_PYTHON", "") not in ("", "0"):
    compiled = None
else:
    try:
        from . import _ckernels as compiled
    except ImportError:
        compiled = None

backend = compiled if compiled is not None else fallback
BACKEND = backend.NAME


def available_backends():
    """Name -> module for every backend importable in this process."""
    found = {fallback.NAME: fallback}
    if compiled is not None:
        found[compiled.NAME] = compiled
    return found

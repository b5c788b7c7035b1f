"""Kernel backend selection.

The hot loop (CoNLL-U column parsing + category matching over ~10^6 pairs)
has two interchangeable implementations: a Cython extension and a pure-Python
twin. The compiled one is preferred when it built; set NEGFORGE_PURE=1 to
force the pure-Python kernels (used by the parity tests and the benchmark).
"""

import os

from negforge.kernels import pykernels

if os.environ.get("NEGFORGE_PURE"):
    backend = pykernels
else:
    try:
        from negforge.kernels import _ckernels as backend
    except ImportError:
        backend = pykernels

BACKEND_NAME = backend.NAME

parse_block = backend.parse_block
marker_positions = backend.marker_positions
match_mask = backend.match_mask

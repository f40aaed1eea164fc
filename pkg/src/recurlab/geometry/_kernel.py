"""Intersection-kernel selection.

Prefers the compiled Cython kernel when the extension was built, falling
back to the pure-Python twin otherwise.  The two are bit-identical in
behavior, so selection only affects speed.  Set RECURLAB_FORCE_PY=1 to
force the pure-Python kernel (used by the benchmark and the equivalence
tests).
"""

import os

from . import _intersect_py

if os.environ.get("RECURLAB_FORCE_PY"):
    intersect_pairs = _intersect_py.intersect_pairs
    BACKEND = "python"
else:
    try:
        from . import _intersect_cy  # compiled extension, optional

        intersect_pairs = _intersect_cy.intersect_pairs
        BACKEND = "cython"
    except ImportError:
        intersect_pairs = _intersect_py.intersect_pairs
        BACKEND = "python"

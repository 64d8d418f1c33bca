"""Hot subset-scan kernels, compiled when available.

The compiled extension `_fastrank` (Cython) and the fallback `pure` expose
the same two functions; the better one is selected at import time and
re-exported here.  `BACKEND` names the active implementation.
"""

from __future__ import annotations

try:
    from matroid_forge._kernels import _fastrank as _impl

    BACKEND = "compiled"
except ImportError:  # extension not built: pure-Python fallback
    from matroid_forge._kernels import pure as _impl

    BACKEND = "pure"

rank_tables = _impl.rank_tables
scan_axioms_table = _impl.scan_axioms_table


def backend_module(name: str):
    """Fetch a specific backend by name ('compiled' or 'pure').

    Raises ImportError when the compiled extension was not built.
    """
    if name == "pure":
        from matroid_forge._kernels import pure

        return pure
    if name == "compiled":
        from matroid_forge._kernels import _fastrank

        return _fastrank
    raise ValueError(f"unknown kernel backend {name!r}")

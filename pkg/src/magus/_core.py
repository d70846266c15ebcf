"""Kernel selection: compiled Cython core when available, pure Python otherwise.

Set MAGUS_PURE=1 to force the pure implementation. The compiled kernels only
handle up to 64 vertices (labels live in one machine word); larger inputs
fall back to pure Python transparently.
"""

from __future__ import annotations

import os

from magus import _pure

_COMPILED = None
if not os.environ.get("MAGUS_PURE"):
    try:
        from magus import _kernel as _COMPILED  # type: ignore[no-redef]
    except ImportError:
        _COMPILED = None

KERNEL = "compiled" if _COMPILED is not None else "pure"
COMPILED_MAX_N = 64


def has_compiled() -> bool:
    return _COMPILED is not None


def _impl(n: int):
    if _COMPILED is not None and n <= COMPILED_MAX_N:
        return _COMPILED
    return _pure


def search_core(n, adj, max_nodes, timeout_secs, use_twins, use_pruning, collect_all):
    return _impl(n).search_core(
        n, list(adj), max_nodes, timeout_secs, use_twins, use_pruning, collect_all
    )


def naive_core(n, adj, collect_all):
    return _impl(n).naive_core(n, list(adj), collect_all)

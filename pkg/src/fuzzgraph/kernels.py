"""Kernel selection: compiled extension when built, pure Python otherwise.

Both backends expose the same functions with the same semantics; tests
run against both. ``IMPLEMENTATION`` records which one is active.
"""

from __future__ import annotations

try:
    from . import _speedups as _impl

    IMPLEMENTATION = "compiled"
except ImportError:  # pragma: no cover - depends on the build environment
    from . import _pykernels as _impl

    IMPLEMENTATION = "pure-python"

distance_stats = _impl.distance_stats
local_clustering = _impl.local_clustering

"""Scan kernel backends: compiled when available, numpy otherwise.

Set PICODES_KERNEL=py or PICODES_KERNEL=native to force a backend; forcing
native raises ImportError when the compiled module is missing. Both backends
implement the same contract and agree probe for probe, so every verdict is
backend independent.
"""

import os

from .plan import ProbePlan, build_plan, extract_block

_requested = os.environ.get("PICODES_KERNEL", "").strip().lower()
if _requested not in ("", "py", "native"):
    raise ValueError(f"PICODES_KERNEL must be 'py' or 'native', got {_requested!r}")

if _requested == "py":
    from . import _py as _impl
    BACKEND = "py"
else:
    try:
        from . import _native as _impl
        BACKEND = "native"
    except ImportError:
        if _requested == "native":
            raise
        from . import _py as _impl
        BACKEND = "py"

scan_range = _impl.scan_range
scan_boards = _impl.scan_boards

__all__ = ["BACKEND", "ProbePlan", "build_plan", "extract_block", "scan_range", "scan_boards"]

"""Worker-count policy: COVERAX_THREADS caps internal data parallelism."""

from __future__ import annotations

import os


def worker_count() -> int:
    """Number of worker threads to use (0 or unset env var means auto)."""
    raw = os.environ.get("COVERAX_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = os.cpu_count() or 1
    return max(1, n)

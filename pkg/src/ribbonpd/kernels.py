"""Kernel selection and the threaded subset-enumeration driver.

The compiled kernel (``_kernel_cy``, built from Cython) is preferred; the
pure-Python twin is the fallback.  ``RIBBONPD_KERNEL=python`` or
``RIBBONPD_KERNEL=cython`` in the environment forces a backend.  Subset
ranges are processed independently and merged by addition, so the counts are
identical for every thread count and chunking.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from . import _kernel_py

_forced = os.environ.get("RIBBONPD_KERNEL", "").strip().lower()
if _forced not in ("", "python", "cython"):
    raise RuntimeError(f"RIBBONPD_KERNEL must be 'python' or 'cython', not {_forced!r}")

_impl = None
if _forced != "python":
    try:
        from . import _kernel_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _forced == "cython":
            raise RuntimeError("RIBBONPD_KERNEL=cython but the compiled kernel is not built")
        _impl = None
if _impl is None:
    _impl = _kernel_py

BACKEND = "cython" if _impl is not _kernel_py else "python"

component_counts = _impl.component_counts

_PARALLEL_THRESHOLD = 1 << 14


def _merge(parts: list[list[int]]) -> list[int]:
    size = max(len(p) for p in parts)
    out = [0] * size
    for p in parts:
        for i, c in enumerate(p):
            out[i] += c
    return out


def _run_chunked(fn, total: int, threads: int) -> list[int]:
    if threads <= 1 or total < _PARALLEL_THRESHOLD:
        return fn(0, total)
    bounds = [total * i // threads for i in range(threads + 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(fn, bounds[i], bounds[i + 1])
            for i in range(threads)
            if bounds[i] < bounds[i + 1]
        ]
        return _merge([f.result() for f in futures])


def planar_genus_counts(v, eu, ew, threads: int = 1) -> list[int]:
    total = 1 << len(eu)
    return _run_chunked(
        lambda lo, hi: _impl.planar_genus_counts(v, list(eu), list(ew), lo, hi),
        total,
        threads,
    )


def euler_genus_counts(e, const_term, s0, s1, s2, threads: int = 1) -> list[int]:
    total = 1 << e
    return _run_chunked(
        lambda lo, hi: _impl.euler_genus_counts(
            e, const_term, list(s0), list(s1), list(s2), lo, hi
        ),
        total,
        threads,
    )

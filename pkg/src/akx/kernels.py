"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``AKX_PURE_PYTHON=1`` to force the fallback at import time.
"""

import os

from . import _fallback

BACKEND = "python"
_impl = _fallback
if os.environ.get("AKX_PURE_PYTHON") != "1":
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _fallback

_INT64_SAFE = 1 << 62


def _fits(masks, weights=()):
    return all(0 <= int(m) < (1 << 64) for m in masks) and all(
        0 <= int(w) < _INT64_SAFE for w in weights
    )


def clique_branch(adj, weights, cand, clique, weight, lower, counting, collect,
                  max_collect=1 << 40, impl=None):
    mod = impl or _impl
    if mod is not _fallback:
        # the compiled search accumulates in int64, so cap the total weight
        total = sum(int(w) for w in weights) + int(weight)
        if len(adj) > 64 or total >= _INT64_SAFE or not _fits(adj):
            mod = _fallback
    return mod.clique_branch(adj, weights, cand, clique, weight, lower,
                             counting, collect, max_collect)


def all_pairs_meet(a, b, t, impl=None):
    mod = impl or _impl
    if mod is not _fallback and not (_fits(a) and _fits(b)):
        mod = _fallback
    return mod.all_pairs_meet(a, b, t)


def find_unstable(indicator, n, impl=None):
    mod = impl or _impl
    if n > 62:
        mod = _fallback
    return mod.find_unstable(indicator, n)


def half_integral_exhaustive(adj, loops, weights, impl=None):
    mod = impl or _impl
    if mod is not _fallback and sum(int(w) for w in weights) * 2 >= _INT64_SAFE:
        mod = _fallback
    return mod.half_integral_exhaustive(adj, loops, weights)

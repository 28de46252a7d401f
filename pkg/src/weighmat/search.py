"""Exhaustive search for circulant and negacyclic weighing-matrix first rows.

A first row ``r`` generates a ``CW(n, k)`` exactly when it has ``k`` nonzero
entries and its periodic autocorrelation vanishes off the peak; ``NW(n, k)``
is the same with the negaperiodic autocorrelation. The search assigns
positions left to right over ``-1, 0, +1`` and prunes on the nonzero budget
and on partial autocorrelations that the unassigned entries can no longer
cancel.

Output rows are always sorted lexicographically (``'-' < '0' < '+'``). With
the numba backend the tree is split into fixed-length prefixes that run on a
thread pool; results are concatenated in prefix order, so the output does not
depend on the number of workers.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import kernels
from ._accel import check_backend
from .classify import Classification, classify_toeplitz_weighing
from .core import RowSpec, ToeplitzSpec, expand_toeplitz, gram_check

CIRCULANT = "circulant"
NEGACYCLIC = "negacyclic"
RING_SIGN = {CIRCULANT: 1, NEGACYCLIC: -1}

TOEPLITZ_CAP = 8
_NO_LIMIT = (1 << 62)


class InfeasibleParameters(ValueError):
    pass


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class SearchOptions:
    count_only: bool = False
    canonical_dedup: bool = False
    limit: Optional[int] = None

    def __post_init__(self):
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be >= 1")


@dataclass(frozen=True)
class SearchResult:
    rows: list
    count: int
    exhausted: bool


def _ring(ring):
    if ring not in RING_SIGN:
        raise ValueError(f"ring must be {CIRCULANT!r} or {NEGACYCLIC!r}, got {ring!r}")
    return RING_SIGN[ring]


def search_circulant(n, k, opts=None, **kw) -> SearchResult:
    return search_rows(n, k, CIRCULANT, opts, **kw)


def search_negacyclic(n, k, opts=None, **kw) -> SearchResult:
    return search_rows(n, k, NEGACYCLIC, opts, **kw)


def search_rows(n, k, ring, opts=None, *, prune=True, backend=None, workers=None) -> SearchResult:
    """Rows of length ``n`` and weight ``k`` generating a weighing matrix in ``ring``.

    ``prune=False`` visits the full ``3**n`` tree (for cross-checking only).
    ``workers`` sets the thread count for the numba backend; the default is
    ``os.cpu_count()``.
    """
    opts = opts or SearchOptions()
    if n < 1 or k < 1 or k > n:
        raise InfeasibleParameters(f"need 1 <= k <= n, got n={n}, k={k}")
    sign = _ring(ring)
    backend = check_backend(backend)

    # dedup filters after the fact, so it needs the untruncated row list
    if opts.canonical_dedup:
        stop_at = _NO_LIMIT
    elif opts.limit is not None:
        stop_at = opts.limit + 1
    else:
        stop_at = _NO_LIMIT
    want_rows = not opts.count_only or opts.canonical_dedup

    if backend == "numba":
        total, arr = _search_numba(n, k, sign, prune, stop_at, want_rows, workers)
    else:
        arr = kernels.bfs_search(n, k, sign, prune)
        total = arr.shape[0]

    if opts.canonical_dedup:
        arr = arr[canonical_mask(arr, ring)]
        total = arr.shape[0]
    exhausted = opts.limit is None or total <= opts.limit
    if not exhausted:
        total = opts.limit
    if opts.count_only:
        return SearchResult([], total, exhausted)
    rows = [RowSpec(tuple(int(x) for x in r)) for r in arr[:total]]
    return SearchResult(rows, total, exhausted)


def _prefix_length(n, workers):
    if workers <= 1:
        return 0
    p = 0
    while 3 ** p < 8 * workers and p < n - 1:
        p += 1
    return p


def _search_numba(n, k, sign, prune, stop_at, want_rows, workers):
    workers = (os.cpu_count() or 1) if workers is None else max(1, int(workers))
    undet = kernels.undetermined_table(n)
    plen = _prefix_length(n, workers)
    prefixes = [np.array(p, dtype=np.int8) for p in itertools.product((-1, 0, 1), repeat=plen)]

    def run(prefix):
        cap = 4096 if want_rows else 0
        out = np.zeros((cap, n), dtype=np.int8)
        found = kernels.dfs_search_numba(n, k, sign, prefix, prune, undet, out, stop_at)
        if want_rows and found > cap:
            out = np.zeros((found, n), dtype=np.int8)
            found = kernels.dfs_search_numba(n, k, sign, prefix, prune, undet, out, stop_at)
        return found, out[:found] if want_rows else out

    if workers == 1:
        parts = [run(p) for p in prefixes]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, prefixes))

    total = 0
    chunks = []
    for found, out in parts:
        total += found
        chunks.append(out)
        if total >= stop_at:
            break
    arr = np.concatenate(chunks, axis=0) if want_rows else np.zeros((0, n), dtype=np.int8)
    return total, arr


# ---------------------------------------------------------------------------
# equivalence under shifts and negation


def ring_shift(rows, t, sign):
    """Right-shift each row by ``t`` places; wrapped entries are multiplied by ``sign``."""
    rows = np.asarray(rows)
    n = rows.shape[-1]
    t %= n
    if t == 0:
        return rows.copy()
    return np.concatenate([sign * rows[..., n - t:], rows[..., :n - t]], axis=-1).astype(rows.dtype)


def _group_images(rows, ring):
    sign = _ring(ring)
    n = rows.shape[-1]
    for t in range(n):
        shifted = ring_shift(rows, t, sign)
        yield shifted
        yield -shifted


def orbit(r, ring):
    """The set of rows reachable from ``r`` by ring shifts and global negation."""
    x = np.array(RowSpec(tuple(r.entries if isinstance(r, RowSpec) else r)).entries, dtype=np.int8)
    return {RowSpec(tuple(int(v) for v in img)) for img in _group_images(x, ring)}


def canonicalize(r, ring) -> RowSpec:
    """Lexicographically least member of the orbit of ``r``."""
    if isinstance(r, str):
        r = RowSpec.parse(r)
    return min(orbit(r, ring))


def _lex_less(a, b):
    diff = a != b
    first = np.argmax(diff, axis=1)
    idx = np.arange(a.shape[0])
    return diff.any(axis=1) & (a[idx, first] < b[idx, first])


def canonical_mask(rows, ring):
    """Which rows equal their own canonical form."""
    rows = np.asarray(rows, dtype=np.int8)
    keep = np.ones(rows.shape[0], dtype=bool)
    if rows.shape[0] == 0:
        return keep
    for img in _group_images(rows, ring):
        keep &= ~_lex_less(img, rows)
    return keep


# ---------------------------------------------------------------------------
# brute-force constant-diagonal oracle


class ToeplitzItem(NamedTuple):
    spec: ToeplitzSpec
    weight: int
    classification: Classification


def toeplitz_weighing_specs(n, backend=None):
    """Spec vectors (``first_row + first_col[1:]``) of every constant-diagonal
    ``n x n`` weighing matrix, with their weights, in base-3 index order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > TOEPLITZ_CAP:
        raise CapExceeded(f"toeplitz enumeration is capped at n={TOEPLITZ_CAP}")
    backend = check_backend(backend)
    if backend == "numba":
        weights = np.zeros(3 ** (2 * n - 1), dtype=np.int8)
        kernels.toeplitz_weights_numba(n, weights)
    else:
        weights = kernels.toeplitz_weights_numpy(n)
    idx = np.flatnonzero(weights)
    return kernels.decode_specs(n, idx), weights[idx].astype(np.int64)


def spec_from_vector(n, vec) -> ToeplitzSpec:
    vec = [int(x) for x in vec]
    return ToeplitzSpec(tuple(vec[:n]), (vec[0],) + tuple(vec[n:]))


def enumerate_toeplitz_weighing(n, backend=None) -> list:
    """Every constant-diagonal weighing matrix of order ``n`` (out of all
    ``3**(2n-1)`` specs) with its weight and classification.

    Each candidate is re-verified with :func:`gram_check` before being
    classified. ``n`` is capped at ``TOEPLITZ_CAP``.
    """
    vecs, weights = toeplitz_weighing_specs(n, backend)
    items = []
    for vec, w in zip(vecs, weights):
        spec = spec_from_vector(n, vec)
        A = expand_toeplitz(spec)
        report = gram_check(A)
        if not report.is_weighing or report.weight != w:
            raise AssertionError(f"kernel and gram_check disagree on {spec}")
        items.append(ToeplitzItem(spec, int(w), classify_toeplitz_weighing(A)))
    return items

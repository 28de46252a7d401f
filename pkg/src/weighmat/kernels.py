"""Hot inner loops: the first-row backtracking search and the brute-force
constant-diagonal enumeration.

Each kernel exists twice. The numba versions are compiled with ``njit`` and
release the GIL; the numpy versions are vectorized level by level and serve
as the fallback when ``WEIGHMAT_DISABLE_NUMBA`` is set. Both must return
bit-identical arrays, which the test suite checks.

Ring sign convention throughout: ``+1`` for circulant (wrapped products keep
their sign), ``-1`` for negacyclic (wrapped products are negated).
"""
import numpy as np

from ._accel import NUMBA_AVAILABLE, numba

# frontier rows handled per numpy batch before splitting depth-first
_BFS_CHUNK = 1 << 18
# toeplitz specs decoded per numpy batch
_TOEPLITZ_CHUNK = 1 << 16


def undetermined_table(n):
    """``U[m, s]``: shift-``s`` products not yet fixed once positions ``0..m`` are set."""
    S = n // 2
    U = np.zeros((n, S + 1), dtype=np.int64)
    j = np.arange(n)
    for s in range(1, S + 1):
        partner = (j + s) % n
        for m in range(n):
            U[m, s] = n - int(np.count_nonzero((j <= m) & (partner <= m)))
    return U


# ---------------------------------------------------------------------------
# depth-first search (numba)


def _dfs_search(n, k, ring, prefix, prune, undet, out, stop_at):
    # Iterative DFS over positions 0..n-1, symbols tried in order -1, 0, +1 so
    # hits arrive in lexicographic order. Positions below len(prefix) are fixed.
    # Returns the number of hits; the first out.shape[0] are written to out.
    S = n // 2
    plen = prefix.shape[0]
    cap = out.shape[0]
    row = np.zeros(n, dtype=np.int8)
    partial = np.zeros(S + 1, dtype=np.int64)
    delta = np.zeros((n, S + 1), dtype=np.int64)
    started = np.zeros(n, dtype=np.bool_)
    nz = 0
    zeros = 0
    found = 0
    depth = 0
    while depth >= 0:
        if started[depth]:
            v = np.int64(row[depth])
            for s in range(1, S + 1):
                partial[s] -= delta[depth, s]
            if v != 0:
                nz -= 1
            else:
                zeros -= 1
            if depth < plen or v == 1:
                started[depth] = False
                depth -= 1
                continue
            v += 1
        else:
            started[depth] = True
            if depth < plen:
                v = np.int64(prefix[depth])
            else:
                v = np.int64(-1)
        row[depth] = v
        if v != 0:
            nz += 1
        else:
            zeros += 1
        for s in range(1, S + 1):
            d = 0
            if depth >= s:
                d += v * row[depth - s]
            if depth + s >= n:
                d += ring * v * row[depth + s - n]
            delta[depth, s] = d
            partial[s] += d
        if prune:
            if nz > k or zeros > n - k:
                continue
            rem2 = 2 * (k - nz)
            ok = True
            for s in range(1, S + 1):
                b = undet[depth, s]
                if rem2 < b:
                    b = rem2
                if abs(partial[s]) > b:
                    ok = False
                    break
            if not ok:
                continue
        if depth == n - 1:
            if nz != k:
                continue
            hit = True
            for s in range(1, S + 1):
                if partial[s] != 0:
                    hit = False
                    break
            if hit:
                if found < cap:
                    for j in range(n):
                        out[found, j] = row[j]
                found += 1
                if found >= stop_at:
                    return found
            continue
        depth += 1
    return found


def _toeplitz_weights(n, out):
    # out[idx] = weight of the weighing matrix encoded by idx, or 0.
    # idx is read base 3, most significant digit first, over the vector
    # first_row + first_col[1:]; digit d stands for entry d - 1.
    total = out.shape[0]
    L = 2 * n - 1
    powers = np.empty(L, dtype=np.int64)
    pw = 1
    for p in range(L - 1, -1, -1):
        powers[p] = pw
        pw *= 3
    for idx in numba.prange(total):
        v = np.empty(L, dtype=np.int64)
        for p in range(L):
            v[p] = (idx // powers[p]) % 3 - 1
        out[idx] = 0
        w = 0
        for j in range(n):
            w += v[j] * v[j]
        if w == 0:
            continue
        ok = True
        for i in range(n):
            for t in range(i, n):
                acc = 0
                for j in range(n):
                    a = v[j - i] if j >= i else v[n - 1 + i - j]
                    b = v[j - t] if j >= t else v[n - 1 + t - j]
                    acc += a * b
                if (t == i and acc != w) or (t != i and acc != 0):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out[idx] = w


if NUMBA_AVAILABLE:
    dfs_search_numba = numba.njit(cache=True, nogil=True)(_dfs_search)
    toeplitz_weights_numba = numba.njit(cache=True, parallel=True)(_toeplitz_weights)
else:
    dfs_search_numba = None
    toeplitz_weights_numba = None


# ---------------------------------------------------------------------------
# breadth-first search (numpy)


def bfs_search(n, k, ring, prune=True):
    """All rows of length ``n`` with ``k`` nonzeros and zero off-peak
    autocorrelation in the given ring, lexicographically sorted."""
    S = n // 2
    undet = undetermined_table(n)
    rows = np.zeros((1, 0), dtype=np.int8)
    partial = np.zeros((1, S + 1), dtype=np.int64)
    nz = np.zeros(1, dtype=np.int64)
    parts = _bfs_extend(n, k, ring, prune, undet, rows, partial, nz)
    if not parts:
        return np.zeros((0, n), dtype=np.int8)
    return np.concatenate(parts, axis=0)


def _bfs_extend(n, k, ring, prune, undet, rows, partial, nz):
    S = n // 2
    depth = rows.shape[1]
    if rows.shape[0] == 0:
        return []
    if depth == n:
        keep = nz == k
        if S:
            keep &= ~np.any(partial[:, 1:] != 0, axis=1)
        return [rows[keep]]
    if rows.shape[0] > _BFS_CHUNK:
        half = rows.shape[0] // 2
        return (_bfs_extend(n, k, ring, prune, undet, rows[:half], partial[:half], nz[:half])
                + _bfs_extend(n, k, ring, prune, undet, rows[half:], partial[half:], nz[half:]))

    F = rows.shape[0]
    # children interleaved per parent in symbol order keeps rows sorted
    vals = np.tile(np.array([-1, 0, 1], dtype=np.int64), F)
    rows = np.repeat(rows, 3, axis=0)
    partial = np.repeat(partial, 3, axis=0)
    nz = np.repeat(nz, 3) + (vals != 0)
    for s in range(1, S + 1):
        if depth >= s:
            partial[:, s] += vals * rows[:, depth - s]
        if depth + s >= n:
            partial[:, s] += ring * vals * rows[:, depth + s - n]
    rows = np.concatenate([rows, vals.astype(np.int8)[:, None]], axis=1)
    if prune:
        zeros = depth + 1 - nz
        keep = (nz <= k) & (zeros <= n - k)
        if S:
            bound = np.minimum(undet[depth, 1:][None, :], 2 * (k - nz)[:, None])
            keep &= np.all(np.abs(partial[:, 1:]) <= bound, axis=1)
        rows, partial, nz = rows[keep], partial[keep], nz[keep]
    return _bfs_extend(n, k, ring, prune, undet, rows, partial, nz)


# ---------------------------------------------------------------------------
# toeplitz enumeration (numpy)


def toeplitz_index_map(n):
    """Gather map from the spec vector ``first_row + first_col[1:]`` to a matrix."""
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return np.where(j >= i, j - i, n - 1 + i - j)


def decode_specs(n, idx):
    """Spec vectors for the given base-3 indices, one row each."""
    L = 2 * n - 1
    powers = 3 ** np.arange(L - 1, -1, -1, dtype=np.int64)
    return ((np.asarray(idx, dtype=np.int64)[:, None] // powers) % 3 - 1).astype(np.int8)


def toeplitz_weights_numpy(n):
    total = 3 ** (2 * n - 1)
    out = np.zeros(total, dtype=np.int8)
    gather = toeplitz_index_map(n)
    off = ~np.eye(n, dtype=bool)
    for start in range(0, total, _TOEPLITZ_CHUNK):
        idx = np.arange(start, min(total, start + _TOEPLITZ_CHUNK))
        A = decode_specs(n, idx)[:, gather].astype(np.int16)
        G = np.einsum("bij,bkj->bik", A, A)
        diag = np.diagonal(G, axis1=1, axis2=2)
        ok = (diag[:, 0] > 0) & np.all(diag == diag[:, :1], axis=1)
        ok &= ~np.any(G[:, off] != 0, axis=1)
        out[idx[ok]] = diag[ok, 0]
    return out

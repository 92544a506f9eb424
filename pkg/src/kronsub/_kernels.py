"""Hot loops used by the brute-force oracles.

Two kernels, each with a numba implementation and a pure-numpy fallback:

* ``batch_rank_mod_p`` -- ranks of a stack of small integer matrices mod p;
* ``linking_feasible_batch`` -- exhaustive integer search for a linking
  multiplicity vector, one pair of multiplicity vectors per row.

The numba path is used when numba imports and ``KRONSUB_DISABLE_NUMBA`` is
unset (or "0").  Both paths return identical results; see
``benchmarks/bench_kernels.py``.
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - exercised implicitly
    import numba
except ImportError:  # pragma: no cover
    numba = None

NUMBA_DISABLED = os.environ.get("KRONSUB_DISABLE_NUMBA", "0") not in ("", "0")
HAVE_NUMBA = numba is not None and not NUMBA_DISABLED


def default_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def _resolve(backend: str | None) -> str:
    backend = backend or default_backend()
    if backend == "numba" and numba is None:
        raise RuntimeError("numba backend requested but numba is not installed")
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    return backend


# --------------------------------------------------------------------------
# batched rank mod p
# --------------------------------------------------------------------------


def _inv_mod_vec(x: np.ndarray, p: int) -> np.ndarray:
    """Elementwise inverse mod p via Fermat; x must be nonzero mod p."""
    result = np.ones_like(x)
    base = x % p
    e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def _batch_rank_numpy(mats: np.ndarray, p: int) -> np.ndarray:
    M = np.array(mats, dtype=np.int64) % p
    N, r, c = M.shape
    pivrow = np.zeros(N, dtype=np.int64)
    rows = np.arange(r)
    for col in range(c):
        if not N:
            break
        colv = M[:, :, col]
        mask = (colv != 0) & (rows[None, :] >= pivrow[:, None])
        has = mask.any(axis=1)
        if not has.any():
            continue
        idx = np.nonzero(has)[0]
        piv = mask[idx].argmax(axis=1)
        pr = pivrow[idx]
        top = M[idx, pr, :].copy()
        M[idx, pr, :] = M[idx, piv, :]
        M[idx, piv, :] = top
        prow = M[idx, pr, :]
        inv = _inv_mod_vec(prow[:, col], p)
        below = rows[None, :] > pr[:, None]
        f = M[idx, :, col] * inv[:, None] % p * below
        M[idx] = (M[idx] - f[:, :, None] * prow[:, None, :]) % p
        pivrow[idx] += 1
    return pivrow


if numba is not None:

    @numba.njit(cache=True)
    def _inv_mod(x, p):
        t, newt = 0, 1
        r, newr = p, x % p
        while newr != 0:
            q = r // newr
            t, newt = newt, t - q * newt
            r, newr = newr, r - q * newr
        if t < 0:
            t += p
        return t

    @numba.njit(cache=True)
    def _batch_rank_numba(mats, p):
        N, r, c = mats.shape
        out = np.zeros(N, dtype=np.int64)
        work = np.empty((r, c), dtype=np.int64)
        for b in range(N):
            for i in range(r):
                for j in range(c):
                    v = mats[b, i, j] % p
                    work[i, j] = v + p if v < 0 else v
            row = 0
            for col in range(c):
                if row == r:
                    break
                piv = -1
                for i in range(row, r):
                    if work[i, col] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != row:
                    for j in range(c):
                        tmp = work[row, j]
                        work[row, j] = work[piv, j]
                        work[piv, j] = tmp
                inv = _inv_mod(work[row, col], p)
                for i in range(row + 1, r):
                    f = work[i, col] * inv % p
                    if f != 0:
                        for j in range(col, c):
                            work[i, j] = (work[i, j] - f * work[row, j]) % p
                row += 1
            out[b] = row
        return out

else:  # pragma: no cover
    _batch_rank_numba = None


def batch_rank_mod_p(mats: np.ndarray, p: int, backend: str | None = None) -> np.ndarray:
    """Rank mod ``p`` of each matrix in a stack of shape ``(N, r, c)``."""
    mats = np.ascontiguousarray(mats, dtype=np.int64)
    if mats.ndim != 3:
        raise ValueError("expected a (N, r, c) stack")
    N, r, c = mats.shape
    if r == 0 or c == 0:
        return np.zeros(N, dtype=np.int64)
    if _resolve(backend) == "numba":
        return _batch_rank_numba(mats, p)
    return _batch_rank_numpy(mats, p)


# --------------------------------------------------------------------------
# integer feasibility of the linking system
# --------------------------------------------------------------------------
#
# Unknowns u_0..u_n >= 0 with
#   u_0 >= a_0
#   sum_{i>=k} i u_i      <= sum_{i>=k} i a_i        k = 2..n
#   sum_{i>=1} i u_i      == sum_{i>=1} i a_i
#   sum_{i>=0} (i+1) u_i  == sum_{i>=0} (i+1) c_i
#   sum_{i>=k} (i+1) u_i  <= sum_{i>=k} (i+1) c_i    k = 1..n
# u_1 and u_0 are forced by the equalities; u_2..u_n range over a box given
# by the single-term consequences of the inequalities.


def _bounds(A: np.ndarray, C: np.ndarray) -> np.ndarray:
    N, L = A.shape
    w = np.arange(L, dtype=np.int64)
    ta = np.cumsum((A * w)[:, ::-1], axis=1)[:, ::-1]
    tc = np.cumsum((C * (w + 1))[:, ::-1], axis=1)[:, ::-1]
    U = np.zeros((N, L), dtype=np.int64)
    for t in range(2, L):
        U[:, t] = np.minimum(ta[:, t] // t, tc[:, t] // (t + 1))
    return U


def _feasible_numpy(A: np.ndarray, C: np.ndarray) -> np.ndarray:
    N, L = A.shape
    n = L - 1
    w = np.arange(L, dtype=np.int64)
    ta = np.cumsum((A * w)[:, ::-1], axis=1)[:, ::-1]
    tc = np.cumsum((C * (w + 1))[:, ::-1], axis=1)[:, ::-1]
    out = np.zeros(N, dtype=bool)
    if n == 0:
        return C[:, 0] >= A[:, 0]
    U = _bounds(A, C)
    gmax = U[:, 2:].max(axis=0) if n >= 2 else np.zeros(0, dtype=np.int64)
    grid = np.indices(tuple(int(g) + 1 for g in gmax)).reshape(n - 1, -1).T if n >= 2 else np.zeros((1, 0), dtype=np.int64)
    for g in grid:
        u = np.zeros(L, dtype=np.int64)
        u[2:] = g
        ok = ~out & np.all(U[:, 2:] >= u[None, 2:], axis=1)
        if not ok.any():
            continue
        iu = np.cumsum((u * w)[::-1])[::-1]
        i1u = np.cumsum((u * (w + 1))[::-1])[::-1]
        # tails of the a-system, k = 2..n
        for k in range(2, L):
            ok &= iu[k] <= ta[:, k]
        u1 = ta[:, 1] - (iu[2] if L > 2 else 0)
        ok &= u1 >= 0
        tail1 = 2 * u1 + (i1u[2] if L > 2 else 0)
        ok &= tail1 <= tc[:, 1]
        for k in range(2, L):
            ok &= i1u[k] <= tc[:, k]
        u0 = tc[:, 0] - tail1
        ok &= (u0 >= 0) & (u0 >= A[:, 0])
        out |= ok
    return out


if numba is not None:

    @numba.njit(cache=True)
    def _feasible_one(a, c, U):
        L = a.shape[0]
        n = L - 1
        if n == 0:
            return c[0] >= a[0]
        ta = np.zeros(L + 1, dtype=np.int64)
        tc = np.zeros(L + 1, dtype=np.int64)
        for i in range(n, -1, -1):
            ta[i] = ta[i + 1] + i * a[i]
            tc[i] = tc[i + 1] + (i + 1) * c[i]
        u = np.zeros(L, dtype=np.int64)
        while True:
            ok = True
            iu = 0
            i1u = 0
            for k in range(n, 1, -1):
                iu += k * u[k]
                i1u += (k + 1) * u[k]
                if iu > ta[k] or i1u > tc[k]:
                    ok = False
                    break
            if ok:
                u1 = ta[1] - iu
                if u1 >= 0:
                    tail1 = 2 * u1 + i1u
                    if tail1 <= tc[1]:
                        u0 = tc[0] - tail1
                        if u0 >= 0 and u0 >= a[0]:
                            return True
            # odometer over u_2..u_n
            k = 2
            while k <= n:
                if u[k] < U[k]:
                    u[k] += 1
                    break
                u[k] = 0
                k += 1
            if k > n:
                return False

    @numba.njit(cache=True)
    def _feasible_numba(A, C, U):
        N = A.shape[0]
        out = np.zeros(N, dtype=np.bool_)
        for b in range(N):
            out[b] = _feasible_one(A[b], C[b], U[b])
        return out

else:  # pragma: no cover
    _feasible_numba = None


def linking_feasible_batch(A, C, backend: str | None = None) -> np.ndarray:
    """Row-wise existence of a nonnegative integer solution ``u`` (see module notes).

    ``A`` and ``C`` are ``(N, L)`` integer arrays of multiplicities padded to a
    common length ``L = n + 1``.
    """
    A = np.ascontiguousarray(A, dtype=np.int64)
    C = np.ascontiguousarray(C, dtype=np.int64)
    if A.shape != C.shape or A.ndim != 2 or A.shape[1] == 0:
        raise ValueError("A and C must be equal (N, L) arrays with L >= 1")
    if _resolve(backend) == "numba":
        return _feasible_numba(A, C, _bounds(A, C))
    return _feasible_numpy(A, C)

"""Brute-force ground truth, independent of the numerical criteria.

Matrix-level oracles work over GF(p).  For every pair of indecomposables
``I_d -> I_c`` the morphism space is obtained by solving the commutation
equations as a linear system; a morphism between direct sums is a block
matrix of such pieces.  Search is then exhaustive over coefficient vectors,
block by block, pruned by rank conditions that any extension must keep.

Target summands ``I_0`` need no enumeration: their rows of ``f2`` can be
arbitrary (the solver confirms this), so they only enter through a rank
count.  Identical summands are handled up to reordering.

``linking_system_feasible`` is an exhaustive integer search for the
nonnegative integer system satisfied by the linking multiplicities.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import product

import numpy as np

from . import _kernels
from .errors import BudgetExceeded
from .exactmat import GF, Matrix, solve_right_kernel
from .kroncore import PreinjInvariants, invariants_with_d2_at_most
from .morphisms import canonical_representation, summand_layout

__all__ = [
    "hom_basis",
    "mono_exists_bruteforce",
    "epi_exists_bruteforce",
    "subfactor_bruteforce_matrix",
    "linking_system_feasible",
    "linking_system_feasible_batch",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 2 * 2**16 * 64  # candidate matrices examined per query
_RANDOM_PROBES = 32


@lru_cache(maxsize=None)
def hom_basis(d: int, c: int, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Basis of morphisms ``I_d -> I_c`` over GF(p).

    Returns ``(G, H)`` of shapes ``(h, c, d)`` and ``(h, c+1, d+1)``: the
    vertex-1 and vertex-2 components of each basis morphism.
    """
    F = GF(p)
    src = canonical_representation(PreinjInvariants.from_epsilons([d]), F)
    dst = canonical_representation(PreinjInvariants.from_epsilons([c]), F)
    n1, n2 = c * d, (c + 1) * (d + 1)
    rows = []
    # f1 @ X_src - X_dst @ f2 = 0, entry (r, s) for X in (alpha, beta)
    for Xs, Xt in ((src.alpha, dst.alpha), (src.beta, dst.beta)):
        for r in range(c):
            for s in range(d + 1):
                eq = [0] * (n1 + n2)
                for k in range(d):
                    if Xs[k, s]:
                        eq[r * d + k] += Xs[k, s]
                for k in range(c + 1):
                    if Xt[r, k]:
                        eq[n1 + k * (d + 1) + s] -= Xt[r, k]
                rows.append(eq)
    if rows:
        K = solve_right_kernel(Matrix(F, rows))
        vecs = [K.column(j) for j in range(K.cols)]
    else:
        vecs = [tuple(int(i == j) for i in range(n1 + n2)) for j in range(n1 + n2)]
    h = len(vecs)
    arr = np.array(vecs, dtype=np.int64).reshape(h, n1 + n2)
    G = arr[:, :n1].reshape(h, c, d)
    H = arr[:, n1:].reshape(h, c + 1, d + 1)
    return G, H


def _codes(h: int, p: int) -> np.ndarray:
    if h == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(product(range(p), repeat=h)), dtype=np.int64)


class _Budget:
    def __init__(self, limit: int):
        self.left = limit

    def spend(self, k: int):
        self.left -= k
        if self.left < 0:
            raise BudgetExceeded("oracle enumeration budget exhausted")


def _offsets(layout):
    o1, o2, a, b = [], [], 0, 0
    for e in layout:
        o1.append(a)
        o2.append(b)
        a += e
        b += e + 1
    return o1, o2


def _blocks_for_source(d: int, tgt: list[int], p: int):
    """All candidate column blocks for a source summand ``I_d`` into the targets ``tgt``.

    Returns ``(cand1, cand2)`` of shapes ``(K, sum tgt, d)`` and
    ``(K, sum tgt + len(tgt), d + 1)``.
    """
    parts = [hom_basis(d, c, p) for c in tgt]
    h = sum(G.shape[0] for G, _ in parts)
    X = _codes(h, p)
    M1 = sum(tgt)
    M2 = M1 + len(tgt)
    cand1 = np.zeros((X.shape[0], M1, d), dtype=np.int64)
    cand2 = np.zeros((X.shape[0], M2, d + 1), dtype=np.int64)
    k = 0
    t1, t2 = _offsets(tgt)
    for (G, H), c, r1, r2 in zip(parts, tgt, t1, t2):
        hh = G.shape[0]
        if hh:
            Xi = X[:, k:k + hh]
            cand1[:, r1:r1 + c, :] = np.einsum("kh,hij->kij", Xi, G) % p
            cand2[:, r2:r2 + c + 1, :] = np.einsum("kh,hij->kij", Xi, H) % p
        k += hh
    return cand1, cand2


def _blocks_for_target(c: int, src: list[int], p: int):
    """Candidate row blocks for a target summand ``I_c`` from the sources ``src``."""
    parts = [hom_basis(d, c, p) for d in src]
    h = sum(G.shape[0] for G, _ in parts)
    X = _codes(h, p)
    N1 = sum(src)
    N2 = N1 + len(src)
    cand1 = np.zeros((X.shape[0], c, N1), dtype=np.int64)
    cand2 = np.zeros((X.shape[0], c + 1, N2), dtype=np.int64)
    k = 0
    s1, s2 = _offsets(src)
    for (G, H), d, c1, c2 in zip(parts, src, s1, s2):
        hh = G.shape[0]
        if hh:
            Xi = X[:, k:k + hh]
            cand1[:, :, c1:c1 + d] = np.einsum("kh,hij->kij", Xi, G) % p
            cand2[:, :, c2:c2 + d + 1] = np.einsum("kh,hij->kij", Xi, H) % p
        k += hh
    return cand1, cand2


def _rank(stack: np.ndarray, p: int) -> np.ndarray:
    return _kernels.batch_rank_mod_p(stack, p)


def _dim_fits(small: PreinjInvariants, big: PreinjInvariants) -> bool:
    return small.dim <= big.dim


def _search(levels, join, accept_partial, accept_final, same_as_prev, p, budget, rng):
    """Generic depth-first search over per-level candidate blocks.

    ``levels[i] = (cand1, cand2)``; ``join(part, cand)`` stacks the partial
    matrices with a batch of candidates along the growing axis.
    """
    n = len(levels)
    if n == 0:
        return accept_final(None, None)

    # a few random complete assignments first: cheap hits on positive instances
    for _ in range(_RANDOM_PROBES):
        picks = [rng.randrange(lv[0].shape[0]) for lv in levels]
        P1 = P2 = None
        for lv, k in zip(levels, picks):
            P1, P2 = join(P1, lv[0][k:k + 1]), join(P2, lv[1][k:k + 1])
        budget.spend(1)
        if accept_final(P1, P2)[0]:
            return True

    def rec(i, P1, P2, lo):
        c1, c2 = levels[i]
        idx = np.arange(c1.shape[0])
        if same_as_prev[i]:
            idx = idx[idx > lo]
        if not idx.size:
            return False
        budget.spend(idx.size)
        S1, S2 = join(P1, c1[idx]), join(P2, c2[idx])
        if i == n - 1:
            ok = accept_final(S1, S2)
            return bool(ok.any())
        ok = accept_partial(i, S1, S2)
        for k in np.nonzero(ok)[0]:
            if rec(i + 1, S1[k:k + 1], S2[k:k + 1], idx[k]):
                return True
        return False

    return rec(0, None, None, -1)


def _join_cols(part, cand):
    if part is None:
        return cand
    return np.concatenate([np.broadcast_to(part, (cand.shape[0],) + part.shape[1:]), cand], axis=2)


def _join_rows(part, cand):
    if part is None:
        return cand
    return np.concatenate([np.broadcast_to(part, (cand.shape[0],) + part.shape[1:]), cand], axis=1)


@lru_cache(maxsize=None)
def _mono_cached(Iprime: PreinjInvariants, I: PreinjInvariants, p: int, budget: int) -> bool:
    if not _dim_fits(Iprime, I):
        return False
    src = summand_layout(Iprime)
    tgt_all = summand_layout(I)
    tgt = [c for c in tgt_all if c > 0]
    free = len(tgt_all) - len(tgt)  # target I_0 rows: arbitrary
    if not src:
        return True
    levels = [_blocks_for_source(d, tgt, p) for d in src]
    need1 = np.cumsum(src)
    need2 = np.cumsum([d + 1 for d in src])

    def partial(i, S1, S2):
        return (_rank(S1, p) == need1[i]) & (_rank(S2, p) >= need2[i] - free)

    def final(S1, S2):
        if S1 is None:
            return np.array([True])
        return partial(len(src) - 1, S1, S2)

    same = [i > 0 and src[i] == src[i - 1] for i in range(len(src))]
    return _search(levels, _join_cols, partial, final, same, p, _Budget(budget), random.Random(0))


def mono_exists_bruteforce(Iprime: PreinjInvariants, I: PreinjInvariants, p: int = 2,
                           budget: int = DEFAULT_BUDGET) -> bool:
    """Is there an injective morphism ``Iprime -> I`` over GF(p)? Exhaustive."""
    GF(p)
    return _mono_cached(PreinjInvariants(Iprime.mult), PreinjInvariants(I.mult), p, budget)


@lru_cache(maxsize=None)
def _epi_cached(I: PreinjInvariants, L: PreinjInvariants, p: int, p0_kernel: bool, budget: int) -> bool:
    if not _dim_fits(L, I):
        return False
    if p0_kernel and L.dim.d2 != I.dim.d2:
        return False
    src = summand_layout(I)
    tgt_all = summand_layout(L)
    tgt = [c for c in tgt_all if c > 0]
    # rows of f2 landing in target I_0 are arbitrary; they can be completed to
    # a surjection iff the remaining rows are independent and d2(I) >= d2(L)
    if not tgt:
        return True
    levels = [_blocks_for_target(c, src, p) for c in tgt]
    need1 = np.cumsum(tgt)
    need2 = np.cumsum([c + 1 for c in tgt])

    def partial(i, S1, S2):
        return (_rank(S1, p) == need1[i]) & (_rank(S2, p) == need2[i])

    same = [i > 0 and tgt[i] == tgt[i - 1] for i in range(len(tgt))]
    return _search(levels, _join_rows, partial, lambda S1, S2: partial(len(tgt) - 1, S1, S2),
                   same, p, _Budget(budget), random.Random(0))


def epi_exists_bruteforce(I: PreinjInvariants, L: PreinjInvariants, p: int = 2,
                          p0_kernel: bool = False, budget: int = DEFAULT_BUDGET) -> bool:
    """Is there a surjective morphism ``I -> L`` over GF(p)?

    With ``p0_kernel`` the kernel must moreover be concentrated at vertex 1,
    i.e. be a sum of copies of ``P_0``.
    """
    GF(p)
    return _epi_cached(PreinjInvariants(I.mult), PreinjInvariants(L.mult), p, p0_kernel, budget)


def subfactor_bruteforce_matrix(Iprime: PreinjInvariants, I: PreinjInvariants, p: int = 2,
                                budget: int = DEFAULT_BUDGET) -> bool:
    """Is there a preinjective ``L`` with ``Iprime -> L`` injective and ``I -> L`` surjective?

    Quotients of preinjectives are preinjective, so no other ``L`` can occur.
    """
    Iprime, I = PreinjInvariants(Iprime.mult), PreinjInvariants(I.mult)
    lo, hi = Iprime.dim, I.dim
    if not lo <= hi:
        return False
    for L in _candidates(hi.d2):
        if lo <= L.dim <= hi:
            if mono_exists_bruteforce(Iprime, L, p, budget) and epi_exists_bruteforce(I, L, p, budget=budget):
                return True
    return False


@lru_cache(maxsize=None)
def _candidates(d2: int) -> tuple[PreinjInvariants, ...]:
    return tuple(invariants_with_d2_at_most(d2))


# -- integer feasibility ---------------------------------------------------

_T5_MAX_N = 8
_T5_MAX_MULT = 6


def _pad_pairs(pairs):
    L = max(1, max(max(len(a.mult), len(c.mult)) for a, c in pairs))
    A = np.array([a.padded(L) for a, _ in pairs], dtype=np.int64)
    C = np.array([c.padded(L) for _, c in pairs], dtype=np.int64)
    return A, C


def linking_system_feasible_batch(pairs, backend: str | None = None) -> np.ndarray:
    """Vectorised :func:`linking_system_feasible` over a list of ``(a, c)`` pairs."""
    pairs = list(pairs)
    if not pairs:
        return np.zeros(0, dtype=bool)
    A, C = _pad_pairs(pairs)
    if A.shape[1] - 1 > _T5_MAX_N or max(A.max(), C.max()) > _T5_MAX_MULT:
        raise BudgetExceeded(f"integer search limited to n <= {_T5_MAX_N}, multiplicities <= {_T5_MAX_MULT}")
    return _kernels.linking_feasible_batch(A, C, backend)


def linking_system_feasible(a: PreinjInvariants, c: PreinjInvariants) -> bool:
    """Does the linking system for ``(a, c)`` have a nonnegative integer solution?"""
    return bool(linking_system_feasible_batch([(a, c)])[0])

"""Representations of preinjective modules and explicit morphisms between them.

A representation is a pair of maps ``alpha, beta : V2 -> V1`` stored as
``m x n`` matrices.  In the canonical basis each summand ``I_d`` contributes
``alpha = (I_d 0)`` and ``beta = (0 I_d)``; the ``I_0`` summands come first
(zero columns), then the remaining summands by descending index.

A morphism ``(f1, f2)`` has ``f1`` acting on vertex 1 and ``f2`` on vertex 2,
and commutes when ``f1 @ src.alpha == dst.alpha @ f2`` and likewise for beta.
Between canonical summands ``I_d -> I_c`` these equations force ``f2`` to be
a banded Toeplitz block ``H[r][s] = g[s - r]`` with ``0 <= s - r <= d - c``
(zero when ``d < c``), and ``f1`` to be ``H`` with its last row and column
removed.  Blocks landing in a target ``I_0`` are unconstrained rows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ConstructionFailed, NoEpimorphism, NoMonomorphism, ShapeMismatch
from .exactmat import QQ, Field, Matrix, rank
from .kroncore import DimVector, PreinjInvariants
from . import criteria

__all__ = [
    "Representation",
    "MorphismPair",
    "MorphismReport",
    "summand_layout",
    "canonical_representation",
    "construct_monomorphism",
    "construct_epimorphism_P0_kernel",
    "verify_morphism",
    "check_block_law",
    "DEFAULT_RETRY_BUDGET",
]

DEFAULT_RETRY_BUDGET = 64


@dataclass(frozen=True)
class Representation:
    alpha: Matrix
    beta: Matrix

    def __post_init__(self):
        if self.alpha.shape != self.beta.shape or self.alpha.field != self.beta.field:
            raise ShapeMismatch("alpha and beta must share shape and field")

    @property
    def field(self) -> Field:
        return self.alpha.field

    @property
    def dim(self) -> DimVector:
        return DimVector(self.alpha.rows, self.alpha.cols)

    @classmethod
    def from_pencil(cls, P) -> "Representation":
        """The module of the pencil ``A + lambda B``: alpha = B, beta = A."""
        return cls(P.B, P.A)

    def to_pencil(self):
        from .pencil import Pencil

        return Pencil(self.beta, self.alpha)


@dataclass(frozen=True)
class MorphismPair:
    f1: Matrix
    f2: Matrix


@dataclass(frozen=True)
class MorphismReport:
    commutes: bool
    f1_rank: int
    f2_rank: int
    kernel_dim: DimVector

    def is_mono(self) -> bool:
        return self.commutes and self.kernel_dim == DimVector(0, 0)

    def is_epi(self, dst: Representation) -> bool:
        return self.commutes and (self.f1_rank, self.f2_rank) == tuple(dst.dim)


def summand_layout(inv: PreinjInvariants) -> list[int]:
    """Summand indices in canonical block order: ``I_0`` copies first, then descending."""
    return [0] * inv[0] + [e for e in inv.epsilons() if e > 0]


def canonical_representation(inv: PreinjInvariants, field: Field = QQ) -> Representation:
    m, n = inv.dim
    zero, one = field.zero, field.one
    alpha = [[zero] * n for _ in range(m)]
    beta = [[zero] * n for _ in range(m)]
    r = c = 0
    for d in summand_layout(inv):
        for k in range(d):
            alpha[r + k][c + k] = one
            beta[r + k][c + k + 1] = one
        r += d
        c += d + 1
    return Representation(Matrix._raw(field, tuple(map(tuple, alpha)), m, n),
                          Matrix._raw(field, tuple(map(tuple, beta)), m, n))


def verify_morphism(src: Representation, dst: Representation, m: MorphismPair) -> MorphismReport:
    if m.f1.shape != (dst.dim.d1, src.dim.d1) or m.f2.shape != (dst.dim.d2, src.dim.d2):
        raise ShapeMismatch(
            f"morphism shapes {m.f1.shape}, {m.f2.shape} do not fit {tuple(src.dim)} -> {tuple(dst.dim)}")
    commutes = (m.f1 @ src.alpha == dst.alpha @ m.f2) and (m.f1 @ src.beta == dst.beta @ m.f2)
    r1, r2 = rank(m.f1), rank(m.f2)
    return MorphismReport(commutes, r1, r2, DimVector(src.dim.d1 - r1, src.dim.d2 - r2))


# -- construction ---------------------------------------------------------


def _offsets(layout: list[int]) -> tuple[list[int], list[int]]:
    r1, r2, o1, o2 = 0, 0, [], []
    for d in layout:
        o1.append(r1)
        o2.append(r2)
        r1 += d
        r2 += d + 1
    return o1, o2


def _assemble(field: Field, src: list[int], dst: list[int], params) -> MorphismPair:
    """Build ``(f1, f2)`` from per-block parameters.

    ``params[(i, j)]`` is the band ``g_0..g_{d-c}`` for a target summand of
    index ``c > 0``, or the free row of length ``d + 1`` when ``c == 0``.
    """
    s1, s2 = _offsets(src)
    t1, t2 = _offsets(dst)
    M = sum(dst)
    N = sum(dst) + len(dst)
    m = sum(src)
    n = sum(src) + len(src)
    zero = field.zero
    f2 = [[zero] * n for _ in range(N)]
    for (i, j), g in params.items():
        c, d = dst[i], src[j]
        if c == 0:
            row = f2[t2[i]]
            for s, x in enumerate(g):
                row[s2[j] + s] = x
            continue
        for r in range(c + 1):
            row = f2[t2[i] + r]
            for k, x in enumerate(g):
                if x:
                    row[s2[j] + r + k] = x
    f1 = [[zero] * m for _ in range(M)]
    for i, c in enumerate(dst):
        for r in range(c):
            src_row = f2[t2[i] + r]
            row = f1[t1[i] + r]
            for j, d in enumerate(src):
                for k in range(d):
                    row[s1[j] + k] = src_row[s2[j] + k]
    return MorphismPair(Matrix._raw(field, tuple(map(tuple, f1)), M, m),
                        Matrix._raw(field, tuple(map(tuple, f2)), N, n))


def _greedy_params(field: Field, src: list[int], dst: list[int]):
    """Identity on equal-index summands, matched in layout order."""
    used: set[int] = set()
    params = {}
    one, zero = field.one, field.zero
    for j, d in enumerate(src):
        for i, c in enumerate(dst):
            if i not in used and c == d:
                used.add(i)
                params[(i, j)] = [one] + [zero] * (d if c == 0 else 0)
                break
    return params


def _random_params(field: Field, src: list[int], dst: list[int], rng: random.Random):
    if field.p:
        draw = lambda: rng.randrange(field.p)  # noqa: E731
    else:
        draw = lambda: field(rng.randint(-2, 2))  # noqa: E731
    params = {}
    for i, c in enumerate(dst):
        for j, d in enumerate(src):
            if c == 0:
                params[(i, j)] = [draw() for _ in range(d + 1)]
            elif d >= c:
                params[(i, j)] = [draw() for _ in range(d - c + 1)]
    return params


def _search(src_inv, dst_inv, field, seed, budget, accept):
    src, dst = summand_layout(src_inv), summand_layout(dst_inv)
    S = canonical_representation(src_inv, field)
    D = canonical_representation(dst_inv, field)
    rng = random.Random(seed)
    for attempt in range(budget + 1):
        params = _greedy_params(field, src, dst) if attempt == 0 else _random_params(field, src, dst, rng)
        pair = _assemble(field, src, dst, params)
        report = verify_morphism(S, D, pair)
        if report.commutes and accept(report):
            return pair
        if not report.commutes:  # pragma: no cover - the parametrisation forces commutation
            raise ConstructionFailed("block parametrisation produced a non-commuting pair")
    raise ConstructionFailed(
        f"no admissible morphism {src_inv} -> {dst_inv} found in {budget} random attempts")


def construct_monomorphism(Iprime: PreinjInvariants, I: PreinjInvariants, seed: int = 0,
                           field: Field = QQ, budget: int = DEFAULT_RETRY_BUDGET) -> MorphismPair:
    """An injective morphism ``Iprime -> I`` between canonical representations."""
    if not criteria.mono_exists(Iprime, I):
        raise NoMonomorphism(f"no monomorphism {Iprime} -> {I}")
    return _search(Iprime, I, field, seed, budget,
                   lambda rep: rep.kernel_dim == DimVector(0, 0))


def construct_epimorphism_P0_kernel(I: PreinjInvariants, L: PreinjInvariants, seed: int = 0,
                                    field: Field = QQ,
                                    budget: int = DEFAULT_RETRY_BUDGET) -> MorphismPair:
    """A surjective morphism ``I -> L`` whose kernel has dimension ``(alpha, 0)``.

    A representation of dimension ``(alpha, 0)`` is ``alpha P_0``, so
    surjectivity at both vertices plus equal vertex-2 dimension is the whole
    contract.
    """
    if not criteria.epi_with_P0_kernel(I, L):
        raise NoEpimorphism(f"no epimorphism {I} -> {L} with P0 kernel")
    target = tuple(L.dim)
    return _search(I, L, field, seed, budget,
                   lambda rep: (rep.f1_rank, rep.f2_rank) == target)


def check_block_law(src_inv: PreinjInvariants, dst_inv: PreinjInvariants, pair: MorphismPair) -> bool:
    """Does ``f2`` have the banded Toeplitz shape on every block with target index > 0?"""
    src, dst = summand_layout(src_inv), summand_layout(dst_inv)
    s1, s2 = _offsets(src)
    t1, t2 = _offsets(dst)
    H = pair.f2
    for i, c in enumerate(dst):
        if c == 0:
            continue
        for j, d in enumerate(src):
            for r in range(c + 1):
                for s in range(d + 1):
                    x = H[t2[i] + r, s2[j] + s]
                    k = s - r
                    if not 0 <= k <= d - c:
                        if x:
                            return False
                    elif x != H[t2[i], s2[j] + k]:
                        return False
    return True

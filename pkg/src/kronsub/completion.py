"""Deciding and completing subpencils of pencils with only column minimal indices.

``sub`` (m' x n') is a subpencil of ``sup`` (m x n) when some pencil
strictly equivalent to ``sup`` has ``sub`` as its top-left block.  For
column-minimal pencils this holds exactly when the module of ``sub`` is a
subfactor of the module of ``sup``, with linking module ``L`` of dimension
``(m', n)``.  The completion is then built from

* a monomorphism ``(F2, F1) : sub -> L`` (``F2`` square, ``F1`` n x n'),
* an epimorphism ``(G2, G1) : sup -> L`` with ``P_0`` kernel (``G1`` square),

through ``sub = F2^-1 G2 . sup . G1^-1 F1`` and full-rank factorisations of
the two rectangular composites.  Everything is carried out in canonical
bases and conjugated back, so the inputs may be arbitrary strictly
equivalent representatives.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .criteria import SubfactorWitness, subfactor_check, subfactor_check_preproj
from .errors import NotColumnMinimalOnly, NotRowMinimalOnly, NotSubpencil, ShapeMismatch
from .exactmat import Matrix, full_rank_factor_tall, full_rank_factor_wide, invert, is_invertible
from .kroncore import PreinjInvariants
from .morphisms import construct_epimorphism_P0_kernel, construct_monomorphism
from .pencil import Pencil, canonical_transform, minimal_column_indices, strictly_equivalent_cm

__all__ = [
    "CompletionResult",
    "is_subpencil_cm",
    "is_subpencil_rm",
    "complete",
    "complete_rm",
    "verify_completion",
    "verify_completion_rm",
    "assemble",
]


@dataclass(frozen=True)
class CompletionResult:
    A12: Matrix
    B12: Matrix
    A21: Matrix
    B21: Matrix
    A22: Matrix
    B22: Matrix
    left: Matrix
    right: Matrix
    linking: SubfactorWitness

    def transpose(self) -> "CompletionResult":
        """The completion of the transposed pair."""
        return CompletionResult(self.A21.T, self.B21.T, self.A12.T, self.B12.T, self.A22.T, self.B22.T,
                                self.right.T, self.left.T, self.linking)


def _same_field(sub: Pencil, sup: Pencil):
    if sub.field != sup.field:
        raise ShapeMismatch(f"sub is over {sub.field.name}, sup over {sup.field.name}")


def is_subpencil_cm(sub: Pencil, sup: Pencil) -> SubfactorWitness | None:
    _same_field(sub, sup)
    a = minimal_column_indices(sub)
    c = minimal_column_indices(sup)
    return subfactor_check(a, c)


def _row_indices(P: Pencil):
    try:
        return minimal_column_indices(P.T).dual()
    except NotColumnMinimalOnly as exc:
        raise NotRowMinimalOnly(str(exc).replace("row minimal", "column minimal")) from None


def is_subpencil_rm(sub: Pencil, sup: Pencil) -> SubfactorWitness | None:
    """Row-minimal analogue; the linking module is preprojective."""
    _same_field(sub, sup)
    return subfactor_check_preproj(_row_indices(sub), _row_indices(sup))


@lru_cache(maxsize=512)
def _canonical(P: Pencil):
    return canonical_transform(P)


def _diag(field, *blocks: Matrix) -> Matrix:
    return Matrix.block_diag(field, list(blocks))


def assemble(sub: Pencil, r: CompletionResult) -> Pencil:
    """The block pencil ``(sub, 12; 21, 22)``."""
    return Pencil(Matrix.block([[sub.A, r.A12], [r.A21, r.A22]]),
                  Matrix.block([[sub.B, r.B12], [r.B21, r.B22]]))


def complete(sub: Pencil, sup: Pencil, seed: int = 0) -> CompletionResult:
    _same_field(sub, sup)
    f = sub.field
    inv_s, Pl_s, Qr_s = _canonical(sub)
    inv_S, Pl_S, Qr_S = _canonical(sup)
    w = subfactor_check(inv_s, inv_S)
    if w is None:
        raise NotSubpencil(f"{inv_s} is not a subfactor of {inv_S}")
    L = PreinjInvariants(w.linking.mult)
    mono = construct_monomorphism(inv_s, L, seed=seed, field=f)
    epi = construct_epimorphism_P0_kernel(inv_S, L, seed=seed, field=f)
    F2, F1 = mono.f1, mono.f2
    G2, G1 = epi.f1, epi.f2
    C1, C2 = full_rank_factor_tall(invert(G1) @ F1)
    D1, D2 = full_rank_factor_wide(invert(F2) @ G2)
    m1, n1 = sub.shape
    m, n = sup.shape
    I_rows = Matrix.identity(f, m - m1)
    I_cols = Matrix.identity(f, n - n1)
    left = _diag(f, invert(Pl_s) @ D1, I_rows) @ D2 @ Pl_S
    right = Qr_S @ C1 @ _diag(f, C2 @ invert(Qr_s), I_cols)
    X = sup.transform(left, right)
    return CompletionResult(
        A12=X.A.submatrix(0, m1, n1, n), B12=X.B.submatrix(0, m1, n1, n),
        A21=X.A.submatrix(m1, m, 0, n1), B21=X.B.submatrix(m1, m, 0, n1),
        A22=X.A.submatrix(m1, m, n1, n), B22=X.B.submatrix(m1, m, n1, n),
        left=left, right=right, linking=w)


def _check_shapes(sub: Pencil, sup: Pencil, r: CompletionResult):
    m1, n1 = sub.shape
    m, n = sup.shape
    want = {
        "A12": (m1, n - n1), "B12": (m1, n - n1),
        "A21": (m - m1, n1), "B21": (m - m1, n1),
        "A22": (m - m1, n - n1), "B22": (m - m1, n - n1),
        "left": (m, m), "right": (n, n),
    }
    for name, shape in want.items():
        got = getattr(r, name).shape
        if got != shape:
            raise ShapeMismatch(f"{name} is {got[0]}x{got[1]}, expected {shape[0]}x{shape[1]}")


def verify_completion(sub: Pencil, sup: Pencil, r: CompletionResult) -> bool:
    """Exact check that ``r`` exhibits ``sub`` as the top-left block of a pencil equivalent to ``sup``."""
    _same_field(sub, sup)
    if sub.shape[0] > sup.shape[0] or sub.shape[1] > sup.shape[1]:
        raise ShapeMismatch(f"{sub.shape} does not fit inside {sup.shape}")
    _check_shapes(sub, sup, r)
    if not (is_invertible(r.left) and is_invertible(r.right)):
        return False
    X = assemble(sub, r)
    if sup.transform(r.left, r.right) != X:
        return False
    try:
        return strictly_equivalent_cm(X, sup)
    except NotColumnMinimalOnly:
        return False


def complete_rm(sub: Pencil, sup: Pencil, seed: int = 0) -> CompletionResult:
    """Completion of pencils with only row minimal indices, via transposition."""
    w = subfactor_check_preproj(_row_indices(sub), _row_indices(sup))
    if w is None:
        raise NotSubpencil("row-minimal sub is not a subpencil of sup")
    return replace(complete(sub.T, sup.T, seed).transpose(), linking=w)


def verify_completion_rm(sub: Pencil, sup: Pencil, r: CompletionResult) -> bool:
    return verify_completion(sub.T, sup.T, r.transpose())

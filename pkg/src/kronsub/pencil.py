"""Matrix pencils ``A + lambda B`` with only minimal column indices.

The module of a pencil is ``(k^m, k^n; alpha = B, beta = A)``, so the block
``L_e`` (lambda on the diagonal, 1 on the superdiagonal) is the canonical
representation of ``I_e``.

Column minimal indices are read off from the block-Toeplitz matrices ``T_k``
((k+1)m x kn, ``A`` on the diagonal and ``B`` below it) whose kernels are the
polynomial solutions of ``(A + lambda B) x = 0`` with ``deg x < k``.  With
``nu_k = dim ker T_k`` one has ``nu_k = sum_i max(0, k - e_i)`` for a pencil
that has column indices only, so the multiplicity of ``e`` is the second
difference ``nu_{e+1} - 2 nu_e + nu_{e-1}``.

:func:`minimal_column_indices` gets the same numbers from the cheaper
sequence ``W_0 = 0``, ``W_{i+1} = B^{-1}(A W_i)`` of subspaces of ``k^n``:
each ``L_e`` adds one dimension per step for ``e + 1`` steps, so
``dim W_{i+1} - dim W_i`` counts the indices ``>= i``.  Nilpotent blocks
mimic an ``L`` block there, while finite-eigenvalue and row-index blocks add
nothing; both failures are caught by the closing dimension counts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import NotColumnMinimalOnly, ShapeMismatch, SingularMatrix
from .exactmat import QQ, EchelonBasis, Field, Matrix, invert, is_invertible, rank, rref, solve_right_kernel
from .kroncore import PreinjInvariants
from .morphisms import canonical_representation, summand_layout

__all__ = [
    "Pencil",
    "pencil_of_module",
    "toeplitz",
    "nu_sequence",
    "wong_dims",
    "minimal_column_indices",
    "scramble",
    "scramble_with_transforms",
    "random_invertible",
    "strictly_equivalent_cm",
    "canonical_transform",
]


@dataclass(frozen=True)
class Pencil:
    A: Matrix
    B: Matrix

    def __post_init__(self):
        if self.A.shape != self.B.shape:
            raise ShapeMismatch(f"A is {self.A.shape} but B is {self.B.shape}")
        if self.A.field != self.B.field:
            raise ShapeMismatch("A and B live over different fields")

    @property
    def field(self) -> Field:
        return self.A.field

    @property
    def shape(self) -> tuple[int, int]:
        return self.A.shape

    @property
    def T(self) -> "Pencil":
        return Pencil(self.A.T, self.B.T)

    def transform(self, left: Matrix, right: Matrix) -> "Pencil":
        return Pencil(left @ self.A @ right, left @ self.B @ right)


def pencil_of_module(inv: PreinjInvariants, field: Field = QQ) -> Pencil:
    """Block-diagonal pencil of ``L_e`` blocks; zero columns first, then descending ``e``."""
    return canonical_representation(inv, field).to_pencil()


def toeplitz(P: Pencil, k: int) -> Matrix:
    m, n = P.shape
    f = P.field
    zero = f.zero
    rows = []
    for i in range(k + 1):
        for r in range(m):
            row = [zero] * (k * n)
            if i < k:
                row[i * n:(i + 1) * n] = P.A.row(r)
            if i >= 1:
                row[(i - 1) * n:i * n] = P.B.row(r)
            rows.append(tuple(row))
    return Matrix._raw(f, tuple(rows), (k + 1) * m, k * n)


def nu_sequence(P: Pencil, kmax: int) -> list[int]:
    """``[nu_0, nu_1, ..., nu_kmax]``."""
    n = P.shape[1]
    return [0] + [k * n - rank(toeplitz(P, k)) for k in range(1, kmax + 1)]


def _closed_mult(mult: list[int], m: int, n: int, trace) -> PreinjInvariants:
    if any(x < 0 for x in mult) or sum(mult) != n - m or sum(e * x for e, x in enumerate(mult)) != m:
        raise NotColumnMinimalOnly(
            f"pencil of size {m}x{n} has row minimal indices or elementary divisors "
            f"(degree counts {trace} do not close up)")
    return PreinjInvariants(mult)


def _indices_from_nu(nu: list[int], m: int, n: int) -> PreinjInvariants:
    ext = [0] + nu  # ext[k + 1] = nu_k, with nu_{-1} = 0
    mult = [ext[e + 2] - 2 * ext[e + 1] + ext[e] for e in range(len(nu) - 1)]
    return _closed_mult(mult, m, n, nu)


def _span_basis(M: Matrix) -> Matrix:
    """Columns forming a basis of the column span of ``M``."""
    if M.cols == 0:
        return M
    R, piv = rref(M.T)
    return R.submatrix(0, len(piv), 0, R.cols).T


def wong_dims(P: Pencil) -> list[int]:
    """``[dim W_0, dim W_1, ...]`` up to the first repeat."""
    m, n = P.shape
    f = P.field
    W = Matrix.zeros(f, n, 0)
    dims = [0]
    while True:
        K = solve_right_kernel(Matrix.hstack([P.B, P.A @ W]))
        W = _span_basis(K.submatrix(0, n, 0, K.cols))
        if W.cols == dims[-1]:
            return dims
        dims.append(W.cols)


def _walk_nu(P: Pencil, step):
    """Evaluate ``nu_k = step(k)`` until its increment reaches ``n - m`` (or the cap ``m + 1``)."""
    m, n = P.shape
    if n < m:
        raise NotColumnMinimalOnly(f"pencil of size {m}x{n} has more rows than columns")
    nu = [0]
    for k in range(1, m + 2):
        nu.append(step(k))
        if nu[-1] - nu[-2] >= n - m:
            break
    return nu


def minimal_column_indices(P: Pencil) -> PreinjInvariants:
    m, n = P.shape
    if m == 0:
        return PreinjInvariants((n,))
    if n < m:
        raise NotColumnMinimalOnly(f"pencil of size {m}x{n} has more rows than columns")
    dims = wong_dims(P)
    at_least = [b - a for a, b in zip(dims, dims[1:])] + [0]  # at_least[e] = #{indices >= e}
    mult = [at_least[e] - at_least[e + 1] for e in range(len(at_least) - 1)]
    return _closed_mult(mult, m, n, dims)


def random_invertible(field: Field, n: int, rng: random.Random) -> Matrix:
    while True:
        if field.p:
            data = [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
        else:
            data = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        M = Matrix(field, data, n, n)
        if is_invertible(M):
            return M


def scramble_with_transforms(P: Pencil, seed: int) -> tuple[Pencil, Matrix, Matrix]:
    """``(Pl P Qr, Pl, Qr)`` for seeded random invertible ``Pl``, ``Qr``."""
    rng = random.Random(seed)
    m, n = P.shape
    Pl = random_invertible(P.field, m, rng)
    Qr = random_invertible(P.field, n, rng)
    return P.transform(Pl, Qr), Pl, Qr


def scramble(P: Pencil, seed: int) -> Pencil:
    return scramble_with_transforms(P, seed)[0]


def strictly_equivalent_cm(P1: Pencil, P2: Pencil) -> bool:
    if P1.field != P2.field:
        raise ShapeMismatch("pencils over different fields")
    a, b = minimal_column_indices(P1), minimal_column_indices(P2)
    return P1.shape == P2.shape and a == b


def canonical_transform(P: Pencil) -> tuple[PreinjInvariants, Matrix, Matrix]:
    """Return ``(inv, Pl, Qr)`` with ``Pl @ (A + lambda B) @ Qr == pencil_of_module(inv)``.

    Canonical input gets identity transforms.  Otherwise the columns of ``Qr`` are the (sign-twisted) coefficients of a minimal
    polynomial basis of the kernel, chosen greedily by degree; the rows come
    from applying ``B`` to them.
    """
    m, n = P.shape
    f = P.field
    kernels: dict[int, Matrix] = {}

    def step(k):
        K = solve_right_kernel(toeplitz(P, k))
        kernels[k] = K
        return K.cols

    if m == 0:
        inv = PreinjInvariants((n,))
        return inv, Matrix.identity(f, 0), Matrix.identity(f, n)
    nu = _walk_nu(P, step)
    inv = _indices_from_nu(nu, m, n)
    if P == pencil_of_module(inv, f):
        return inv, Matrix.identity(f, m), Matrix.identity(f, n)

    # minimal basis: for each degree e, vectors of ker T_{e+1} independent of
    # the shifts of lower-degree vectors already chosen
    zero = f.zero
    chosen: dict[int, list[list]] = {}
    lower: list[list] = []
    for e in range(inv.n + 1):
        need = inv[e]
        if not need:
            continue
        size = (e + 1) * n
        basis = EchelonBasis(f, size)
        for v in lower:
            deg = len(v) // n - 1
            for s in range(e - deg + 1):
                basis.add([zero] * (s * n) + v + [zero] * ((e - deg - s) * n))
        got = []
        K = kernels.get(e + 1) or solve_right_kernel(toeplitz(P, e + 1))
        for j in range(K.cols):
            v = list(K.column(j))
            if basis.add(v):
                got.append(v)
                if len(got) == need:
                    break
        if len(got) < need:  # pragma: no cover - guaranteed by the index count
            raise NotColumnMinimalOnly(f"minimal basis construction stalled at degree {e}")
        chosen[e] = got
        lower.extend(got)

    qcols, yrows = [], []
    it = {e: iter(vs) for e, vs in chosen.items()}
    p = f.p
    for e in summand_layout(inv):
        v = next(it[e])
        for j in range(e + 1):
            x = v[j * n:(j + 1) * n]
            if j % 2:
                x = [(-t) % p if p else -t for t in x]
            qcols.append(x)
            if j < e:
                yrows.append(x)
    # entries are already reduced, skip coercion
    Q = Matrix._raw(f, tuple(zip(*qcols)), n, len(qcols)) if n else Matrix.zeros(f, 0, len(qcols))
    Bq = P.B @ Matrix._raw(f, tuple(zip(*yrows)), n, len(yrows)) if yrows else Matrix.zeros(f, m, 0)
    try:
        Pl = invert(Bq)
    except SingularMatrix as exc:  # pragma: no cover
        raise NotColumnMinimalOnly(f"kernel basis did not yield a strict equivalence: {exc}") from None
    if not is_invertible(Q):  # pragma: no cover
        raise NotColumnMinimalOnly("kernel basis columns are dependent")
    return inv, Pl, Q


def check_canonical_transform(P: Pencil, inv: PreinjInvariants, Pl: Matrix, Qr: Matrix) -> bool:
    canon = pencil_of_module(inv, P.field)
    return P.transform(Pl, Qr) == canon


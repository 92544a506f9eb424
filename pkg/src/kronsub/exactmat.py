"""Exact dense linear algebra over the rationals and prime fields GF(p).

Matrices are immutable.  Rational entries are ``gmpy2.mpq`` when gmpy2 is
importable and :class:`fractions.Fraction` otherwise (both always in lowest
terms); prime-field entries are Python ints in ``range(p)``.  No floating point is used anywhere.

Pivoting is deterministic: for each column, left to right, the first row
(top to bottom) holding a nonzero entry is used.  Every routine below
therefore returns byte-identical output for identical input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import RankDeficient, ShapeMismatch, SingularMatrix

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    Rational = Fraction

_RATIONAL_TYPES = (Fraction, type(Rational(0)))

__all__ = [
    "Field",
    "QQ",
    "GF",
    "Matrix",
    "rank",
    "rref",
    "solve_right_kernel",
    "invert",
    "is_invertible",
    "full_rank_factor_tall",
    "full_rank_factor_wide",
    "EchelonBasis",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """Either the rationals (``p == 0``) or the prime field GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0:
            if not (2 <= self.p < 2**31) or not _is_prime(self.p):
                raise ValueError(f"GF(p) needs a prime 2 <= p < 2^31, got {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def name(self) -> str:
        return "Q" if self.p == 0 else f"GF({self.p})"

    @classmethod
    def from_name(cls, name: str) -> "Field":
        s = name.strip().replace(" ", "")
        if s in ("Q", "QQ"):
            return QQ
        if s.startswith("GF(") and s.endswith(")"):
            return cls(int(s[3:-1]))
        raise ValueError(f"unknown field {name!r}; expected 'Q' or 'GF(p)'")

    @property
    def zero(self):
        return Rational(0) if self.p == 0 else 0

    @property
    def one(self):
        return Rational(1) if self.p == 0 else 1

    def __call__(self, x):
        """Coerce an int, fraction or decimal string such as ``"-3/4"`` into the field."""
        if isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(x, float):
            raise TypeError("floating point entries are not accepted")
        if isinstance(x, str):
            x = Fraction(x)
        if self.p == 0:
            if isinstance(x, _RATIONAL_TYPES):
                return Rational(x.numerator, x.denominator)
            return Rational(int(x))
        if isinstance(x, _RATIONAL_TYPES):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in {self.name}")
            return int(x.numerator) * pow(int(x.denominator), -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / x
        return pow(x, -1, self.p)

    def format(self, x) -> str:
        return str(x)

    def __repr__(self):
        return self.name


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


class Matrix:
    """Immutable dense matrix over a :class:`Field`."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: Field, data: Iterable[Iterable], rows: int | None = None,
                 cols: int | None = None, _trusted: bool = False):
        if _trusted:
            tup = data
        else:
            tup = tuple(tuple(field(x) for x in r) for r in data)
        nr = len(tup)
        if rows is not None and rows != nr:
            raise ShapeMismatch(f"expected {rows} rows, got {nr}")
        if nr:
            nc = len(tup[0])
            if any(len(r) != nc for r in tup):
                raise ShapeMismatch("ragged rows")
            if cols is not None and cols != nc:
                raise ShapeMismatch(f"expected {cols} columns, got {nc}")
        else:
            nc = cols or 0
        self.field = field
        self.rows = nr
        self.cols = nc
        self._data = tup

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, field: Field, data, rows: int, cols: int) -> "Matrix":
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        m._data = data
        return m

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls._raw(field, tuple((z,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        data = tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))
        return cls._raw(field, data, n, n)

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        return cls(field, rows, cols=cols)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], rows: int) -> "Matrix":
        if not columns:
            return cls.zeros(field, rows, 0)
        return cls(field, zip(*columns), rows=rows) if rows else cls.zeros(field, 0, len(columns))

    @classmethod
    def permutation(cls, field: Field, perm: Sequence[int]) -> "Matrix":
        """Matrix sending basis vector ``e_j`` to ``e_{perm[j]}``."""
        n = len(perm)
        z, o = field.zero, field.one
        data = [[z] * n for _ in range(n)]
        for j, i in enumerate(perm):
            data[i][j] = o
        return cls._raw(field, tuple(tuple(r) for r in data), n, n)

    @classmethod
    def hstack(cls, mats: Sequence["Matrix"]) -> "Matrix":
        mats = list(mats)
        f = mats[0].field
        r = mats[0].rows
        if any(m.rows != r or m.field != f for m in mats):
            raise ShapeMismatch("hstack needs equal row counts and fields")
        data = tuple(sum((m._data[i] for m in mats), ()) for i in range(r))
        return cls._raw(f, data, r, sum(m.cols for m in mats))

    @classmethod
    def vstack(cls, mats: Sequence["Matrix"]) -> "Matrix":
        mats = list(mats)
        f = mats[0].field
        c = mats[0].cols
        if any(m.cols != c or m.field != f for m in mats):
            raise ShapeMismatch("vstack needs equal column counts and fields")
        return cls._raw(f, sum((m._data for m in mats), ()), sum(m.rows for m in mats), c)

    @classmethod
    def block_diag(cls, field: Field, mats: Sequence["Matrix"]) -> "Matrix":
        R = sum(m.rows for m in mats)
        C = sum(m.cols for m in mats)
        z = field.zero
        data = []
        c0 = 0
        for m in mats:
            left = (z,) * c0
            right = (z,) * (C - c0 - m.cols)
            data.extend(left + row + right for row in m._data)
            c0 += m.cols
        return cls._raw(field, tuple(data), R, C)

    @classmethod
    def block(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        return cls.vstack([cls.hstack(row) for row in grid])

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        data = tuple(r[c0:c1] for r in self._data[r0:r1])
        return Matrix._raw(self.field, data, r1 - r0, c1 - c0)

    def with_entry(self, i: int, j: int, value) -> "Matrix":
        rows = [list(r) for r in self._data]
        rows[i][j] = self.field(value)
        return Matrix._raw(self.field, tuple(tuple(r) for r in rows), self.rows, self.cols)

    @property
    def T(self) -> "Matrix":
        if not self.rows:
            return Matrix.zeros(self.field, self.cols, 0)
        return Matrix._raw(self.field, tuple(zip(*self._data)), self.cols, self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    # -- arithmetic -------------------------------------------------------

    def _check_same(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape or self.field != other.field:
            raise ShapeMismatch(f"{self.shape}/{self.field} vs {other.shape}/{other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        p = self.field.p
        if p:
            data = tuple(tuple((a + b) % p for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        else:
            data = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        return Matrix._raw(self.field, data, self.rows, self.cols)

    def __neg__(self) -> "Matrix":
        p = self.field.p
        if p:
            data = tuple(tuple((-a) % p for a in r) for r in self._data)
        else:
            data = tuple(tuple(-a for a in r) for r in self._data)
        return Matrix._raw(self.field, data, self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        p = self.field.p
        if p:
            data = tuple(tuple(a * c % p for a in r) for r in self._data)
        else:
            data = tuple(tuple(a * c for a in r) for r in self._data)
        return Matrix._raw(self.field, data, self.rows, self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows or self.field != other.field:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        p = self.field.p
        n = other.cols
        zero = self.field.zero
        odata = other._data
        out = []
        for r in self._data:
            acc = [zero] * n
            for k, a in enumerate(r):
                if a:
                    b = odata[k]
                    for j in range(n):
                        bj = b[j]
                        if bj:
                            acc[j] += a * bj
            if p:
                acc = [x % p for x in acc]
            out.append(tuple(acc))
        return Matrix._raw(self.field, tuple(out), self.rows, n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self._data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix<{self.field.name} {self.rows}x{self.cols}>[{body}]"


# -- elimination ----------------------------------------------------------


def _rref_inplace(rows: list[list], ncols: int, field: Field, full: bool = True) -> list[int]:
    """Reduce ``rows`` in place; return the pivot column of each pivot row.

    With ``full=False`` only forward elimination is performed (row echelon
    form, pivots not normalised), which is all :func:`rank` needs.
    """
    p = field.p
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        if full:
            inv = field.inv(prow[c])
            if p:
                prow = [x * inv % p for x in prow]
            else:
                prow = [x * inv for x in prow]
            rows[r] = prow
        nz = [j for j in range(c, len(prow)) if prow[j]]
        pc = prow[c]
        targets = range(nrows) if full else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            if not full:
                f = f / pc if not p else f * pow(pc, -1, p) % p
            if p:
                for j in nz:
                    row[j] = (row[j] - f * prow[j]) % p
            else:
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(M: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in M._data]
    piv = _rref_inplace(rows, M.cols, M.field)
    return Matrix._raw(M.field, tuple(tuple(r) for r in rows), M.rows, M.cols), tuple(piv)


def rank(M: Matrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    # eliminate along the shorter side
    src = M if M.rows >= M.cols else M.T
    rows = [list(r) for r in src._data]
    return len(_rref_inplace(rows, src.cols, M.field, full=False))


def solve_right_kernel(M: Matrix) -> Matrix:
    """Basis of ``{x : M x = 0}`` as the columns of the returned matrix.

    The basis is the reduced-echelon one: one column per free variable,
    holding 1 at that variable and 0 at every other free variable.
    """
    f = M.field
    n = M.cols
    rows = [list(r) for r in M._data]
    piv = _rref_inplace(rows, n, f)
    pivset = set(piv)
    free = [j for j in range(n) if j not in pivset]
    zero, one = f.zero, f.one
    p = f.p
    cols = []
    for fc in free:
        v = [zero] * n
        v[fc] = one
        for i, pc in enumerate(piv):
            x = rows[i][fc]
            if x:
                v[pc] = (-x) % p if p else -x
        cols.append(v)
    if not cols:
        return Matrix.zeros(f, n, 0)
    return Matrix._raw(f, tuple(zip(*cols)), n, len(cols))


def invert(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise ShapeMismatch(f"cannot invert a {M.rows}x{M.cols} matrix")
    n = M.rows
    f = M.field
    zero, one = f.zero, f.one
    rows = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(M._data)]
    piv = _rref_inplace(rows, n, f)
    if len(piv) < n:
        raise SingularMatrix(f"matrix has rank {len(piv)} < {n}")
    return Matrix._raw(f, tuple(tuple(r[n:]) for r in rows), n, n)


def is_invertible(M: Matrix) -> bool:
    return M.rows == M.cols and rank(M) == M.rows


def full_rank_factor_wide(M: Matrix) -> tuple[Matrix, Matrix]:
    """Write a full-row-rank ``M`` (r x c, r <= c) as ``D1 @ (I 0) @ D2``.

    ``D1`` is the identity and ``D2`` stacks ``M`` over the unit rows of the
    non-pivot columns of ``M``, which makes it invertible.
    """
    r, c = M.shape
    f = M.field
    if r > c:
        raise RankDeficient(f"{r}x{c} matrix cannot have full row rank")
    _, piv = rref(M)
    if len(piv) < r:
        raise RankDeficient(f"rank {len(piv)} < {r} rows")
    pivset = set(piv)
    zero, one = f.zero, f.one
    extra = [tuple(one if j == k else zero for j in range(c)) for k in range(c) if k not in pivset]
    D2 = Matrix._raw(f, M._data + tuple(extra), c, c)
    return Matrix.identity(f, r), D2


def full_rank_factor_tall(M: Matrix) -> tuple[Matrix, Matrix]:
    """Write a full-column-rank ``M`` (r x c, r >= c) as ``C1 @ (I;0) @ C2``."""
    try:
        D1, D2 = full_rank_factor_wide(M.T)
    except RankDeficient as exc:
        raise RankDeficient(str(exc).replace("row", "column")) from None
    return D2.T, D1.T


class EchelonBasis:
    """Incrementally maintained reduced basis of a subspace of ``field^n``.

    ``add(v)`` reports whether ``v`` was independent of the vectors added so
    far (and keeps it if so).
    """

    def __init__(self, field: Field, n: int):
        self.field = field
        self.n = n
        self._rows: list[list] = []
        self._piv: list[int] = []

    def __len__(self):
        return len(self._rows)

    def reduce(self, v: Sequence) -> list:
        p = self.field.p
        w = list(v)
        for row, pc in zip(self._rows, self._piv):
            x = w[pc]
            if x:
                if p:
                    for j in range(pc, self.n):
                        if row[j]:
                            w[j] = (w[j] - x * row[j]) % p
                else:
                    for j in range(pc, self.n):
                        if row[j]:
                            w[j] -= x * row[j]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        w = self.reduce(v)
        pc = next((j for j, x in enumerate(w) if x), -1)
        if pc < 0:
            return False
        inv = self.field.inv(w[pc])
        p = self.field.p
        w = [x * inv % p for x in w] if p else [x * inv for x in w]
        self._rows.append(w)
        self._piv.append(pc)
        return True

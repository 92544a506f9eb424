"""Numerical decision procedures on multiplicity vectors.

Everything here is integer arithmetic on :class:`PreinjInvariants`; no
matrices are involved.  The main entry point is :func:`subfactor_check`,
which decides whether ``I'`` is a subfactor of ``I`` and, when it is,
returns the linking module ``L = sum b_t I_t`` together with the kernel and
cokernel multiplicities of ``I -> L`` and ``I' -> L``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidShape
from .kroncore import PreinjInvariants, PreprojInvariants, _Invariants

__all__ = [
    "SubfactorWitness",
    "mono_exists",
    "ses_with_I0_cokernel",
    "ses_cokernel_multiplicity",
    "epi_with_P0_kernel",
    "dominance_table",
    "shift_transform",
    "compute_b_sequence",
    "subfactor_check",
    "subfactor_check_preproj",
]


@dataclass(frozen=True)
class SubfactorWitness:
    """Linking module data.

    ``alpha`` is the number of ``P_0`` summands in the kernel of the
    epimorphism from the big module onto ``linking``; ``beta`` the number of
    ``I_0`` summands in the cokernel of the embedding of the small module.
    """

    linking: _Invariants
    b_seq: tuple[int, ...]
    alpha: int
    beta: int


def _pad(*vecs: _Invariants) -> tuple[tuple[int, ...], ...]:
    L = max(1, max(len(v.mult) for v in vecs))
    return tuple(v.padded(L) for v in vecs)


def dominance_table(sub: PreinjInvariants, sup: PreinjInvariants) -> list[tuple[str, int, int]]:
    """Rows ``(label, lhs, rhs)`` of the weighted dominance system; mono iff every lhs <= rhs."""
    a, b = _pad(sub, sup)
    rows = [("k=0", a[0], b[0])]
    sa = sb = 0
    for k in range(1, len(a)):
        sa += k * a[k]
        sb += k * b[k]
        rows.append((f"k={k}", sa, sb))
    return rows


def mono_exists(sub: PreinjInvariants, sup: PreinjInvariants) -> bool:
    """Is there a monomorphism ``sub -> sup``?"""
    return all(lhs <= rhs for _, lhs, rhs in dominance_table(sub, sup))


def ses_cokernel_multiplicity(sub: PreinjInvariants, sup: PreinjInvariants) -> int | None:
    """``beta`` if there is an exact sequence ``0 -> sub -> sup -> beta I_0 -> 0``, else None."""
    n = max(sub.n, 0)
    if sup.n > n:
        return None
    table = dominance_table(sub, sup)
    if any(lhs > rhs for _, lhs, rhs in table):
        return None
    # vertex-1 dimensions must agree; for n == 0 both sides are the empty sum
    if n >= 1:
        _, lhs, rhs = table[n]
        if lhs != rhs:
            return None
    return sup.defect - sub.defect


def ses_with_I0_cokernel(sub: PreinjInvariants, sup: PreinjInvariants) -> bool:
    return ses_cokernel_multiplicity(sub, sup) is not None


def epi_with_P0_kernel(big: PreinjInvariants, quot: PreinjInvariants) -> bool:
    """Is there an epimorphism ``big -> quot`` whose kernel is ``alpha P_0``?

    ``alpha`` is fixed by the summand counts; a negative value is a shape error.
    """
    alpha = quot.summands() - big.summands()
    if alpha < 0:
        raise InvalidShape(f"{quot} has fewer summands than {big}; no P0 kernel possible")
    got = ses_cokernel_multiplicity(big.shifted(1), quot.shifted(1))
    return got is not None and got == alpha


def shift_transform(d: Sequence[int], c: Sequence[int], a: Sequence[int]):
    """Shift transform for ``0 -> P_{a_1}+...+P_{a_n} -> I_c -> I_d -> 0``.

    ``d`` (length q) and ``c`` (length q-n) are descending, ``a`` (length
    n > 0) ascending.  Returns ``(sub, middle, cokernel)`` index lists of the
    equivalent preinjective sequence ``0 -> sub -> middle -> cokernel -> 0``.
    Existence of that sequence is not decided here.
    """
    d, c, a = list(d), list(c), list(a)
    q, n = len(d), len(a)
    if n == 0 or q <= n or len(c) != q - n:
        raise InvalidShape(f"need q > n > 0 and len(c) = q - n; got q={q}, n={n}, len(c)={len(c)}")
    if any(x < 0 for x in d + c + a):
        raise InvalidShape("indices must be nonnegative")
    if d != sorted(d, reverse=True) or c != sorted(c, reverse=True) or a != sorted(a):
        raise InvalidShape("d and c must be descending, a ascending")
    s = a[-1] + 1
    sub = [x + s for x in c]
    middle = [x + s for x in d]
    cokernel = [a[-1] - x for x in a[:-1]] + [0]
    return sub, middle, cokernel


def compute_b_sequence(a: _Invariants, c: _Invariants) -> tuple[int, ...]:
    """The decreasing recursion for ``(b_0, ..., b_n)``; raw values, possibly negative."""
    return _b_sequence(*_pad(a, c))


def _b_sequence(av, cv) -> tuple[int, ...]:
    n = len(av) - 1
    b = [0] * (n + 1)
    # running tails: sum_{i>t} i*b_i and sum_{i>t} (i+1)*b_i, and the a/c tails from t
    tail_ia = tail_ic = tail_ib = tail_i1b = 0
    for t in range(n, 1, -1):
        tail_ia += t * av[t]
        tail_ic += (t + 1) * cv[t]
        if t == n:
            bt = min(av[n], cv[n])
        else:
            bt = min((tail_ia - tail_ib) // t, (tail_ic - tail_i1b) // (t + 1))
        b[t] = bt
        tail_ib += t * bt
        tail_i1b += (t + 1) * bt
    # the tails now cover i >= 2
    b0 = tail_ic + cv[0] - tail_i1b
    if n >= 1:
        b[1] = tail_ia + av[1] - tail_ib
        b0 += 2 * cv[1] - 2 * b[1]
    b[0] = b0
    return tuple(b)


def _check(a: _Invariants, c: _Invariants, kind) -> SubfactorWitness | None:
    av, cv = _pad(a, c)
    b = _b_sequence(av, cv)
    n = len(b) - 1
    if n >= 1:
        # sum_{i>=1} (i+1) c_i - sum_{i>=2} (i+1) b_i
        rhs = sum((i + 1) * cv[i] for i in range(1, n + 1)) - sum((i + 1) * b[i] for i in range(2, n + 1))
        if 2 * b[1] > rhs:
            return None
    if b[0] < av[0] or b[0] < 0 or (n >= 1 and b[1] < 0):
        return None
    # kernel multiplicity of c ->> L and cokernel multiplicity of a >-> L, read off from defects
    # (a preinjective has defect equal to its number of summands)
    sb = sum(b)
    return SubfactorWitness(linking=kind(b), b_seq=b, alpha=sb - sum(cv), beta=sb - sum(av))


def subfactor_check(a: PreinjInvariants, c: PreinjInvariants) -> SubfactorWitness | None:
    """Witness that ``a`` is a subfactor of ``c``, or None."""
    return _check(a, c, PreinjInvariants)


def subfactor_check_preproj(a: PreprojInvariants, c: PreprojInvariants) -> SubfactorWitness | None:
    """Same arithmetic on preprojective multiplicities; the linking module is preprojective."""
    return _check(a, c, PreprojInvariants)

"""Multiplicity vectors of preinjective / preprojective Kronecker modules.

A preinjective module ``a_0 I_0 + a_1 I_1 + ... + a_n I_n`` is stored as the
tuple ``(a_0, ..., a_n)`` with trailing zeros trimmed; the zero module is the
empty tuple.  ``I_n`` has dimension vector ``(n, n+1)`` and ``P_n`` has
``(n+1, n)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class DimVector:
    d1: int
    d2: int

    def __add__(self, other: "DimVector") -> "DimVector":
        return DimVector(self.d1 + other.d1, self.d2 + other.d2)

    def __sub__(self, other: "DimVector") -> "DimVector":
        return DimVector(self.d1 - other.d1, self.d2 - other.d2)

    def __le__(self, other: "DimVector") -> bool:
        return self.d1 <= other.d1 and self.d2 <= other.d2

    def __iter__(self) -> Iterator[int]:
        yield self.d1
        yield self.d2


def _trim(mult: Iterable[int]) -> tuple[int, ...]:
    m = [int(x) for x in mult]
    if any(x < 0 for x in m):
        raise ValueError(f"multiplicities must be nonnegative: {m}")
    while m and m[-1] == 0:
        m.pop()
    return tuple(m)


@dataclass(frozen=True)
class _Invariants:
    mult: tuple[int, ...] = ()

    _symbol = "?"

    def __post_init__(self):
        object.__setattr__(self, "mult", _trim(self.mult))

    @classmethod
    def from_epsilons(cls, eps: Iterable[int]):
        eps = list(eps)
        if any(int(e) < 0 for e in eps):
            raise ValueError("indices must be nonnegative")
        cnt = Counter(int(e) for e in eps)
        top = max(cnt, default=-1)
        return cls(tuple(cnt.get(i, 0) for i in range(top + 1)))

    @property
    def n(self) -> int:
        """Largest index present, or -1 for the zero module."""
        return len(self.mult) - 1

    def __getitem__(self, i: int) -> int:
        return self.mult[i] if 0 <= i < len(self.mult) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.mult):
            raise ValueError("cannot pad below the canonical length")
        return self.mult + (0,) * (length - len(self.mult))

    def epsilons(self) -> list[int]:
        """Indices of the summands, descending (``I_0`` last)."""
        return [i for i in range(len(self.mult) - 1, -1, -1) for _ in range(self.mult[i])]

    def summands(self) -> int:
        return sum(self.mult)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        L = max(len(self.mult), len(other.mult))
        return type(self)(tuple(a + b for a, b in zip(self.padded(L), other.padded(L))))

    def shifted(self, k: int = 1):
        """Replace every summand ``X_i`` by ``X_{i+k}``."""
        if not self.mult:
            return self
        return type(self)((0,) * k + self.mult)

    def is_zero(self) -> bool:
        return not self.mult

    def notation(self) -> str:
        """Human form such as ``I3+2I2+I1+2I0`` (``0`` for the zero module)."""
        parts = []
        for i in range(len(self.mult) - 1, -1, -1):
            a = self.mult[i]
            if a:
                parts.append(f"{a if a > 1 else ''}{self._symbol}{i}")
        return "+".join(parts) if parts else "0"

    def __str__(self):
        return self.notation()


@dataclass(frozen=True)
class PreinjInvariants(_Invariants):
    """``a_i`` = multiplicity of ``I_i``."""

    _symbol = "I"

    @property
    def dim(self) -> DimVector:
        return DimVector(sum(i * a for i, a in enumerate(self.mult)),
                         sum((i + 1) * a for i, a in enumerate(self.mult)))

    @property
    def defect(self) -> int:
        return sum(self.mult)

    def dual(self) -> "PreprojInvariants":
        return PreprojInvariants(self.mult)


@dataclass(frozen=True)
class PreprojInvariants(_Invariants):
    """``a_i`` = multiplicity of ``P_i``."""

    _symbol = "P"

    @property
    def dim(self) -> DimVector:
        return DimVector(sum((i + 1) * a for i, a in enumerate(self.mult)),
                         sum(i * a for i, a in enumerate(self.mult)))

    @property
    def defect(self) -> int:
        return -sum(self.mult)

    def dual(self) -> PreinjInvariants:
        return PreinjInvariants(self.mult)


def dim_of(inv: _Invariants) -> DimVector:
    return inv.dim


def defect_of(inv: _Invariants) -> int:
    return inv.defect


def from_epsilon_list(eps: Iterable[int]) -> PreinjInvariants:
    """Preinjective invariants of a pencil with column minimal indices ``eps``."""
    return PreinjInvariants.from_epsilons(eps)


def enumerate_invariants(max_index: int, max_mult: int, kind=PreinjInvariants):
    """All canonical vectors with entries <= ``max_mult`` and top index <= ``max_index``."""
    from itertools import product

    seen = set()
    for m in product(range(max_mult + 1), repeat=max_index + 1):
        inv = kind(m)
        if inv not in seen:
            seen.add(inv)
            yield inv


def invariants_with_d2_at_most(bound: int, kind=PreinjInvariants) -> list:
    """All preinjectives whose second dimension is at most ``bound``."""
    out = []

    def rec(top: int, rem: int, eps: list[int]):
        out.append(kind.from_epsilons(eps))
        for i in range(min(top, rem - 1), -1, -1):
            rec(i, rem - (i + 1), eps + [i])

    rec(bound, bound, [])
    return out

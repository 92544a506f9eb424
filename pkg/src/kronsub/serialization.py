"""JSON encoding of pencils, invariants and completion results.

Scalars are always strings ("3", "-1/2" over Q; canonical residues over
GF(p)), never JSON numbers, so files round-trip bit-exactly.
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

from .completion import CompletionResult
from .criteria import SubfactorWitness
from .errors import ParseError
from .exactmat import Field, Matrix
from .kroncore import PreinjInvariants, PreprojInvariants
from .pencil import Pencil

SCHEMA_VERSION = "v1"

_KINDS = {"preinjective": PreinjInvariants, "preprojective": PreprojInvariants}


def _kind_name(inv) -> str:
    return "preprojective" if isinstance(inv, PreprojInvariants) else "preinjective"


@lru_cache(maxsize=4096)
def _coerce(field: Field, x):
    try:
        return field(x)
    except (ZeroDivisionError, TypeError, ValueError) as exc:
        raise ParseError(f"bad scalar {x!r}: {exc}") from None


def _scalar(field: Field, x):
    # type() rather than isinstance: bools must not pass as ints
    if type(x) is not str and type(x) is not int:
        raise ParseError(f"entry {x!r} must be an integer or a fraction string")
    return _coerce(field, x)


def _rows(field: Field, data, rows: int, cols: int, what: str) -> Matrix:
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(f"{what}: expected {rows} rows")
    out = []
    for r in data:
        if not isinstance(r, list) or len(r) != cols:
            raise ParseError(f"{what}: every row must have {cols} entries")
        out.append(tuple(_scalar(field, x) for x in r))
    return Matrix._raw(field, tuple(out), rows, cols)


def _dim(d: dict, key: str) -> int:
    v = d.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise ParseError(f"'{key}' must be a nonnegative integer")
    return v


def _field(d: dict) -> Field:
    try:
        return Field.from_name(str(d.get("field", "")))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _entries(M: Matrix) -> list[list[str]]:
    return [[M.field.format(x) for x in r] for r in M.tolist()]


# -- matrices and pencils --------------------------------------------------


def matrix_to_json(M: Matrix) -> dict:
    return {"rows": M.rows, "cols": M.cols, "data": _entries(M)}


def matrix_from_json(d: dict, field: Field, what: str = "matrix") -> Matrix:
    if not isinstance(d, dict):
        raise ParseError(f"{what}: expected an object")
    return _rows(field, d.get("data"), _dim(d, "rows"), _dim(d, "cols"), what)


def pencil_to_json(P: Pencil) -> dict:
    m, n = P.shape
    return {"field": P.field.name, "rows": m, "cols": n, "A": _entries(P.A), "B": _entries(P.B)}


def pencil_from_json(d: dict) -> Pencil:
    if not isinstance(d, dict):
        raise ParseError("pencil file must hold a JSON object")
    f = _field(d)
    m, n = _dim(d, "rows"), _dim(d, "cols")
    return Pencil(_rows(f, d.get("A"), m, n, "A"), _rows(f, d.get("B"), m, n, "B"))


# -- invariants -------------------------------------------------------------


def invariants_to_json(inv) -> dict:
    return {"kind": _kind_name(inv), "mult": list(inv.mult)}


def invariants_from_json(d: dict):
    if not isinstance(d, dict):
        raise ParseError("invariants file must hold a JSON object")
    kind = _KINDS.get(d.get("kind", "preinjective"))
    if kind is None:
        raise ParseError(f"unknown kind {d.get('kind')!r}; expected one of {sorted(_KINDS)}")
    if "mult" in d and "eps" in d:
        raise ParseError("give either 'mult' or 'eps', not both")
    key = "mult" if "mult" in d else "eps"
    vals = d.get(key)
    if not isinstance(vals, list) or any(not isinstance(x, int) or isinstance(x, bool) or x < 0 for x in vals):
        raise ParseError(f"'{key}' must be a list of nonnegative integers")
    return kind(vals) if key == "mult" else kind.from_epsilons(vals)


# -- completion results -------------------------------------------------------


def witness_to_json(w: SubfactorWitness) -> dict:
    return {"b": list(w.b_seq), "linking": invariants_to_json(w.linking), "alpha": w.alpha, "beta": w.beta}


def witness_from_json(d: dict) -> SubfactorWitness:
    try:
        return SubfactorWitness(linking=invariants_from_json(d["linking"]), b_seq=tuple(int(x) for x in d["b"]),
                                alpha=int(d["alpha"]), beta=int(d["beta"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad witness: {exc}") from None


_BLOCKS = ("A12", "B12", "A21", "B21", "A22", "B22", "left", "right")


def completion_to_json(r: CompletionResult) -> dict:
    out = {"version": SCHEMA_VERSION, "field": r.left.field.name}
    for name in _BLOCKS:
        out[name] = matrix_to_json(getattr(r, name))
    out["witness"] = witness_to_json(r.linking)
    return out


def completion_from_json(d: dict) -> CompletionResult:
    if not isinstance(d, dict):
        raise ParseError("completion file must hold a JSON object")
    if d.get("version") != SCHEMA_VERSION:
        raise ParseError(f"unsupported completion schema {d.get('version')!r}; expected {SCHEMA_VERSION!r}")
    f = _field(d)
    mats = {}
    for name in _BLOCKS:
        if name not in d:
            raise ParseError(f"completion file lacks '{name}'")
        mats[name] = matrix_from_json(d[name], f, name)
    return CompletionResult(linking=witness_from_json(d.get("witness", {})), **mats)


# -- files ----------------------------------------------------------------------


def load_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from None


def dump_json(obj: dict, path) -> None:
    Path(path).write_text(json.dumps(obj, indent=1) + "\n", encoding="utf-8")


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=1)

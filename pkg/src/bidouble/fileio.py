"""JSON file formats for algebras, tensors, forms and bialgebras.

All indices are 0-based; scalars are strings ``"p/q"`` (or ``"p"``).
Serialization is canonical: zero entries dropped, entries sorted, keys sorted.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import KINDS, Algebra
from .errors import ParseError
from .exactlin import Tensor

ALGEBRA_KEYS = {"type", "kind", "dim", "basis", "products", "succ", "prec", "form", "name"}
TENSOR_KEYS = {"type", "shape", "entries", "name"}
BIALGEBRA_KEYS = {"type", "kind", "base", "comultiplications", "name"}
BIALGEBRA_KINDS = {"AIB": ("delta",), "DDB": ("delta_succ", "delta_prec"),
                   "LieBi": ("delta",), "PreLieBi": ("delta",)}
BIALGEBRA_BASE = {"AIB": "associative", "DDB": "dendriform", "LieBi": "lie", "PreLieBi": "prelie"}


def _scalar(text: Any) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ParseError(f"scalar must be a string 'p/q' or an integer, got {text!r}")
    s = str(text).strip()
    try:
        num, _, den = s.partition("/")
        if not den:
            den = "1"
        n, d = int(num), int(den)
    except ValueError:
        raise ParseError(f"malformed rational {text!r}") from None
    if d == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def _fmt(v: Fraction) -> str:
    return str(v)


def _entries(raw, shape, what) -> Tensor:
    if not isinstance(raw, list):
        raise ParseError(f"{what} must be a list of entries")
    rank = len(shape)
    seen = set()
    items = []
    for e in raw:
        if not isinstance(e, list) or len(e) != rank + 1:
            raise ParseError(f"{what} entry {e!r} must have {rank} indices and a value")
        idx = e[:rank]
        if not all(isinstance(i, int) and not isinstance(i, bool) for i in idx):
            raise ParseError(f"{what} entry {e!r} has a non-integer index")
        for i, n in zip(idx, shape):
            if not 0 <= i < n:
                raise ParseError(f"{what} index {i} out of range [0, {n})")
        key = tuple(idx)
        if key in seen:
            raise ParseError(f"duplicate {what} entry at {key}")
        seen.add(key)
        items.append((key, _scalar(e[-1])))
    return Tensor.from_sparse(shape, items)


def _dump_entries(t: Tensor) -> list:
    return [list(idx) + [_fmt(v)] for idx, v in t.nonzero()]


def _require_keys(obj: dict, allowed: set, what: str):
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be a JSON object")
    extra = set(obj) - allowed
    if extra:
        raise ParseError(f"unknown field(s) {sorted(extra)} in {what}")


# algebras

def algebra_from_obj(obj: dict) -> Algebra:
    _require_keys(obj, ALGEBRA_KEYS, "algebra file")
    if obj.get("type", "algebra") != "algebra":
        raise ParseError(f"expected an algebra, got type {obj.get('type')!r}")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise ParseError(f"unknown algebra kind {kind!r}")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ParseError("dim must be a non-negative integer")
    basis = obj.get("basis")
    if basis is not None:
        if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) for b in basis):
            raise ParseError("basis must list one name per dimension")
    shape = (dim, dim, dim)
    if kind == "dendriform":
        if "products" in obj:
            raise ParseError("dendriform files use 'succ' and 'prec', not 'products'")
        tables = {n: _entries(obj.get(n, []), shape, n) for n in ("succ", "prec")}
    else:
        if "succ" in obj or "prec" in obj:
            raise ParseError(f"{kind} files use 'products', not 'succ'/'prec'")
        tables = {"mul": _entries(obj.get("products", []), shape, "products")}
    return Algebra(kind, dim, tables, tuple(basis) if basis else None)


def algebra_to_obj(a: Algebra) -> dict:
    obj = {"type": "algebra", "kind": a.kind, "dim": a.dim}
    if a.basis:
        obj["basis"] = list(a.basis)
    if a.kind == "dendriform":
        obj["succ"] = _dump_entries(a.succ)
        obj["prec"] = _dump_entries(a.prec)
    else:
        obj["products"] = _dump_entries(a.mul)
    return obj


def form_from_obj(obj: dict, dim: int) -> Tensor:
    return _entries(obj, (dim, dim), "form")


def form_to_obj(gram: Tensor) -> list:
    return _dump_entries(gram)


# tensors

def tensor_from_obj(obj: dict) -> Tensor:
    _require_keys(obj, TENSOR_KEYS, "tensor file")
    if obj.get("type", "tensor") != "tensor":
        raise ParseError(f"expected a tensor, got type {obj.get('type')!r}")
    shape = obj.get("shape")
    if (not isinstance(shape, list) or not shape
            or not all(isinstance(n, int) and not isinstance(n, bool) and n >= 0 for n in shape)):
        raise ParseError("shape must be a non-empty list of dimensions")
    return _entries(obj.get("entries", []), tuple(shape), "tensor")


def tensor_to_obj(t: Tensor) -> dict:
    return {"type": "tensor", "shape": list(t.shape), "entries": _dump_entries(t)}


# bialgebras

def bialgebra_from_obj(obj: dict):
    from .bialgebra import BialgebraStructure

    _require_keys(obj, BIALGEBRA_KEYS, "bialgebra file")
    if obj.get("type", "bialgebra") != "bialgebra":
        raise ParseError(f"expected a bialgebra, got type {obj.get('type')!r}")
    kind = obj.get("kind")
    if kind not in BIALGEBRA_KINDS:
        raise ParseError(f"unknown bialgebra kind {kind!r}")
    base = algebra_from_obj(obj.get("base", {}))
    if base.kind != BIALGEBRA_BASE[kind]:
        raise ParseError(f"{kind} needs a {BIALGEBRA_BASE[kind]} base, got {base.kind}")
    raw = obj.get("comultiplications", {})
    _require_keys(raw, set(BIALGEBRA_KINDS[kind]), "comultiplications")
    n = base.dim
    comults = {c: _entries(raw.get(c, []), (n, n, n), c) for c in BIALGEBRA_KINDS[kind]}
    return BialgebraStructure(kind, base, comults)


def bialgebra_to_obj(b) -> dict:
    return {"type": "bialgebra", "kind": b.kind, "base": algebra_to_obj(b.base),
            "comultiplications": {k: _dump_entries(v) for k, v in b.comults.items()}}


# dispatch

def parse_obj(obj: Any):
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    kind = obj.get("type")
    if kind == "algebra":
        return algebra_from_obj(obj)
    if kind == "tensor":
        return tensor_from_obj(obj)
    if kind == "bialgebra":
        return bialgebra_from_obj(obj)
    raise ParseError(f"unknown file type {kind!r}")


def to_obj(value) -> dict:
    from .bialgebra import BialgebraStructure

    if isinstance(value, Algebra):
        return algebra_to_obj(value)
    if isinstance(value, Tensor):
        return tensor_to_obj(value)
    if isinstance(value, BialgebraStructure):
        return bialgebra_to_obj(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return parse_obj(obj)


def dumps_obj(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dumps(value) -> str:
    return dumps_obj(to_obj(value))


def load(path: str):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def load_with_form(path: str):
    """Parse an algebra file and its optional ``form`` field."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    value = parse_obj(obj)
    form = None
    if isinstance(value, Algebra) and "form" in obj:
        form = form_from_obj(obj["form"], value.dim)
    return value, form

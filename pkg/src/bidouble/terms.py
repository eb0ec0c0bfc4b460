"""Batched element expressions.

An :class:`Expr` is a family of tensors indexed by named free variables, each
ranging over a basis.  ``var("x", n)`` is the family of basis vectors
``e_0..e_{n-1}``; products, actions and linear maps applied to families stay
families, so a whole identity over all basis tuples is evaluated as a few
exact contractions instead of nested Python loops.
"""

from __future__ import annotations

import string
from typing import Sequence

from .exactlin import Tensor, einsum

_FREE = string.ascii_uppercase
_VAL = string.ascii_lowercase


class Expr:
    """Tensor family: ``data`` has the free axes first, then value axes."""

    __slots__ = ("axes", "data")

    def __init__(self, axes: Sequence[str], data: Tensor):
        self.axes = tuple(axes)
        self.data = data
        if len(self.axes) > data.ndim:
            raise ValueError("more free axes than tensor axes")

    @property
    def val_rank(self) -> int:
        return self.data.ndim - len(self.axes)

    @property
    def val_shape(self) -> tuple:
        return self.data.shape[len(self.axes):]

    def dims(self) -> dict:
        return dict(zip(self.axes, self.data.shape))

    def _align(self, axes: tuple, dims: dict) -> Tensor:
        t = self.data
        cur = list(self.axes)
        for name in axes:
            if name not in cur:
                t = t.expand_dims(len(cur))
                cur.append(name)
        order = [cur.index(n) for n in axes] + list(range(len(axes), t.ndim))
        t = t.transpose(order)
        shape = tuple(dims[n] for n in axes) + self.val_shape
        return t.broadcast_to(shape) if t.shape != shape else t

    def _binary(self, other: "Expr", op) -> "Expr":
        if not isinstance(other, Expr):
            return NotImplemented
        if self.val_shape != other.val_shape:
            raise ValueError(f"value shapes differ: {self.val_shape} vs {other.val_shape}")
        axes = self.axes + tuple(a for a in other.axes if a not in self.axes)
        dims = {**self.dims(), **other.dims()}
        return Expr(axes, op(self._align(axes, dims), other._align(axes, dims)))

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self):
        return Expr(self.axes, -self.data)

    def __mul__(self, scalar):
        return Expr(self.axes, self.data * scalar)

    __rmul__ = __mul__

    def materialize(self, order: Sequence[str]) -> Tensor:
        """Tensor with free axes in ``order`` followed by the value axes."""
        order = tuple(order)
        missing = set(self.axes) - set(order)
        if missing:
            raise ValueError(f"free axes {sorted(missing)} not listed in order")
        dims = self.dims()
        if any(n not in dims for n in order):
            raise ValueError("order names an axis the expression does not carry; "
                             "add a zero multiple of that variable first")
        return self._align(order, dims)


def var(name: str, n: int) -> Expr:
    """The family of basis vectors of an ``n``-dimensional space."""
    return Expr((name,), Tensor.identity(n))


def const(t: Tensor) -> Expr:
    return Expr((), t)


def zero(shape: Sequence[int]) -> Expr:
    return Expr((), Tensor.zeros(tuple(shape)))


class _Builder:
    """Assembles one einsum over several families sharing free variables."""

    def __init__(self):
        self.free = {}
        self.nval = 0
        self.terms = []
        self.ops = []

    def fresh(self) -> str:
        c = _VAL[self.nval]
        self.nval += 1
        return c

    def add(self, e: Expr) -> list:
        """Register a family; return letters for its value axes."""
        letters = []
        for name in e.axes:
            if name not in self.free:
                self.free[name] = _FREE[len(self.free)]
            letters.append(self.free[name])
        vals = [self.fresh() for _ in range(e.val_rank)]
        self.terms.append("".join(letters + vals))
        self.ops.append(e.data)
        return vals

    def raw(self, t: Tensor, letters: Sequence[str]):
        self.terms.append("".join(letters))
        self.ops.append(t)

    def run(self, out_vals: Sequence[str]) -> Expr:
        names = list(self.free)
        subs = ",".join(self.terms) + "->" + "".join(self.free[n] for n in names) + "".join(out_vals)
        return Expr(names, einsum(subs, *self.ops))


def mul(table: Tensor, u: Expr, v: Expr) -> Expr:
    """Product of vector families through structure constants ``table[i,j,k]``."""
    b = _Builder()
    (i,) = b.add(u)
    (j,) = b.add(v)
    k = b.fresh()
    b.raw(table, [i, j, k])
    return b.run([k])


def act(op: Tensor, x: Expr, v: Expr, slot: int = 0) -> Expr:
    """Apply the action ``op[actor, in, out]`` of ``x`` to value slot ``slot`` of ``v``."""
    b = _Builder()
    (a,) = b.add(x)
    vals = b.add(v)
    o = b.fresh()
    b.raw(op, [a, vals[slot], o])
    out = list(vals)
    out[slot] = o
    return b.run(out)


def lin(m: Tensor, v: Expr, slot: int = 0) -> Expr:
    """Apply the matrix ``m[out, in]`` to value slot ``slot`` of ``v``."""
    b = _Builder()
    vals = b.add(v)
    o = b.fresh()
    b.raw(m, [o, vals[slot]])
    out = list(vals)
    out[slot] = o
    return b.run(out)


def push(t: Tensor, v: Expr) -> Expr:
    """Apply a multilinear map ``t[in, out1, out2, ...]`` to a vector family."""
    b = _Builder()
    (i,) = b.add(v)
    outs = [b.fresh() for _ in range(t.ndim - 1)]
    b.raw(t, [i] + outs)
    return b.run(outs)


def tensor(*es: Expr) -> Expr:
    """Tensor product of families (value ranks add)."""
    b = _Builder()
    out = []
    for e in es:
        out += b.add(e)
    return b.run(out)


def perm(v: Expr, p: Sequence[int]) -> Expr:
    """Move value slot ``i`` to slot ``p[i]``."""
    inv = [0] * len(p)
    for i, q in enumerate(p):
        inv[q] = i
    k = len(v.axes)
    return Expr(v.axes, v.data.transpose(list(range(k)) + [k + i for i in inv]))


def swap(v: Expr) -> Expr:
    return perm(v, (1, 0))


def pair(gram: Tensor, u: Expr, v: Expr) -> Expr:
    """Scalar family ``B(u, v)`` for the Gram matrix ``gram[i, j] = B(e_i, e_j)``."""
    b = _Builder()
    (i,) = b.add(u)
    (j,) = b.add(v)
    b.raw(gram, [i, j])
    return b.run([])


def contract(u: Expr, v: Expr) -> Expr:
    """Scalar family ``⟨u, v⟩`` between a space and its dual (same ordered basis)."""
    b = _Builder()
    (i,) = b.add(u)
    (j,) = b.add(v)
    b.terms[-1] = b.terms[-1][:-1] + i
    return b.run([])

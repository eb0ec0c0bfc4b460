"""Exact rational tensors stored as an integer array over a common denominator."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence

import numpy as np

from .kernels import batched_matmul


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: every computation in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def _object_ints(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(0)
    return arr


class Tensor:
    """Immutable exact tensor ``num / den`` with ``num`` an object array of ints.

    Entries are Fractions when read.  The representation is kept normalized:
    ``den > 0`` and ``gcd(den, *num) == 1`` (with ``den == 1`` for zero).
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: np.ndarray, den: int = 1, *, _normalized: bool = False):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if num.dtype != object:
            num = num.astype(object)
        if not _normalized:
            if den < 0:
                num, den = -num, -den
            g = math.gcd(den, *num.flat) if num.size else den
            if g == 0:
                g = 1
            if g != 1:
                num = num // g
                den //= g
            if num.size and not any(num.flat):
                den = 1
        self._num = num
        self._den = den
        self._hash = None
        num.flags.writeable = False

    # construction

    @classmethod
    def of(cls, data) -> "Tensor":
        """Build from nested sequences of exact scalars (or a Tensor)."""
        if isinstance(data, Tensor):
            return data
        if isinstance(data, np.ndarray) and data.dtype != object:
            if data.dtype.kind not in "iu":
                raise TypeError("only integer numpy arrays are exact")
            return cls(data.astype(object))
        arr = np.array(data, dtype=object)
        fr = [to_fraction(v) for v in arr.flat]
        den = 1
        for f in fr:
            den = den * f.denominator // math.gcd(den, f.denominator)
        num = _object_ints(arr.shape)
        flat = num.reshape(-1) if num.ndim else None
        if num.ndim == 0:
            num[()] = fr[0].numerator * (den // fr[0].denominator)
        else:
            for i, f in enumerate(fr):
                flat[i] = f.numerator * (den // f.denominator)
        return cls(num, den)

    @classmethod
    def zeros(cls, shape: Sequence[int]) -> "Tensor":
        return cls(_object_ints(tuple(shape)), 1, _normalized=True)

    @classmethod
    def identity(cls, n: int) -> "Tensor":
        num = _object_ints((n, n))
        for i in range(n):
            num[i, i] = 1
        return cls(num, 1, _normalized=True)

    @classmethod
    def unit(cls, n: int, i: int) -> "Tensor":
        num = _object_ints((n,))
        num[i] = 1
        return cls(num, 1, _normalized=True)

    @classmethod
    def from_sparse(cls, shape: Sequence[int], items: Iterable) -> "Tensor":
        """Build from ``(index_tuple, value)`` pairs; repeated indices add up."""
        shape = tuple(shape)
        vals = {}
        for idx, val in items:
            idx = tuple(int(i) for i in idx)
            if len(idx) != len(shape):
                raise ValueError(f"index {idx} does not match shape {shape}")
            for i, n in zip(idx, shape):
                if not 0 <= i < n:
                    raise IndexError(f"index {idx} out of range for shape {shape}")
            vals[idx] = vals.get(idx, Fraction(0)) + to_fraction(val)
        den = 1
        for f in vals.values():
            den = den * f.denominator // math.gcd(den, f.denominator)
        num = _object_ints(shape)
        for idx, f in vals.items():
            num[idx] = f.numerator * (den // f.denominator)
        return cls(num, den)

    # basic properties

    @property
    def shape(self) -> tuple:
        return self._num.shape

    @property
    def ndim(self) -> int:
        return self._num.ndim

    @property
    def size(self) -> int:
        return self._num.size

    @property
    def numerators(self) -> np.ndarray:
        """Read-only integer numerators over :attr:`denominator`."""
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def __getitem__(self, idx):
        sub = self._num[idx]
        if isinstance(sub, np.ndarray):
            return Tensor(sub.copy(), self._den)
        return Fraction(sub, self._den)

    def tolist(self):
        """Nested lists of Fractions."""
        if self.ndim == 0:
            return Fraction(self._num[()], self._den)
        return [self[i].tolist() if self.ndim > 1 else self[i] for i in range(self.shape[0])]

    def nonzero(self) -> Iterator[tuple]:
        """Yield ``(index, value)`` for nonzero entries in lexicographic order."""
        for idx in zip(*np.nonzero(self._num != 0)):
            idx = tuple(int(i) for i in idx)
            yield idx, Fraction(self._num[idx], self._den)

    def is_zero(self) -> bool:
        return not any(self._num.flat)

    def count_nonzero(self) -> int:
        return int(np.count_nonzero(self._num != 0))

    def max_abs(self) -> Fraction:
        if self.size == 0:
            return Fraction(0)
        return Fraction(max(abs(v) for v in self._num.flat), self._den)

    # comparison

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.shape == other.shape and self._den == other._den
                and bool(np.all(self._num == other._num)))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self._den, tuple(self._num.flat)))
        return self._hash

    def __repr__(self):
        return f"Tensor({self.tolist()!r})"

    def __str__(self):
        return str(np.vectorize(lambda v: str(Fraction(v, self._den)), otypes=[object])(self._num))

    # arithmetic

    def _aligned(self, other: "Tensor"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        d = self._den * other._den // math.gcd(self._den, other._den)
        return self._num * (d // self._den), other._num * (d // other._den), d

    def __add__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        a, b, d = self._aligned(other)
        return Tensor(a + b, d)

    def __sub__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        a, b, d = self._aligned(other)
        return Tensor(a - b, d)

    def __neg__(self):
        return Tensor(-self._num, self._den, _normalized=True)

    def __pos__(self):
        return self

    def __mul__(self, scalar):
        if isinstance(scalar, Tensor):
            return NotImplemented
        s = to_fraction(scalar)
        return Tensor(self._num * s.numerator, self._den * s.denominator)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = to_fraction(scalar)
        if s == 0:
            raise ZeroDivisionError("division of a tensor by zero")
        return self * (1 / s)

    def __matmul__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if self.ndim == 2 and other.ndim == 2:
            return einsum("ij,jk->ik", self, other)
        if self.ndim == 2 and other.ndim == 1:
            return einsum("ij,j->i", self, other)
        if self.ndim == 1 and other.ndim == 2:
            return einsum("i,ij->j", self, other)
        if self.ndim == 1 and other.ndim == 1:
            return einsum("i,i->", self, other)
        raise ValueError("@ is defined for vectors and matrices only")

    # reshaping

    def transpose(self, *axes) -> "Tensor":
        if len(axes) == 1 and isinstance(axes[0], (tuple, list)):
            axes = tuple(axes[0])
        if not axes:
            axes = tuple(reversed(range(self.ndim)))
        return Tensor(np.transpose(self._num, axes).copy(), self._den, _normalized=True)

    @property
    def T(self) -> "Tensor":
        return self.transpose()

    def reshape(self, *shape) -> "Tensor":
        if len(shape) == 1 and isinstance(shape[0], (tuple, list)):
            shape = tuple(shape[0])
        return Tensor(self._num.reshape(shape).copy(), self._den, _normalized=True)

    def with_entry(self, idx, value) -> "Tensor":
        """Return a copy with one entry replaced."""
        v = to_fraction(value)
        d = self._den * v.denominator // math.gcd(self._den, v.denominator)
        num = self._num * (d // self._den)
        num[tuple(idx)] = v.numerator * (d // v.denominator)
        return Tensor(num, d)

    def broadcast_to(self, shape) -> "Tensor":
        return Tensor(np.broadcast_to(self._num, shape).copy(), self._den, _normalized=True)

    def expand_dims(self, axis) -> "Tensor":
        return Tensor(np.expand_dims(self._num, axis).copy(), self._den, _normalized=True)

    def sum(self, axis=None) -> "Tensor":
        out = self._num.sum(axis=axis)
        if not isinstance(out, np.ndarray):
            out = np.array(out, dtype=object)
        return Tensor(out.astype(object), self._den)

    def block(self, *slices) -> "Tensor":
        return Tensor(self._num[tuple(slices)].copy(), self._den)


def concatenate(parts: Sequence[Tensor], axis: int = 0) -> Tensor:
    """Concatenate tensors along ``axis``."""
    d = 1
    for p in parts:
        d = d * p.denominator // math.gcd(d, p.denominator)
    arrs = [p.numerators * (d // p.denominator) for p in parts]
    return Tensor(np.concatenate(arrs, axis=axis), d)


def _sum_out(num: np.ndarray, subs: str, keep: set) -> tuple:
    drop = [i for i, c in enumerate(subs) if c not in keep]
    if drop:
        num = num.sum(axis=tuple(drop))
        if not isinstance(num, np.ndarray):
            num = np.array(num, dtype=object)
        subs = "".join(c for c in subs if c in keep)
    return num, subs


def _diagonal(num: np.ndarray, subs: str) -> tuple:
    """Collapse repeated letters within one operand by taking diagonals."""
    while len(set(subs)) < len(subs):
        for i, c in enumerate(subs):
            j = subs.find(c, i + 1)
            if j >= 0:
                num = np.diagonal(num, axis1=i, axis2=j)
                subs = subs[:i] + subs[i + 1:j] + subs[j + 1:] + c
                break
    return num, subs


def _pair(a: np.ndarray, sa: str, b: np.ndarray, sb: str, keep: set) -> tuple:
    a, sa = _sum_out(a, sa, keep | set(sb))
    b, sb = _sum_out(b, sb, keep | set(sa))
    batch = [c for c in sa if c in sb and c in keep]
    contract = [c for c in sa if c in sb and c not in keep]
    af = [c for c in sa if c not in sb]
    bf = [c for c in sb if c not in sa]
    dims = {c: a.shape[sa.index(c)] for c in sa}
    dims.update({c: b.shape[sb.index(c)] for c in sb})
    for c in batch + contract:
        if a.shape[sa.index(c)] != b.shape[sb.index(c)]:
            raise ValueError(f"dimension mismatch for index {c!r}")
    at = np.transpose(a, [sa.index(c) for c in batch + af + contract])
    bt = np.transpose(b, [sb.index(c) for c in batch + contract + bf])
    B = math.prod(dims[c] for c in batch)
    M = math.prod(dims[c] for c in af)
    K = math.prod(dims[c] for c in contract)
    N = math.prod(dims[c] for c in bf)
    out = batched_matmul(at.reshape(B, M, K), bt.reshape(B, K, N))
    out = out.reshape([dims[c] for c in batch + af + bf])
    return out, "".join(batch + af + bf)


def einsum(subscripts: str, *operands: Tensor) -> Tensor:
    """Exact Einstein summation over Tensors.

    Supports explicit output (``"ij,jk->ik"``); repeated letters inside one
    operand denote diagonals.  Operands are contracted pairwise from the left
    and each pairwise step runs through the batched matmul kernel.
    """
    subscripts = subscripts.replace(" ", "")
    if "->" not in subscripts:
        raise ValueError("einsum requires an explicit output")
    lhs, out = subscripts.split("->")
    terms = lhs.split(",")
    if len(terms) != len(operands):
        raise ValueError("number of subscripts does not match operands")
    ops = [t if isinstance(t, Tensor) else Tensor.of(t) for t in operands]
    den = 1
    pieces = []
    for t, s in zip(ops, terms):
        if len(s) != t.ndim:
            raise ValueError(f"subscript {s!r} does not match rank {t.ndim}")
        num, s = _diagonal(t.numerators, s)
        pieces.append((num, s))
        den *= t.denominator
    num, cur = pieces[0]
    for k in range(1, len(pieces)):
        keep = set(out).union(*(set(s) for _, s in pieces[k + 1:]))
        num, cur = _pair(num, cur, pieces[k][0], pieces[k][1], keep)
    num, cur = _sum_out(num, cur, set(out))
    if sorted(cur) != sorted(out):
        raise ValueError(f"output letters {out!r} not available")
    num = np.transpose(num, [cur.index(c) for c in out]) if out else num
    return Tensor(np.ascontiguousarray(num).astype(object), den)

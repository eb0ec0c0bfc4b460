"""Exact Gaussian elimination, slot permutations and tensor-as-map helpers."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import SingularMatrixError
from .tensor import Tensor

# slot permutations: perm[i] is the destination slot of source slot i
SIGMA = (1, 0)
SIGMA_13 = (2, 1, 0)
SIGMA_123 = (1, 2, 0)  # x⊗y⊗z -> z⊗x⊗y
SIGMA_132 = (2, 0, 1)  # x⊗y⊗z -> y⊗z⊗x


def _rows(m: Tensor) -> list:
    return [list(r) for r in m.tolist()]


def _check_square(m: Tensor):
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"square matrix required, got shape {m.shape}")


def _echelon(rows: list, ncols: int):
    """Reduced row echelon form in place; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def det(m: Tensor) -> Fraction:
    """Exact determinant by Gaussian elimination."""
    _check_square(m)
    rows = _rows(m)
    n = len(rows)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        piv = rows[c][c]
        result *= piv
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / piv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return result


def invert(m: Tensor) -> Tensor:
    """Exact inverse; raises SingularMatrixError ("nondegenerate required")."""
    _check_square(m)
    n = m.shape[0]
    rows = [r + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(_rows(m))]
    pivots = _echelon(rows, n)
    if len(pivots) < n:
        raise SingularMatrixError("nondegenerate required: matrix is singular")
    return Tensor.of([r[n:] for r in rows])


def rank(m: Tensor) -> int:
    if m.ndim != 2:
        raise ValueError("rank needs a matrix")
    rows = _rows(m)
    return len(_echelon(rows, m.shape[1])) if rows else 0


def solve(m: Tensor, b: Tensor) -> Tensor:
    """Solve ``m @ x = b`` for square nonsingular ``m`` (``b`` vector or matrix)."""
    return invert(m) @ b


def pivot_columns(m: Tensor) -> list:
    """Indices of a maximal set of linearly independent columns (leftmost first)."""
    rows = _rows(m)
    return _echelon(rows, m.shape[1]) if rows else []


def coordinates(basis_cols: Tensor, v: Tensor) -> Tensor:
    """Coordinates of ``v`` (vector or matrix of columns) in the column basis.

    Raises ValueError if ``v`` is not in the span.
    """
    n, k = basis_cols.shape
    vm = v if v.ndim == 2 else v.reshape(n, 1)
    rows = [bc + vc for bc, vc in zip(_rows(basis_cols), _rows(vm))]
    piv = _echelon(rows, k)
    if len(piv) < k:
        raise ValueError("columns are not linearly independent")
    if any(any(x != 0 for x in r[k:]) for r in rows[k:]):
        raise ValueError("vector not in span")
    out = Tensor.of([r[k:] for r in rows[:k]]) if k else Tensor.zeros((0, vm.shape[1]))
    return out if v.ndim == 2 else out.reshape(k)


def permute(t: Tensor, perm: Sequence[int]) -> Tensor:
    """Move tensor slot ``i`` to slot ``perm[i]``.

    ``permute(permute(t, p), q) == permute(t, q∘p)``.
    """
    perm = tuple(perm)
    if sorted(perm) != list(range(t.ndim)):
        raise ValueError(f"{perm} is not a permutation of {t.ndim} slots")
    if len({t.shape[i] for i in range(t.ndim)}) > 1:
        dims = [t.shape[i] for i in range(t.ndim)]
        raise ValueError(f"slot dimensions differ: {dims}")
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return t.transpose(inv)


def compose(q: Sequence[int], p: Sequence[int]) -> tuple:
    """The permutation ``q∘p`` (apply ``p`` first)."""
    return tuple(q[p[i]] for i in range(len(p)))


def as_map(r: Tensor) -> Tensor:
    """Matrix of ``r`` viewed as a map from the dual space.

    For ``r = Σ a_pq e_p⊗e_q`` the map sends ``e_q*`` to ``Σ_p a_pq e_p``, so
    the matrix equals the coefficient matrix of ``r``.
    """
    if r.ndim != 2:
        raise ValueError("as_map needs a rank-2 tensor")
    return r


def is_symmetric(m: Tensor) -> bool:
    return m.ndim == 2 and m == m.T


def is_antisymmetric(m: Tensor) -> bool:
    return m.ndim == 2 and m == -m.T

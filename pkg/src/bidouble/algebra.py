"""Algebras given by structure constants, their axioms, and the functors between kinds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from . import terms as tm
from .certificate import Certificate, combine, from_residual
from .errors import AxiomError, KindError
from .exactlin import Tensor, einsum

KINDS = ("associative", "dendriform", "prelie", "lie")
TABLE_NAMES = {
    "associative": ("mul",),
    "prelie": ("mul",),
    "lie": ("mul",),
    "dendriform": ("succ", "prec"),
}


@dataclass(frozen=True, eq=False)
class Algebra:
    """A finite-dimensional algebra on the basis ``e_0..e_{dim-1}``.

    ``tables`` maps a product name to structure constants ``t[i, j, k]``, the
    coefficient of ``e_k`` in ``e_i ∘ e_j``.  Associative, pre-Lie and Lie
    algebras have one table ``mul``; dendriform algebras have ``succ`` (≻) and
    ``prec`` (≺).
    """

    kind: str
    dim: int
    tables: Mapping[str, Tensor]
    basis: Optional[tuple] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise KindError(f"unknown algebra kind {self.kind!r}")
        names = TABLE_NAMES[self.kind]
        if set(self.tables) != set(names):
            raise KindError(f"{self.kind} algebra needs tables {names}, got {sorted(self.tables)}")
        n = self.dim
        for name, t in self.tables.items():
            if t.shape != (n, n, n):
                raise ValueError(f"table {name!r} has shape {t.shape}, expected {(n, n, n)}")
        object.__setattr__(self, "tables", {k: self.tables[k] for k in names})
        if self.basis is not None:
            object.__setattr__(self, "basis", tuple(self.basis))
            if len(self.basis) != n:
                raise ValueError("basis labels do not match dimension")

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.kind == other.kind and self.dim == other.dim
                and all(self.tables[k] == other.tables[k] for k in self.tables))

    def __hash__(self):
        return hash((self.kind, self.dim, tuple(self.tables.values())))

    def __repr__(self):
        return f"Algebra({self.kind}, dim={self.dim})"

    @property
    def mul(self) -> Tensor:
        if "mul" in self.tables:
            return self.tables["mul"]
        return self.star

    @property
    def succ(self) -> Tensor:
        return self._dend("succ")

    @property
    def prec(self) -> Tensor:
        return self._dend("prec")

    @property
    def star(self) -> Tensor:
        """The associated product ``≻ + ≺`` of a dendriform algebra."""
        return self._dend("succ") + self._dend("prec")

    def _dend(self, name):
        if self.kind != "dendriform":
            raise KindError(f"{name} table exists only for dendriform algebras")
        return self.tables[name]

    def product(self, x: Tensor, y: Tensor, table: str = "mul") -> Tensor:
        """Product of two coordinate vectors."""
        t = self.mul if table == "mul" else self.tables[table]
        return einsum("i,j,ijk->k", x, y, t)

    def with_tables(self, **tables) -> "Algebra":
        return Algebra(self.kind, self.dim, {**self.tables, **tables}, self.basis)


def make(kind: str, dim: int, basis=None, **tables) -> Algebra:
    """Build an algebra from sparse ``(i, j, k, value)`` entries or full tables.

    Missing tables default to zero.
    """
    full = {}
    for name in TABLE_NAMES.get(kind, ()):
        data = tables.pop(name, ())
        if isinstance(data, Tensor):
            full[name] = data
        else:
            full[name] = Tensor.from_sparse((dim, dim, dim), ((e[:3], e[3]) for e in data))
    if tables:
        raise KindError(f"unexpected tables {sorted(tables)} for kind {kind!r}")
    return Algebra(kind, dim, full, basis)


def zero_algebra(kind: str, dim: int) -> Algebra:
    return make(kind, dim)


# axiom checks

def _triples(n):
    return tm.var("x", n), tm.var("y", n), tm.var("z", n)


def _assoc_residual(t: Tensor) -> Tensor:
    n = t.shape[0]
    x, y, z = _triples(n)
    res = tm.mul(t, tm.mul(t, x, y), z) - tm.mul(t, x, tm.mul(t, y, z))
    return res.materialize("xyz")


def check_axioms(a: Algebra) -> Certificate:
    """Evaluate the defining identities of ``a.kind`` on all basis triples."""
    n = a.dim
    x, y, z = _triples(n)
    if a.kind == "associative":
        parts = [from_residual("associativity", _assoc_residual(a.mul), 3)]
    elif a.kind == "dendriform":
        s, p, st = a.succ, a.prec, a.star
        d1 = tm.mul(p, tm.mul(p, x, y), z) - tm.mul(p, x, tm.mul(st, y, z))
        d2 = tm.mul(p, tm.mul(s, x, y), z) - tm.mul(s, x, tm.mul(p, y, z))
        d3 = tm.mul(s, x, tm.mul(s, y, z)) - tm.mul(s, tm.mul(st, x, y), z)
        parts = [from_residual(f"dendriform-{i}", d.materialize("xyz"), 3)
                 for i, d in enumerate((d1, d2, d3), 1)]
    elif a.kind == "prelie":
        parts = [from_residual("left-symmetric associator", prelie_residual(a.mul), 3)]
    else:
        t = a.mul
        anti = tm.mul(t, x, y) + tm.mul(t, y, x)
        jac = (tm.mul(t, tm.mul(t, x, y), z) + tm.mul(t, tm.mul(t, y, z), x)
               + tm.mul(t, tm.mul(t, z, x), y))
        parts = [from_residual("antisymmetry", anti.materialize("xy"), 2),
                 from_residual("jacobi", jac.materialize("xyz"), 3)]
    return combine(f"{a.kind} axioms", parts)


def prelie_residual(t: Tensor) -> Tensor:
    """``(xy)z − x(yz) − (yx)z + y(xz)`` over all basis triples."""
    x, y, z = _triples(t.shape[0])
    res = (tm.mul(t, tm.mul(t, x, y), z) - tm.mul(t, x, tm.mul(t, y, z))
           - tm.mul(t, tm.mul(t, y, x), z) + tm.mul(t, y, tm.mul(t, x, z)))
    return res.materialize("xyz")


def require_axioms(a: Algebra, what: str = "input") -> None:
    cert = check_axioms(a)
    if not cert.passed:
        raise AxiomError(f"{what} fails the {a.kind} axioms ({cert.failing_identity} "
                         f"at {cert.first_witness})", cert)


def _require_kind(a: Algebra, *kinds):
    if a.kind not in kinds:
        raise KindError(f"expected a {' or '.join(kinds)} algebra, got {a.kind}")


# functors

def associated_associative(d: Algebra) -> Algebra:
    """``x*y = x≺y + x≻y``."""
    _require_kind(d, "dendriform")
    require_axioms(d)
    return Algebra("associative", d.dim, {"mul": d.star}, d.basis)


def dendriform_to_prelie(d: Algebra) -> Algebra:
    """``x·y = x≻y − y≺x``."""
    _require_kind(d, "dendriform")
    require_axioms(d)
    return Algebra("prelie", d.dim, {"mul": d.succ - d.prec.transpose(1, 0, 2)}, d.basis)


def commutator_lie(a: Algebra) -> Algebra:
    """``[x,y] = xy − yx`` for associative or pre-Lie input."""
    _require_kind(a, "associative", "prelie")
    require_axioms(a)
    t = a.mul
    return Algebra("lie", a.dim, {"mul": t - t.transpose(1, 0, 2)}, a.basis)


def as_prelie(a: Algebra) -> Algebra:
    """An associative algebra regarded as a pre-Lie algebra."""
    _require_kind(a, "associative")
    return Algebra("prelie", a.dim, {"mul": a.mul}, a.basis)


def opposite(a: Algebra) -> Algebra:
    """Opposite algebra ``x ∘' y = y ∘ x`` (for dendriform, ``x≻'y = y≺x``)."""
    if a.kind == "dendriform":
        return Algebra("dendriform", a.dim, {"succ": a.prec.transpose(1, 0, 2),
                                             "prec": a.succ.transpose(1, 0, 2)}, a.basis)
    return Algebra(a.kind, a.dim, {"mul": a.mul.transpose(1, 0, 2)}, a.basis)


def trivial_dendriform(a: Algebra, side: str = "succ") -> Algebra:
    """Dendriform algebra with ``≻ = ·, ≺ = 0`` (side ``succ``) or the reverse."""
    _require_kind(a, "associative")
    z = Tensor.zeros(a.mul.shape)
    if side == "succ":
        return Algebra("dendriform", a.dim, {"succ": a.mul, "prec": z}, a.basis)
    if side == "prec":
        return Algebra("dendriform", a.dim, {"succ": z, "prec": a.mul}, a.basis)
    raise ValueError("side must be 'succ' or 'prec'")


# operators

SIDES = {
    "L": ("mul", "left"), "R": ("mul", "right"),
    "L≻": ("succ", "left"), "R≻": ("succ", "right"),
    "L≺": ("prec", "left"), "R≺": ("prec", "right"),
    "Lsucc": ("succ", "left"), "Rsucc": ("succ", "right"),
    "Lprec": ("prec", "left"), "Rprec": ("prec", "right"),
    "ad": ("mul", "left"),
}


def operator_family(a: Algebra, side: str) -> Tensor:
    """All multiplication operators at once as ``op[x, in, out]``.

    ``L``/``R`` of a dendriform algebra use the associated product ``*``.
    """
    if side not in SIDES:
        raise KindError(f"unknown operator side {side!r}")
    table, hand = SIDES[side]
    if table != "mul" and a.kind != "dendriform":
        raise KindError(f"{side} needs a dendriform algebra")
    if side == "ad" and a.kind != "lie":
        raise KindError("ad is the adjoint action of a Lie algebra")
    t = a.mul if table == "mul" else a.tables[table]
    return t if hand == "left" else t.transpose(1, 0, 2)


def mult_operator(a: Algebra, side: str, x: Tensor) -> Tensor:
    """Matrix ``M[out, in]`` of the multiplication operator by the element ``x``."""
    return einsum("a,aio->oi", x, operator_family(a, side))


def is_two_step_nilpotent(a: Algebra) -> bool:
    """All products of three elements vanish, in either bracketing."""
    _require_kind(a, "associative")
    x, y, z = _triples(a.dim)
    t = a.mul
    left = tm.mul(t, tm.mul(t, x, y), z).materialize("xyz")
    right = tm.mul(t, x, tm.mul(t, y, z)).materialize("xyz")
    return left.is_zero() and right.is_zero()


def change_basis(a: Algebra, p: Tensor) -> Algebra:
    """Rewrite ``a`` in the basis whose i-th vector is column ``i`` of ``p``."""
    from .exactlin import invert

    pinv = invert(p)
    new = {name: einsum("ai,bj,abc,kc->ijk", p, p, t, pinv) for name, t in a.tables.items()}
    return Algebra(a.kind, a.dim, new)

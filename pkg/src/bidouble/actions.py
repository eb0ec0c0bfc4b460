"""Bimodules, representations, dual modules and semidirect sums.

An action map is stored as a rank-3 tensor ``op[x, in, out]``: the action of
the basis vector ``e_x`` sends the carrier basis vector ``v_in`` to
``Σ_out op[x, in, out] v_out``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import terms as tm
from .algebra import Algebra, operator_family
from .certificate import Certificate, combine, from_residual
from .errors import AxiomError, KindError
from .exactlin import Tensor, concatenate

MAP_NAMES = {
    "associative": ("l", "r"),
    "prelie": ("l", "r"),
    "dendriform": ("l_succ", "r_succ", "l_prec", "r_prec"),
    "lie": ("rho",),
}


@dataclass(frozen=True, eq=False)
class ActionFamily:
    """Named action maps of an algebra of ``algebra_dim`` on a carrier space."""

    kind: str
    algebra_dim: int
    carrier_dim: int
    maps: Mapping[str, Tensor]

    def __post_init__(self):
        if self.kind not in MAP_NAMES:
            raise KindError(f"unknown module kind {self.kind!r}")
        names = MAP_NAMES[self.kind]
        if set(self.maps) != set(names):
            raise KindError(f"{self.kind} module needs maps {names}, got {sorted(self.maps)}")
        shape = (self.algebra_dim, self.carrier_dim, self.carrier_dim)
        for k, t in self.maps.items():
            if t.shape != shape:
                raise ValueError(f"map {k!r} has shape {t.shape}, expected {shape}")
        object.__setattr__(self, "maps", {k: self.maps[k] for k in names})

    def __getitem__(self, name) -> Tensor:
        return self.maps[name]

    def __eq__(self, other):
        if not isinstance(other, ActionFamily):
            return NotImplemented
        return (self.kind == other.kind and self.carrier_dim == other.carrier_dim
                and all(self.maps[k] == other.maps[k] for k in self.maps))

    def __repr__(self):
        return f"ActionFamily({self.kind}, {self.algebra_dim}->{self.carrier_dim})"


def family(kind: str, algebra_dim: int, carrier_dim: int, **maps) -> ActionFamily:
    """Build a family; omitted maps are zero."""
    shape = (algebra_dim, carrier_dim, carrier_dim)
    full = {n: maps.pop(n, None) or Tensor.zeros(shape) for n in MAP_NAMES[kind]}
    if maps:
        raise KindError(f"unexpected maps {sorted(maps)} for kind {kind!r}")
    return ActionFamily(kind, algebra_dim, carrier_dim, full)


def dual_op(op: Tensor) -> Tensor:
    """The dual action ``l*(x) = l(x)^T`` on the dual carrier (no sign)."""
    return op.transpose(0, 2, 1)


def regular(a: Algebra, *sides: str) -> ActionFamily:
    """Family of multiplication operators of ``a`` acting on itself.

    ``sides`` lists one operator name per map slot (``"0"`` for zero), e.g.
    ``regular(a, "L", "R")`` or ``regular(d, "L≻", "R≻", "L≺", "R≺")``.
    Suffix ``*`` takes the dual (transpose) on the dual space, prefix ``-``
    negates.
    """
    kind = "associative" if a.kind == "dendriform" and len(sides) == 2 else a.kind
    names = MAP_NAMES[kind]
    if len(sides) != len(names):
        raise KindError(f"{kind} module needs {len(names)} maps")
    n = a.dim
    maps = {}
    for name, side in zip(names, sides):
        maps[name] = _side_tensor(a, side)
    return ActionFamily(kind, n, n, maps)


def _side_tensor(a: Algebra, side: str) -> Tensor:
    n = a.dim
    total = Tensor.zeros((n, n, n))
    for term in side.replace("-", "+-").split("+"):
        term = term.strip()
        if not term:
            continue
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("-")
        if term == "0":
            continue
        dual = term.endswith("*")
        op = operator_family(a, term.rstrip("*"))
        if dual:
            op = dual_op(op)
        total = total + op * sign
    return total


def lie_dual_op(op: Tensor) -> Tensor:
    """Dual representation ``ρ*(x) = −ρ(x)^T``."""
    return -dual_op(op)


# checks

def _vars(a_dim, v_dim):
    return tm.var("x", a_dim), tm.var("y", a_dim), tm.var("v", v_dim)


def _check_compat(a: Algebra, f: ActionFamily):
    kind = a.kind
    if f.kind != kind:
        raise KindError(f"{f.kind} module for a {kind} algebra")
    if f.algebra_dim != a.dim:
        raise ValueError("module and algebra dimensions differ")


def bimodule_residuals(a: Algebra, f: ActionFamily) -> list:
    """Named residual tensors ``[x, y, v, out]`` of the module identities."""
    _check_compat(a, f)
    x, y, v = _vars(a.dim, f.carrier_dim)
    act = tm.act
    out = []
    if a.kind == "associative":
        l, r, m = f["l"], f["r"], a.mul
        out.append(("l(xy) = l(x)l(y)",
                    act(l, tm.mul(m, x, y), v) - act(l, x, act(l, y, v))))
        out.append(("r(xy) = r(y)r(x)",
                    act(r, tm.mul(m, x, y), v) - act(r, y, act(r, x, v))))
        out.append(("l(x)r(y) = r(y)l(x)",
                    act(l, x, act(r, y, v)) - act(r, y, act(l, x, v))))
    elif a.kind == "prelie":
        l, r, m = f["l"], f["r"], a.mul
        out.append(("l[x,y] = [l(x),l(y)]",
                    act(l, tm.mul(m, x, y), v) - act(l, tm.mul(m, y, x), v)
                    - act(l, x, act(l, y, v)) + act(l, y, act(l, x, v))))
        out.append(("l(x)r(y) - r(y)l(x) = r(xy) - r(y)r(x)",
                    act(l, x, act(r, y, v)) - act(r, y, act(l, x, v))
                    - act(r, tm.mul(m, x, y), v) + act(r, y, act(r, x, v))))
    elif a.kind == "lie":
        rho, m = f["rho"], a.mul
        out.append(("rho[x,y] = [rho(x),rho(y)]",
                    act(rho, tm.mul(m, x, y), v) - act(rho, x, act(rho, y, v))
                    + act(rho, y, act(rho, x, v))))
    else:
        ls, rs, lp, rp = f["l_succ"], f["r_succ"], f["l_prec"], f["r_prec"]
        lst, rst = ls + lp, rs + rp
        s, p, st = a.succ, a.prec, a.star
        out += [
            ("l≺(x≺y) = l≺(x)l*(y)", act(lp, tm.mul(p, x, y), v) - act(lp, x, act(lst, y, v))),
            ("r≺(x)l≺(y) = l≺(y)r*(x)", act(rp, x, act(lp, y, v)) - act(lp, y, act(rst, x, v))),
            ("r≺(x)r≺(y) = r≺(y*x)", act(rp, x, act(rp, y, v)) - act(rp, tm.mul(st, y, x), v)),
            ("l≺(x≻y) = l≻(x)l≺(y)", act(lp, tm.mul(s, x, y), v) - act(ls, x, act(lp, y, v))),
            ("r≺(x)l≻(y) = l≻(y)r≺(x)", act(rp, x, act(ls, y, v)) - act(ls, y, act(rp, x, v))),
            ("r≺(x)r≻(y) = r≻(y≺x)", act(rp, x, act(rs, y, v)) - act(rs, tm.mul(p, y, x), v)),
            ("l≻(x*y) = l≻(x)l≻(y)", act(ls, tm.mul(st, x, y), v) - act(ls, x, act(ls, y, v))),
            ("r≻(x)l*(y) = l≻(y)r≻(x)", act(rs, x, act(lst, y, v)) - act(ls, y, act(rs, x, v))),
            ("r≻(x)r*(y) = r≻(y≻x)", act(rs, x, act(rst, y, v)) - act(rs, tm.mul(s, y, x), v)),
        ]
    return [(name, e.materialize("xyv")) for name, e in out]


def check_bimodule(a: Algebra, f: ActionFamily) -> Certificate:
    """Module identities on all basis pairs ``(x, y)`` and carrier vectors ``v``."""
    parts = [from_residual(name, res, 3) for name, res in bimodule_residuals(a, f)]
    label = "representation" if a.kind == "lie" else "bimodule"
    return combine(f"{a.kind} {label}", parts)


def require_bimodule(a: Algebra, f: ActionFamily, what: str = "module") -> None:
    cert = check_bimodule(a, f)
    if not cert.passed:
        raise AxiomError(f"{what} fails the module identities "
                         f"({cert.failing_identity} at {cert.first_witness})", cert)


def dual_family(f: ActionFamily) -> ActionFamily:
    """Dual family without verification (see :func:`dual_bimodule`)."""
    if f.kind in ("associative",):
        maps = {"l": dual_op(f["r"]), "r": dual_op(f["l"])}
    elif f.kind == "dendriform":
        ls, rs, lp, rp = (dual_op(f[k]) for k in ("l_succ", "r_succ", "l_prec", "r_prec"))
        maps = {"l_succ": rs + rp, "r_succ": -lp, "l_prec": -rs, "r_prec": ls + lp}
    elif f.kind == "lie":
        maps = {"rho": lie_dual_op(f["rho"])}
    else:
        l, r = f["l"], f["r"]
        maps = {"l": lie_dual_op(l) - lie_dual_op(r), "r": -lie_dual_op(r)}
    return ActionFamily(f.kind, f.algebra_dim, f.carrier_dim, maps)


def dual_bimodule(a: Algebra, f: ActionFamily) -> ActionFamily:
    """Dual module on the dual carrier.

    Associative ``(l, r) -> (r*, l*)``; dendriform
    ``(l≻, r≻, l≺, r≺) -> (r≻*+r≺*, −l≺*, −r≻*, l≻*+l≺*)``; Lie ``ρ -> −ρ^T``;
    pre-Lie ``(l, r) -> (l* − r*, −r*)`` with Lie-dual transposes.
    """
    require_bimodule(a, f)
    return dual_family(f)


# semidirect sums

def _block_table(n: int, m: int, blocks) -> Tensor:
    """Assemble a table on A⊕V from ``{(P, Q, R): tensor}`` blocks, P,Q,R in {0, 1}."""
    dims = (n, m)
    rows = []
    for p in (0, 1):
        cols = []
        for q in (0, 1):
            outs = [blocks.get((p, q, r), Tensor.zeros((dims[p], dims[q], dims[r])))
                    for r in (0, 1)]
            cols.append(concatenate(outs, axis=2))
        rows.append(concatenate(cols, axis=1))
    return concatenate(rows, axis=0)


def semidirect_tables(a: Algebra, f: ActionFamily) -> dict:
    """Product tables on A⊕V (A first), without verifying the module."""
    _check_compat(a, f)
    n, m = a.dim, f.carrier_dim
    if a.kind in ("associative", "prelie"):
        # (x+u)(y+v) = xy + l(x)v + r(y)u
        blocks = {(0, 0, 0): a.mul, (0, 1, 1): f["l"],
                  (1, 0, 1): f["r"].transpose(1, 0, 2)}
        return {"mul": _block_table(n, m, blocks)}
    if a.kind == "lie":
        # [x+u, y+v] = [x,y] + rho(x)v - rho(y)u
        blocks = {(0, 0, 0): a.mul, (0, 1, 1): f["rho"],
                  (1, 0, 1): -f["rho"].transpose(1, 0, 2)}
        return {"mul": _block_table(n, m, blocks)}
    # (x+u)≻(y+v) = x≻y + l≻(x)v + r≻(y)u, same for ≺
    out = {}
    for name, l, r in (("succ", "l_succ", "r_succ"), ("prec", "l_prec", "r_prec")):
        blocks = {(0, 0, 0): a.tables[name], (0, 1, 1): f[l],
                  (1, 0, 1): f[r].transpose(1, 0, 2)}
        out[name] = _block_table(n, m, blocks)
    return out


def semidirect(a: Algebra, f: ActionFamily) -> Algebra:
    """Semidirect sum ``A ⋉ V`` of the same kind as ``a`` (module verified first)."""
    require_bimodule(a, f)
    return Algebra(a.kind, a.dim + f.carrier_dim, semidirect_tables(a, f))

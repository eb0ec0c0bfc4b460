"""Matched pairs of algebras and their bicrossed products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import terms as tm
from .actions import ActionFamily, _block_table, check_bimodule, family
from .algebra import Algebra, change_basis
from .certificate import Certificate, combine, from_residual
from .errors import AxiomError, KindError, NotSubalgebraError
from .exactlin import Tensor, concatenate, invert

ASSOC_EQS = tuple(f"assoc-mp-{i}" for i in range(1, 7))
DEND_EQS = tuple(f"dendriform-mp-{i:02d}" for i in range(1, 19))
LIE_EQS = ("lie-mp-1", "lie-mp-2")


@dataclass(frozen=True, eq=False)
class MatchedPairData:
    """Algebras ``a``, ``b`` of one kind with actions of each on the other."""

    a: Algebra
    b: Algebra
    a_on_b: ActionFamily
    b_on_a: ActionFamily

    def __post_init__(self):
        if self.a.kind != self.b.kind:
            raise KindError(f"matched pair of {self.a.kind} and {self.b.kind} algebras")
        for fam, src, dst in ((self.a_on_b, self.a, self.b), (self.b_on_a, self.b, self.a)):
            if fam.kind != self.a.kind:
                raise KindError(f"{fam.kind} action in a {self.a.kind} matched pair")
            if fam.algebra_dim != src.dim or fam.carrier_dim != dst.dim:
                raise ValueError("action dimensions do not match the algebras")


def _eq(name, expr, order="xyab"):
    axes = [c for c in order if c in expr.axes]
    return name, expr.materialize(axes), len(axes)


def _assoc(mp: MatchedPairData):
    A, B = mp.a, mp.b
    x, y = tm.var("x", A.dim), tm.var("y", A.dim)
    a, b = tm.var("a", B.dim), tm.var("b", B.dim)
    lA, rA = mp.a_on_b["l"], mp.a_on_b["r"]
    lB, rB = mp.b_on_a["l"], mp.b_on_a["r"]
    dot, circ = A.mul, B.mul
    act, mul = tm.act, tm.mul
    return [
        _eq(ASSOC_EQS[0], act(lA, x, mul(circ, a, b)) - act(lA, act(rB, a, x), b)
            - mul(circ, act(lA, x, a), b)),
        _eq(ASSOC_EQS[1], act(rA, x, mul(circ, a, b)) - act(rA, act(lB, b, x), a)
            - mul(circ, a, act(rA, x, b))),
        _eq(ASSOC_EQS[2], act(lB, a, mul(dot, x, y)) - act(lB, act(rA, x, a), y)
            - mul(dot, act(lB, a, x), y)),
        _eq(ASSOC_EQS[3], act(rB, a, mul(dot, x, y)) - act(rB, act(lA, y, a), x)
            - mul(dot, x, act(rB, a, y))),
        _eq(ASSOC_EQS[4], act(lA, act(lB, a, x), b) + mul(circ, act(rA, x, a), b)
            - act(rA, act(rB, b, x), a) - mul(circ, a, act(lA, x, b))),
        _eq(ASSOC_EQS[5], act(lB, act(lA, x, a), y) + mul(dot, act(rB, a, x), y)
            - act(rB, act(rA, y, a), x) - mul(dot, x, act(lB, a, y))),
    ]


def _dend(mp: MatchedPairData):
    A, B = mp.a, mp.b
    x, y = tm.var("x", A.dim), tm.var("y", A.dim)
    a, b = tm.var("a", B.dim), tm.var("b", B.dim)
    F, G = mp.a_on_b, mp.b_on_a
    lsA, rsA, lpA, rpA = F["l_succ"], F["r_succ"], F["l_prec"], F["r_prec"]
    lsB, rsB, lpB, rpB = G["l_succ"], G["r_succ"], G["l_prec"], G["r_prec"]
    lA, rA, lB, rB = lsA + lpA, rsA + rpA, lsB + lpB, rsB + rpB
    sA, pA, stA = A.succ, A.prec, A.star
    sB, pB, stB = B.succ, B.prec, B.star
    act, mul = tm.act, tm.mul
    eqs = [
        act(rpA, x, mul(pB, a, b)) - mul(pB, a, act(rA, x, b)) - act(rpA, act(lB, b, x), a),
        act(lpA, act(lpB, a, x), b) + mul(pB, act(rpA, x, a), b)
        - mul(pB, a, act(lA, x, b)) - act(rpA, act(rB, b, x), a),
        act(lpA, x, mul(stB, a, b)) - mul(pB, act(lpA, x, a), b) - act(lpA, act(rpB, a, x), b),
        act(rpA, x, mul(sB, a, b)) - act(rsA, act(lpB, b, x), a) - mul(sB, a, act(rpA, x, b)),
        act(lpA, act(lsB, a, x), b) + mul(pB, act(rsA, x, a), b)
        - mul(sB, a, act(lpA, x, b)) - act(rsA, act(rpB, b, x), a),
        act(lsA, x, mul(pB, a, b)) - mul(pB, act(lsA, x, a), b) - act(lpA, act(rsB, a, x), b),
        act(rsA, x, mul(stB, a, b)) - mul(sB, a, act(rsA, x, b)) - act(rsA, act(lsB, b, x), a),
        mul(sB, a, act(lsA, x, b)) + act(rsA, act(rsB, b, x), a)
        - act(lsA, act(lB, a, x), b) - mul(sB, act(rA, x, a), b),
        act(lsA, x, mul(sB, a, b)) - mul(sB, act(lA, x, a), b) - act(lsA, act(rB, a, x), b),
        act(rpB, a, mul(pA, x, y)) - mul(pA, x, act(rB, a, y)) - act(rpB, act(lA, y, a), x),
        act(lpB, act(lpA, x, a), y) + mul(pA, act(rpB, a, x), y)
        - mul(pA, x, act(lB, a, y)) - act(rpB, act(rA, y, a), x),
        act(lpB, a, mul(stA, x, y)) - mul(pA, act(lpB, a, x), y) - act(lpB, act(rpA, x, a), y),
        act(rpB, a, mul(sA, x, y)) - act(rsB, act(lpA, y, a), x) - mul(sA, x, act(rpB, a, y)),
        act(lpB, act(lsA, x, a), y) + mul(pA, act(rsB, a, x), y)
        - mul(sA, x, act(lpB, a, y)) - act(rsB, act(rpA, y, a), x),
        act(lsB, a, mul(pA, x, y)) - mul(pA, act(lsB, a, x), y) - act(lpB, act(rsA, x, a), y),
        act(rsB, a, mul(stA, x, y)) - mul(sA, x, act(rsB, a, y)) - act(rsB, act(lsA, y, a), x),
        mul(sA, x, act(lsB, a, y)) + act(rsB, act(rsA, y, a), x)
        - act(lsB, act(lA, x, a), y) - mul(sA, act(rB, a, x), y),
        act(lsB, a, mul(sA, x, y)) - mul(sA, act(lB, a, x), y) - act(lsB, act(rA, x, a), y),
    ]
    return [_eq(name, e) for name, e in zip(DEND_EQS, eqs)]


def _lie(mp: MatchedPairData):
    G, H = mp.a, mp.b
    x, y = tm.var("x", G.dim), tm.var("y", G.dim)
    a, b = tm.var("a", H.dim), tm.var("b", H.dim)
    rho, mu = mp.a_on_b["rho"], mp.b_on_a["rho"]
    g, h = G.mul, H.mul
    act, mul = tm.act, tm.mul
    return [
        _eq(LIE_EQS[0], act(rho, x, mul(h, a, b)) - mul(h, act(rho, x, a), b)
            - mul(h, a, act(rho, x, b)) + act(rho, act(mu, a, x), b) - act(rho, act(mu, b, x), a)),
        _eq(LIE_EQS[1], act(mu, a, mul(g, x, y)) - mul(g, act(mu, a, x), y)
            - mul(g, x, act(mu, a, y)) + act(mu, act(rho, x, a), y) - act(mu, act(rho, y, a), x)),
    ]


def matched_pair_residuals(mp: MatchedPairData) -> list:
    """``(name, residual, witness_axes)`` for every compatibility equation."""
    kind = mp.a.kind
    if kind == "associative":
        return _assoc(mp)
    if kind == "dendriform":
        return _dend(mp)
    if kind == "lie":
        return _lie(mp)
    raise KindError(f"no matched pairs of {kind} algebras")


def check_matched_pair(mp: MatchedPairData, equations: Optional[Sequence[str]] = None,
                       modules: bool = True) -> Certificate:
    """Component module checks followed by the compatibility equations.

    ``equations`` restricts to a subset of equation names.
    """
    parts = []
    if modules:
        parts.append(_named(check_bimodule(mp.a, mp.a_on_b), "module A on B"))
        parts.append(_named(check_bimodule(mp.b, mp.b_on_a), "module B on A"))
    for name, res, k in matched_pair_residuals(mp):
        if equations is None or name in equations:
            parts.append(from_residual(name, res, k))
    return combine(f"{mp.a.kind} matched pair", parts)


def check_dual_pair_reduced(mp: MatchedPairData) -> Certificate:
    """The two-equation test for dual-pair data ``(A, A*, R·*, L·*, R∘*, L∘*)``.

    For such data the six associative equations reduce to the first and the
    fifth; this runs only those two (modules included).
    """
    if mp.a.kind != "associative":
        raise KindError("reduced dual-pair test is for associative algebras")
    return check_matched_pair(mp, equations=(ASSOC_EQS[0], ASSOC_EQS[4]))


def _named(cert: Certificate, name: str) -> Certificate:
    return combine(name, [cert])


def bicross_tables(mp: MatchedPairData) -> dict:
    """Product tables on A⊕B (A first) without any verification."""
    A, B = mp.a, mp.b
    n, m = A.dim, B.dim
    F, G = mp.a_on_b, mp.b_on_a
    if A.kind == "lie":
        rho, mu = F["rho"], G["rho"]
        blocks = {(0, 0, 0): A.mul, (1, 1, 1): B.mul,
                  (0, 1, 0): -mu.transpose(1, 0, 2), (0, 1, 1): rho,
                  (1, 0, 0): mu, (1, 0, 1): -rho.transpose(1, 0, 2)}
        return {"mul": _block_table(n, m, blocks)}
    if A.kind == "associative":
        pairs = (("mul", "l", "r"),)
    else:
        pairs = (("succ", "l_succ", "r_succ"), ("prec", "l_prec", "r_prec"))
    out = {}
    for name, l, r in pairs:
        blocks = {(0, 0, 0): A.tables[name], (1, 1, 1): B.tables[name],
                  (0, 1, 0): G[r].transpose(1, 0, 2), (0, 1, 1): F[l],
                  (1, 0, 0): G[l], (1, 0, 1): F[r].transpose(1, 0, 2)}
        out[name] = _block_table(n, m, blocks)
    return out


def bicross_unchecked(mp: MatchedPairData) -> Algebra:
    return Algebra(mp.a.kind, mp.a.dim + mp.b.dim, bicross_tables(mp))


def bicross_product(mp: MatchedPairData) -> Algebra:
    """The algebra ``A ⋈ B``; refuses data that is not a matched pair."""
    cert = check_matched_pair(mp)
    if not cert.passed:
        raise AxiomError(f"not a matched pair ({cert.failing_identity} at "
                         f"{cert.first_witness})", cert)
    return bicross_unchecked(mp)


def _split_basis(big: Algebra, split):
    """Normalize a split into (algebra in adapted basis, dim of first summand)."""
    first, second = split
    n = big.dim
    if all(isinstance(i, int) for i in list(first) + list(second)):
        idx = list(first) + list(second)
        if sorted(idx) != list(range(n)):
            raise ValueError("index split must partition the basis")
        cols = Tensor.identity(n).block(slice(None), idx)
        return change_basis(big, cols), len(first)
    fa = Tensor.of(first)
    fb = Tensor.of(second)
    cols = concatenate([fa.T, fb.T], axis=1)
    if cols.shape != (n, n):
        raise ValueError("sub-bases must together form a basis")
    invert(cols)
    return change_basis(big, cols), fa.shape[0]


def decompose_check(big: Algebra, split) -> MatchedPairData:
    """Read off the matched pair of a decomposition of ``big`` into two subalgebras.

    ``split`` is either two lists of basis indices partitioning the basis, or
    two lists of vectors (coordinate rows) that together form a basis.
    """
    alg, k = _split_basis(big, split)
    n = alg.dim
    A_idx, B_idx = slice(0, k), slice(k, n)
    for name, t in alg.tables.items():
        for blk, tag in (((A_idx, A_idx, B_idx), "first"), ((B_idx, B_idx, A_idx), "second")):
            leak = t.block(*blk)
            if not leak.is_zero():
                (i, j, c), v = next(iter(leak.nonzero()))
                off_i = 0 if tag == "first" else k
                raise NotSubalgebraError(
                    f"{tag} summand is not a subalgebra: product of basis vectors "
                    f"{i + off_i},{j + off_i} ({name}) leaves it", witness=(i + off_i, j + off_i))
    sub = lambda t, s: t.block(s, s, s)
    A = Algebra(big.kind, k, {nm: sub(t, A_idx) for nm, t in alg.tables.items()})
    B = Algebra(big.kind, n - k, {nm: sub(t, B_idx) for nm, t in alg.tables.items()})
    if big.kind == "lie":
        t = alg.mul
        rho = t.block(A_idx, B_idx, B_idx)
        mu = t.block(B_idx, A_idx, A_idx)
        F = ActionFamily("lie", k, n - k, {"rho": rho})
        G = ActionFamily("lie", n - k, k, {"rho": mu})
        return MatchedPairData(A, B, F, G)
    if big.kind == "associative":
        pairs = (("mul", "l", "r"),)
    elif big.kind == "dendriform":
        pairs = (("succ", "l_succ", "r_succ"), ("prec", "l_prec", "r_prec"))
    else:
        raise KindError(f"no matched pairs of {big.kind} algebras")
    fmaps, gmaps = {}, {}
    for name, l, r in pairs:
        t = alg.tables[name]
        fmaps[l] = t.block(A_idx, B_idx, B_idx)
        fmaps[r] = t.block(B_idx, A_idx, B_idx).transpose(1, 0, 2)
        gmaps[l] = t.block(B_idx, A_idx, A_idx)
        gmaps[r] = t.block(A_idx, B_idx, A_idx).transpose(1, 0, 2)
    F = ActionFamily(big.kind, k, n - k, fmaps)
    G = ActionFamily(big.kind, n - k, k, gmaps)
    return MatchedPairData(A, B, F, G)


def trivial_pair(a: Algebra, b: Algebra) -> MatchedPairData:
    """Zero actions both ways (bicross product = direct product)."""
    return MatchedPairData(a, b, family(a.kind, a.dim, b.dim),
                           family(a.kind, b.dim, a.dim))


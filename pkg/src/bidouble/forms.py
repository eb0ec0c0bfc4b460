"""Bilinear forms: invariance and cocycle laws, Frobenius tests, induced products."""

from __future__ import annotations

from dataclasses import dataclass

from . import terms as tm
from .algebra import Algebra, require_axioms
from .certificate import Certificate, combine, from_residual
from .errors import AxiomError, KindError, SingularMatrixError
from .exactlin import Tensor, det, einsum, invert, is_antisymmetric, is_symmetric

LAWS = {
    "invariant": ("associative",),
    "connes": ("associative",),
    "dendriform2": ("dendriform",),
    "prelie2": ("prelie",),
    "lie_invariant": ("lie",),
    "lie2": ("lie",),
}


@dataclass(frozen=True, eq=False)
class BilinearForm:
    """Gram matrix ``gram[i, j] = B(e_i, e_j)``."""

    gram: Tensor

    def __post_init__(self):
        g = self.gram
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise ValueError("gram must be square")

    @property
    def dim(self) -> int:
        return self.gram.shape[0]

    def __eq__(self, other):
        return isinstance(other, BilinearForm) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def is_symmetric(self) -> bool:
        return is_symmetric(self.gram)

    def is_antisymmetric(self) -> bool:
        return is_antisymmetric(self.gram)

    def is_nondegenerate(self) -> bool:
        return det(self.gram) != 0


def natural_form(n: int, flavor: str) -> BilinearForm:
    """Pairing form on A⊕A* (blocks ordered A, A*).

    symmetric: ``B(x+a*, y+b*) = ⟨x, b*⟩ + ⟨a*, y⟩``;
    antisymmetric: ``ω(x+a*, y+b*) = −⟨x, b*⟩ + ⟨a*, y⟩``.
    """
    sign = {"symmetric": 1, "antisymmetric": -1}.get(flavor)
    if sign is None:
        raise ValueError("flavor must be 'symmetric' or 'antisymmetric'")
    items = [((i, n + i), sign) for i in range(n)] + [((n + i, i), 1) for i in range(n)]
    return BilinearForm(Tensor.from_sparse((2 * n, 2 * n), items))


def form_residuals(a: Algebra, f: BilinearForm, law: str) -> list:
    """``(name, residual[x, y, z])`` for the law (scalar residual per triple)."""
    if law not in LAWS:
        raise KindError(f"unknown law {law!r}")
    if a.kind not in LAWS[law]:
        raise KindError(f"law {law!r} needs a {LAWS[law][0]} algebra, got {a.kind}")
    if f.dim != a.dim:
        raise ValueError("form and algebra dimensions differ")
    if law in ("connes", "lie2") and not f.is_antisymmetric():
        raise KindError(f"law {law!r} needs an antisymmetric form")
    n = a.dim
    g = f.gram
    x, y, z = tm.var("x", n), tm.var("y", n), tm.var("z", n)
    B = lambda u, v: tm.pair(g, u, v)
    mul = tm.mul
    if law == "invariant":
        t = a.mul
        res = B(mul(t, x, y), z) - B(x, mul(t, y, z))
        name = "B(xy,z) = B(x,yz)"
    elif law == "connes":
        t = a.mul
        res = B(mul(t, x, y), z) + B(mul(t, y, z), x) + B(mul(t, z, x), y)
        name = "ω(xy,z) + ω(yz,x) + ω(zx,y) = 0"
    elif law == "dendriform2":
        st, s, p = a.star, a.succ, a.prec
        res = B(mul(st, x, y), z) - B(y, mul(p, z, x)) - B(x, mul(s, y, z))
        name = "B(x*y,z) = B(y,z≺x) + B(x,y≻z)"
    elif law == "prelie2":
        t = a.mul
        br = t - t.transpose(1, 0, 2)
        res = B(mul(br, x, y), z) - B(x, mul(t, y, z)) + B(y, mul(t, x, z))
        name = "B([x,y],z) = B(x,yz) - B(y,xz)"
    elif law == "lie_invariant":
        t = a.mul
        res = B(mul(t, x, y), z) - B(x, mul(t, y, z))
        name = "B([x,y],z) = B(x,[y,z])"
    else:
        t = a.mul
        res = B(mul(t, x, y), z) + B(mul(t, y, z), x) + B(mul(t, z, x), y)
        name = "ω([x,y],z) + ω([y,z],x) + ω([z,x],y) = 0"
    return [(name, res.materialize("xyz"))]


def check_form(a: Algebra, f: BilinearForm, law: str) -> Certificate:
    """Evaluate the form law on all ordered basis triples."""
    parts = [from_residual(name, res, 3) for name, res in form_residuals(a, f, law)]
    return combine(law, parts)


def is_frobenius(a: Algebra, f: BilinearForm) -> bool:
    if a.kind != "associative":
        raise KindError("Frobenius test needs an associative algebra")
    return check_form(a, f, "invariant").passed and f.is_nondegenerate()


def _require_nondegenerate_antisym(f: BilinearForm):
    if not f.is_antisymmetric():
        raise KindError("an antisymmetric form is required")
    if not f.is_nondegenerate():
        raise SingularMatrixError("nondegenerate required: form is degenerate")


def _solve_left(g: Tensor, w: Tensor) -> Tensor:
    """Given ``w[x, y, z] = B(u_xy, e_z)``, return the vectors ``u[x, y, k]``."""
    # B(u, e_z) = Σ_k u_k g[k, z], so u = w · g^{-1}
    return einsum("xyz,zk->xyk", w, invert(g))


def dendriform_from_connes(a: Algebra, omega: BilinearForm) -> Algebra:
    """Compatible dendriform structure of a Connes cocycle.

    Solves ``ω(x≻y, z) = ω(y, z*x)`` and ``ω(x≺y, z) = ω(x, y*z)``.
    """
    if a.kind != "associative":
        raise KindError("needs an associative algebra")
    require_axioms(a)
    _require_nondegenerate_antisym(omega)
    cert = check_form(a, omega, "connes")
    if not cert.passed:
        raise AxiomError(f"not a Connes cocycle (fails at {cert.first_witness})", cert)
    n, g, t = a.dim, omega.gram, a.mul
    x, y, z = tm.var("x", n), tm.var("y", n), tm.var("z", n)
    w_succ = tm.pair(g, y, tm.mul(t, z, x)).materialize("xyz")
    w_prec = tm.pair(g, x, tm.mul(t, y, z)).materialize("xyz")
    return Algebra("dendriform", n, {"succ": _solve_left(g, w_succ),
                                     "prec": _solve_left(g, w_prec)}, a.basis)


def prelie_from_symplectic(g_alg: Algebra, omega: BilinearForm) -> Algebra:
    """Compatible pre-Lie product of a symplectic form: ``ω(x∘y, z) = −ω(y, [x, z])``."""
    if g_alg.kind != "lie":
        raise KindError("needs a Lie algebra")
    require_axioms(g_alg)
    _require_nondegenerate_antisym(omega)
    cert = check_form(g_alg, omega, "lie2")
    if not cert.passed:
        raise AxiomError(f"not a 2-cocycle (fails at {cert.first_witness})", cert)
    n, g, t = g_alg.dim, omega.gram, g_alg.mul
    x, y, z = tm.var("x", n), tm.var("y", n), tm.var("z", n)
    w = (-tm.pair(g, y, tm.mul(t, x, z))).materialize("xyz")
    return Algebra("prelie", n, {"mul": _solve_left(g, w)}, g_alg.basis)


def is_positive_definite(f: BilinearForm) -> bool:
    """Exact leading-principal-minor test."""
    if not f.is_symmetric():
        raise ValueError("positive definiteness needs a symmetric form")
    g = f.gram
    return all(det(g.block(slice(0, k), slice(0, k))) > 0 for k in range(1, f.dim + 1))


def skew_part(f: BilinearForm) -> BilinearForm:
    """``ω(x, y) = B(x, y) − B(y, x)``."""
    return BilinearForm(f.gram - f.gram.T)

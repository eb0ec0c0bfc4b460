import pytest

from bidouble import corpus
from bidouble.actions import regular, semidirect
from bidouble.algebra import check_axioms, commutator_lie, make, zero_algebra
from bidouble.errors import BidoubleError
from bidouble.exactlin import Tensor, det
from bidouble.forms import (BilinearForm, check_form, dendriform_from_connes, is_frobenius,
                            is_positive_definite, natural_form, prelie_from_symplectic)

L2 = corpus.get("L2")
OMEGA = BilinearForm(Tensor.of([[0, -1], [1, 0]]))


def test_natural_forms():
    assert natural_form(1, "symmetric").gram == Tensor.of([[0, 1], [1, 0]])
    assert natural_form(1, "antisymmetric").gram == Tensor.of([[0, -1], [1, 0]])
    g = natural_form(2, "antisymmetric").gram
    assert g.shape == (4, 4) and det(g) == 1


def test_connes_on_zero_and_l2():
    z = zero_algebra("associative", 2)
    assert check_form(z, OMEGA, "connes").passed
    assert check_form(L2, OMEGA, "connes").passed


def test_identity_form_on_l2_is_not_invariant():
    cert = check_form(L2, BilinearForm(Tensor.identity(2)), "invariant")
    assert not cert.passed
    # B(e1 e2, e1) = 0 but B(e1, e2 e1) = B(e1, e1) = 1
    assert cert.first_witness == (0, 1, 0)


def test_frobenius_examples():
    a = semidirect(L2, regular(L2, "R*", "L*"))
    assert is_frobenius(a, natural_form(2, "symmetric"))
    assert is_frobenius(zero_algebra("associative", 2), BilinearForm(Tensor.identity(2)))
    assert not is_frobenius(L2, BilinearForm(Tensor.zeros((2, 2))))


def test_dendriform_from_connes_table():
    d = dendriform_from_connes(L2, OMEGA)
    succ = {idx: v for idx, v in d.succ.nonzero()}
    prec = {idx: v for idx, v in d.prec.nonzero()}
    # e2≻e1 = e1, e1≻e2 = -e1, e2≺e2 = e2, e1≺e2 = e1
    assert succ == {(1, 0, 0): 1, (0, 1, 0): -1}
    assert prec == {(1, 1, 1): 1, (0, 1, 0): 1}
    assert check_axioms(d).passed


def test_dendriform_from_connes_on_zero_algebra():
    d = dendriform_from_connes(zero_algebra("associative", 2), OMEGA)
    assert d.succ.is_zero() and d.prec.is_zero()


def test_prelie_from_symplectic():
    abelian = zero_algebra("lie", 2)
    w = BilinearForm(Tensor.of([[0, 1], [-1, 0]]))
    assert prelie_from_symplectic(abelian, w).mul.is_zero()
    p = prelie_from_symplectic(commutator_lie(L2), OMEGA)
    assert check_axioms(p).passed
    assert commutator_lie(p).mul == commutator_lie(L2).mul
    with pytest.raises(BidoubleError):
        prelie_from_symplectic(commutator_lie(L2), BilinearForm(Tensor.zeros((2, 2))))


def test_positive_definite():
    assert is_positive_definite(BilinearForm(Tensor.identity(2)))
    assert not is_positive_definite(BilinearForm(Tensor.of([[1, 0], [0, -1]])))
    assert is_positive_definite(BilinearForm(Tensor.of([[2, 1], [1, 1]])))


def test_connes_form_is_invariant_for_the_derived_products():
    # ω(x≻y, z) = ω(y, z·x) defines ≻; check it on every basis triple
    d = dendriform_from_connes(L2, OMEGA)
    g = OMEGA.gram
    for x in range(2):
        for y in range(2):
            for z in range(2):
                lhs = sum(d.succ[x, y, k] * g[k, z] for k in range(2))
                rhs = sum(L2.mul[z, x, k] * g[y, k] for k in range(2))
                assert lhs == rhs


def test_degenerate_connes_input_rejected():
    with pytest.raises(BidoubleError):
        dendriform_from_connes(L2, BilinearForm(Tensor.zeros((2, 2))))
    one = make("associative", 1, mul=[(0, 0, 0, 1)])
    assert check_axioms(one).passed

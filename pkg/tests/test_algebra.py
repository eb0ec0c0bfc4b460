from fractions import Fraction

from hypothesis import given

from bidouble import corpus
from bidouble.algebra import (associated_associative, check_axioms, commutator_lie,
                              dendriform_to_prelie, is_two_step_nilpotent, make, mult_operator,
                              trivial_dendriform, zero_algebra)
from bidouble.exactlin import Tensor
from bidouble.forms import BilinearForm, dendriform_from_connes

import oracle
from conftest import corpus_algebras

L2 = corpus.get("L2")
OMEGA = BilinearForm(Tensor.of([[0, -1], [1, 0]]))


def test_zero_algebras_pass_every_kind():
    for kind in ("associative", "dendriform", "prelie", "lie"):
        assert check_axioms(zero_algebra(kind, 2)).passed


def test_l2_is_associative():
    assert check_axioms(L2).passed
    assert oracle.is_associative(oracle.table(L2.mul))


def test_non_associative_table_reports_first_triple():
    bad = make("associative", 2, mul=[(0, 0, 1, 1), (1, 0, 0, 1)])
    cert = check_axioms(bad)
    assert not cert.passed
    assert cert.first_witness == (0, 0, 0)


def test_trivial_dendriform_sums_back():
    for side in ("succ", "prec"):
        assert associated_associative(trivial_dendriform(L2, side)).mul == L2.mul
    assert associated_associative(zero_algebra("dendriform", 2)).mul.is_zero()


def test_connes_dendriform_sums_to_l2():
    d = dendriform_from_connes(L2, OMEGA)
    assert associated_associative(d).mul == L2.mul


def test_prelie_of_prec_free_dendriform_is_succ():
    d = trivial_dendriform(L2, "succ")
    assert dendriform_to_prelie(d).mul == d.succ
    assert dendriform_to_prelie(zero_algebra("dendriform", 2)).mul.is_zero()


def test_connes_prelie_passes_axioms():
    assert check_axioms(dendriform_to_prelie(dendriform_from_connes(L2, OMEGA))).passed


def test_commutator_examples():
    commutative = make("associative", 2, mul=[(0, 0, 1, 1)])
    assert commutator_lie(commutative).mul.is_zero()
    lie = commutator_lie(L2)
    # [e2, e1] = e1
    assert lie.product(Tensor.unit(2, 1), Tensor.unit(2, 0)) == Tensor.unit(2, 0)
    assert check_axioms(lie).passed


def test_multiplication_operators_on_l2():
    e2 = Tensor.unit(2, 1)
    assert mult_operator(L2, "L", e2) == Tensor.identity(2)
    assert mult_operator(L2, "R", e2) == Tensor.of([[0, 0], [0, 1]])
    assert mult_operator(zero_algebra("associative", 3), "L", Tensor.unit(3, 0)).is_zero()


def test_two_step_nilpotency():
    assert is_two_step_nilpotent(corpus.get("nilpotent-2"))
    assert not is_two_step_nilpotent(L2)
    assert is_two_step_nilpotent(zero_algebra("associative", 2))


def test_corpus_passes_axioms():
    for kind in ("associative", "dendriform", "prelie", "lie"):
        for name, a in corpus.algebras(kind).items():
            assert check_axioms(a).passed, name


@given(corpus_algebras("dendriform"))
def test_functor_diagram_commutes(item):
    _, d = item
    left = commutator_lie(associated_associative(d)).mul
    right = commutator_lie(dendriform_to_prelie(d)).mul
    assert left == right
    # independent reading: x*y - y*x against x≻y - y≺x - (y≻x - x≺y)
    s, p = oracle.table(d.succ), oracle.table(d.prec)
    star = oracle.sum_tables(s, p)
    assert oracle.table(left) == oracle.bracket_table(star)


def test_fractional_entries_survive():
    a = make("associative", 1, mul=[(0, 0, 0, Fraction(1, 2))])
    assert check_axioms(a).passed
    assert a.mul[0, 0, 0] == Fraction(1, 2)

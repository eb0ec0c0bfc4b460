import random

import pytest
from hypothesis import given

from bidouble import corpus
from bidouble.actions import regular, semidirect
from bidouble.algebra import check_axioms, commutator_lie, is_two_step_nilpotent, make
from bidouble.bialgebra import (bialgebra, bialgebra_functor, bridge_check, check_bialgebra,
                                check_bialgebra_hom, check_form_iso, ddb_from_connes,
                                dendriform_two_step_condition, double_construction,
                                double_iso_from_bialgebra_iso, dual_bialgebra, from_dual_pair,
                                table_to_comult)
from bidouble.errors import AxiomError
from bidouble.exactlin import Tensor
from bidouble.forms import BilinearForm, natural_form
from bidouble.suite import heisenberg_connes, l2_connes
from bidouble.yangbaxter import coboundary_bialgebra

from conftest import corpus_algebras

L2 = corpus.get("L2")
R = Tensor.of([[0, 1], [-1, 0]])


def cob_aib():
    return coboundary_bialgebra("AIB", L2, R)


@given(corpus_algebras("associative", 4))
def test_zero_comultiplication_is_an_aib(item):
    _, a = item
    assert check_bialgebra(bialgebra("AIB", a)).passed


@given(corpus_algebras("dendriform"))
def test_zero_comultiplications_give_a_ddb(item):
    _, d = item
    assert check_bialgebra(bialgebra("DDB", d)).passed


def test_coboundary_aib_on_l2():
    assert check_bialgebra(cob_aib()).passed


def test_trivial_doubles():
    alg, form, cert = double_construction(bialgebra("AIB", L2))
    assert cert.passed
    assert alg == semidirect(L2, regular(L2, "R*", "L*"))
    assert form.gram == natural_form(2, "symmetric").gram
    d = corpus.get("L2-succ", "dendriform")
    alg, form, cert = double_construction(bialgebra("DDB", d))
    assert cert.passed
    assert alg.mul == semidirect(L2, regular(d, "R≺*", "L≻*")).mul
    assert form.gram == natural_form(2, "antisymmetric").gram


def test_coboundary_double_is_frobenius():
    alg, form, cert = double_construction(cob_aib())
    assert alg.dim == 4 and cert.passed


def test_double_refuses_invalid_input():
    bad = bialgebra("AIB", L2, delta=Tensor.zeros((2, 2, 2)).with_entry((1, 0, 0), 1))
    assert not check_bialgebra(bad).passed
    with pytest.raises(AxiomError):
        double_construction(bad)
    _, _, cert = double_construction(bad, verify=False)
    assert cert is not None


def test_dual_of_trivial_aib():
    dual = dual_bialgebra(bialgebra("AIB", L2))
    assert dual.base.mul.is_zero()
    assert dual.comults["delta"] == table_to_comult(L2.mul)


def test_dual_twice_is_identity():
    for b in (bialgebra("AIB", L2), cob_aib()):
        assert dual_bialgebra(dual_bialgebra(b)) == b
    dual = dual_bialgebra(cob_aib())
    assert check_bialgebra(dual).passed


def test_identity_is_a_bialgebra_hom():
    b = cob_aib()
    assert check_bialgebra_hom(b, b, Tensor.identity(2)).passed
    # e2 -> e1 + e2 is an automorphism of L2 fixing r (det 1)
    shear = Tensor.identity(2).with_entry((0, 1), 1)
    assert check_bialgebra_hom(b, b, shear).passed
    # e1 -> e1 + e2 breaks e1 e1 = 0
    broken = Tensor.identity(2).with_entry((1, 0), 1)
    assert not check_bialgebra_hom(b, b, broken).passed


def test_bialgebra_iso_lifts_to_double_iso():
    # rescaling e1 is an automorphism of L2 carrying r to 2r
    b1, phi = cob_aib(), Tensor.of([[2, 0], [0, 1]])
    b2 = coboundary_bialgebra("AIB", L2, R * 2)
    assert check_bialgebra_hom(b1, b2, phi).passed
    alg1, f1, _ = double_construction(b1)
    alg2, f2, _ = double_construction(b2)
    psi = double_iso_from_bialgebra_iso(phi)
    assert check_form_iso(alg1, f1, alg2, f2, psi, split=2).passed
    assert not check_form_iso(alg1, f1, alg2, f2, psi.with_entry((0, 1), 1), split=2).passed


def test_bridge_on_nilpotent_instance():
    b = ddb_from_connes(*heisenberg_connes())
    assert check_bialgebra(b).passed
    assert bridge_check(b).passed
    assert dendriform_two_step_condition(b.base)


def test_bridge_on_trivial_ddb():
    for d in corpus.algebras("dendriform").values():
        assert bridge_check(bialgebra("DDB", d)).passed


def test_bridge_on_l2_is_evaluated_and_fails():
    a, omega = l2_connes()
    cert = bridge_check(ddb_from_connes(a, omega))
    assert not cert.passed
    assert not is_two_step_nilpotent(a)


def test_functors():
    lie = bialgebra_functor(bialgebra("AIB", L2), "LieBi")
    assert lie.base.mul == commutator_lie(L2).mul
    assert lie.comults["delta"].is_zero()
    assert check_bialgebra(bialgebra_functor(cob_aib(), "LieBi")).passed
    d = corpus.get("L2-succ", "dendriform")
    pre = bialgebra_functor(bialgebra("DDB", d), "PreLieBi")
    assert all(t.is_zero() for t in pre.comults.values())
    assert check_bialgebra(pre).passed


def test_from_dual_pair_roundtrip():
    b = cob_aib()
    assert from_dual_pair("AIB", b.base, b.dual_algebra()) == b


def test_random_comultiplications_agree_with_double():
    # the bialgebra check and the double-construction form check agree
    rng = random.Random(5)
    a = corpus.get("nilpotent-2")
    for _ in range(40):
        entries = [(rng.randrange(2), rng.randrange(2), rng.randrange(2), rng.choice((-1, 1)))
                   for _ in range(rng.randrange(1, 3))]
        delta = Tensor.from_sparse((2, 2, 2), ((e[:3], e[3]) for e in entries))
        b = bialgebra("AIB", a, delta=delta)
        _, _, cert = double_construction(b, verify=False)
        assert check_bialgebra(b).passed == cert.passed


def test_make_helper_builds_algebra():
    a = make("associative", 2, mul=[(0, 0, 1, 1)])
    assert check_axioms(a).passed
    assert BilinearForm(Tensor.identity(2)).is_nondegenerate()

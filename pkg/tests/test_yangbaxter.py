from fractions import Fraction

import pytest

from bidouble import corpus
from bidouble.actions import family, regular
from bidouble.algebra import (check_axioms, make, trivial_dendriform, zero_algebra)
from bidouble.bialgebra import bialgebra, check_bialgebra
from bidouble.errors import AxiomError, KindError
from bidouble.exactlin import SIGMA, Tensor, as_map, det, permute
from bidouble.forms import natural_form
from bidouble.yangbaxter import (OOperatorData, build_double, canonical_solution,
                                 check_coboundary_conditions, check_special_ddb_conditions,
                                 coboundary_bialgebra, dendriform_from_o_operator,
                                 identity_o_operator, induced_dual_products, induced_gram,
                                 invertible_o_operator_structure, is_o_operator, is_rota_baxter,
                                 iso_witness, lift_o_operator, residual)

import oracle

L2 = corpus.get("L2")
R = Tensor.of([[0, 1], [-1, 0]])
L2_SUCC = trivial_dendriform(L2, "succ")
E11 = Tensor.of([[1, 0], [0, 0]])


def test_residual_on_zero_algebra_vanishes():
    r = Tensor.of([[1, 2], [3, 4]])
    assert residual("AYBE", zero_algebra("associative", 2), r).is_zero()


def test_aybe_l2_solution():
    assert residual("AYBE", L2, R).is_zero()


def test_aybe_idempotent_line():
    one = make("associative", 1, mul=[(0, 0, 0, 1)])
    res = residual("AYBE", one, Tensor.of([[1]]))
    assert oracle.sparse(res) == {(0, 0, 0): 1}


def test_deq_trivial_dendriform_l2():
    assert residual("DEQ", L2_SUCC, E11).is_zero()


def test_residuals_match_naive_expansion():
    r = Tensor.of([[1, -2], [Fraction(1, 2), 3]])
    assert oracle.sparse(residual("AYBE", L2, r)) == oracle.aybe(oracle.table(L2.mul), oracle.matrix(r))
    d = corpus.get("L2-connes", "dendriform")
    want = oracle.deq(oracle.table(d.succ), oracle.table(d.prec), oracle.matrix(r))
    assert oracle.sparse(residual("DEQ", d, r)) == want
    g = corpus.get("L2", "lie")
    assert oracle.sparse(residual("CYBE", g, r)) == oracle.cybe(oracle.table(g.mul), oracle.matrix(r))
    p = corpus.get("L2-connes", "prelie")
    assert oracle.sparse(residual("SEQ", p, r)) == oracle.seq(oracle.table(p.mul), oracle.matrix(r))


def test_equation_kind_mismatch():
    with pytest.raises(KindError):
        residual("DEQ", L2, R)


def test_coboundary_delta_examples():
    b = coboundary_bialgebra("AIB", L2, Tensor.zeros((2, 2)))
    assert b.comults["delta"].is_zero()
    b = coboundary_bialgebra("AIB", L2, R)
    assert check_bialgebra(b).passed
    assert check_axioms(b.dual_algebra()).passed
    d = coboundary_bialgebra("DDB", L2_SUCC, E11, -E11)
    assert set(d.comults) == {"delta_succ", "delta_prec"}
    assert check_bialgebra(d).passed


def test_coboundary_conditions():
    assert check_coboundary_conditions("AIB", L2, R).passed
    cert = check_coboundary_conditions("AIB", L2, Tensor.of([[1, 0], [0, 1]]))
    assert not cert.passed and cert.failing_identity
    assert not any("convention-sensitive" in n for n in cert.notes)


def test_special_ddb_conditions_on_symmetric_solution():
    for d in corpus.algebras("dendriform").values():
        r = canonical_solution(d, "DEQ")
        assert check_special_ddb_conditions(r.ambient, r.r).passed


def test_o_operator_examples():
    assert is_o_operator(identity_o_operator(L2)).passed
    zero = OOperatorData(L2, regular(L2, "R*", "L*"), Tensor.zeros((2, 2)))
    assert is_o_operator(zero).passed
    assert is_o_operator(OOperatorData(L2, regular(L2, "R*", "L*"), as_map(R))).passed


def test_o_operator_with_broken_module_is_rejected():
    with pytest.raises(AxiomError):
        is_o_operator(OOperatorData(L2, regular(L2, "R", "L"), Tensor.identity(2)))


def test_identity_is_not_rota_baxter_on_l2():
    assert not is_rota_baxter(L2, Tensor.identity(2)).passed
    assert is_rota_baxter(L2, Tensor.zeros((2, 2))).passed


def test_dendriform_from_identity_operator():
    on_v, _ = dendriform_from_o_operator(identity_o_operator(L2, ("L", "0")))
    assert on_v.succ == L2.mul and on_v.prec.is_zero()
    on_v, _ = dendriform_from_o_operator(identity_o_operator(L2, ("0", "R")))
    assert on_v.prec == L2.mul and on_v.succ.is_zero()
    data = OOperatorData(L2, regular(L2, "L", "R"), Tensor.zeros((2, 2)))
    on_v, on_image = dendriform_from_o_operator(data)
    assert on_v.succ.is_zero() and on_v.prec.is_zero() and on_image.dim == 0


def test_invertible_operator_structure():
    data = OOperatorData(L2, regular(L2, "R*", "L*"), as_map(R))
    d = invertible_o_operator_structure(data)
    assert d.kind == "dendriform" and check_axioms(d).passed


def test_canonical_solutions():
    lift = canonical_solution(L2, "AYBE")
    assert lift.passed and lift.ambient.dim == 4
    assert canonical_solution(L2_SUCC, "DEQ").passed
    assert canonical_solution(corpus.get("L2-succ", "prelie"), "CYBE").passed
    assert canonical_solution(corpus.get("L2-succ", "prelie"), "SEQ").passed


def test_lift_raises_for_verified_non_operator():
    data = OOperatorData(L2, regular(L2, "R*", "L*"), Tensor.identity(2))
    assert not is_o_operator(data).passed
    assert not lift_o_operator(data, verify=False).passed
    with pytest.raises(AxiomError):
        lift_o_operator(data)


def test_induced_products_on_l2():
    ind = induced_dual_products(L2, R, "AYBE")
    assert ind.certificate.passed
    assert ind.double.dim == 4 and check_axioms(ind.double).passed
    # nondegenerate: a*∘b* = r⁻¹(r(a*)·r(b*))
    m = as_map(R)
    for i in range(2):
        for j in range(2):
            lhs = ind.dual.product(Tensor.unit(2, i), Tensor.unit(2, j))
            rhs = L2.product(m @ Tensor.unit(2, i), m @ Tensor.unit(2, j))
            assert m @ lhs == rhs


def test_induced_products_for_zero_r():
    ind = induced_dual_products(L2, Tensor.zeros((2, 2)), "AYBE")
    assert ind.dual.mul.is_zero()
    assert ind.certificate.passed


def test_induced_gram_is_natural_form():
    lift = canonical_solution(L2, "AYBE")
    assert induced_gram(lift.r) == natural_form(2, "antisymmetric").gram
    assert det(lift.r) != 0


def test_ad_and_dd_doubles():
    dbl, cert = build_double(bialgebra("AIB", L2), "AD")
    assert cert.passed and dbl.dim == 4
    dbl, cert = build_double(bialgebra("DDB", L2_SUCC), "DD")
    assert cert.passed and dbl.dim == 4
    dbl, cert = build_double(coboundary_bialgebra("AIB", L2, R), "AD")
    assert cert.passed and check_bialgebra(dbl).passed


def test_iso_witness_l2():
    phi, cert = iso_witness(L2, Tensor.zeros((2, 2)), "AYBE")
    assert phi == Tensor.identity(4) and cert.passed
    phi, cert = iso_witness(L2, R, "AYBE")
    assert cert.find("form-preserving isomorphism").passed
    phi, cert = iso_witness(L2_SUCC, E11, "DEQ")
    assert cert.find("form-preserving isomorphism").passed


def test_swap_gives_opposite_tensor():
    assert permute(R, SIGMA) == -R
    assert family("associative", 2, 2) == family("associative", 2, 2)

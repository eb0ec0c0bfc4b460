"""Property tests: identities that must hold for every input."""

from hypothesis import assume, given, strategies as st

from bidouble import corpus, fileio
from bidouble.actions import regular
from bidouble.algebra import Algebra, opposite
from bidouble.certificate import from_residual
from bidouble.exactlin import SIGMA_13, Tensor, as_map, det, permute
from bidouble.forms import natural_form
from bidouble.yangbaxter import (OOperatorData, aybe_opposite_residual, canonical_solution,
                                 deq_variant_residuals, identity_o_operator, induced_gram,
                                 is_o_operator, lift_o_operator, residual)

import oracle
from conftest import corpus_algebras, square


@st.composite
def algebra_and_r(draw, kind, symmetry="any", max_dim=3):
    _, a = draw(corpus_algebras(kind, max_dim))
    return a, draw(square(a.dim, symmetry))


@given(algebra_and_r("associative", "antisymmetric"))
def test_antisymmetric_solutions_are_o_operators(case):
    a, r = case
    solves = residual("AYBE", a, r).is_zero()
    data = OOperatorData(a, regular(a, "R*", "L*"), as_map(r))
    assert solves == is_o_operator(data).passed


@given(algebra_and_r("dendriform", "symmetric"))
def test_symmetric_d_solutions_are_o_operators(case):
    d, r = case
    solves = residual("DEQ", d, r).is_zero()
    star = Algebra("associative", d.dim, {"mul": d.star})
    data = OOperatorData(star, regular(d, "R≺*", "L≻*"), as_map(r))
    assert solves == is_o_operator(data).passed


@given(algebra_and_r("dendriform", "symmetric"))
def test_d_equation_forms_vanish_together(case):
    d, r = case
    main = residual("DEQ", d, r).is_zero()
    assert all(v.is_zero() == main for v in deq_variant_residuals(d, r))


@given(algebra_and_r("associative"))
def test_swap_identity_for_the_opposite_algebra(case):
    a, r = case
    op = aybe_opposite_residual(a, r)
    assert op == residual("AYBE", opposite(a), r)
    assert op == permute(residual("AYBE", a, r.T), SIGMA_13)


@given(algebra_and_r("associative", max_dim=2))
def test_aybe_matches_oracle(case):
    a, r = case
    assert oracle.sparse(residual("AYBE", a, r)) == oracle.aybe(oracle.table(a.mul), oracle.matrix(r))


@given(algebra_and_r("dendriform", max_dim=2))
def test_deq_matches_oracle(case):
    d, r = case
    want = oracle.deq(oracle.table(d.succ), oracle.table(d.prec), oracle.matrix(r))
    assert oracle.sparse(residual("DEQ", d, r)) == want


@given(corpus_algebras("associative", 3), st.data())
def test_o_operator_iff_lift_solves(item, data):
    _, a = item
    T = data.draw(square(a.dim, lo=-1, hi=1))
    sides = data.draw(st.sampled_from((("L", "0"), ("0", "R"), ("R*", "L*"), ("L", "R"))))
    op = OOperatorData(a, regular(a, *sides), T)
    assert is_o_operator(op).passed == lift_o_operator(op, verify=False).passed


@given(corpus_algebras("prelie", 3), st.data())
def test_lie_o_operator_iff_lift_solves(item, data):
    _, p = item
    base = identity_o_operator(p)
    T = data.draw(square(p.dim, lo=-1, hi=1))
    op = OOperatorData(base.algebra, base.module, T)
    assert is_o_operator(op).passed == lift_o_operator(op, verify=False).passed


@given(corpus_algebras("associative", 4))
def test_canonical_r_has_unit_coefficients(item):
    _, a = item
    lift = canonical_solution(a, "AYBE")
    assert {v for _, v in lift.r.nonzero()} <= {1, -1}
    assert lift.r.count_nonzero() == 2 * a.dim
    assert det(lift.r) != 0
    assert induced_gram(lift.r) == natural_form(a.dim, "antisymmetric").gram


@given(corpus_algebras("dendriform", 3))
def test_canonical_d_solution_is_symmetric_pairing(item):
    _, d = item
    lift = canonical_solution(d, "DEQ")
    assert lift.r == lift.r.T
    assert induced_gram(lift.r) == natural_form(d.dim, "symmetric").gram


@given(square(3, lo=-3, hi=3))
def test_certificate_witness_is_first_nonzero(t):
    cert = from_residual("x", t, 2)
    nz = [idx for idx, _ in t.nonzero()]
    assert cert.passed == (not nz)
    if nz:
        assert cert.first_witness == min(nz)
        assert cert.failure_count == len(nz)


@given(corpus_algebras("dendriform", 3))
def test_file_round_trip(item):
    _, d = item
    text = fileio.dumps(d)
    assert fileio.loads(text) == d
    assert fileio.dumps(fileio.loads(text)) == text


@given(algebra_and_r("associative", max_dim=3))
def test_invertible_r_gram_inverts_map(case):
    _, r = case
    assume(det(r) != 0)
    g = induced_gram(r)
    assert g @ as_map(r) == Tensor.identity(r.shape[0])


def test_operator_forms_on_searched_solutions():
    from bidouble._search import search

    hits = 0
    for name in ("L2", "nilpotent-2", "upper-triangular-3"):
        a = corpus.get(name)
        for r in search(a, "AYBE", seed=1, trials=300):
            hits += 1
            assert is_o_operator(OOperatorData(a, regular(a, "R*", "L*"), as_map(r))).passed
    for name in ("L2-succ", "nilpotent-2-succ", "L2-connes"):
        d = corpus.get(name, "dendriform")
        star = Algebra("associative", d.dim, {"mul": d.star})
        for r in search(d, "DEQ", seed=1, trials=300):
            hits += 1
            assert is_o_operator(OOperatorData(star, regular(d, "R≺*", "L≻*"), as_map(r))).passed
    assert hits >= 10

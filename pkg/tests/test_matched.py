import random

import pytest

from bidouble import corpus
from bidouble.actions import family, regular, semidirect
from bidouble.algebra import check_axioms
from bidouble.bialgebra import dual_pair_matched
from bidouble.errors import AxiomError, NotSubalgebraError
from bidouble.exactlin import Tensor
from bidouble.matched import (ASSOC_EQS, MatchedPairData, bicross_product, bicross_unchecked,
                              check_dual_pair_reduced, check_matched_pair, decompose_check,
                              trivial_pair)
from bidouble.yangbaxter import coboundary_bialgebra

import oracle

L2 = corpus.get("L2")
R = Tensor.of([[0, 1], [-1, 0]])


def aybe_pair():
    return dual_pair_matched(coboundary_bialgebra("AIB", L2, R))


def test_semidirect_data_is_a_matched_pair():
    mp = MatchedPairData(L2, corpus.get("zero-2"), regular(L2, "R*", "L*"),
                         family("associative", 2, 2))
    assert check_matched_pair(mp).passed
    assert bicross_product(mp) == semidirect(L2, regular(L2, "R*", "L*"))


def test_aybe_induced_pair_passes_all_six():
    mp = aybe_pair()
    cert = check_matched_pair(mp)
    assert cert.passed
    assert [p.identity_name for p in cert.parts[2:]] == list(ASSOC_EQS)
    assert check_dual_pair_reduced(mp).passed
    big = bicross_product(mp)
    assert big.dim == 4 and check_axioms(big).passed


def test_perturbed_action_names_an_equation():
    mp = aybe_pair()
    rng = random.Random(3)
    failures = 0
    for _ in range(20):
        idx = tuple(rng.randrange(2) for _ in range(3))
        l = mp.b_on_a["l"]
        broken = MatchedPairData(mp.a, mp.b, mp.a_on_b,
                                 family("associative", 2, 2, l=l.with_entry(idx, l[idx] + 1),
                                        r=mp.b_on_a["r"]))
        cert = check_matched_pair(broken)
        assert cert.passed == oracle.is_associative(oracle.table(bicross_unchecked(broken).mul))
        if not cert.passed:
            failures += 1
            assert cert.failing_identity
    assert failures > 0


def test_trivial_pair_is_direct_product():
    mp = trivial_pair(L2, L2)
    big = bicross_product(mp)
    assert big.mul.block(slice(0, 2), slice(2, 4), slice(None)).is_zero()
    assert big.mul.block(slice(0, 2), slice(0, 2), slice(0, 2)) == L2.mul


def test_bicross_refuses_non_pairs():
    mp = MatchedPairData(L2, L2, regular(L2, "R", "L"), family("associative", 2, 2))
    with pytest.raises(AxiomError):
        bicross_product(mp)


def test_decompose_recovers_actions():
    big = semidirect(L2, regular(L2, "R*", "L*"))
    mp = decompose_check(big, ([0, 1], [2, 3]))
    assert mp.a_on_b == regular(L2, "R*", "L*")
    assert mp.b_on_a == family("associative", 2, 2)
    assert mp.a == L2 and mp.b.mul.is_zero()
    direct = decompose_check(bicross_product(trivial_pair(L2, L2)), ([0, 1], [2, 3]))
    assert direct.a_on_b == family("associative", 2, 2)


def test_decompose_rejects_non_subalgebra():
    big = semidirect(L2, regular(L2, "R*", "L*"))
    with pytest.raises(NotSubalgebraError) as err:
        decompose_check(big, ([[1, 0, 1, 0]], [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))
    assert err.value.witness == (0, 0)


def test_dendriform_matched_pair_of_trivial_ddb():
    from bidouble.bialgebra import bialgebra, dendriform_dual_matched
    d = corpus.get("L2-succ", "dendriform")
    mp = dendriform_dual_matched(bialgebra("DDB", d))
    cert = check_matched_pair(mp)
    assert cert.passed and len(cert.parts) == 2 + 18

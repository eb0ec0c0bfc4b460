"""Acceptance criteria 1 to 12, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line and checks exact
equalities only.  Where cheap, the package result is cross-checked against
the naive reference in ``oracle.py``.
"""

import json
import subprocess
import sys

import pytest

from bidouble import corpus, fileio, suite
from bidouble.matched import bicross_unchecked, check_matched_pair
from bidouble.yangbaxter import canonical_solution, is_o_operator, lift_o_operator

import oracle

SEED = 7


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail=""):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}"
                  f"{' (' + detail + ')' if detail else ''}")
        return ok
    return emit


@pytest.fixture
def check(report):
    def run(n, cert, *extra):
        ok = cert.passed and all(extra)
        detail = "" if cert.passed else f"{cert.failing_identity} at {cert.first_witness}"
        assert report(n, ok, detail), cert.to_dict()
    return run


def test_criterion_01_canonical_aybe(check):
    algs = corpus.algebras("associative")
    dims = {a.dim for a in algs.values()}
    oracle_ok = True
    for name in ("zero-1", "idempotent-1", "L2", "nilpotent-2"):
        for side in ("L", "R"):
            lift = canonical_solution(algs[name], "AYBE", side)
            oracle_ok &= not oracle.aybe(oracle.table(lift.ambient.mul), oracle.matrix(lift.r))
    check(1, suite.criterion_1(SEED), len(algs) >= 10, dims == {1, 2, 3, 4},
          {"zero-1", "L2", "nilpotent-2"} <= set(algs), oracle_ok)


def test_criterion_02_canonical_d_solution(check):
    algs = corpus.algebras("dendriform")
    oracle_ok = True
    for name in ("idempotent-1-succ", "L2-succ", "L2-prec", "L2-connes"):
        lift = canonical_solution(algs[name], "DEQ")
        amb = lift.ambient
        oracle_ok &= not oracle.deq(oracle.table(amb.succ), oracle.table(amb.prec),
                                    oracle.matrix(lift.r))
    check(2, suite.criterion_2(SEED), len(algs) >= 8,
          {"L2-succ", "L2-prec", "L2-connes"} <= set(algs), oracle_ok)


def test_criterion_03_matched_pair_equivalence(check):
    instances = suite.random_matched_pairs(SEED)
    agree, positives = True, 0
    for mp in instances:
        eqs = check_matched_pair(mp).passed
        positives += eqs
        agree &= eqs == oracle.is_associative(oracle.table(bicross_unchecked(mp).mul))
        agree &= max(mp.a.dim, mp.b.dim) <= 3
    check(3, suite.criterion_3(SEED), len(instances) == 100, agree, 0 < positives < 100)


def test_criterion_04_o_operator_lift(check):
    instances = suite.random_o_operators(SEED)
    results = [(is_o_operator(d).passed, lift_o_operator(d, verify=False).passed)
               for d in instances]
    positives = sum(o for o, _ in results)
    check(4, suite.criterion_4(SEED), len(instances) == 100,
          all(o == l for o, l in results), 0 < positives < 100)


def test_criterion_05_cocycle_duality(check):
    check(5, suite.criterion_5(SEED))


def test_criterion_06_equivalence_chains(check):
    check(6, suite.criterion_6(SEED))


def test_criterion_07_doubles(check):
    check(7, suite.criterion_7(SEED))


def test_criterion_08_functor_diagram(check):
    check(8, suite.criterion_8(SEED))


def test_criterion_09_appendix_solutions(check):
    check(9, suite.criterion_9(SEED), len(corpus.algebras("prelie")) >= 8)


def test_criterion_10_isomorphism_witnesses(check):
    check(10, suite.criterion_10(SEED))


def test_criterion_11_bridge(check):
    check(11, suite.criterion_11(SEED))


def _certify():
    proc = subprocess.run([sys.executable, "-m", "bidouble.cli", "certify", "--suite",
                           "paper-core", "--seed", str(SEED)], capture_output=True)
    return proc.returncode, proc.stdout


def _round_trips():
    values = []
    for kind in ("associative", "dendriform", "prelie", "lie"):
        values += list(corpus.algebras(kind).values())
    values += [b for _, b in suite.aib_instances() + suite.ddb_instances()]
    for v in values:
        text = fileio.dumps(v)
        back = fileio.loads(text)
        if back != v or fileio.dumps(back) != text:
            return False
    return len(values) > 40


def test_criterion_12_cli(report):
    rt = _round_trips()
    (c1, out1), (c2, out2) = _certify(), _certify()
    doc = json.loads(out1)
    names = [p["identity_name"] for p in doc["certificate"]["parts"]]
    ok = (rt and c1 == c2 == 0 and out1 == out2 and doc["certificate"]["status"] == "pass"
          and [n.split(":")[0] for n in names] == [f"criterion-{i}" for i in range(1, 12)])
    assert report(12, ok, "" if ok else f"round trip {rt}, exit codes {c1}/{c2}")

"""Deterministic acceptance suite over the bundled corpus.

Each ``criterion_N(seed)`` returns a :class:`Certificate`; :func:`run_suite`
groups them.  Random instances come from ``random.Random(seed)`` only.
"""

from __future__ import annotations

import random

from . import corpus
from .actions import ActionFamily, dual_op, regular
from .algebra import (Algebra, associated_associative, check_axioms, commutator_lie,
                      dendriform_to_prelie, is_two_step_nilpotent, operator_family)
from .bialgebra import (BialgebraStructure, bialgebra, bialgebra_functor, bridge_check,
                        check_bialgebra, ddb_from_connes, dendriform_dual_matched,
                        dendriform_two_step_condition, double_construction, dual_pair_matched)
from .certificate import Certificate, combine, from_bool, from_residual
from .exactlin import Tensor, det
from .forms import BilinearForm, form_residuals, natural_form
from .matched import MatchedPairData, bicross_unchecked, check_matched_pair, trivial_pair
from .yangbaxter import (OOperatorData, build_double, canonical_solution, coboundary_bialgebra,
                         induced_gram, is_o_operator, iso_witness, lift_o_operator, residual)

SUITES = ("paper-core",)

# fixed coboundary instances: (corpus name, r); DDBs use r≻ = r, r≺ = −r
AIB_COBOUNDARY = (
    ("L2", [[0, 1], [-1, 0]]),
    ("upper-triangular-3", [[0, 0, 0], [0, 0, 1], [0, -1, 0]]),
)
DDB_COBOUNDARY = (
    ("L2-succ", [[1, 0], [0, 0]]),
    ("nilpotent-2-succ", [[0, 1], [1, 0]]),
    ("upper-triangular-3-succ", [[0, 1, 0], [1, 2, 1], [0, 1, 0]]),
)


def _small(kind: str, max_dim: int = 3) -> list:
    return [(n, a) for n, a in corpus.algebras(kind).items() if a.dim <= max_dim]


def aib_instances() -> list:
    out = [(f"trivial AIB on {n}", bialgebra("AIB", a))
           for n, a in corpus.algebras("associative").items()]
    for name, r in AIB_COBOUNDARY:
        out.append((f"coboundary AIB on {name}",
                    coboundary_bialgebra("AIB", corpus.get(name), Tensor.of(r))))
    return out


def ddb_instances() -> list:
    out = [(f"trivial DDB on {n}", bialgebra("DDB", d))
           for n, d in corpus.algebras("dendriform").items()]
    for name, r in DDB_COBOUNDARY:
        t = Tensor.of(r)
        out.append((f"coboundary DDB on {name}",
                    coboundary_bialgebra("DDB", corpus.get(name, "dendriform"), t, -t)))
    return out


# 1. canonical AYBE solutions

def criterion_1(seed: int = 0) -> Certificate:
    parts = []
    algs = corpus.algebras("associative")
    parts.append(from_bool("at least 10 associative corpus algebras", len(algs) >= 10))
    for name, a in algs.items():
        for side, label in (("R", "A⋉_{R*,0}A*"), ("L", "A⋉_{0,L*}A*")):
            lift = canonical_solution(a, "AYBE", side)
            gram_ok = induced_gram(lift.r) == natural_form(a.dim, "antisymmetric").gram
            parts.append(combine(f"{name} in {label}", [
                lift.certificate(), from_bool("induced gram is the natural antisymmetric form",
                                              gram_ok)]))
    return combine("criterion-1: canonical AYBE solutions", parts)


# 2. canonical D-equation solutions

def criterion_2(seed: int = 0) -> Certificate:
    parts = []
    algs = corpus.algebras("dendriform")
    parts.append(from_bool("at least 8 dendriform corpus algebras", len(algs) >= 8))
    for name, d in algs.items():
        lift = canonical_solution(d, "DEQ")
        gram_ok = induced_gram(lift.r) == natural_form(d.dim, "symmetric").gram
        parts.append(combine(f"{name} in A⋉_{{R≺*,0,0,L≻*}}A*", [
            lift.certificate(),
            from_bool("induced gram is the natural symmetric form", gram_ok)]))
    return combine("criterion-2: canonical D-equation solutions", parts)


# 3. matched pairs versus bicrossed associativity

def _rand_op(rng, adim, cdim, density=0.3):
    return Tensor.of([[[rng.choice((-2, -1, 1, 2)) if rng.random() < density else 0
                        for _ in range(cdim)] for _ in range(cdim)] for _ in range(adim)])


def _valid_pairs() -> list:
    algs = [a for _, a in _small("associative")]
    pool = [trivial_pair(a, b) for a in algs[:6] for b in algs[3:8]]
    pool += [dual_pair_matched(bialgebra("AIB", a)) for a in algs]
    for name, r in AIB_COBOUNDARY:
        pool.append(dual_pair_matched(coboundary_bialgebra("AIB", corpus.get(name), Tensor.of(r))))
    return pool


def random_matched_pairs(seed: int, count: int = 100) -> list:
    rng = random.Random(seed)
    pool = _valid_pairs()
    out = []
    for _ in range(count):
        mp = rng.choice(pool)
        mode = rng.randrange(3)
        if mode == 0:
            out.append(mp)
            continue
        fams = {"a_on_b": mp.a_on_b, "b_on_a": mp.b_on_a}
        for key, fam in fams.items():
            if mode == 2 or rng.random() < 0.5:
                maps = dict(fam.maps)
                name = rng.choice(sorted(maps))
                t = maps[name]
                if t.size == 0:
                    continue
                if mode == 2:
                    maps[name] = _rand_op(rng, fam.algebra_dim, fam.carrier_dim)
                else:
                    idx = tuple(rng.randrange(s) for s in t.shape)
                    maps[name] = t.with_entry(idx, rng.choice((-2, -1, 1, 2)))
                fams[key] = ActionFamily(fam.kind, fam.algebra_dim, fam.carrier_dim, maps)
        out.append(MatchedPairData(mp.a, mp.b, fams["a_on_b"], fams["b_on_a"]))
    return out


def criterion_3(seed: int = 0) -> Certificate:
    parts, pos = [], 0
    for i, mp in enumerate(random_matched_pairs(seed)):
        eqs = check_matched_pair(mp).passed
        assoc = check_axioms(bicross_unchecked(mp)).passed
        pos += eqs
        parts.append(from_bool(f"instance {i}: equations {eqs}, bicross associative {assoc}",
                               eqs == assoc, (i,)))
    return combine("criterion-3: matched-pair equations iff bicrossed associativity", parts,
                   (f"{pos} of {len(parts)} instances are matched pairs",))


# 4. O-operators versus lifted AYBE solutions

def _modules(a: Algebra) -> list:
    n = a.dim
    dual = ActionFamily("associative", n, n, {"l": dual_op(operator_family(a, "R")),
                                               "r": dual_op(operator_family(a, "L"))})
    return [regular(a, "L", "0"), regular(a, "0", "R"), regular(a, "L", "R"), dual]


def random_o_operators(seed: int, count: int = 100) -> list:
    rng = random.Random(seed)
    algs = [a for _, a in _small("associative")]
    out = []
    for _ in range(count):
        a = rng.choice(algs)
        f = rng.choice(_modules(a))
        T = Tensor.of([[rng.choice((-2, -1, 1, 2)) if rng.random() < 0.35 else 0
                        for _ in range(f.carrier_dim)] for _ in range(a.dim)])
        out.append(OOperatorData(a, f, T))
    return out


def criterion_4(seed: int = 0) -> Certificate:
    parts, pos = [], 0
    for i, data in enumerate(random_o_operators(seed)):
        o = is_o_operator(data).passed
        lifted = lift_o_operator(data, "antisym", verify=False).passed
        pos += o
        parts.append(from_bool(f"instance {i}: O-operator {o}, lifted AYBE solution {lifted}",
                               o == lifted, (i,)))
    return combine("criterion-4: O-operator iff lifted T − σ(T) solves AYBE", parts,
                   (f"{pos} of {len(parts)} maps are O-operators",))


# 5. solutions versus cocycles

def _law_holds(a: Algebra, gram: Tensor, law: str, symmetric: bool) -> bool:
    f = BilinearForm(gram)
    if not (f.is_symmetric() if symmetric else f.is_antisymmetric()):
        return False
    return all(res.is_zero() for _, res in form_residuals(a, f, law))


def _duality_case(label, a, r, eq, law, symmetric) -> Certificate:
    parts = [from_residual(f"{label}: r solves {eq}", residual(eq, a, r), 3),
             from_bool(f"{label}: r nondegenerate", det(r) != 0),
             from_bool(f"{label}: inverse gram satisfies the {law} law",
                       _law_holds(a, induced_gram(r), law, symmetric))]
    n = r.shape[0]
    broken = 0
    for i in range(n):
        for j in range(n):
            for d in (-1, 1):
                r2 = r.with_entry((i, j), r[i, j] + d)
                if residual(eq, a, r2).is_zero() or det(r2) == 0:
                    continue
                broken += 1
                parts.append(from_bool(f"{label}: perturbed entry {(i, j)} by {d} fails the law",
                                       not _law_holds(a, induced_gram(r2), law, symmetric),
                                       (i, j)))
    parts.append(from_bool(f"{label}: some perturbation breaks the residual", broken > 0))
    return combine(label, parts)


def criterion_5(seed: int = 0) -> Certificate:
    L2 = corpus.get("L2")
    r = Tensor.of([[0, 1], [-1, 0]])
    lift = canonical_solution(corpus.get("L2-succ", "dendriform"), "DEQ")
    parts = [_duality_case("L2, antisymmetric AYBE solution", L2, r, "AYBE", "connes", False),
             _duality_case("L2-succ double, symmetric D-solution", lift.ambient, lift.r, "DEQ",
                           "dendriform2", True)]
    return combine("criterion-5: solution/cocycle duality", parts)


# 6. equivalence chains

def _legs(b: BialgebraStructure) -> dict:
    legs = {"bialgebra": check_bialgebra(b).passed,
            "matched pair": check_matched_pair(dual_pair_matched(b)).passed,
            "double construction": double_construction(b, verify=False)[2].passed}
    if b.kind == "DDB":
        legs["dendriform matched pair"] = check_matched_pair(dendriform_dual_matched(b)).passed
    return legs


def _perturb(rng, b: BialgebraStructure) -> BialgebraStructure:
    name = rng.choice(sorted(b.comults))
    d = b.comults[name]
    idx = tuple(rng.randrange(s) for s in d.shape)
    return BialgebraStructure(b.kind, b.base,
                              {**b.comults, name: d.with_entry(idx, d[idx] + rng.choice((-1, 1)))})


def criterion_6(seed: int = 0) -> Certificate:
    rng = random.Random(seed)
    L2 = corpus.get("L2")
    valid = [("coboundary AIB on L2",
              coboundary_bialgebra("AIB", L2, Tensor.of([[0, 1], [-1, 0]])))]
    valid += [(n, b) for n, b in ddb_instances() if b.dim <= 3]
    parts, broken = [], 0
    for name, b in valid:
        legs = _legs(b)
        parts.append(from_bool(f"{name}: all legs pass {legs}", all(legs.values())))
        for k in range(3):
            bad = _perturb(rng, b)
            legs = _legs(bad)
            broken += not legs["bialgebra"]
            parts.append(from_bool(f"{name}, perturbation {k}: legs agree {legs}",
                                   len(set(legs.values())) == 1))
    parts.append(from_bool("some perturbations are broken", broken > 0))
    return combine("criterion-6: bialgebra equivalence chains", parts,
                   (f"{broken} perturbed instances fail",))


# 7. doubles

def criterion_7(seed: int = 0) -> Certificate:
    parts = []
    for name, b in aib_instances():
        parts.append(combine(name, [build_double(b, "AD")[1]]))
    for name, b in ddb_instances():
        parts.append(combine(name, [build_double(b, "DD")[1]]))
    return combine("criterion-7: AD and DD doubles", parts)


# 8. functors

def criterion_8(seed: int = 0) -> Certificate:
    parts = []
    for name, d in corpus.algebras("dendriform").items():
        left = commutator_lie(associated_associative(d))
        right = commutator_lie(dendriform_to_prelie(d))
        parts.append(from_bool(f"{name}: commutator squares agree", left == right))
    for name, b in aib_instances():
        parts.append(combine(f"{name} → LieBi", [check_bialgebra(bialgebra_functor(b, "LieBi"))]))
    for name, b in ddb_instances():
        parts.append(combine(f"{name} → PreLieBi",
                             [check_bialgebra(bialgebra_functor(b, "PreLieBi"))]))
    return combine("criterion-8: functor diagram", parts)


# 9. appendix canonical solutions

def criterion_9(seed: int = 0) -> Certificate:
    parts = []
    for name, a in corpus.algebras("prelie").items():
        for eq, flavor in (("CYBE", "antisymmetric"), ("SEQ", "symmetric")):
            lift = canonical_solution(a, eq)
            gram_ok = induced_gram(lift.r) == natural_form(a.dim, flavor).gram
            parts.append(combine(f"{name}: {eq}", [
                lift.certificate(), from_bool(f"induced gram is the natural {flavor} form",
                                              gram_ok)]))
    return combine("criterion-9: canonical CYBE and S-equation solutions", parts)


# 10. isomorphism witnesses

def criterion_10(seed: int = 0) -> Certificate:
    cases = [("L2, AYBE", corpus.get("L2"), [[0, 1], [-1, 0]], "AYBE"),
             ("L2-succ, DEQ", corpus.get("L2-succ", "dendriform"), [[1, 0], [0, 0]], "DEQ"),
             ("L2-prec, DEQ", corpus.get("L2-prec", "dendriform"), [[1, 0], [0, 0]], "DEQ")]
    parts = []
    for label, a, r, eq in cases:
        _, cert = iso_witness(a, Tensor.of(r), eq)
        negative = cert.find("not a double-construction isomorphism (reported)")
        parts.append(combine(label, [
            combine("φ is a form-preserving isomorphism", [cert]),
            from_bool("induced dual product is nonzero",
                      "the induced dual product is nonzero" in cert.notes),
            from_bool("φ is not a double-construction isomorphism", not negative.passed)]))
    return combine("criterion-10: isomorphism witnesses", parts)


# 11. bridge

def heisenberg_connes() -> tuple:
    a = corpus.get("heisenberg-4")
    items = [((2, 0), 1), ((0, 2), -1), ((3, 1), 1), ((1, 3), -1)]
    return a, BilinearForm(Tensor.from_sparse((4, 4), items))


def l2_connes() -> tuple:
    return corpus.get("L2"), BilinearForm(Tensor.of([[0, 1], [-1, 0]]))


def criterion_11(seed: int = 0) -> Certificate:
    parts = []
    for label, (a, omega) in (("2-step nilpotent heisenberg-4", heisenberg_connes()),
                              ("L2", l2_connes())):
        b = ddb_from_connes(a, omega)
        cert = bridge_check(b)
        nilpotent = is_two_step_nilpotent(a)
        cond = dendriform_two_step_condition(b.base)
        parts.append(combine(label, [
            from_bool(f"bridge {cert.status} agrees with 2-step nilpotency {nilpotent}",
                      cert.passed == nilpotent),
            from_bool("nilpotency criterion agrees with the dendriform condition",
                      cond == nilpotent)]))
    first = bridge_check(ddb_from_connes(*heisenberg_connes()))
    parts.append(combine("nilpotent instance passes both identities", [first]))
    return combine("criterion-11: DDB to AIB bridge", parts)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11)


def run_suite(name: str = "paper-core", seed: int = 0) -> Certificate:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    return combine(f"suite {name} (seed {seed})", [c(seed) for c in CRITERIA])

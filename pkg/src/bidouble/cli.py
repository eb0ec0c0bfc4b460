"""Command-line interface: every command prints one JSON document.

Exit codes: 0 pass, 1 fail, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys

from . import fileio
from .algebra import (Algebra, associated_associative, check_axioms, commutator_lie,
                      dendriform_to_prelie)
from .bialgebra import BialgebraStructure, bialgebra_functor, check_bialgebra, double_construction
from .certificate import CONVENTION, Certificate, combine, from_residual
from .errors import AxiomError, BidoubleError
from .exactlin import Tensor, det
from .forms import LAWS, BilinearForm, check_form
from .suite import SUITES, run_suite
from .yangbaxter import ALIASES, build_double, canonical_solution, induced_gram, residual


class UsageError(Exception):
    pass


def _report(command: str, cert: Certificate, result: dict = None) -> dict:
    out = {"convention": CONVENTION, "command": command, "certificate": cert.to_dict()}
    if result:
        out["result"] = result
    return out


def _tensor_obj(t: Tensor) -> dict:
    return fileio.tensor_to_obj(t)


# commands

def cmd_check(args) -> dict:
    value, form = fileio.load_with_form(args.file)
    if isinstance(value, BialgebraStructure):
        if args.law:
            raise UsageError("--law applies to algebra files only")
        return _report("check", check_bialgebra(value))
    if not isinstance(value, Algebra):
        raise UsageError("check needs an algebra or bialgebra file")
    if args.law is None:
        return _report("check", check_axioms(value))
    if form is None:
        raise UsageError("--law needs a 'form' field in the algebra file")
    cert = combine(f"{args.law} form", [check_axioms(value),
                                        check_form(value, BilinearForm(form), args.law)])
    return _report("check", cert)


def cmd_residual(args) -> dict:
    a = fileio.load(args.algebra)
    r = fileio.load(args.tensor)
    if not isinstance(a, Algebra) or not isinstance(r, Tensor):
        raise UsageError("residual needs an algebra file and a tensor file")
    tag = ALIASES[args.eq]
    res = residual(tag, a, r)
    cert = from_residual(f"{tag} residual", res, 3)
    return _report("residual", cert, {"equation": tag, "residual": _tensor_obj(res)})


def cmd_double(args) -> dict:
    b = fileio.load(args.file)
    if not isinstance(b, BialgebraStructure):
        raise UsageError("double needs a bialgebra file")
    kind = {"frobenius": "AIB", "connes": "DDB", "ad": "AIB", "dd": "DDB"}[args.type]
    if b.kind != kind:
        raise UsageError(f"--type {args.type} needs a {kind} file, got {b.kind}")
    if args.type in ("frobenius", "connes"):
        alg, form, double = double_construction(b, verify=False)
        cert = combine(f"{args.type} double construction", [check_bialgebra(b), double])
        result = {"algebra": fileio.algebra_to_obj(alg), "form": fileio.form_to_obj(form.gram)}
    else:
        double, cert = build_double(b, args.type)
        result = {"bialgebra": fileio.bialgebra_to_obj(double)}
    return _report("double", cert, result)


def cmd_derive(args) -> dict:
    value = fileio.load(args.file)
    target = args.functor
    if isinstance(value, BialgebraStructure):
        kinds = {("AIB", "lie"): "LieBi", ("DDB", "prelie"): "PreLieBi",
                 ("PreLieBi", "lie"): "LieBi"}
        want = kinds.get((value.kind, target))
        if want is None:
            raise UsageError(f"no functor from {value.kind} to {target}")
        out = bialgebra_functor(value, want)
        return _report("derive", check_bialgebra(out), {"bialgebra": fileio.bialgebra_to_obj(out)})
    if not isinstance(value, Algebra):
        raise UsageError("derive needs an algebra or bialgebra file")
    funcs = {("dendriform", "assoc"): associated_associative,
             ("dendriform", "prelie"): dendriform_to_prelie,
             ("associative", "lie"): commutator_lie, ("prelie", "lie"): commutator_lie}
    f = funcs.get((value.kind, target))
    if f is None:
        raise UsageError(f"no functor from {value.kind} algebras to {target}")
    out = f(value)
    return _report("derive", check_axioms(out), {"algebra": fileio.algebra_to_obj(out)})


def cmd_canonical(args) -> dict:
    a = fileio.load(args.file)
    if not isinstance(a, Algebra):
        raise UsageError("canonical needs an algebra file")
    tag = ALIASES[args.eq]
    lift = canonical_solution(a, tag)
    result = {"equation": tag, "ambient": fileio.algebra_to_obj(lift.ambient),
              "r": _tensor_obj(lift.r)}
    if det(lift.r) != 0:
        result["induced_form"] = fileio.form_to_obj(induced_gram(lift.r))
    return _report("canonical", lift.certificate(), result)


def cmd_certify(args) -> dict:
    return _report("certify", run_suite(args.suite, args.seed))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bidouble", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    eqs = sorted(k for k in ALIASES if k.islower() and k != "deq" and k != "seq")

    c = sub.add_parser("check", help="check algebra axioms, a form law, or a bialgebra")
    c.add_argument("file")
    c.add_argument("--law", choices=sorted(LAWS))
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("residual", help="residual of a tensor equation")
    c.add_argument("--eq", required=True, choices=eqs)
    c.add_argument("algebra")
    c.add_argument("tensor")
    c.set_defaults(func=cmd_residual)

    c = sub.add_parser("double", help="double construction or double bialgebra")
    c.add_argument("--type", required=True, choices=("frobenius", "connes", "ad", "dd"))
    c.add_argument("file")
    c.set_defaults(func=cmd_double)

    c = sub.add_parser("derive", help="apply a functor between algebra kinds")
    c.add_argument("--functor", required=True, choices=("assoc", "prelie", "lie"))
    c.add_argument("file")
    c.set_defaults(func=cmd_derive)

    c = sub.add_parser("canonical", help="canonical solution on A⊕A*")
    c.add_argument("--eq", required=True, choices=eqs)
    c.add_argument("file")
    c.set_defaults(func=cmd_canonical)

    c = sub.add_parser("certify", help="run an acceptance suite")
    c.add_argument("--suite", required=True, choices=SUITES)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_certify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        report = args.func(args)
    except AxiomError as exc:
        if exc.certificate is None:
            print(f"bidouble: error: {exc}", file=sys.stderr)
            return 2
        report = _report(args.command, exc.certificate)
    except (UsageError, BidoubleError, OSError) as exc:
        print(f"bidouble: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(fileio.dumps_obj(report))
    return 0 if report["certificate"]["status"] == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())

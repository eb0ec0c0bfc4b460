import json

import pytest

from bidouble import corpus, fileio
from bidouble.cli import main
from bidouble.exactlin import Tensor
from bidouble.suite import aib_instances, ddb_instances


@pytest.fixture
def files(tmp_path):
    paths = {}

    def put(name, value):
        p = tmp_path / name
        p.write_text(fileio.dumps(value))
        paths[name] = str(p)

    put("l2.alg", corpus.get("L2"))
    put("dend.alg", corpus.get("L2-succ", "dendriform"))
    put("prelie.alg", corpus.get("L2-succ", "prelie"))
    put("r.tensor", Tensor.of([[0, 1], [-1, 0]]))
    put("bad.tensor", Tensor.of([[0, 1], [0, 0]]))
    put("aib.bi", dict(aib_instances())["coboundary AIB on L2"])
    put("ddb.bi", dict(ddb_instances())["coboundary DDB on L2-succ"])
    frob = fileio.to_obj(corpus.get("L2"))
    frob["form"] = [[0, 1, "-1"], [1, 0, "1"]]
    p = tmp_path / "l2-connes.alg"
    p.write_text(json.dumps(frob))
    paths["l2-connes.alg"] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out else None), out.err


def test_check_l2(files, capsys):
    code, out, _ = run(capsys, "check", files["l2.alg"])
    assert code == 0 and out["certificate"]["status"] == "pass"
    assert out["convention"].startswith("bidouble-conventions/")


def test_check_with_law(files, capsys):
    code, out, _ = run(capsys, "check", files["l2-connes.alg"], "--law", "connes")
    assert code == 0
    code, out, _ = run(capsys, "check", files["l2-connes.alg"], "--law", "invariant")
    assert code == 1 and out["certificate"]["status"] == "fail"


def test_residual_reports(files, capsys):
    code, out, _ = run(capsys, "residual", "--eq", "aybe", files["l2.alg"], files["r.tensor"])
    assert code == 0 and out["result"]["residual"]["entries"] == []
    code, out, _ = run(capsys, "residual", "--eq", "aybe", files["l2.alg"], files["bad.tensor"])
    assert code == 1 and out["certificate"]["first_witness"] is not None


@pytest.mark.parametrize("kind,name", [("frobenius", "aib.bi"), ("ad", "aib.bi"),
                                       ("connes", "ddb.bi"), ("dd", "ddb.bi")])
def test_doubles(files, capsys, kind, name):
    code, out, _ = run(capsys, "double", "--type", kind, files[name])
    assert code == 0 and "result" in out


def test_derive(files, capsys):
    code, out, _ = run(capsys, "derive", "--functor", "lie", files["l2.alg"])
    assert code == 0 and out["result"]["algebra"]["kind"] == "lie"
    code, out, _ = run(capsys, "derive", "--functor", "prelie", files["ddb.bi"])
    assert code == 0 and out["result"]["bialgebra"]["kind"] == "PreLieBi"


@pytest.mark.parametrize("eq,name", [("aybe", "l2.alg"), ("d", "dend.alg"),
                                     ("cybe", "prelie.alg"), ("s", "prelie.alg")])
def test_canonical(files, capsys, eq, name):
    code, out, _ = run(capsys, "canonical", "--eq", eq, files[name])
    assert code == 0 and "induced_form" in out["result"]


@pytest.mark.parametrize("argv", [
    ("check", "missing.alg"),
    ("residual", "--eq", "xyz", "a", "b"),
    ("double", "--type", "dd", "AIB"),
    ("canonical", "--eq", "cybe", "L2"),
    ("certify", "--suite", "nope"),
])
def test_usage_errors_exit_2(files, capsys, argv):
    argv = [files.get(a, a) if a not in ("AIB", "L2") else files["aib.bi" if a == "AIB" else "l2.alg"]
            for a in argv]
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out is None


def test_malformed_file_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.alg"
    p.write_text('{"type": "algebra", "kind": "associative", "dim": 1, '
                 '"products": [[0, 0, 0, "1/0"]]}')
    code, out, err = run(capsys, "check", str(p))
    assert code == 2 and "zero denominator" in err


def test_output_is_byte_identical(files, capsys):
    outs = []
    for _ in range(2):
        main(["double", "--type", "dd", files["ddb.bi"]])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]

import json

import pytest

from splitfields import documents as docs
from splitfields.basechange import extend_algebra
from splitfields.cli import main
from splitfields.corpus import bundled_algebras
from splitfields.fields import embed_find, finite_field_of_degree, prime_field
from splitfields.structure import composition_factors

DATA = "src/splitfields/data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.startswith("{") else out)


def test_validate_bundled(capsys):
    code, doc = run(capsys, "validate", f"{DATA}/mat2_QQ.json")
    assert code == 0 and doc["payload"]["valid"]


def test_validate_corrupted_exits_2(tmp_path, capsys):
    doc = docs.algebra_out(bundled_algebras()["mat2_QQ"])
    doc["payload"]["constants"][0] = "1/2"  # breaks the unit law
    path = tmp_path / "bad.json"
    path.write_text(docs.dumps(doc))
    code = main(["validate", str(path)])
    assert code == 2


def test_split_check_verdicts(capsys):
    code, doc = run(capsys, "split-check", f"{DATA}/mat2_QQ.json")
    assert code == 0 and doc["payload"]["verdict"] is True
    code, doc = run(capsys, "split-check", f"{DATA}/quat_QQ.json")
    assert code == 1 and doc["payload"]["verdict"] is False


def test_split_find_quaternions(capsys):
    code, doc = run(capsys, "split-find", f"{DATA}/quat_QQ.json")
    assert code == 0
    assert doc["payload"]["degree"] == 2
    assert doc["payload"]["certificate"]["verdict"] is True


def test_split_find_degree_cap(capsys):
    code, doc = run(capsys, "split-find", f"{DATA}/quat_QQ.json",
                    "--max-degree", "1")
    assert code == 3


def test_radical_and_simples(capsys):
    code, doc = run(capsys, "radical", f"{DATA}/upper2_QQ.json")
    assert code == 0 and doc["payload"]["dim_radical"] == 1
    code, doc = run(capsys, "simples", f"{DATA}/cyclic3_QQ.json")
    dims = sorted((s["module"]["dim"], s["multiplicity"])
                  for s in doc["payload"]["simples"])
    assert code == 0 and dims == [(1, 1), (2, 1)]


def test_end_dimension(capsys):
    code, doc = run(capsys, "end", f"{DATA}/cyclic2_QQ.json")
    assert code == 0 and doc["payload"]["dim"] == 2


def test_extend_then_split_check(tmp_path, capsys):
    code, doc = run(capsys, "extend", f"{DATA}/cyclic4_QQ.json",
                    "--field", f"{DATA}/field_QQ_i.json")
    assert code == 0
    path = tmp_path / "ext.json"
    path.write_text(docs.dumps(doc))
    code, doc = run(capsys, "split-check", str(path))
    assert code == 0 and doc["payload"]["verdict"] is True


def test_descend_and_written_in(tmp_path, capsys):
    A = bundled_algebras()["cyclic3_F2"]
    F4 = finite_field_of_degree(2, 2)
    ctx = extend_algebra(A, embed_find(prime_field(2), F4))
    S = next(S for S, _ in
             composition_factors(ctx.extended.regular_module()) if S.dim == 1
             and any(c != F4.one() and bool(c)
                     for m in S.actions for r in m.entries for c in r))
    path = tmp_path / "simple.json"
    path.write_text(docs.dumps(docs.module_out(S)))

    code, doc = run(capsys, "descend", str(path),
                    "--algebra", f"{DATA}/cyclic3_F2.json")
    assert code == 0 and doc["payload"]["degree"] == 2

    code, doc = run(capsys, "written-in", str(path),
                    "--algebra", f"{DATA}/cyclic3_F2.json",
                    "--subfield", f"{DATA}/field_F2.json")
    assert code == 1 and doc["payload"]["writable"] is False

    code, doc = run(capsys, "written-in", str(path),
                    "--algebra", f"{DATA}/cyclic3_F2.json",
                    "--subfield", f"{DATA}/field_F4.json")
    assert code == 0 and doc["payload"]["writable"] is True


def test_chain_verify(capsys):
    code, doc = run(capsys, "chain-verify", f"{DATA}/cyclic3_F2.json",
                    "--mid", f"{DATA}/field_F4.json",
                    "--top", f"{DATA}/field_F16.json")
    assert code == 0 and doc["payload"]["agree"] is True


def test_radical_extend_verify(capsys):
    code, doc = run(capsys, "radical-extend-verify", f"{DATA}/cyclic2_F2.json",
                    "--field", f"{DATA}/field_F4.json")
    assert code == 0 and doc["payload"]["verdict"] is True


def test_oracle_compare_small(capsys):
    code, doc = run(capsys, "oracle-compare", "--count", "3")
    assert code == 0 and doc["payload"]["mismatches"] == []


def test_missing_file_exits_2(capsys):
    assert main(["validate", "no_such_file.json"]) == 2


def test_outputs_are_byte_identical(capsys):
    main(["simples", f"{DATA}/cyclic4_F2.json", "--seed", "7"])
    first = capsys.readouterr().out
    main(["simples", f"{DATA}/cyclic4_F2.json", "--seed", "7"])
    second = capsys.readouterr().out
    assert first == second

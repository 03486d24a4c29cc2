from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ringlab.cli import main, run
from ringlab.decompose import Decomposition
from ringlab.expr import parse_ring_expr
from ringlab.rings import build_ring


def invoke(*argv):
    text, code, _ = run(list(argv))
    return json.loads(text), code


def test_check_kosan_z30():
    doc, code = invoke("check", "kosan", "Z30")
    assert code == 0
    assert doc["schema"] == "1" and doc["property"] == "kosan" and doc["holds"] is True


def test_check_strict_exit_code():
    doc, code = invoke("check", "kosan", "Z7", "--strict")
    assert code == 1 and doc["holds"] is False
    assert doc["counterexample"]["condition"] == "unit_fourth_power_not_unipotent"
    _, code = invoke("check", "kosan", "Z7")
    assert code == 0


def test_check_witnesses_revalidate():
    doc, _ = invoke("check", "zhou_nil_clean", "T2(Z2)", "--witnesses")
    ring = build_ring(parse_ring_expr("T2(Z2)"))
    assert len(doc["witness"]) == ring.size
    for w in doc["witness"]:
        Decomposition.from_json(ring, w)


def test_decompose_two_2idempotents():
    doc, code = invoke("decompose", "two_2idempotents", "Z25", "3", "--scope", "commuting")
    assert code == 0 and doc["exists"]
    assert doc["decomposition"]["parts"] == [24, 24] and doc["decomposition"]["nilpotent"] == 5


def test_decompose_absence_record():
    doc, code = invoke("decompose", "three_idempotents", "Z5", "4")
    assert code == 0 and doc["exists"] is False and doc["decomposition"] is None


def test_decompose_matrix_literal_and_scope_spelling():
    doc, code = invoke("decompose", "two_tripotents", "M2(Z2)", "[[1,1],[1,0]]", "--scope", "unrestricted")
    assert code == 0 and doc["exists"]
    doc, code = invoke("decompose", "four_idempotents", "Z30", "7", "--scope", "in_za")
    assert code == 0 and doc["decomposition"]["scope"] == "in_Za"
    ring = build_ring(parse_ring_expr("Z30"))
    Decomposition.from_json(ring, doc["decomposition"])


def test_classify_single_and_all():
    doc, _ = invoke("classify", "Z25", "--elem", "3")
    (row,) = doc["elements"]
    assert row["unit"] and row["inverse"] == 17
    doc, _ = invoke("classify", "Z25")
    assert len(doc["elements"]) == 25
    assert doc["jacobson_radical"] == [0, 5, 10, 15, 20]
    assert doc["local"]["residue_size"] == 5


def test_atlas_kosan_column():
    doc, code = invoke("atlas", "2..20")
    assert code == 0
    assert [r["n"] for r in doc["rows"] if r["kosan"]] == [2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20]
    assert all(r["kosan"] == r["zn_kosan_numbertheory"] for r in doc["rows"])


def test_atlas_skips_beyond_cap():
    doc, _ = invoke("atlas", "9..12", "--cap", "10")
    rows = {r["n"]: r for r in doc["rows"]}
    assert rows[10]["kosan"] is True and rows[11]["kosan"] == "skipped"
    assert rows[12]["zn_kosan_numbertheory"] is True


@pytest.mark.parametrize(
    "argv, code, kind",
    [
        (("check", "kosan", "Z("), 2, "parse"),
        (("check", "nosuch", "Z4"), 2, "usage"),
        (("atlas", "5-9"), 2, "usage"),
        (("classify", "Z70000"), 3, "cap_exceeded"),
        (("classify", "Z10", "--cap", "5"), 3, "cap_exceeded"),
        (("decompose", "two_tripotents", "Z4", "[[1]]"), 2, "LiteralError"),
        (("classify", "corner(Z4,2)"), 2, "PreconditionError"),
        ((), 2, "usage"),
    ],
)
def test_errors_are_machine_readable(argv, code, kind):
    doc, got = invoke(*argv)
    assert got == code and doc["error"]["type"] == kind and doc["schema"] == "1"


def test_parse_error_offset():
    doc, _ = invoke("check", "kosan", "prod(Z2,)")
    assert doc["error"]["offset"] == 8


def test_cap_raises_limit():
    doc, code = invoke("check", "kosan", "Z70000", "--cap", "70000")
    assert code == 0 and doc["holds"] is False


def test_verify_custom_corpus_and_out(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("# small corpus\nZ8\n\nZ30   # squarefree\nT2(Z2)\n")
    out = tmp_path / "report.json"
    assert main(["verify", "--corpus", str(corpus), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["corpus"] == ["Z8", "Z30", "T2(Z2)"] and doc["passed"]


def test_missing_corpus_file(tmp_path):
    doc, code = invoke("verify", "--corpus", str(tmp_path / "missing.txt"))
    assert code == 2 and doc["error"]["type"] == "io"


def test_identical_invocations_are_byte_identical():
    a, _, _ = run(["check", "strongly_2_nil_clean", "M2(Z2)", "--witnesses"])
    b, _, _ = run(["check", "strongly_2_nil_clean", "M2(Z2)", "--witnesses"])
    assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ringlab.cli", "check", "kosan", "Z7", "--strict"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["holds"] is False

from __future__ import annotations

import pytest

from ringlab.decompose import Decomposition
from ringlab.expr import Rows, parse_ring_expr
from ringlab.properties import (
    PROPERTIES,
    Counterexample,
    PropertyVerdict,
    check_property,
    fifth_power_audit,
    matrix_tripotent_sum_check,
    theorem_suite,
    zn_kosan_numbertheory,
)
from ringlab.rings import (
    Elem,
    PreconditionError,
    build_ring,
    make_matrix_ring,
    make_triangular_ring,
    make_zmod,
)

Z = make_zmod


def test_zhou_examples():
    assert check_property(Z(25), "zhou_nil_clean").holds
    v = check_property(Z(7), "zhou_nil_clean")
    assert not v.holds and v.counterexample.element.value == 3
    assert (3**5 - 5 * 3**3 + 4 * 3) == 120 and 120 % 7 == 1
    assert v.counterexample.recheck()


def test_kosan_examples():
    assert check_property(Z(30), "kosan").holds
    v = check_property(Z(7), "kosan")
    assert not v.holds and v.counterexample.recheck()
    z7 = v.counterexample.element.ring
    # 3 is also a violating unit: 3^4 - 1 = 80 = 3 mod 7
    assert Counterexample(Elem(z7, 3), v.counterexample.condition).recheck()


def test_kosan_matrix_counterexample():
    m = make_matrix_ring(2, Z(2))
    v = check_property(m, "kosan")
    assert not v.holds and v.counterexample.recheck()
    stated = m.element(Rows(((1, 1), (1, 0))))
    assert stated**3 == m.elem(m.one)
    assert Counterexample(stated, "unit_fourth_power_not_unipotent").recheck()


def test_definitional_scans():
    assert check_property(Z(6), "exchange").holds
    assert check_property(Z(25), "clean").holds
    assert check_property(Z(6), "strongly_2_nil_clean").holds
    v = check_property(Z(5), "strongly_2_nil_clean")
    assert not v.holds and v.counterexample.recheck()
    # 4 is unreachable: sums of two idempotents in Z/5 are 0, 1, 2
    assert Counterexample(v.counterexample.element.ring.element(4), v.counterexample.condition).recheck()


def test_strongly_nil_clean_aux_columns():
    v = check_property(Z(8), "strongly_nil_clean")
    assert v.holds and v.auxiliary["a-a^2 nilpotent for all a"]
    v = check_property(Z(3), "strongly_nil_clean")
    assert not v.holds and not v.auxiliary["a-a^2 nilpotent for all a"]
    assert v.auxiliary["a-a^3 nilpotent for all a"]


def test_counterexample_recheck_is_honest():
    z8 = Z(8)
    assert not Counterexample(z8.element(3), "unit_fourth_power_not_unipotent").recheck()
    assert not Counterexample(z8.element(5), "quintic_not_nilpotent").recheck()


def test_failing_verdict_needs_counterexample():
    with pytest.raises(ValueError):
        PropertyVerdict("kosan", False)


@pytest.mark.parametrize("prop", PROPERTIES)
def test_zero_ring_satisfies_everything(prop):
    assert check_property(Z(1), prop).holds


def test_witness_maps_cover_every_element():
    ring = Z(12)
    for prop in ("zhou_nil_clean", "strongly_2_nil_clean"):
        v = check_property(ring, prop, witnesses=True)
        assert v.holds and set(v.witness) == set(ring.elements())
        for d in v.witness.values():
            assert Decomposition.from_json(ring, d.to_json()) == d


@pytest.mark.parametrize("n, expected", [(30, True), (7, False), (1, True), (2**5 * 3 * 25, True), (14, False)])
def test_zn_kosan_numbertheory(n, expected):
    assert zn_kosan_numbertheory(n) is expected


def test_matrix_tripotent_sums():
    assert matrix_tripotent_sum_check(make_matrix_ring(2, Z(2))).holds
    assert matrix_tripotent_sum_check(make_matrix_ring(1, Z(5))).holds
    v = matrix_tripotent_sum_check(make_matrix_ring(2, Z(2)), witnesses=True)
    assert len(v.witness) == 16 and all(d.scope == "unrestricted" for d in v.witness.values())
    with pytest.raises(PreconditionError):
        matrix_tripotent_sum_check(make_triangular_ring(2, Z(2)))
    with pytest.raises(PreconditionError):
        matrix_tripotent_sum_check(Z(5))


def test_matrix_tripotent_sums_can_fail():
    v = matrix_tripotent_sum_check(make_matrix_ring(1, Z(7)))
    assert not v.holds and v.counterexample.recheck()


def test_fifth_power_audit_reports_computed_truth():
    report = fifth_power_audit(Z(25), 2)
    assert report["fifth_power_fixed_points"] == [7]
    assert report["nilpotents_w_with_(a-w)^5=a-w"] == [20]
    assert report["decomposable"] and report["consistent"]
    assert pow(7, 5, 25) == 7 and (2 - 7) % 25 == 20


def test_theorem_suite_rows():
    rings = [build_ring(parse_ring_expr(t)) for t in ("Z8", "Z9", "Z25", "Z30", "Z45", "Z7", "Z14", "Z4")]
    report = theorem_suite(rings)
    rows = {r["name"]: r for r in report["rows"]}
    assert rows["zhou_exchange_kosan"]["passed"] and rows["zhou_exchange_kosan"]["checked"] == 8
    radical_row = rows["exchange_kosan_radical_nil"]
    assert radical_row["passed"]
    assert sum(e["hypothesis"] for e in radical_row["entries"]) == 6
    tri = {e["ring"]: e for e in rows["triangular_kosan"]["entries"]}
    assert tri["T2(Z4)"]["triangular"] is True and tri["T2(Z4)"]["base"] is True
    assert tri["T2(Z7)"]["triangular"] is False and tri["T2(Z7)"]["base"] is False
    assert report["passed"]


def test_theorem_suite_passes_on_default_corpus(corpus):
    report = theorem_suite(corpus)
    assert report["passed"], [r["name"] for r in report["rows"] if not r["passed"]]
    assert report["audits"][0]["consistent"]

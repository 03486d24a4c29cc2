from __future__ import annotations

import pytest

from ringlab import bulk
from ringlab.classify import is_nilpotent, is_unit
from ringlab.properties import unit_power_failure
from ringlab.rings import PreconditionError, make_matrix_ring, make_triangular_ring, make_zmod

Z = make_zmod

SMALL = [
    make_matrix_ring(2, Z(2)),
    make_matrix_ring(2, Z(3)),
    make_matrix_ring(2, Z(4)),
    make_matrix_ring(1, Z(7)),
    make_triangular_ring(2, Z(6)),
    make_triangular_ring(3, Z(2)),
    make_triangular_ring(3, Z(3)),
]


@pytest.mark.parametrize("ring", SMALL, ids=lambda r: r.label)
def test_decode_matches_ring_values(ring):
    arr = bulk.decode(ring, 0, ring.size)
    for i in range(0, ring.size, max(1, ring.size // 50)):
        assert [list(r) for r in ring.value(i).rows] == arr[i].tolist()


@pytest.mark.parametrize("ring", SMALL, ids=lambda r: r.label)
def test_masks_agree_with_scans(ring):
    arr = bulk.decode(ring, 0, ring.size)
    units = bulk.unit_mask(ring, arr)
    nil = bulk.nilpotent_mask(ring, arr)
    for i in range(ring.size):
        assert bool(units[i]) == is_unit(ring, i)
        assert bool(nil[i]) == is_nilpotent(ring, i)


@pytest.mark.parametrize("ring", SMALL, ids=lambda r: r.label)
@pytest.mark.parametrize("exponent", [2, 4])
def test_bulk_and_scan_routes_agree(ring, exponent):
    assert unit_power_failure(ring, exponent, "bulk") == unit_power_failure(ring, exponent, "scan")


def test_bulk_route_needs_matrix_over_zmod():
    with pytest.raises(PreconditionError):
        unit_power_failure(Z(7), 4, "bulk")
    assert bulk.matrix_form(Z(7)) is None
    assert bulk.matrix_form(make_matrix_ring(2, Z(3))) == (2, 3, False)


def test_chunked_scan_matches_single_chunk(monkeypatch):
    ring = make_matrix_ring(2, Z(5))
    whole = bulk.first_unit_power_not_unipotent(ring, 4)
    monkeypatch.setattr(bulk, "CHUNK", 7)
    assert bulk.first_unit_power_not_unipotent(ring, 4) == whole
    assert whole is not None and isinstance(whole, int)

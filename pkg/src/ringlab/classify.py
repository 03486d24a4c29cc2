"""Element predicates and the structural sets of a finite ring."""

from __future__ import annotations

from dataclasses import dataclass

from .rings import Elem, FiniteRing

__all__ = [
    "CLASS_KINDS",
    "ClassReport",
    "LocalInfo",
    "RingIdentities",
    "classify_element",
    "enumerate_class",
    "jacobson_radical",
    "is_local",
    "ring_identities",
    "nilpotency_index",
    "is_nilpotent",
    "nilpotent_set",
    "unit_inverses",
    "class_indices",
    "radical_indices",
    "quintic_value",
    "quintic_criterion_failure",
    "is_unit",
]

CLASS_KINDS = ("nilpotents", "units", "idempotents", "tripotents", "two_idempotents")


@dataclass(frozen=True)
class ClassReport:
    element: Elem
    nilpotent: bool
    nilpotency_index: int | None
    idempotent: bool
    tripotent: bool
    two_idempotent: bool
    unit: bool
    unipotent: bool
    inverse: Elem | None


@dataclass(frozen=True)
class LocalInfo:
    local: bool
    residue_size: int | None = None
    residue_is_field: bool = False

    @property
    def residue_in_235(self) -> bool:
        """R/J(R) is one of the fields Z2, Z3, Z5."""
        return self.local and self.residue_is_field and self.residue_size in (2, 3, 5)


@dataclass(frozen=True)
class RingIdentities:
    reduced: bool
    x5_eq_x: bool
    quintic_identity: bool
    commutative: bool
    bounded_index: int


def nilpotency_index(ring: FiniteRing, i: int) -> int | None:
    """Least k with i^k = 0, or None when the powers of i cycle without reaching 0."""

    def compute() -> list[int | None]:
        return [_power_walk(ring, x) for x in range(ring.size)]

    if ring.has_tables:
        return ring.memo("nil_index", compute)[i]
    return _power_walk(ring, i)


def _power_walk(ring: FiniteRing, i: int) -> int | None:
    zero = ring.zero
    x, k = i, 1
    seen = set()
    while x != zero:
        if x in seen:
            return None
        seen.add(x)
        x = ring.mul(x, i)
        k += 1
    return k


def is_nilpotent(ring: FiniteRing, i: int) -> bool:
    if ring.has_tables:
        return i in nilpotent_set(ring)
    return _power_walk(ring, i) is not None


def nilpotent_set(ring: FiniteRing) -> frozenset[int]:
    return ring.memo(
        "nilpotents",
        lambda: frozenset(x for x in range(ring.size) if nilpotency_index(ring, x) is not None),
    )


def _inverse(ring: FiniteRing, x: int) -> int | None:
    one = ring.one
    if ring.has_tables:
        row = ring.mul_table[x]
        start = 0
        while True:
            try:
                y = row.index(one, start)
            except ValueError:
                return None
            if ring.mul(y, x) == one:
                return y
            start = y + 1
    # no tables: a unit is exactly an element whose powers return to 1
    p, prev = x, one
    seen = set()
    while p != one:
        if p in seen:
            return None
        seen.add(p)
        prev = p
        p = ring.mul(p, x)
    return prev


def unit_inverses(ring: FiniteRing) -> dict[int, int]:
    """Map from each unit to its two-sided inverse."""

    def scan() -> dict[int, int]:
        inv: dict[int, int] = {}
        for x in range(ring.size):
            if x in inv:
                continue
            y = _inverse(ring, x)
            if y is not None:
                inv[x] = y
                inv[y] = x
        return inv

    return ring.memo("units", scan)


def is_unit(ring: FiniteRing, i: int) -> bool:
    if ring.has_tables:
        return i in unit_inverses(ring)
    return _inverse(ring, i) is not None


def quintic_value(ring: FiniteRing, i: int) -> int:
    """i^5 - 5 i^3 + 4 i."""
    i3 = ring.pow(i, 3)
    i5 = ring.mul(i3, ring.mul(i, i))
    return ring.add(ring.sub(i5, ring.smul(5, i3)), ring.smul(4, i))


def _is_idempotent(ring, i):
    return ring.mul(i, i) == i


def _is_tripotent(ring, i):
    return ring.pow(i, 3) == i


def _is_two_idempotent(ring, i):
    sq = ring.mul(i, i)
    return ring.mul(sq, sq) == sq


def _is_quintic_root(ring, i):
    return quintic_value(ring, i) == ring.zero


_PREDICATES = {
    "idempotents": _is_idempotent,
    "tripotents": _is_tripotent,
    "two_idempotents": _is_two_idempotent,
    "quintic_roots": _is_quintic_root,
}


def class_indices(ring: FiniteRing, kind: str) -> tuple[int, ...]:
    """Sorted indices of one element class (also accepts ``quintic_roots``)."""

    def scan() -> tuple[int, ...]:
        if kind == "nilpotents":
            return tuple(sorted(nilpotent_set(ring)))
        if kind == "units":
            return tuple(sorted(unit_inverses(ring)))
        try:
            pred = _PREDICATES[kind]
        except KeyError:
            raise ValueError(f"unknown element class {kind!r}") from None
        return tuple(x for x in range(ring.size) if pred(ring, x))

    return ring.memo(("class", kind), scan)


def enumerate_class(ring: FiniteRing, kind: str) -> frozenset[Elem]:
    if kind not in CLASS_KINDS:
        raise ValueError(f"unknown element class {kind!r}")
    return frozenset(Elem(ring, i) for i in class_indices(ring, kind))


def classify_element(ring: FiniteRing, a: Elem) -> ClassReport:
    i = ring.index(a)
    k = nilpotency_index(ring, i)
    inv = unit_inverses(ring).get(i) if ring.has_tables else _inverse(ring, i)
    return ClassReport(
        element=Elem(ring, i),
        nilpotent=k is not None,
        nilpotency_index=k,
        idempotent=_is_idempotent(ring, i),
        tripotent=_is_tripotent(ring, i),
        two_idempotent=_is_two_idempotent(ring, i),
        unit=inv is not None,
        unipotent=is_nilpotent(ring, ring.sub(i, ring.one)),
        inverse=None if inv is None else Elem(ring, inv),
    )


def radical_indices(ring: FiniteRing) -> frozenset[int]:
    """J(R) = {x : 1 - r x is left invertible for every r}."""

    def scan() -> frozenset[int]:
        one = ring.one
        left_invertible = set()
        for z in range(ring.size):
            row = ring.mul_row(z)
            left_invertible.update(y for y, p in enumerate(row) if p == one)
        members = []
        for x in range(ring.size):
            if all(ring.sub(one, ring.mul(r, x)) in left_invertible for r in range(ring.size)):
                members.append(x)
        return frozenset(members)

    return ring.memo("radical", scan)


def jacobson_radical(ring: FiniteRing) -> frozenset[Elem]:
    return frozenset(Elem(ring, x) for x in radical_indices(ring))


def is_local(ring: FiniteRing) -> LocalInfo:
    """Local iff the non-units are exactly J(R); reports the size and field-ness of R/J(R)."""
    units = unit_inverses(ring)
    nonunits = frozenset(x for x in range(ring.size) if x not in units)
    radical = radical_indices(ring)
    if nonunits != radical:
        return LocalInfo(False)
    residue_size = ring.size // len(radical)
    commutative = all(
        ring.sub(ring.mul(x, y), ring.mul(y, x)) in radical
        for x in range(ring.size)
        for y in range(x + 1, ring.size)
    )
    return LocalInfo(True, residue_size, commutative)


def ring_identities(ring: FiniteRing) -> RingIdentities:
    nil = nilpotent_set(ring)
    r = range(ring.size)
    return RingIdentities(
        reduced=nil == {ring.zero},
        x5_eq_x=all(ring.pow(x, 5) == x for x in r),
        quintic_identity=all(quintic_value(ring, x) == ring.zero for x in r),
        commutative=ring.is_commutative,
        bounded_index=max(nilpotency_index(ring, x) for x in nil),
    )


def quintic_criterion_failure(ring: FiniteRing) -> int | None:
    """First a (in carrier order) with a^5 - 5a^3 + 4a not nilpotent, or None."""

    def scan() -> int | None:
        for x in range(ring.size):
            if not is_nilpotent(ring, quintic_value(ring, x)):
                return x
        return None

    return ring.memo("quintic_failure", scan)

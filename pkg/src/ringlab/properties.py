"""Ring-level property deciders and the cross-checking theorem suite."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

from . import bulk
from .classify import (
    class_indices,
    is_local,
    is_nilpotent,
    nilpotent_set,
    quintic_criterion_failure,
    quintic_value,
    radical_indices,
    ring_identities,
    unit_inverses,
)
from .decompose import Decomposition, brute_force_decompose, decompose, thirty_exponent
from .expr import literal_to_json
from .rings import (
    Elem,
    FiniteRing,
    MatrixRing,
    PreconditionError,
    make_corner,
    make_matrix_ring,
    make_product,
    make_quotient_central,
    make_triangular_ring,
    make_zmod,
    subring_generated,
    subring_members,
)

__all__ = [
    "PROPERTIES",
    "Counterexample",
    "PropertyVerdict",
    "check_property",
    "zn_kosan_numbertheory",
    "matrix_tripotent_sum_check",
    "first_indecomposable",
    "unit_power_failure",
    "fifth_power_audit",
    "default_corpus",
    "DEFAULT_CORPUS",
    "theorem_suite",
]

PROPERTIES = (
    "zhou_nil_clean",
    "strongly_nil_clean",
    "strongly_2_nil_clean",
    "kosan",
    "exchange",
    "clean",
    "units_square_unipotent",
)


# ----------------------------------------------------------------------
# Conditions a counterexample can violate, each re-checkable on its own.


def _unit_power_unipotent(ring: FiniteRing, u: int, exponent: int) -> bool:
    return is_nilpotent(ring, ring.sub(ring.pow(u, exponent), ring.one))


def _is_unit(ring: FiniteRing, u: int) -> bool:
    return any(
        ring.mul(u, v) == ring.one and ring.mul(v, u) == ring.one for v in range(ring.size)
    ) if not ring.has_tables else u in unit_inverses(ring)


def _has_exchange_idempotent(ring: FiniteRing, a: int) -> bool:
    left = set(ring.mul_row(a))
    right = set(ring.mul_row(ring.sub(ring.one, a)))
    return any(e in left and ring.sub(ring.one, e) in right for e in class_indices(ring, "idempotents"))


def _is_clean(ring: FiniteRing, a: int) -> bool:
    units = unit_inverses(ring)
    return any(ring.sub(a, e) in units for e in class_indices(ring, "idempotents"))


# condition name -> predicate that is True when the condition really fails at the element
_VIOLATIONS: dict[str, Callable[[FiniteRing, int], bool]] = {
    "quintic_not_nilpotent": lambda r, a: not is_nilpotent(r, quintic_value(r, a)),
    "no_idempotent_plus_nilpotent": lambda r, a: brute_force_decompose(r, Elem(r, a), "one_idempotent", "commuting") is None,
    "no_two_idempotents_plus_nilpotent": lambda r, a: brute_force_decompose(r, Elem(r, a), "two_idempotents", "commuting") is None,
    "unit_fourth_power_not_unipotent": lambda r, a: _is_unit(r, a) and not _unit_power_unipotent(r, a, 4),
    "no_exchange_idempotent": lambda r, a: not _has_exchange_idempotent(r, a),
    "not_idempotent_plus_unit": lambda r, a: not _is_clean(r, a),
    "unit_square_not_unipotent": lambda r, a: _is_unit(r, a) and not _unit_power_unipotent(r, a, 2),
    "no_two_tripotents_plus_nilpotent": lambda r, a: brute_force_decompose(r, Elem(r, a), "two_tripotents", "unrestricted") is None,
}


@dataclass(frozen=True)
class Counterexample:
    element: Elem
    condition: str

    def recheck(self) -> bool:
        """True when the named condition really fails at ``element``."""
        ring = self.element.ring
        return _VIOLATIONS[self.condition](ring, self.element.index)

    def to_json(self) -> dict[str, Any]:
        return {"element": literal_to_json(self.element.value), "condition": self.condition}


@dataclass(frozen=True)
class PropertyVerdict:
    property: str
    holds: bool
    witness: dict[Elem, Decomposition] | None = None
    counterexample: Counterexample | None = None
    auxiliary: dict[str, bool] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.holds and self.counterexample is None:
            raise ValueError("a failing verdict needs a counterexample")

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"property": self.property, "holds": self.holds}
        out["counterexample"] = None if self.counterexample is None else self.counterexample.to_json()
        if self.auxiliary:
            out["auxiliary"] = dict(sorted(self.auxiliary.items()))
        if self.witness is not None:
            out["witness"] = [d.to_json() for _, d in sorted(self.witness.items(), key=lambda kv: kv[0].index)]
        return out


def _verdict(name: str, ring: FiniteRing, bad: int | None, condition: str, **extra) -> PropertyVerdict:
    cx = None if bad is None else Counterexample(Elem(ring, bad), condition)
    return PropertyVerdict(name, bad is None, counterexample=cx, **extra)


def _first(ring: FiniteRing, pred: Callable[[int], bool]) -> int | None:
    return next((x for x in range(ring.size) if not pred(x)), None)


def unit_power_failure(ring: FiniteRing, exponent: int, route: str = "auto") -> int | None:
    """First unit u (carrier order) with u^exponent - 1 not nilpotent.

    ``route`` is ``"scan"`` (element by element), ``"bulk"`` (vectorized, matrix
    rings over Z/m only) or ``"auto"``, which takes the bulk route when it applies.
    """
    if route == "auto":
        route = "bulk" if bulk.matrix_form(ring) is not None else "scan"
    if route == "bulk":
        if bulk.matrix_form(ring) is None:
            raise PreconditionError(f"{ring.label} is not a matrix ring over Z/m")
        return ring.memo(
            ("unit_power_failure_bulk", exponent),
            lambda: bulk.first_unit_power_not_unipotent(ring, exponent),  # type: ignore[arg-type]
        )

    def scan() -> int | None:
        units = unit_inverses(ring)
        return next(
            (u for u in sorted(units) if not _unit_power_unipotent(ring, u, exponent)), None
        )

    return ring.memo(("unit_power_failure", exponent), scan)


def first_indecomposable(ring: FiniteRing, kind: str, scope: str | None = None) -> int | None:
    """First element (carrier order) admitting no decomposition of ``kind``."""
    return ring.memo(
        ("indecomposable", kind, scope),
        lambda: _first(ring, lambda x: decompose(ring, Elem(ring, x), kind, scope) is not None),
    )


def _polynomial_aux(ring: FiniteRing) -> dict[str, bool]:
    r = range(ring.size)
    return {
        "a-a^2 nilpotent for all a": all(is_nilpotent(ring, ring.sub(x, ring.mul(x, x))) for x in r),
        "a-a^3 nilpotent for all a": all(is_nilpotent(ring, ring.sub(x, ring.pow(x, 3))) for x in r),
    }


_DECOMPOSITION_PROPERTIES = {
    "strongly_nil_clean": ("one_idempotent", "no_idempotent_plus_nilpotent"),
    "strongly_2_nil_clean": ("two_idempotents", "no_two_idempotents_plus_nilpotent"),
}


def check_property(ring: FiniteRing, prop: str, witnesses: bool = False) -> PropertyVerdict:
    """Decide one ring-level property, with a counterexample when it fails.

    ``witnesses=True`` attaches a decomposition of every element for the
    decomposition-defined properties.
    """
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    if prop in _DECOMPOSITION_PROPERTIES:
        kind, condition = _DECOMPOSITION_PROPERTIES[prop]
        aux = _polynomial_aux(ring)
        if witnesses:
            found: dict[Elem, Decomposition] = {}
            for x in range(ring.size):
                d = decompose(ring, Elem(ring, x), kind, "commuting")
                if d is None:
                    return _verdict(prop, ring, x, condition, auxiliary=aux)
                found[Elem(ring, x)] = d
            return PropertyVerdict(prop, True, witness=found, auxiliary=aux)
        bad = first_indecomposable(ring, kind, "commuting")
        return _verdict(prop, ring, bad, condition, auxiliary=aux)
    if witnesses and prop == "zhou_nil_clean":
        bad = quintic_criterion_failure(ring)
        if bad is not None:
            return _verdict(prop, ring, bad, "quintic_not_nilpotent")
        found = {Elem(ring, x): decompose(ring, Elem(ring, x), "two_tripotents") for x in range(ring.size)}
        return PropertyVerdict(prop, True, witness=found)  # type: ignore[arg-type]
    return ring.memo(("verdict", prop), lambda: _decide(ring, prop))


def _decide(ring: FiniteRing, prop: str) -> PropertyVerdict:
    if prop == "zhou_nil_clean":
        return _verdict(prop, ring, quintic_criterion_failure(ring), "quintic_not_nilpotent")
    if prop == "kosan":
        return _verdict(prop, ring, unit_power_failure(ring, 4), "unit_fourth_power_not_unipotent")
    if prop == "units_square_unipotent":
        return _verdict(prop, ring, unit_power_failure(ring, 2), "unit_square_not_unipotent")
    if prop == "exchange":
        return _verdict(prop, ring, _first(ring, lambda a: _has_exchange_idempotent(ring, a)), "no_exchange_idempotent")
    if prop == "clean":
        return _verdict(prop, ring, _first(ring, lambda a: _is_clean(ring, a)), "not_idempotent_plus_unit")
    raise AssertionError(prop)  # pragma: no cover


def zn_kosan_numbertheory(n: int) -> bool:
    """True iff n has no prime factor other than 2, 3 and 5."""
    if n < 1:
        raise ValueError("n must be positive")
    primes = set()
    p = 2
    while p * p <= n:
        while n % p == 0:
            primes.add(p)
            n //= p
        p += 1
    if n > 1:
        primes.add(n)
    return primes <= {2, 3, 5}


def matrix_tripotent_sum_check(ring: FiniteRing, witnesses: bool = False) -> PropertyVerdict:
    """Every matrix is a sum of two tripotent matrices and a nilpotent (no commuting required)."""
    if not isinstance(ring, MatrixRing) or ring.triangular:
        raise PreconditionError(f"{ring.label} is not a full matrix ring")
    trip = class_indices(ring, "tripotents")
    sums = {ring.add(s, t) for n, s in enumerate(trip) for t in trip[n:]}
    reachable = {ring.add(s, w) for s in sums for w in nilpotent_set(ring)}
    name = "matrix_tripotent_sum"
    bad = _first(ring, lambda a: a in reachable)
    if bad is not None or not witnesses:
        return _verdict(name, ring, bad, "no_two_tripotents_plus_nilpotent")
    found = {
        Elem(ring, x): brute_force_decompose(ring, Elem(ring, x), "two_tripotents", "unrestricted")
        for x in range(ring.size)
    }
    return PropertyVerdict(name, True, witness=found)  # type: ignore[arg-type]


def fifth_power_audit(ring: FiniteRing, a: Elem) -> dict[str, Any]:
    """All f with f^5 = f and a - f nilpotent, found by scanning the carrier.

    Also lists the nilpotents w for which (a - w)^5 = a - w.  ``consistent``
    records that both scans agree with the defining conditions element by element.
    """
    i = ring.index(a)
    fixed = [f for f in range(ring.size) if ring.pow(f, 5) == f and is_nilpotent(ring, ring.sub(i, f))]
    via_nil = [w for w in class_indices(ring, "nilpotents")
               if ring.pow(ring.sub(i, w), 5) == ring.sub(i, w)]
    consistent = sorted(fixed) == sorted(ring.sub(i, w) for w in via_nil)
    return {
        "ring": ring.label,
        "element": literal_to_json(ring.value(i)),
        "fifth_power_fixed_points": [literal_to_json(ring.value(f)) for f in fixed],
        "nilpotents_w_with_(a-w)^5=a-w": [literal_to_json(ring.value(w)) for w in via_nil],
        "decomposable": bool(fixed),
        "consistent": consistent,
    }


# ----------------------------------------------------------------------
# Corpus and theorem suite

DEFAULT_CORPUS = (
    *(f"Z{n}" for n in (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 25, 27, 30, 45, 49, 90)),
    "T2(Z2)",
    "T2(Z4)",
    "T3(Z2)",
    "M2(Z2)",
    "M2(Z3)",
    "prod(Z2,Z9)",
    "prod(Z4,Z5)",
)


def default_corpus() -> list[FiniteRing]:
    from .expr import parse_ring_expr
    from .rings import build_ring

    return [build_ring(parse_ring_expr(text)) for text in DEFAULT_CORPUS]


def _holds(ring: FiniteRing, prop: str) -> bool:
    return check_property(ring, prop).holds


def _all(ring: FiniteRing, kind: str, scope: str | None = None) -> bool:
    return first_indecomposable(ring, kind, scope) is None


def _thirty_nilpotent(ring: FiniteRing) -> bool:
    try:
        thirty_exponent(ring)
    except PreconditionError:
        return False
    return True


def _sums_of_two_commuting_2idempotents(ring: FiniteRing) -> bool:
    two = class_indices(ring, "two_idempotents")
    sums = {ring.add(e, f) for n, e in enumerate(two) for f in two[n:] if ring.commutes(e, f)}
    return len(sums) == ring.size


@dataclass
class Row:
    name: str
    statement: str
    entries: list[dict[str, Any]] = field(default_factory=list)

    def add(self, ring: FiniteRing | str, ok: bool, **values: Any) -> None:
        label = ring if isinstance(ring, str) else ring.label
        self.entries.append({"ring": label, "ok": bool(ok), **values})

    @property
    def passed(self) -> bool:
        return all(e["ok"] for e in self.entries)

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "statement": self.statement,
            "passed": self.passed,
            "checked": len(self.entries),
            "failures": [e["ring"] for e in self.entries if not e["ok"]],
            "entries": self.entries,
        }


def _equivalence(row: Row, ring: FiniteRing, **sides: bool) -> None:
    row.add(ring, len(set(sides.values())) == 1, **sides)


def _implication(row: Row, ring: FiniteRing, hypothesis: bool, conclusion: bool) -> None:
    row.add(ring, (not hypothesis) or conclusion, hypothesis=hypothesis, conclusion=conclusion)


def _distinct_subrings(ring: FiniteRing) -> list[FiniteRing]:
    seen = set()
    out = []
    for a in range(ring.size):
        members = subring_members(ring, a)
        if members not in seen:
            seen.add(members)
            out.append(subring_generated(ring, Elem(ring, a)))
    return out


def _central_nilpotent_quotient(ring: FiniteRing) -> tuple[FiniteRing, bool]:
    gens = [z for z in class_indices(ring, "nilpotents")
            if all(ring.commutes(z, r) for r in range(ring.size))]
    quotient = make_quotient_central(ring, [Elem(ring, z) for z in gens])
    nil = all(is_nilpotent(ring, x) for x in quotient.ideal)  # type: ignore[attr-defined]
    return quotient, nil


PRODUCT_PAIR_LIMIT = 128
SMALL_MATRIX_BASES = (2, 3, 4, 5, 6, 7, 8, 9, 10)


def theorem_suite(corpus: Sequence[FiniteRing]) -> dict[str, Any]:
    """Evaluate both sides of every characterization on each corpus ring.

    A row passes when its sides agree (or its implication holds) on every ring
    it applies to.
    """
    rows: dict[str, Row] = {}

    def row(name: str, statement: str) -> Row:
        return rows.setdefault(name, Row(name, statement))

    for ring in corpus:
        zhou = _holds(ring, "zhou_nil_clean")
        kosan = _holds(ring, "kosan")
        exchange = _holds(ring, "exchange")
        s2nc = _holds(ring, "strongly_2_nil_clean")
        ids = ring_identities(ring)
        radical = radical_indices(ring)
        radical_nil = all(is_nilpotent(ring, x) for x in radical)

        _equivalence(
            row("zhou_quintic_equivalence",
                "a^5-5a^3+4a nilpotent for all a <=> every a has e in Z[a], e^5=5e^3-4e, a-e nilpotent "
                "<=> every a is two commuting tripotents plus a nilpotent"),
            ring,
            criterion=zhou,
            quintic_witness=_all(ring, "quintic_witness", "in_Za"),
            two_tripotents=_all(ring, "two_tripotents", "commuting"),
        )
        four_commuting = _all(ring, "four_idempotents", "commuting")
        _equivalence(
            row("x5_identity", "x^5=x <=> reduced and x^5=5x^3-4x <=> reduced and every element "
                "is four commuting idempotents"),
            ring,
            x5_eq_x=ids.x5_eq_x,
            reduced_and_quintic=ids.reduced and ids.quintic_identity,
            reduced_and_four_idempotents=ids.reduced and four_commuting,
        )
        _equivalence(
            row("zhou_four_idempotents", "zhou nil-clean <=> four idempotents in Z[a] plus nilpotent "
                "<=> four commuting idempotents plus nilpotent"),
            ring,
            zhou=zhou,
            in_Za=_all(ring, "four_idempotents", "in_Za"),
            commuting=four_commuting,
        )
        _equivalence(
            row("strongly_2_nil_clean_idempotents",
                "two commuting idempotents plus nilpotent <=> three commuting idempotents plus nilpotent"),
            ring,
            two_idempotents=s2nc,
            three_idempotents=_all(ring, "three_idempotents", "commuting"),
        )
        two_2idem = _all(ring, "two_2idempotents", "commuting")
        _implication(
            row("two_2idempotents_forces_30_nilpotent",
                "every element two commuting 2-idempotents plus nilpotent => 30 nilpotent"),
            ring, two_2idem, _thirty_nilpotent(ring),
        )
        _equivalence(
            row("zhou_two_2idempotents", "zhou nil-clean <=> two 2-idempotents in Z[a] plus nilpotent "
                "<=> two commuting 2-idempotents plus nilpotent"),
            ring,
            zhou=zhou,
            in_Za=_all(ring, "two_2idempotents", "in_Za"),
            commuting=two_2idem,
        )
        _equivalence(
            row("strongly_2_nil_clean_one_2idempotent",
                "strongly 2-nil-clean <=> every element a 2-idempotent plus a commuting nilpotent"),
            ring,
            strongly_2_nil_clean=s2nc,
            one_2idempotent=_all(ring, "one_2idempotent", "commuting"),
        )
        _equivalence(
            row("zhou_square_2idempotent", "zhou nil-clean <=> a^2 is a 2-idempotent in Z[a] plus "
                "nilpotent <=> a^2 is a 2-idempotent plus commuting nilpotent"),
            ring,
            zhou=zhou,
            in_Za=_all(ring, "square_2idempotent", "in_Za"),
            commuting=_all(ring, "square_2idempotent", "commuting"),
        )
        _equivalence(
            row("zhou_fourth_power_idempotent",
                "zhou nil-clean <=> a^4 is an idempotent plus a commuting nilpotent"),
            ring,
            zhou=zhou,
            fourth_power=_all(ring, "fourth_power_idempotent", "commuting"),
        )
        two_sum = _sums_of_two_commuting_2idempotents(ring)
        r = row("bounded_index", "every element two commuting 2-idempotents => zhou nil-clean, "
                "of bounded index (index reported)")
        r.add(ring, (not two_sum) or zhou, hypothesis=two_sum, zhou=zhou, bounded_index=ids.bounded_index)
        if isinstance(ring, MatrixRing) and not ring.triangular:
            base_ok = _sums_of_two_commuting_2idempotents(ring.base)
            _implication(
                row("matrix_tripotent_sums", "base ring elements are two commuting 2-idempotents => "
                    "every matrix is two tripotents plus a nilpotent"),
                ring, base_ok, matrix_tripotent_sum_check(ring).holds,
            )

        # Kosan closure: corners, generated subrings, products
        r = row("kosan_closure", "kosan passes to corners eRe, subrings Z[a] and finite products")
        if kosan:
            corners = [make_corner(ring, Elem(ring, e)) for e in class_indices(ring, "idempotents")]
            r.add(ring, all(_holds(c, "kosan") for c in corners), kind="corners", count=len(corners))
            subs = _distinct_subrings(ring)
            r.add(ring, all(_holds(s, "kosan") for s in subs), kind="subrings", count=len(subs))
        quotient, ideal_nil = _central_nilpotent_quotient(ring)
        row("kosan_nil_quotient", "kosan(R) = kosan(R/I) for the nil ideal I generated by central nilpotents").add(
            ring, ideal_nil and kosan == _holds(quotient, "kosan"),
            quotient=quotient.size, kosan=kosan, quotient_kosan=_holds(quotient, "kosan"),
        )
        if isinstance(ring, MatrixRing) and ring.triangular:
            _equivalence(row("triangular_kosan", "kosan(T_k(R)) = kosan(R)"), ring,
                         triangular=kosan, base=_holds(ring.base, "kosan"))
        if isinstance(ring, MatrixRing) and not ring.triangular and ring.k == 2:
            row("matrix_not_kosan", "M2(R) is never kosan").add(ring, not kosan, kosan=kosan)
        local = is_local(ring)
        if local.local:
            _equivalence(row("local_kosan", "local R: kosan <=> J(R) nil and R/J(R) is Z2, Z3 or Z5"),
                         ring, kosan=kosan, radical_nil_and_residue_235=radical_nil and local.residue_in_235)
        n = _zmod_modulus(ring)
        if n is not None:
            _equivalence(row("zn_kosan", "kosan(Z/n) <=> n = 2^k 3^l 5^s"), ring,
                         kosan=kosan, number_theory=zn_kosan_numbertheory(n))
        exchange_kosan = exchange and kosan
        _implication(row("exchange_kosan_forces_30_nilpotent", "exchange and kosan => 30 nilpotent"),
                     ring, exchange_kosan, _thirty_nilpotent(ring))
        _implication(row("exchange_kosan_radical_nil", "exchange and kosan => J(R) nil"),
                     ring, exchange_kosan, radical_nil)
        _implication(row("exchange_kosan_semiprimitive_reduced", "exchange, kosan and J(R)=0 => reduced"),
                     ring, exchange_kosan and radical == {ring.zero}, ids.reduced)
        _equivalence(row("zhou_exchange_kosan", "zhou nil-clean <=> exchange and kosan"), ring,
                     zhou=zhou, exchange_and_kosan=exchange_kosan)
        _equivalence(row("zhou_clean_kosan", "zhou nil-clean <=> clean and kosan"), ring,
                     zhou=zhou, clean_and_kosan=_holds(ring, "clean") and kosan)
        _equivalence(row("strongly_2_nil_clean_exchange_units",
                         "strongly 2-nil-clean <=> exchange and every unit square unipotent"), ring,
                     strongly_2_nil_clean=s2nc,
                     exchange_and_units_square=exchange and _holds(ring, "units_square_unipotent"))

    _product_rows(row, corpus)
    _constructed_rows(row, corpus)

    audit = fifth_power_audit(make_zmod(25), 2)  # type: ignore[arg-type]
    audit_row = row("fifth_power_audit", "scan of Z25 for f^5=f with 2-f nilpotent agrees with the definition")
    audit_row.add("Z25", audit["consistent"], decomposable=audit["decomposable"])

    out_rows = [rows[k].to_json() for k in sorted(rows)]
    return {
        "corpus": [r.label for r in corpus],
        "rows": out_rows,
        "audits": [audit],
        "passed": all(r["passed"] for r in out_rows),
    }


def _zmod_modulus(ring: FiniteRing) -> int | None:
    from .rings import ZMod

    return ring.n if isinstance(ring, ZMod) else None


def _product_rows(row, corpus: Sequence[FiniteRing]) -> None:
    r = row("kosan_closure", "kosan passes to corners eRe, subrings Z[a] and finite products")
    for n, a in enumerate(corpus):
        for b in corpus[n:]:
            if a.size * b.size > PRODUCT_PAIR_LIMIT:
                continue
            p = make_product([a, b])
            both = _holds(a, "kosan") and _holds(b, "kosan")
            r.add(p, _holds(p, "kosan") == both, kind="product", kosan=_holds(p, "kosan"), factors_kosan=both)


def _constructed_rows(row, corpus: Sequence[FiniteRing]) -> None:
    """Triangular and 2x2 matrix rings over the small Z/n of the corpus."""
    for ring in corpus:
        n = _zmod_modulus(ring)
        if n is None or n not in SMALL_MATRIX_BASES:
            continue
        t = make_triangular_ring(2, ring)
        _equivalence(row("triangular_kosan", "kosan(T_k(R)) = kosan(R)"), t,
                     triangular=_holds(t, "kosan"), base=_holds(ring, "kosan"))
        m = make_matrix_ring(2, ring)
        kosan = _holds(m, "kosan")
        row("matrix_not_kosan", "M2(R) is never kosan").add(m, not kosan, kosan=kosan)

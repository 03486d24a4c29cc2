"""Sum decompositions of ring elements into idempotent-like parts plus a nilpotent.

Constructive routes lift idempotents modulo nilpotents and split the ring
into its 2-, 3- and 5-primary components through three central integer
idempotents.  Every kind also has an exhaustive search,
:func:`brute_force_decompose`, used as a fallback and as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, NamedTuple

from .classify import (
    class_indices,
    is_nilpotent,
    quintic_criterion_failure,
    quintic_value,
)
from .expr import literal_to_json
from .rings import (
    Elem,
    FiniteRing,
    PreconditionError,
    RingError,
    literal_from_json,
    subring_members,
)

__all__ = [
    "KINDS",
    "SCOPES",
    "DEFAULT_SCOPE",
    "Decomposition",
    "InvalidDecomposition",
    "LiftError",
    "NotApplicableError",
    "lift_idempotent",
    "lift_idempotent_steps",
    "lift_tripotent",
    "crt_split_235",
    "thirty_exponent",
    "quintic_witness",
    "construct_four_idempotents",
    "decompose",
    "brute_force_decompose",
]

SCOPES = ("in_Za", "commuting", "unrestricted")


class KindSpec(NamedTuple):
    arity: int
    part_class: str  # element class the parts are drawn from
    power: int  # target = element ** power


KINDS: dict[str, KindSpec] = {
    "two_tripotents": KindSpec(2, "tripotents", 1),
    "four_idempotents": KindSpec(4, "idempotents", 1),
    "three_idempotents": KindSpec(3, "idempotents", 1),
    "two_idempotents": KindSpec(2, "idempotents", 1),
    "one_idempotent": KindSpec(1, "idempotents", 1),
    "two_2idempotents": KindSpec(2, "two_idempotents", 1),
    "one_2idempotent": KindSpec(1, "two_idempotents", 1),
    "square_2idempotent": KindSpec(1, "two_idempotents", 2),
    "fourth_power_idempotent": KindSpec(1, "idempotents", 4),
    "quintic_witness": KindSpec(1, "quintic_roots", 1),
}

# Kinds stated with parts "in Z[a]" default to in_Za, the rest to commuting.
DEFAULT_SCOPE = {
    "two_tripotents": "commuting",
    "four_idempotents": "in_Za",
    "three_idempotents": "commuting",
    "two_idempotents": "commuting",
    "one_idempotent": "commuting",
    "two_2idempotents": "in_Za",
    "one_2idempotent": "commuting",
    "square_2idempotent": "in_Za",
    "fourth_power_idempotent": "commuting",
    "quintic_witness": "in_Za",
}

_PART_TEST = {
    "idempotents": lambda r, x: r.mul(x, x) == x,
    "tripotents": lambda r, x: r.pow(x, 3) == x,
    "two_idempotents": lambda r, x: r.pow(x, 4) == r.mul(x, x),
    "quintic_roots": lambda r, x: quintic_value(r, x) == r.zero,
}


class InvalidDecomposition(ValueError):
    pass


class LiftError(PreconditionError):
    pass


class NotApplicableError(PreconditionError):
    pass


def _resolve(kind: str, scope: str | None) -> str:
    if kind not in KINDS:
        raise ValueError(f"unknown decomposition kind {kind!r}")
    scope = DEFAULT_SCOPE[kind] if scope is None else scope
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    return scope


@dataclass(frozen=True)
class Decomposition:
    """``target = sum(parts) + nilpotent`` with ``target = element ** power(kind)``.

    Construction validates every constraint of ``kind`` and ``scope`` and
    raises :class:`InvalidDecomposition` otherwise.
    """

    kind: str
    scope: str
    element: Elem
    target: Elem
    parts: tuple[Elem, ...]
    nilpotent: Elem
    method: str = "brute_force"

    def __post_init__(self) -> None:
        problem = self._problem()
        if problem:
            raise InvalidDecomposition(f"{self.kind} decomposition of {self.element!r}: {problem}")

    def _problem(self) -> str | None:
        if self.kind not in KINDS:
            return "unknown kind"
        if self.scope not in SCOPES:
            return "unknown scope"
        shape = KINDS[self.kind]
        ring = self.element.ring
        items = (self.target, self.nilpotent, *self.parts)
        if any(x.ring.uid != ring.uid for x in items):
            return "elements from different rings"
        if len(self.parts) != shape.arity:
            return f"expected {shape.arity} parts, got {len(self.parts)}"
        a = self.element.index
        target = self.target.index
        if ring.pow(a, shape.power) != target:
            return "target is not the required power of the element"
        parts = [p.index for p in self.parts]
        w = self.nilpotent.index
        if ring.add(ring.sum(parts), w) != target:
            return "parts and nilpotent do not sum to the target"
        test = _PART_TEST[shape.part_class]
        for p in parts:
            if not test(ring, p):
                return f"part {self._show(p)} is not in {shape.part_class}"
        if not is_nilpotent(ring, w):
            return f"{self._show(w)} is not nilpotent"
        if self.scope == "unrestricted":
            return None
        group = [target, w, *parts]
        for n, x in enumerate(group):
            for y in group[n + 1 :]:
                if not ring.commutes(x, y):
                    return f"{self._show(x)} and {self._show(y)} do not commute"
        if self.scope == "in_Za":
            za = subring_members(ring, a)
            for x in (w, *parts):
                if x not in za:
                    return f"{self._show(x)} is not in Z[a]"
        return None

    def _show(self, i: int) -> str:
        return repr(Elem(self.element.ring, i))

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "scope": self.scope,
            "element": literal_to_json(self.element.value),
            "target": literal_to_json(self.target.value),
            "parts": [literal_to_json(p.value) for p in self.parts],
            "nilpotent": literal_to_json(self.nilpotent.value),
            "method": self.method,
        }

    @classmethod
    def from_json(cls, ring: FiniteRing, data: dict[str, Any]) -> Decomposition:
        """Rebuild (and so re-validate) a decomposition from its JSON form."""

        def el(v: Any) -> Elem:
            return ring.element(literal_from_json(ring, v))

        return cls(
            kind=data["kind"],
            scope=data["scope"],
            element=el(data["element"]),
            target=el(data["target"]),
            parts=tuple(el(p) for p in data["parts"]),
            nilpotent=el(data["nilpotent"]),
            method=data.get("method", "brute_force"),
        )


def _make(ring: FiniteRing, kind: str, scope: str, a: int, parts, w: int, method: str) -> Decomposition:
    return Decomposition(
        kind=kind,
        scope=scope,
        element=Elem(ring, a),
        target=Elem(ring, ring.pow(a, KINDS[kind].power)),
        parts=tuple(Elem(ring, p) for p in parts),
        nilpotent=Elem(ring, w),
        method=method,
    )


# ----------------------------------------------------------------------
# Lifting


def lift_idempotent_steps(ring: FiniteRing, b: int) -> tuple[int, int]:
    """Iterate e <- 3e^2 - 2e^3 from b until it stops moving.

    Returns the idempotent and the number of iterations, counting the final
    one that confirms the fixed point.
    """
    if not is_nilpotent(ring, ring.sub(b, ring.mul(b, b))):
        raise LiftError(f"{ring.value(b)} - {ring.value(b)}^2 is not nilpotent in {ring.label}")
    e, steps = b, 0
    while steps <= ring.size:
        steps += 1
        e2 = ring.mul(e, e)
        nxt = ring.sub(ring.smul(3, e2), ring.smul(2, ring.mul(e2, e)))
        if nxt == e:
            return e, steps
        e = nxt
    raise LiftError("idempotent iteration did not stabilize")  # pragma: no cover


def lift_idempotent(ring: FiniteRing, b: Elem) -> Elem:
    """The idempotent e in Z[b] with b - e nilpotent (requires b - b^2 nilpotent)."""
    e, _ = lift_idempotent_steps(ring, ring.index(b))
    return Elem(ring, e)


def _half(ring: FiniteRing, unit: int) -> int:
    """Inverse of 2 in the corner ring with identity ``unit`` (a central idempotent)."""

    def scan() -> int:
        two = ring.add(unit, unit)
        for r in range(ring.size):
            v = ring.mul(unit, r)
            if ring.mul(two, v) == unit:
                return v
        raise PreconditionError(f"2 is not a unit in {ring.label}")

    return ring.memo(("half", unit), scan)


def _lift_tripotent(ring: FiniteRing, a: int, unit: int) -> tuple[int, int, int]:
    """Returns (t, e, f) with t = e - f tripotent, e, f orthogonal idempotents in Z[a]."""
    if not is_nilpotent(ring, ring.sub(a, ring.pow(a, 3))):
        raise LiftError(f"{ring.value(a)} - {ring.value(a)}^3 is not nilpotent in {ring.label}")
    h = _half(ring, unit)
    a2 = ring.mul(a, a)
    e, _ = lift_idempotent_steps(ring, ring.mul(h, ring.add(a2, a)))
    f, _ = lift_idempotent_steps(ring, ring.mul(h, ring.sub(a2, a)))
    return ring.sub(e, f), e, f


def lift_tripotent(ring: FiniteRing, a: Elem) -> Elem:
    """The tripotent t in Z[a] with a - t nilpotent; needs a - a^3 nilpotent and 2 a unit."""
    t, _, _ = _lift_tripotent(ring, ring.index(a), ring.one)
    return Elem(ring, t)


# ----------------------------------------------------------------------
# 2/3/5 splitting


def thirty_exponent(ring: FiniteRing) -> int:
    """Least n >= 1 with 30^n = 0 in ``ring``."""

    def walk() -> int:
        thirty = ring.int_image(30)
        p, n = thirty, 1
        seen = set()
        while p != ring.zero:
            if p in seen or n > ring.size:
                raise PreconditionError(f"30 is not nilpotent in {ring.label}")
            seen.add(p)
            p = ring.mul(p, thirty)
            n += 1
        return n

    return ring.memo("thirty_exponent", walk)


def _crt_235(ring: FiniteRing) -> tuple[int, int, int]:
    def build() -> tuple[int, int, int]:
        n = thirty_exponent(ring)
        moduli = (2**n, 3**n, 5**n)
        eps = []
        for k, m in enumerate(moduli):
            rest = 1
            for j, other in enumerate(moduli):
                if j != k:
                    rest *= other
            c = rest * pow(rest, -1, m)  # = 1 mod m, = 0 mod the others
            e, _ = lift_idempotent_steps(ring, ring.int_image(c))
            eps.append(e)
        return eps[0], eps[1], eps[2]

    return ring.memo("crt235", build)


def crt_split_235(ring: FiniteRing) -> tuple[Elem, Elem, Elem]:
    """Orthogonal central idempotents cutting out the 2-, 3- and 5-primary parts."""
    return tuple(Elem(ring, e) for e in _crt_235(ring))  # type: ignore[return-value]


def _five_component_root(ring: FiniteRing, a: int, unit: int) -> tuple[int, tuple[int, int, int, int]]:
    """In a component where 5 is nilpotent: alpha = e - f + g - h with a - alpha nilpotent."""
    a2 = ring.mul(a, a)
    a4 = ring.mul(a2, a2)
    three_a = ring.smul(3, a)
    x = ring.add(ring.add(three_a, a2), a4)
    y = ring.sub(ring.sub(three_a, a2), a4)
    half = _half(ring, unit)
    lifts = []
    for z in (x, y):
        z2 = ring.mul(z, z)
        for halfsum in (ring.add(z2, z), ring.sub(z2, z)):
            e, _ = lift_idempotent_steps(ring, ring.mul(half, halfsum))
            lifts.append(e)
    e, f, g, h = lifts
    alpha = ring.sub(ring.add(ring.sub(e, f), g), h)
    return alpha, (e, f, g, h)


def _require_zhou(ring: FiniteRing) -> None:
    bad = quintic_criterion_failure(ring)
    if bad is not None:
        raise NotApplicableError(
            f"{ring.label} fails the quintic criterion at {ring.value(bad)}"
        )


def _quintic_root(ring: FiniteRing, a: int) -> int:
    e2, e3, e5 = _crt_235(ring)
    total = ring.zero
    if e2 != ring.zero:
        part, _ = lift_idempotent_steps(ring, ring.mul(e2, a))
        total = ring.add(total, part)
    if e3 != ring.zero:
        part, _, _ = _lift_tripotent(ring, ring.mul(e3, a), e3)
        total = ring.add(total, part)
    if e5 != ring.zero:
        part, _ = _five_component_root(ring, ring.mul(e5, a), e5)
        total = ring.add(total, part)
    return total


def quintic_witness(ring: FiniteRing, a: Elem) -> Decomposition:
    """e in Z[a] with e^5 = 5e^3 - 4e exactly and a - e nilpotent."""
    _require_zhou(ring)
    i = ring.index(a)
    e = i if quintic_value(ring, i) == ring.zero else _quintic_root(ring, i)
    return _make(ring, "quintic_witness", "in_Za", i, [e], ring.sub(i, e), "constructive")


def _four_idempotent_parts(ring: FiniteRing, c: int) -> list[int]:
    e2, e3, e5 = _crt_235(ring)
    parts = [ring.zero] * 4

    def put(component: list[int]) -> None:
        for n, p in enumerate(component):
            parts[n] = ring.add(parts[n], p)

    if e2 != ring.zero:
        e, _ = lift_idempotent_steps(ring, ring.mul(e2, c))
        put([e])
    if e3 != ring.zero:
        a = ring.sub(ring.add(e3, e3), ring.mul(e3, c))
        _, e, f = _lift_tripotent(ring, a, e3)
        # c = (1 - e) + f + 1 - w in this component
        put([ring.sub(e3, e), f, e3])
    if e5 != ring.zero:
        a = ring.sub(ring.add(e5, e5), ring.mul(e5, c))
        _, (e, f, g, h) = _five_component_root(ring, a, e5)
        # c = (1 - e) + f + (1 - g) + h - w in this component
        put([ring.sub(e5, e), f, ring.sub(e5, g), h])
    return parts


def construct_four_idempotents(ring: FiniteRing, c: Elem, scope: str = "in_Za") -> Decomposition:
    """Four commuting idempotents in Z[c] plus a nilpotent summing to c."""
    i = ring.index(c)
    parts = _four_idempotent_parts(ring, i)
    return _make(ring, "four_idempotents", scope, i, parts, ring.sub(i, ring.sum(parts)), "constructive")


def _two_tripotent_parts(ring: FiniteRing, a: int) -> list[int]:
    # 2 - a = e + f + g + h + w  gives  a = ((1-e) - f) + ((1-h) - g) - w
    e, f, g, h = _four_idempotent_parts(ring, ring.sub(ring.int_image(2), a))
    one = ring.one
    return [ring.sub(ring.sub(one, e), f), ring.sub(ring.sub(one, h), g)]


def _component_2idempotent(ring: FiniteRing, x: int) -> int:
    """Tripotent lift of x: idempotent on the 2-part, tripotent on the rest."""
    e2, e3, e5 = _crt_235(ring)
    total = ring.zero
    if e2 != ring.zero:
        part, _ = lift_idempotent_steps(ring, ring.mul(e2, x))
        total = ring.add(total, part)
    odd = ring.add(e3, e5)
    if odd != ring.zero:
        part, _, _ = _lift_tripotent(ring, ring.mul(odd, x), odd)
        total = ring.add(total, part)
    return total


def _constructive(ring: FiniteRing, i: int, kind: str, scope: str) -> Decomposition | None:
    if kind == "quintic_witness":
        _require_zhou(ring)
        parts = [_quintic_root(ring, i)]
    elif kind == "four_idempotents":
        parts = _four_idempotent_parts(ring, i)
    elif kind in ("two_tripotents", "two_2idempotents"):
        parts = _two_tripotent_parts(ring, i)
    elif kind == "one_idempotent":
        parts = [lift_idempotent_steps(ring, i)[0]]
    elif kind == "fourth_power_idempotent":
        parts = [lift_idempotent_steps(ring, ring.pow(i, 4))[0]]
    elif kind == "one_2idempotent":
        parts = [_component_2idempotent(ring, i)]
    elif kind == "square_2idempotent":
        parts = [_component_2idempotent(ring, ring.mul(i, i))]
    else:
        return None
    target = ring.pow(i, KINDS[kind].power)
    if KINDS[kind].arity == 1 and _PART_TEST[KINDS[kind].part_class](ring, target):
        parts = [target]
    return _make(ring, kind, scope, i, parts, ring.sub(target, ring.sum(parts)), "constructive")


def decompose(ring: FiniteRing, a: Elem, kind: str, scope: str | None = None) -> Decomposition | None:
    """A validated decomposition of ``a`` of the given kind, or None if none exists.

    Tries the constructive route for the kind first; when there is none, or it
    does not apply to this element, falls back to exhaustive search.
    """
    scope = _resolve(kind, scope)
    i = ring.index(a)
    try:
        found = _constructive(ring, i, kind, scope)
    except (RingError, InvalidDecomposition):
        found = None
    if found is not None:
        return found
    return brute_force_decompose(ring, Elem(ring, i), kind, scope)


def brute_force_decompose(
    ring: FiniteRing, a: Elem, kind: str, scope: str | None = None
) -> Decomposition | None:
    """Exhaustive search; returns the lexicographically first witness.

    Parts are compared as tuples of carrier indices.  Every valid tuple can be
    sorted without losing validity, so only non-decreasing tuples are visited.
    """
    scope = _resolve(kind, scope)
    shape = KINDS[kind]
    i = ring.index(a)
    target = ring.pow(i, shape.power)
    cands = class_indices(ring, shape.part_class)
    if scope == "in_Za":
        za = subring_members(ring, i)
        cands = tuple(c for c in cands if c in za)
    restricted = scope != "unrestricted"
    if restricted:
        cands = tuple(c for c in cands if ring.commutes(c, target))
    nil = set(class_indices(ring, "nilpotents"))
    k = shape.arity
    chosen: list[int] = []

    def search(start: int, remainder: int) -> bool:
        last = len(chosen) == k - 1
        for n in range(start, len(cands)):
            c = cands[n]
            if restricted and not all(ring.commutes(c, p) for p in chosen):
                continue
            rest = ring.sub(remainder, c)
            if last:
                if rest in nil:
                    chosen.append(c)
                    return True
                continue
            chosen.append(c)
            if search(n, rest):
                return True
            chosen.pop()
        return False

    if not search(0, target):
        return None
    return _make(ring, kind, scope, i, chosen, ring.sub(target, ring.sum(chosen)), "brute_force")

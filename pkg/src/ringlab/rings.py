"""Finite unital rings with enumerated carriers.

Every ring enumerates its carrier as indices ``0 .. size-1`` in a canonical
order: residues for Z/n, mixed-radix tuples (first factor most significant)
for products and matrix rings.  Subset rings (corners, generated subrings)
and quotients keep the order of the base ring.

Index-level arithmetic (``ring.add(i, j)`` ...) is what the algorithms use;
:class:`Elem` wraps an index together with its ring for the public API.
"""

from __future__ import annotations

import contextlib
import contextvars
import itertools
import math
from collections.abc import Callable, Iterable, Iterator, Sequence
from typing import Any

from .expr import (
    CornerExpr,
    Literal,
    MatrixExpr,
    ProductExpr,
    QuotientExpr,
    RingExpr,
    Rows,
    SubringExpr,
    TriangularExpr,
    ZModExpr,
    format_literal,
    format_ring_expr,
)

__all__ = [
    "DEFAULT_CAP",
    "TABLE_LIMIT",
    "RingError",
    "SizeLimitError",
    "PreconditionError",
    "RingMismatchError",
    "LiteralError",
    "FiniteRing",
    "Elem",
    "get_carrier_cap",
    "set_carrier_cap",
    "carrier_cap",
    "make_zmod",
    "make_product",
    "make_matrix_ring",
    "make_triangular_ring",
    "make_corner",
    "make_quotient_central",
    "subring_generated",
    "int_image",
    "element_arithmetic",
    "build_ring",
    "check_ring_axioms",
    "literal_from_json",
    "subring_members",
]

DEFAULT_CAP = 65536
# Rings at most this large get memoized addition/multiplication tables.
TABLE_LIMIT = 1024

_cap: contextvars.ContextVar[int] = contextvars.ContextVar("carrier_cap", default=DEFAULT_CAP)
_uids = itertools.count()


class RingError(Exception):
    """Base class for ring construction and arithmetic errors."""


class SizeLimitError(RingError):
    pass


class PreconditionError(RingError):
    pass


class RingMismatchError(RingError, TypeError):
    pass


class LiteralError(RingError, ValueError):
    """An element literal does not type-check against a ring."""


def get_carrier_cap() -> int:
    return _cap.get()


def set_carrier_cap(cap: int) -> None:
    if cap < 1:
        raise ValueError("carrier cap must be positive")
    _cap.set(cap)


@contextlib.contextmanager
def carrier_cap(cap: int) -> Iterator[None]:
    """Temporarily override the carrier cap."""
    if cap < 1:
        raise ValueError("carrier cap must be positive")
    token = _cap.set(cap)
    try:
        yield
    finally:
        _cap.reset(token)


def _check_cap(size: int, what: str) -> None:
    cap = get_carrier_cap()
    if size > cap:
        raise SizeLimitError(f"{what} has {size} elements, over the carrier cap {cap}")


class FiniteRing:
    """A finite unital ring on the carrier ``range(size)``."""

    size: int
    zero: int
    one: int
    expr: RingExpr

    def __init__(self, size: int, expr: RingExpr):
        self.size = size
        self.expr = expr
        self.uid = next(_uids)
        self._memo: dict[Any, Any] = {}
        self._at = self._mt = self._nt = None

    # subclass hooks
    def _add(self, i: int, j: int) -> int:
        raise NotImplementedError

    def _mul(self, i: int, j: int) -> int:
        raise NotImplementedError

    def _neg(self, i: int) -> int:
        raise NotImplementedError

    def value(self, i: int) -> Literal:
        """Canonical literal of the element with index ``i``."""
        raise NotImplementedError

    def index_of(self, lit: Literal) -> int:
        """Index of the element denoted by ``lit``."""
        raise NotImplementedError

    # ------------------------------------------------------------------
    @property
    def label(self) -> str:
        return format_ring_expr(self.expr)

    def __repr__(self) -> str:
        return f"<FiniteRing {self.label} size={self.size}>"

    def __len__(self) -> int:
        return self.size

    def memo(self, key: Any, factory: Callable[[], Any]) -> Any:
        """Per-ring memoization; racing fills compute the same value."""
        try:
            return self._memo[key]
        except KeyError:
            value = factory()
            return self._memo.setdefault(key, value)

    @property
    def has_tables(self) -> bool:
        return self.size <= TABLE_LIMIT

    @property
    def add_table(self) -> list[list[int]]:
        return self.memo("add_table", lambda: self._build_table(self._add))

    @property
    def mul_table(self) -> list[list[int]]:
        return self.memo("mul_table", lambda: self._build_table(self._mul))

    def _build_table(self, op: Callable[[int, int], int]) -> list[list[int]]:
        if not self.has_tables:
            raise RingError(f"{self.label} is too large for operation tables")
        r = range(self.size)
        return [[op(i, j) for j in r] for i in r]

    def add(self, i: int, j: int) -> int:
        t = self._at
        if t is None:
            if not self.has_tables:
                return self._add(i, j)
            t = self._at = self.add_table
        return t[i][j]

    def mul(self, i: int, j: int) -> int:
        t = self._mt
        if t is None:
            if not self.has_tables:
                return self._mul(i, j)
            t = self._mt = self.mul_table
        return t[i][j]

    def neg(self, i: int) -> int:
        t = self._nt
        if t is None:
            if not self.has_tables:
                return self._neg(i)
            t = self._nt = self.memo("neg_table", lambda: [self._neg(x) for x in range(self.size)])
        return t[i]

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    def pow(self, i: int, k: int) -> int:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = self.one, i
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def smul(self, m: int, i: int) -> int:
        """Integer multiple ``m * i`` by double-and-add."""
        if m < 0:
            return self.neg(self.smul(-m, i))
        result, base = self.zero, i
        while m:
            if m & 1:
                result = self.add(result, base)
            m >>= 1
            if m:
                base = self.add(base, base)
        return result

    def int_image(self, m: int) -> int:
        return self.smul(m, self.one)

    def sum(self, items: Iterable[int]) -> int:
        total = self.zero
        for x in items:
            total = self.add(total, x)
        return total

    def mul_row(self, i: int) -> list[int]:
        """``[i*r for r in carrier]``."""
        if self.has_tables:
            return self.mul_table[i]
        return [self._mul(i, r) for r in range(self.size)]

    def commutes(self, i: int, j: int) -> bool:
        return self.mul(i, j) == self.mul(j, i)

    @property
    def is_commutative(self) -> bool:
        def scan() -> bool:
            for i in range(self.size):
                for j in range(i + 1, self.size):
                    if not self.commutes(i, j):
                        return False
            return True

        return self.memo("commutative", scan)

    # Elem helpers --------------------------------------------------------
    def elem(self, i: int) -> Elem:
        if not 0 <= i < self.size:
            raise IndexError(f"index {i} out of range for {self.label}")
        return Elem(self, i)

    def element(self, lit: Literal) -> Elem:
        return Elem(self, self.index_of(lit))

    def elements(self) -> list[Elem]:
        return [Elem(self, i) for i in range(self.size)]

    def index(self, x: Elem | int) -> int:
        """Index of ``x``; ``x`` may be an Elem of this ring or an integer literal."""
        if isinstance(x, Elem):
            if x.ring.uid != self.uid:
                raise RingMismatchError(f"element of {x.ring.label} used in {self.label}")
            return x.index
        if isinstance(x, int) and not isinstance(x, bool):
            return self.int_image(x)
        raise TypeError(f"expected an element of {self.label}, got {x!r}")


class Elem:
    """An element handle: a ring together with a carrier index."""

    __slots__ = ("ring", "index")

    def __init__(self, ring: FiniteRing, index: int):
        self.ring = ring
        self.index = index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Elem):
            return NotImplemented
        return self.ring.uid == other.ring.uid and self.index == other.index

    def __hash__(self) -> int:
        return hash((self.ring.uid, self.index))

    def __lt__(self, other: Elem) -> bool:
        return (self.ring.uid, self.index) < (other.ring.uid, other.index)

    def __repr__(self) -> str:
        return f"Elem({self.ring.label}, {format_literal(self.value)})"

    @property
    def value(self) -> Literal:
        return self.ring.value(self.index)

    def _other(self, other: Elem | int) -> int:
        return self.ring.index(other)

    def __add__(self, other: Elem | int) -> Elem:
        return Elem(self.ring, self.ring.add(self.index, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: Elem | int) -> Elem:
        return Elem(self.ring, self.ring.sub(self.index, self._other(other)))

    def __rsub__(self, other: int) -> Elem:
        return Elem(self.ring, self.ring.sub(self._other(other), self.index))

    def __mul__(self, other: Elem | int) -> Elem:
        return Elem(self.ring, self.ring.mul(self.index, self._other(other)))

    def __rmul__(self, other: int) -> Elem:
        return Elem(self.ring, self.ring.mul(self._other(other), self.index))

    def __neg__(self) -> Elem:
        return Elem(self.ring, self.ring.neg(self.index))

    def __pow__(self, k: int) -> Elem:
        return Elem(self.ring, self.ring.pow(self.index, k))


# ----------------------------------------------------------------------
# Concrete constructions


class ZMod(FiniteRing):
    def __init__(self, n: int):
        super().__init__(n, ZModExpr(n))
        self.n = n
        self.zero = 0
        self.one = 1 % n

    def _add(self, i, j):
        return (i + j) % self.n

    def _mul(self, i, j):
        return (i * j) % self.n

    def _neg(self, i):
        return -i % self.n

    add = _add
    mul = _mul
    neg = _neg

    def mul_row(self, i):
        n = self.n
        return [(i * r) % n for r in range(n)]

    def smul(self, m, i):
        return (m * i) % self.n

    @property
    def is_commutative(self) -> bool:
        return True

    def value(self, i):
        return i

    def index_of(self, lit):
        if isinstance(lit, int) and not isinstance(lit, bool):
            return lit % self.n
        raise LiteralError(f"{format_literal(lit)} is not an element of {self.label}")


class _MixedRadix(FiniteRing):
    """Carrier = tuples of component indices, first component most significant."""

    radices: tuple[int, ...]

    def _setup_radix(self, radices: Sequence[int]) -> None:
        self.radices = tuple(radices)
        strides = []
        s = 1
        for r in reversed(self.radices):
            strides.append(s)
            s *= r
        self.strides = tuple(reversed(strides))

    def digits(self, i: int) -> tuple[int, ...]:
        if self.size <= TABLE_LIMIT * 64:
            table = self.memo("digits", lambda: [self._digits(x) for x in range(self.size)])
            return table[i]
        return self._digits(i)

    def _digits(self, i: int) -> tuple[int, ...]:
        out = []
        for r in reversed(self.radices):
            i, d = divmod(i, r)
            out.append(d)
        return tuple(reversed(out))

    def undigits(self, ds: Sequence[int]) -> int:
        return sum(d * s for d, s in zip(ds, self.strides))


class ProductRing(_MixedRadix):
    def __init__(self, factors: Sequence[FiniteRing]):
        size = math.prod(f.size for f in factors)
        super().__init__(size, ProductExpr(tuple(f.expr for f in factors)))
        self.factors = tuple(factors)
        self._setup_radix([f.size for f in factors])
        self.zero = self.undigits([f.zero for f in factors])
        self.one = self.undigits([f.one for f in factors])

    def _add(self, i, j):
        return self.undigits([f.add(a, b) for f, a, b in zip(self.factors, self.digits(i), self.digits(j))])

    def _mul(self, i, j):
        return self.undigits([f.mul(a, b) for f, a, b in zip(self.factors, self.digits(i), self.digits(j))])

    def _neg(self, i):
        return self.undigits([f.neg(a) for f, a in zip(self.factors, self.digits(i))])

    def value(self, i):
        return tuple(f.value(d) for f, d in zip(self.factors, self.digits(i)))

    def index_of(self, lit):
        if isinstance(lit, int) and not isinstance(lit, bool):
            return self.int_image(lit)
        if isinstance(lit, tuple) and len(lit) == len(self.factors):
            return self.undigits([f.index_of(x) for f, x in zip(self.factors, lit)])
        raise LiteralError(f"{format_literal(lit)} is not an element of {self.label}")


class MatrixRing(_MixedRadix):
    """k x k matrices over ``base``; ``triangular`` keeps only entries on or above the diagonal."""

    def __init__(self, k: int, base: FiniteRing, triangular: bool = False):
        if triangular:
            positions = [(r, c) for r in range(k) for c in range(r, k)]
            expr: RingExpr = TriangularExpr(k, base.expr)
        else:
            positions = [(r, c) for r in range(k) for c in range(k)]
            expr = MatrixExpr(k, base.expr)
        super().__init__(base.size ** len(positions), expr)
        self.k = k
        self.base = base
        self.triangular = triangular
        self.positions = tuple(positions)
        self.slot = {p: n for n, p in enumerate(positions)}
        self._setup_radix([base.size] * len(positions))
        self.zero = self.undigits([base.zero] * len(positions))
        self.one = self.undigits([base.one if r == c else base.zero for r, c in positions])
        # (slot, [(left slot, right slot), ...]) for each product entry
        terms = []
        for n, (r, c) in enumerate(positions):
            pairs = [(self.slot[(r, l)], self.slot[(l, c)]) for l in range(k)
                     if (r, l) in self.slot and (l, c) in self.slot]
            terms.append(pairs)
        self._terms = terms

    def entries(self, i: int) -> list[list[int]]:
        """Full k x k matrix of base indices."""
        ds = self.digits(i)
        m = [[self.base.zero] * self.k for _ in range(self.k)]
        for (r, c), d in zip(self.positions, ds):
            m[r][c] = d
        return m

    def from_entries(self, m: Sequence[Sequence[int]]) -> int:
        return self.undigits([m[r][c] for r, c in self.positions])

    def _add(self, i, j):
        b = self.base
        return self.undigits([b.add(x, y) for x, y in zip(self.digits(i), self.digits(j))])

    def _neg(self, i):
        b = self.base
        return self.undigits([b.neg(x) for x in self.digits(i)])

    def _mul(self, i, j):
        b = self.base
        x, y = self.digits(i), self.digits(j)
        out = []
        for pairs in self._terms:
            acc = b.zero
            for p, q in pairs:
                acc = b.add(acc, b.mul(x[p], y[q]))
            out.append(acc)
        return self.undigits(out)

    def value(self, i):
        m = self.entries(i)
        return Rows(tuple(tuple(self.base.value(e) for e in row) for row in m))

    def index_of(self, lit):
        if isinstance(lit, int) and not isinstance(lit, bool):
            return self.int_image(lit)
        if isinstance(lit, Rows) and len(lit.rows) == self.k and all(len(r) == self.k for r in lit.rows):
            m = [[self.base.index_of(x) for x in row] for row in lit.rows]
            if self.triangular:
                for r in range(self.k):
                    for c in range(r):
                        if m[r][c] != self.base.zero:
                            raise LiteralError(f"{format_literal(lit)} is not upper triangular")
            return self.from_entries(m)
        raise LiteralError(f"{format_literal(lit)} is not an element of {self.label}")


class SubsetRing(FiniteRing):
    """A ring carried by a subset of ``base`` (corner or generated subring)."""

    def __init__(self, base: FiniteRing, members: Iterable[int], one: int, expr: RingExpr):
        members = sorted(set(members))
        super().__init__(len(members), expr)
        self.base = base
        self.members = tuple(members)
        self._local = {m: n for n, m in enumerate(members)}
        self.zero = self._local[base.zero]
        self.one = self._local[one]

    def contains(self, x: Elem) -> bool:
        return base_index(self.base, x) in self._local

    def from_base(self, x: Elem) -> Elem:
        i = base_index(self.base, x)
        if i not in self._local:
            raise PreconditionError(f"{x!r} is not in {self.label}")
        return Elem(self, self._local[i])

    def to_base(self, x: Elem) -> Elem:
        return Elem(self.base, self.members[self.index(x)])

    def _lift(self, op, *args):
        return self._local[op(*(self.members[a] for a in args))]

    def _add(self, i, j):
        return self._lift(self.base.add, i, j)

    def _mul(self, i, j):
        return self._lift(self.base.mul, i, j)

    def _neg(self, i):
        return self._lift(self.base.neg, i)

    def value(self, i):
        return self.base.value(self.members[i])

    def index_of(self, lit):
        b = self.base.index_of(lit)
        if b not in self._local:
            raise LiteralError(f"{format_literal(lit)} is not an element of {self.label}")
        return self._local[b]


class QuotientRing(FiniteRing):
    """Quotient of ``base`` by an ideal; cosets are represented by their least member."""

    def __init__(self, base: FiniteRing, ideal: frozenset[int], expr: RingExpr):
        rep = [-1] * base.size
        reps = []
        ideal_list = sorted(ideal)
        for x in range(base.size):
            if rep[x] >= 0:
                continue
            n = len(reps)
            reps.append(x)
            for y in ideal_list:
                rep[base.add(x, y)] = n
        super().__init__(len(reps), expr)
        self.base = base
        self.ideal = ideal
        self.reps = tuple(reps)
        self._class = tuple(rep)
        self.zero = self._class[base.zero]
        self.one = self._class[base.one]

    def project(self, x: Elem) -> Elem:
        """The natural map ``base -> base / ideal``."""
        return Elem(self, self._class[base_index(self.base, x)])

    def representative(self, x: Elem) -> Elem:
        return Elem(self.base, self.reps[self.index(x)])

    def _add(self, i, j):
        return self._class[self.base.add(self.reps[i], self.reps[j])]

    def _mul(self, i, j):
        return self._class[self.base.mul(self.reps[i], self.reps[j])]

    def _neg(self, i):
        return self._class[self.base.neg(self.reps[i])]

    def value(self, i):
        return self.base.value(self.reps[i])

    def index_of(self, lit):
        return self._class[self.base.index_of(lit)]


def base_index(ring: FiniteRing, x: Elem | int) -> int:
    return ring.index(x)


# ----------------------------------------------------------------------
# Public constructors


def make_zmod(n: int) -> FiniteRing:
    """The ring of integers modulo ``n``."""
    if n < 1:
        raise ValueError("modulus must be positive")
    _check_cap(n, f"Z{n}")
    return ZMod(n)


def make_product(factors: Sequence[FiniteRing]) -> FiniteRing:
    if not factors:
        raise ValueError("a direct product needs at least one factor")
    _check_cap(math.prod(f.size for f in factors), "direct product")
    return ProductRing(factors)


def make_matrix_ring(k: int, base: FiniteRing) -> FiniteRing:
    if k < 1:
        raise ValueError("matrix size must be positive")
    _check_cap(base.size ** (k * k), f"M{k}({base.label})")
    return MatrixRing(k, base)


def make_triangular_ring(k: int, base: FiniteRing) -> FiniteRing:
    if k < 1:
        raise ValueError("matrix size must be positive")
    _check_cap(base.size ** (k * (k + 1) // 2), f"T{k}({base.label})")
    return MatrixRing(k, base, triangular=True)


def make_corner(base: FiniteRing, e: Elem | int) -> FiniteRing:
    """The corner ring ``e R e`` with identity ``e``."""
    i = base.index(e)
    if base.mul(i, i) != i:
        raise PreconditionError(f"{format_literal(base.value(i))} is not idempotent in {base.label}")
    members = {base.mul(base.mul(i, r), i) for r in range(base.size)}
    return SubsetRing(base, members, i, CornerExpr(base.expr, base.value(i)))


def _additive_span(ring: FiniteRing, gens: Iterable[int]) -> set[int]:
    gens = [g for g in set(gens) if g != ring.zero]
    span = {ring.zero}
    frontier = [ring.zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = ring.add(x, g)
                if y not in span:
                    span.add(y)
                    nxt.append(y)
        frontier = nxt
    return span


def ideal_generated_central(ring: FiniteRing, gens: Sequence[int]) -> frozenset[int]:
    """The two-sided ideal generated by central elements: the additive span of all ``r*g``."""
    products = set()
    for g in gens:
        products.update(ring.mul_row(g))
    return frozenset(_additive_span(ring, products))


def make_quotient_central(base: FiniteRing, gens: Sequence[Elem | int]) -> FiniteRing:
    """``base`` modulo the ideal generated by the central elements ``gens``."""
    idx = [base.index(g) for g in gens]
    for g in idx:
        for r in range(base.size):
            if not base.commutes(g, r):
                raise PreconditionError(
                    f"generator {format_literal(base.value(g))} is not central in {base.label}"
                )
    ideal = ideal_generated_central(base, idx)
    expr = QuotientExpr(base.expr, tuple(base.value(g) for g in idx))
    return QuotientRing(base, ideal, expr)


def subring_members(ring: FiniteRing, a: int) -> frozenset[int]:
    """Carrier of Z[a]: the additive span of the powers 1, a, a^2, ..."""

    def build() -> frozenset[int]:
        powers = []
        seen = set()
        x = ring.one
        while x not in seen:
            seen.add(x)
            powers.append(x)
            x = ring.mul(x, a)
        return frozenset(_additive_span(ring, powers))

    return ring.memo(("Z[a]", a), build)


def subring_generated(base: FiniteRing, a: Elem | int) -> FiniteRing:
    """The subring Z[a] of integer-polynomial values at ``a``."""
    i = base.index(a)
    return SubsetRing(base, subring_members(base, i), base.one, SubringExpr(base.expr, base.value(i)))


def int_image(ring: FiniteRing, m: int) -> Elem:
    """``m * 1`` in ``ring``."""
    return Elem(ring, ring.int_image(m))


_ARITY = {"add": 2, "mul": 2, "neg": 1, "eq": 2}


def element_arithmetic(ring: FiniteRing, op: str, *args: Elem) -> Elem | bool:
    if op not in _ARITY:
        raise ValueError(f"unknown operation {op!r}")
    if len(args) != _ARITY[op]:
        raise TypeError(f"{op} takes {_ARITY[op]} arguments")
    for x in args:
        if not isinstance(x, Elem) or x.ring.uid != ring.uid:
            raise RingMismatchError(f"{x!r} does not belong to {ring.label}")
    idx = [x.index for x in args]
    if op == "eq":
        return idx[0] == idx[1]
    if op == "neg":
        return Elem(ring, ring.neg(idx[0]))
    return Elem(ring, getattr(ring, op)(*idx))


def build_ring(expr: RingExpr) -> FiniteRing:
    """Construct the ring described by a parsed expression."""
    if isinstance(expr, ZModExpr):
        return make_zmod(expr.n)
    if isinstance(expr, ProductExpr):
        return make_product([build_ring(f) for f in expr.factors])
    if isinstance(expr, MatrixExpr):
        return make_matrix_ring(expr.k, build_ring(expr.base))
    if isinstance(expr, TriangularExpr):
        return make_triangular_ring(expr.k, build_ring(expr.base))
    base = build_ring(expr.base)
    if isinstance(expr, CornerExpr):
        return make_corner(base, base.element(expr.elem))
    if isinstance(expr, QuotientExpr):
        return make_quotient_central(base, [base.element(g) for g in expr.gens])
    if isinstance(expr, SubringExpr):
        return subring_generated(base, base.element(expr.elem))
    raise TypeError(f"not a ring expression: {expr!r}")


def check_ring_axioms(ring: FiniteRing) -> list[str]:
    """Exhaustively check the ring axioms; returns the violated laws (empty if none)."""
    failures = []
    r = range(ring.size)
    add, mul, neg = ring.add, ring.mul, ring.neg
    zero, one = ring.zero, ring.one
    if ring.size > 1 and zero == one:
        failures.append("zero equals one")
    for x in r:
        if add(x, zero) != x or add(x, neg(x)) != zero:
            failures.append("additive identity/inverse")
            break
        if mul(x, one) != x or mul(one, x) != x:
            failures.append("multiplicative identity")
            break
    for x in r:
        for y in r:
            if add(x, y) != add(y, x):
                failures.append("commutative addition")
                return failures
            for z in r:
                if add(add(x, y), z) != add(x, add(y, z)):
                    failures.append("associative addition")
                    return failures
                if mul(mul(x, y), z) != mul(x, mul(y, z)):
                    failures.append("associative multiplication")
                    return failures
                if mul(x, add(y, z)) != add(mul(x, y), mul(x, z)) or mul(add(y, z), x) != add(
                    mul(y, x), mul(z, x)
                ):
                    failures.append("distributivity")
                    return failures
    return failures


def literal_from_json(ring: FiniteRing, data: Any) -> Literal:
    """Inverse of ``literal_to_json`` for elements of ``ring``."""
    if isinstance(data, int) and not isinstance(data, bool):
        return data
    if isinstance(ring, (SubsetRing, QuotientRing)):
        return literal_from_json(ring.base, data)
    if isinstance(ring, ProductRing) and isinstance(data, list) and len(data) == len(ring.factors):
        return tuple(literal_from_json(f, x) for f, x in zip(ring.factors, data))
    if isinstance(ring, MatrixRing) and isinstance(data, list) and all(isinstance(r, list) for r in data):
        return Rows(tuple(tuple(literal_from_json(ring.base, x) for x in row) for row in data))
    raise LiteralError(f"{data!r} is not an element of {ring.label}")

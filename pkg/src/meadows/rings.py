"""Finite commutative rings on integer-indexed carriers.

Every ring here has carrier ``range(order)``; elements are plain ints.  Four
constructors are provided: modular integers (:func:`make_zmod`), Galois
fields (:func:`make_galois_ring`), direct products (:func:`make_product`),
and explicit operation tables loaded from RingSpec documents
(:func:`load_ring`).  Structured constructors are correct by construction
and skip verification; table-backed rings are untrusted input and are
checked eagerly against the eight ring axioms, with the first violated
axiom and a witness reported on failure.

Operation tables are materialized lazily as flat row-major ``array('i')``
buffers (``table[x*n + y]``), the format consumed by the scan kernels.
Rings are immutable after construction apart from those caches, so they are
safe to share between threads.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Sequence

from meadows import kernels
from meadows.errors import (
    AxiomViolationError,
    CarrierBoundError,
    RingSpecError,
)
from meadows.polyfield import GaloisField, make_galois_field

#: An element of a ring: its index in the carrier range(order).
Element = int

DEFAULT_STRUCTURED_BOUND = 4096
DEFAULT_TABLE_BOUND = 512
DEFAULT_CHECK_BOUND = 512

RING_AXIOMS: tuple[tuple[str, str], ...] = (
    ("(1)", "(x+y)+z = x+(y+z)"),
    ("(2)", "x+y = y+x"),
    ("(3)", "x+0 = x"),
    ("(4)", "x+(-x) = 0 with -x unique"),
    ("(5)", "(x*y)*z = x*(y*z)"),
    ("(6)", "x*y = y*x"),
    ("(7)", "x*1 = x"),
    ("(8)", "x*(y+z) = x*y + x*z"),
)

DERIVED_IDENTITIES: tuple[tuple[str, str], ...] = (
    ("(d1)", "the identity 1 is unique"),
    ("(d2)", "0*x = 0"),
    ("(d3)", "(-x)*y = -(x*y)"),
    ("(d4)", "(-1)*x = -x"),
    ("(d5)", "-0 = 0"),
    ("(d6)", "(-x)+(-y) = -(x+y)"),
    ("(d7)", "-(-x) = x"),
)


def _zeros(n: int) -> array:
    return array("i", bytes(array("i").itemsize * n * n))


def _kron(t0: array, n0: int, t1: array, n1: int) -> array:
    """Componentwise composition of two flat tables.

    The combined carrier is ranked little-endian: index = i0 + n0*i1, so the
    first table is the least significant digit.
    """
    n = n0 * n1
    out = _zeros(n)
    for x1 in range(n1):
        r1 = t1[x1 * n1 : (x1 + 1) * n1]
        for x0 in range(n0):
            r0 = t0[x0 * n0 : (x0 + 1) * n0]
            row = array("i", [c0 + n0 * c1 for c1 in r1 for c0 in r0])
            x = x0 + n0 * x1
            out[x * n : (x + 1) * n] = row
    return out


class FiniteCommRing:
    """Base class: a finite commutative ring with carrier ``range(order)``."""

    kind = "abstract"

    def __init__(self, order: int, zero: Element, one: Element, label: str):
        if order < 1:
            raise ValueError(f"carrier must be nonempty, got order {order}")
        self.order = order
        self.zero = zero
        self.one = one
        self.label = label
        self._add_table: array | None = None
        self._mul_table: array | None = None
        self._neg_table: array | None = None

    def add(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def mul(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def neg(self, x: Element) -> Element:
        raise NotImplementedError

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def power(self, x: Element, e: int) -> Element:
        """x**e for e >= 0; the empty product is 1."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        result, base = self.one, x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self) -> range:
        return range(self.order)

    @property
    def degenerate(self) -> bool:
        """True for the one-element zero ring, in which 0 = 1."""
        return self.order == 1

    def describe(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label} order={self.order}>"

    # Flat-table caches consumed by the scan kernels.

    def add_table(self) -> array:
        if self._add_table is None:
            self._add_table = self._build_add_table()
        return self._add_table

    def mul_table(self) -> array:
        if self._mul_table is None:
            self._mul_table = self._build_mul_table()
        return self._mul_table

    def neg_table(self) -> array:
        if self._neg_table is None:
            self._neg_table = array("i", [self.neg(x) for x in range(self.order)])
        return self._neg_table

    def _build_add_table(self) -> array:
        n = self.order
        t = _zeros(n)
        for x in range(n):
            t[x * n : (x + 1) * n] = array("i", [self.add(x, y) for y in range(n)])
        return t

    def _build_mul_table(self) -> array:
        n = self.order
        t = _zeros(n)
        for x in range(n):
            t[x * n : (x + 1) * n] = array("i", [self.mul(x, y) for y in range(n)])
        return t


class ZmodRing(FiniteCommRing):
    """The ring of integers modulo n; for n = 1 the zero ring with 0 = 1."""

    kind = "zmod"

    def __init__(self, n: int):
        super().__init__(n, 0, 1 % n, f"zmod:{n}")
        self.n = n

    def add(self, x: Element, y: Element) -> Element:
        return (x + y) % self.n

    def mul(self, x: Element, y: Element) -> Element:
        return (x * y) % self.n

    def neg(self, x: Element) -> Element:
        return (-x) % self.n

    def _build_add_table(self) -> array:
        n = self.n
        t = _zeros(n)
        row = list(range(n))
        for x in range(n):
            t[x * n : (x + 1) * n] = array("i", row[x:] + row[:x])
        return t

    def _build_mul_table(self) -> array:
        n = self.n
        t = _zeros(n)
        for x in range(n):
            t[x * n : (x + 1) * n] = array("i", [(x * y) % n for y in range(n)])
        return t


class GaloisRing(FiniteCommRing):
    """Ring view of a Galois field GF(p^n)."""

    kind = "galois"

    def __init__(self, field: GaloisField):
        super().__init__(field.q, 0, 1 % field.q, f"gf:{field.p}^{field.n}")
        self.field = field

    def add(self, x: Element, y: Element) -> Element:
        return self.field.add(x, y)

    def mul(self, x: Element, y: Element) -> Element:
        return self.field.mul(x, y)

    def neg(self, x: Element) -> Element:
        return self.field.neg(x)

    def _build_add_table(self) -> array:
        # Additively GF(p^n) is n independent base-p digits, so the table is
        # the n-fold componentwise composition of the mod-p table.
        p = self.field.p
        base = ZmodRing(p).add_table()
        t, size = base, p
        for _ in range(self.field.n - 1):
            t = _kron(t, size, base, p)
            size *= p
        return t

    def _build_mul_table(self) -> array:
        q = self.field.q
        if q <= 81:
            return super()._build_mul_table()
        exp, log = self.field.log_tables()
        m = q - 1
        t = _zeros(q)
        zero_row = array("i", bytes(array("i").itemsize * q))
        t[0:q] = zero_row
        for x in range(1, q):
            lx = log[x]
            t[x * q : (x + 1) * q] = array(
                "i", [0] + [exp[(lx + log[y]) % m] for y in range(1, q)]
            )
        return t


class ProductRing(FiniteCommRing):
    """Direct product with componentwise operations.

    The carrier is ranked little-endian in the factor list: the first factor
    is the least significant digit of the mixed-radix index.
    """

    kind = "product"

    def __init__(self, factors: Sequence[FiniteCommRing]):
        if not factors:
            raise ValueError("a product needs at least one factor")
        self.factors = tuple(factors)
        order = 1
        for f in self.factors:
            order *= f.order
        one = self.encode_into(tuple(f.one for f in self.factors), self.factors)
        label = "prod:(" + ",".join(f.label for f in self.factors) + ")"
        super().__init__(order, 0, one, label)

    @staticmethod
    def encode_into(parts: tuple[Element, ...], factors: Sequence[FiniteCommRing]) -> Element:
        idx, w = 0, 1
        for x, f in zip(parts, factors):
            idx += x * w
            w *= f.order
        return idx

    def encode(self, parts: tuple[Element, ...]) -> Element:
        if len(parts) != len(self.factors):
            raise ValueError("component count mismatch")
        return self.encode_into(parts, self.factors)

    def decode(self, idx: Element) -> tuple[Element, ...]:
        out = []
        for f in self.factors:
            idx, x = divmod(idx, f.order)
            out.append(x)
        return tuple(out)

    def _mapwise(self, op: str, x: Element, y: Element) -> Element:
        idx, w = 0, 1
        for f in self.factors:
            x, a = divmod(x, f.order)
            y, b = divmod(y, f.order)
            idx += getattr(f, op)(a, b) * w
            w *= f.order
        return idx

    def add(self, x: Element, y: Element) -> Element:
        return self._mapwise("add", x, y)

    def mul(self, x: Element, y: Element) -> Element:
        return self._mapwise("mul", x, y)

    def neg(self, x: Element) -> Element:
        idx, w = 0, 1
        for f in self.factors:
            x, a = divmod(x, f.order)
            idx += f.neg(a) * w
            w *= f.order
        return idx

    def _compose(self, which: str) -> array:
        tables = [getattr(f, which)() for f in self.factors]
        t, size = tables[0], self.factors[0].order
        for f, ft in zip(self.factors[1:], tables[1:]):
            t = _kron(t, size, ft, f.order)
            size *= f.order
        return t

    def _build_add_table(self) -> array:
        return self._compose("add_table")

    def _build_mul_table(self) -> array:
        return self._compose("mul_table")


class TableRing(FiniteCommRing):
    """Ring backed by explicit operation tables (already validated)."""

    kind = "table"

    def __init__(
        self,
        order: int,
        zero: Element,
        one: Element,
        add_table: array,
        mul_table: array,
        neg_table: array,
        label: str | None = None,
    ):
        super().__init__(order, zero, one, label or f"table:{order}")
        self._add_table = add_table
        self._mul_table = mul_table
        self._neg_table = neg_table

    def add(self, x: Element, y: Element) -> Element:
        return self._add_table[x * self.order + y]

    def mul(self, x: Element, y: Element) -> Element:
        return self._mul_table[x * self.order + y]

    def neg(self, x: Element) -> Element:
        return self._neg_table[x]


def make_zmod(n: int, max_order: int = DEFAULT_STRUCTURED_BOUND) -> ZmodRing:
    """The ring Z/nZ with carrier {0, ..., n-1} and arithmetic mod n."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if n > max_order:
        raise CarrierBoundError(f"order {n} exceeds the bound {max_order}")
    return ZmodRing(n)


def make_galois_ring(
    p: int, n: int, max_order: int = DEFAULT_STRUCTURED_BOUND
) -> GaloisRing:
    """The field GF(p^n) as a FiniteCommRing."""
    return GaloisRing(make_galois_field(p, n, max_order=max_order))


def make_product(
    factors: Sequence[FiniteCommRing], max_order: int = DEFAULT_STRUCTURED_BOUND
) -> ProductRing:
    """Direct product of rings, operations componentwise."""
    if not factors:
        raise ValueError("a product needs at least one factor")
    order = 1
    for f in factors:
        order *= f.order
    if order > max_order:
        raise CarrierBoundError(f"product order {order} exceeds the bound {max_order}")
    return ProductRing(factors)


# RingSpec: the on-disk table format.


@dataclass(frozen=True)
class RingSpec:
    """Parsed form of a ring table document.

    Tables are tuples of row tuples; validation of shape and closure over
    [0, order) happens at construction, so a RingSpec in hand is always
    structurally sound (the ring axioms are checked separately by
    :func:`load_ring`).
    """

    order: int
    zero: int
    one: int
    add_rows: tuple[tuple[int, ...], ...]
    mul_rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.order
        if n < 1:
            raise ValueError(f"order must be >= 1, got {n}")
        for name, v in (("zero", self.zero), ("one", self.one)):
            if not 0 <= v < n:
                raise ValueError(f"{name} element {v} outside carrier [0, {n})")
        for name, rows in (("add", self.add_rows), ("mul", self.mul_rows)):
            if len(rows) != n:
                raise ValueError(f"{name} table has {len(rows)} rows, expected {n}")
            for i, row in enumerate(rows):
                if len(row) != n:
                    raise ValueError(
                        f"{name} row {i} has {len(row)} entries, expected {n}"
                    )
                for v in row:
                    if not 0 <= v < n:
                        raise ValueError(
                            f"{name} table not closed: entry {v} in row {i} "
                            f"outside carrier [0, {n})"
                        )


def parse_ringspec(text: str) -> RingSpec:
    """Parse the line-oriented table format.

    Layout: ``meadowspec 1``, ``order N``, ``zero I``, ``one J``, ``add``
    followed by N rows of N indices, ``mul`` followed by N rows.  Blank
    lines are ignored and ``#`` starts a comment.
    """
    lines: list[tuple[int, str]] = []
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((num, line))
    pos = 0

    def take(expect: str | None = None) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(lines):
            raise RingSpecError(f"unexpected end of document (expected {expect})")
        num, line = lines[pos]
        pos += 1
        return num, line

    def take_int_field(key: str) -> int:
        num, line = take(key)
        parts = line.split()
        if len(parts) != 2 or parts[0] != key:
            raise RingSpecError(f"line {num}: expected '{key} <int>', got '{line}'")
        try:
            return int(parts[1])
        except ValueError:
            raise RingSpecError(f"line {num}: '{parts[1]}' is not an integer") from None

    num, header = take("header")
    if header != "meadowspec 1":
        raise RingSpecError(f"line {num}: expected header 'meadowspec 1', got '{header}'")
    order = take_int_field("order")
    zero = take_int_field("zero")
    one = take_int_field("one")

    def take_table(key: str) -> tuple[tuple[int, ...], ...]:
        num, line = take(key)
        if line != key:
            raise RingSpecError(f"line {num}: expected '{key}', got '{line}'")
        rows = []
        for _ in range(order):
            num, line = take(f"a row of the {key} table")
            try:
                row = tuple(int(tok) for tok in line.split())
            except ValueError:
                raise RingSpecError(f"line {num}: non-integer table entry") from None
            if len(row) != order:
                raise RingSpecError(
                    f"line {num}: {key} row has {len(row)} entries, expected {order}"
                )
            rows.append(row)
        return tuple(rows)

    if order < 1:
        raise RingSpecError(f"order must be >= 1, got {order}")
    add_rows = take_table("add")
    mul_rows = take_table("mul")
    if pos != len(lines):
        num, line = lines[pos]
        raise RingSpecError(f"line {num}: trailing content '{line}'")
    try:
        return RingSpec(order, zero, one, add_rows, mul_rows)
    except ValueError as exc:
        raise RingSpecError(str(exc)) from None


def render_ringspec(spec: RingSpec) -> str:
    """Canonical textual form of a RingSpec; parse(render(s)) == s."""
    out = [
        "meadowspec 1",
        f"order {spec.order}",
        f"zero {spec.zero}",
        f"one {spec.one}",
        "add",
    ]
    out.extend(" ".join(str(v) for v in row) for row in spec.add_rows)
    out.append("mul")
    out.extend(" ".join(str(v) for v in row) for row in spec.mul_rows)
    return "\n".join(out) + "\n"


def dump_ring(ring: FiniteCommRing) -> RingSpec:
    """Materialize a ring's tables into a RingSpec document."""
    n = ring.order
    add, mul = ring.add_table(), ring.mul_table()
    return RingSpec(
        n,
        ring.zero,
        ring.one,
        tuple(tuple(add[x * n : (x + 1) * n]) for x in range(n)),
        tuple(tuple(mul[x * n : (x + 1) * n]) for x in range(n)),
    )


def ring_equal(a: FiniteCommRing, b: FiniteCommRing) -> bool:
    """Elementwise equality of two rings (same carrier, constants, tables)."""
    return (
        a.order == b.order
        and a.zero == b.zero
        and a.one == b.one
        and a.add_table() == b.add_table()
        and a.mul_table() == b.mul_table()
    )


# Axiom checking.


@dataclass(frozen=True)
class LawCheck:
    """Outcome of one law check: pass, or fail with a witness assignment."""

    name: str
    law: str
    status: str  # "pass" | "fail"
    witness: tuple[int, ...] | None = None

    def describe_witness(self) -> str:
        if not self.witness:
            return ""
        return ", ".join(f"{v}={w}" for v, w in zip("xyz", self.witness))


@dataclass(frozen=True)
class RingReport:
    """Per-axiom verdicts for a ring, plus the derived ring identities."""

    ring: str
    order: int
    degenerate: bool
    axioms: tuple[LawCheck, ...]
    derived: tuple[LawCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.axioms + self.derived)

    @property
    def first_failure(self) -> LawCheck | None:
        for c in self.axioms + self.derived:
            if c.status == "fail":
                return c
        return None

    def lines(self) -> list[str]:
        out = []
        for c in self.axioms + self.derived:
            suffix = "" if c.status == "pass" else f"  [{c.describe_witness()}]"
            out.append(f"axiom {c.name} {c.law}: {c.status}{suffix}")
        return out


def check_axioms(
    ring: FiniteCommRing, max_order: int = DEFAULT_CHECK_BOUND
) -> RingReport:
    """Exhaustively check the eight ring axioms and seven derived identities.

    The triple-nested scans make this cubic in the order, hence the bound.
    """
    n = ring.order
    if n > max_order:
        raise CarrierBoundError(
            f"exhaustive axiom check capped at order {max_order}, got {n}"
        )
    add, mul, neg = ring.add_table(), ring.mul_table(), ring.neg_table()
    aw = kernels.axiom_witnesses(n, add, mul, neg, ring.zero, ring.one)
    dw = kernels.basicprop_witnesses(n, add, mul, neg, ring.zero, ring.one)
    axioms = tuple(
        LawCheck(name, law, "pass" if w is None else "fail", w)
        for (name, law), w in zip(RING_AXIOMS, aw)
    )
    derived = tuple(
        LawCheck(name, law, "pass" if w is None else "fail", w)
        for (name, law), w in zip(DERIVED_IDENTITIES, dw)
    )
    return RingReport(ring.label, n, ring.degenerate, axioms, derived)


def load_ring(
    spec: RingSpec,
    max_order: int = DEFAULT_TABLE_BOUND,
    check: bool = True,
    label: str | None = None,
) -> TableRing:
    """Build a table-backed ring, verifying the ring axioms eagerly.

    Raises AxiomViolationError naming the first violated axiom (in numeric
    order) together with a witness.  ``check=False`` is for trusted tables
    produced by this package itself.
    """
    n = spec.order
    if n > max_order:
        raise CarrierBoundError(f"table ring order {n} exceeds the bound {max_order}")
    add = array("i", [v for row in spec.add_rows for v in row])
    mul = array("i", [v for row in spec.mul_rows for v in row])

    # Negation is derived from the add table, never supplied: x's negation is
    # the unique y with x+y = 0.  A missing or ambiguous y surfaces as a
    # violation of axiom (4); x itself is a placeholder keeping scans total.
    neg = array("i", [0] * n)
    for x in range(n):
        ys = [y for y in range(n) if add[x * n + y] == spec.zero]
        neg[x] = ys[0] if len(ys) == 1 else x

    ring = TableRing(n, spec.zero, spec.one, add, mul, neg, label=label)
    if check:
        report = check_axioms(ring, max_order=max_order)
        bad = report.first_failure
        if bad is not None:
            raise AxiomViolationError(bad.name, bad.law, bad.witness)
    return ring

"""Generalized inverses: deciding meadow-hood and totalizing the inverse.

The generalized inverse of x is the unique y with ``x*x*y = x`` and
``y*y*x = y``; in a commutative ring at most one such y exists.  A meadow is
a commutative ring in which every element has one, packaged here as the ring
plus its total inverse table.  Non-meadows are legitimate inputs, so absence
is a value (None from :func:`generalized_inverse`, a :class:`NotAMeadow`
result from :func:`to_meadow`), never an exception.

Inverses are found by linear carrier scan rather than by closed forms; the
closed forms (x**(q-2) in a field, componentwise in a product) are used as
independent cross-checks in the test suite.  The scan doubles as a defense:
finding two witnesses for one element proves the tables corrupt and raises
ConsistencyError.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from meadows import kernels
from meadows.errors import ConsistencyError, NotAMeadowError
from meadows.rings import Element, FiniteCommRing


@dataclass(frozen=True)
class Meadow:
    """A finite commutative ring together with its total inverse map."""

    ring: FiniteCommRing
    inv_table: tuple[Element, ...]

    @property
    def order(self) -> int:
        return self.ring.order

    @property
    def zero(self) -> Element:
        return self.ring.zero

    @property
    def one(self) -> Element:
        return self.ring.one

    def add(self, x: Element, y: Element) -> Element:
        return self.ring.add(x, y)

    def mul(self, x: Element, y: Element) -> Element:
        return self.ring.mul(x, y)

    def neg(self, x: Element) -> Element:
        return self.ring.neg(x)

    def sub(self, x: Element, y: Element) -> Element:
        return self.ring.sub(x, y)

    def power(self, x: Element, e: int) -> Element:
        return self.ring.power(x, e)

    def inv(self, x: Element) -> Element:
        return self.inv_table[x]

    def elements(self) -> range:
        return self.ring.elements()

    def __repr__(self) -> str:
        return f"<Meadow {self.ring.label} order={self.order}>"


@dataclass(frozen=True)
class NotAMeadow:
    """Negative verdict: ``witness`` is the least element with no inverse."""

    ring: FiniteCommRing
    witness: Element

    def __bool__(self) -> bool:
        return False


def generalized_inverse(ring: FiniteCommRing, x: Element) -> Element | None:
    """The unique y with x*x*y = x and y*y*x = y, or None if absent.

    Linear scan of the carrier; a second witness aborts, since uniqueness is
    a theorem of commutative rings and a duplicate proves corrupt tables.
    """
    if not 0 <= x < ring.order:
        raise ValueError(f"element {x} outside carrier of order {ring.order}")
    xx = ring.mul(x, x)
    found: Element | None = None
    for y in ring.elements():
        if ring.mul(xx, y) == x and ring.mul(ring.mul(y, y), x) == y:
            if found is not None:
                raise ConsistencyError(
                    f"two generalized inverses for element {x}: {found} and {y}"
                )
            found = y
    return found


def pseudo_witnesses(ring: FiniteCommRing, x: Element) -> set[Element]:
    """All y solving x*x*y = x that fail the symmetric equation y*y*x = y."""
    if not 0 <= x < ring.order:
        raise ValueError(f"element {x} outside carrier of order {ring.order}")
    xx = ring.mul(x, x)
    return {
        y
        for y in ring.elements()
        if ring.mul(xx, y) == x and ring.mul(ring.mul(y, y), x) != y
    }


def to_meadow(ring: FiniteCommRing) -> Meadow | NotAMeadow:
    """Totalize the inverse if possible, else report the least failing element."""
    inv = kernels.inverse_scan(ring.order, ring.mul_table())
    try:
        witness = inv.index(-1)
    except ValueError:
        return Meadow(ring, tuple(inv))
    return NotAMeadow(ring, witness)


def require_meadow(ring: FiniteCommRing) -> Meadow:
    """Like :func:`to_meadow` but raises NotAMeadowError on failure."""
    result = to_meadow(ring)
    if isinstance(result, NotAMeadow):
        raise NotAMeadowError(ring.label, result.witness)
    return result


def inverse_table(meadow: Meadow) -> list[tuple[Element, Element]]:
    """The full (element, inverse) table in carrier order."""
    return list(enumerate(meadow.inv_table))


def verify_meadow(meadow: Meadow) -> list[str]:
    """Check the meadow invariants; returns a list of violations (empty = ok).

    Covered: the two defining equations for every element, inv(0) = 0,
    inv(1) = 1, inv(-1) = -1, and involutivity inv(inv(x)) = x.
    """
    bad: list[str] = []
    r, inv = meadow.ring, meadow.inv_table
    for x in r.elements():
        y = inv[x]
        if r.mul(r.mul(x, x), y) != x:
            bad.append(f"x*x*inv(x) != x at x={x}")
        if r.mul(r.mul(y, y), x) != y:
            bad.append(f"inv(x)*inv(x)*x != inv(x) at x={x}")
        if inv[y] != x:
            bad.append(f"inv(inv(x)) != x at x={x}")
    if inv[r.zero] != r.zero:
        bad.append("inv(0) != 0")
    if inv[r.one] != r.one:
        bad.append("inv(1) != 1")
    minus_one = r.neg(r.one)
    if inv[minus_one] != minus_one:
        bad.append("inv(-1) != -1")
    return bad


def check_inverse_laws(meadow: Meadow, pairwise: bool = True) -> list[str]:
    """Exhaustively check the inverse laws; returns violations (empty = ok).

    Unary laws: everything in :func:`verify_meadow`, plus
    x*inv(x) = 0 iff x = 0, inv(-x) = -inv(x), the idempotent law
    x*x = x implies inv(x) = x, and the power law x**n = x (n > 2) implies
    inv(x) = x**(n-2), scanned over the first 2*order+4 powers.

    Pairwise laws (quadratic, skippable): inv(x*y) = inv(x)*inv(y) and
    x*y = 1 implies inv(x) = y.
    """
    bad = verify_meadow(meadow)
    r, inv = meadow.ring, meadow.inv_table
    n = r.order
    for x in r.elements():
        if (r.mul(x, inv[x]) == r.zero) != (x == r.zero):
            bad.append(f"x*inv(x) = 0 iff x = 0 fails at x={x}")
        if inv[r.neg(x)] != r.neg(inv[x]):
            bad.append(f"inv(-x) != -inv(x) at x={x}")
        if r.mul(x, x) == x and inv[x] != x:
            bad.append(f"x*x = x but inv(x) != x at x={x}")
        powers = [r.one, x]  # powers[k] = x**k
        for k in range(2, 2 * n + 5):
            powers.append(r.mul(powers[-1], x))
            if powers[k] == x and k > 2 and inv[x] != powers[k - 2]:
                bad.append(f"x**{k} = x but inv(x) != x**{k - 2} at x={x}")
    if pairwise:
        mul = r.mul_table()
        for x in r.elements():
            ix = inv[x]
            for y in r.elements():
                if inv[mul[x * n + y]] != mul[ix * n + inv[y]]:
                    bad.append(f"inv(x*y) != inv(x)*inv(y) at x={x}, y={y}")
                if mul[x * n + y] == r.one and ix != y:
                    bad.append(f"x*y = 1 but inv(x) != y at x={x}, y={y}")
    return bad


def _find_identity(table: Sequence[Sequence[int]]) -> Element | None:
    n = len(table)
    for e in range(n):
        if all(table[e][z] == z and table[z][e] == z for z in range(n)):
            return e
    return None


def skew_inverse(mul_table: Sequence[Sequence[int]], x: Element) -> Element | None:
    """Two-sided generalized inverse for a possibly noncommutative operation.

    ``mul_table`` is a square table with a two-sided identity (required).
    Returns the unique y satisfying all four equations

        x*x*y = x,   y*y*x = y,   x*y*y = y,   y*x*x = x

    (products grouped from the left), or None when no y satisfies them.
    Two witnesses raise ConsistencyError: uniqueness holds in any ring, so a
    duplicate means the table is not the multiplication of one.
    """
    n = len(mul_table)
    if any(len(row) != n for row in mul_table):
        raise ValueError("multiplication table must be square")
    if not 0 <= x < n:
        raise ValueError(f"element {x} outside carrier of order {n}")
    if _find_identity(mul_table) is None:
        raise ValueError("multiplication table has no two-sided identity")
    t = mul_table
    xx = t[x][x]
    found: Element | None = None
    for y in range(n):
        if (
            t[xx][y] == x
            and t[t[y][y]][x] == y
            and t[t[x][y]][y] == y
            and t[t[y][x]][x] == x
        ):
            if found is not None:
                raise ConsistencyError(
                    f"two skew inverses for element {x}: {found} and {y}"
                )
            found = y
    return found

"""Idempotent analysis and decomposition of finite meadows into fields.

An idempotent is a NONZERO element e with e*e = e (zero is excluded by
convention throughout this package).  Idempotents are partially ordered by
e <= e' iff e*e' = e; the minimal ones are pairwise orthogonal, sum to 1,
and each generates a subring e*M that is a field with identity e.  Mapping
m to (e1*m, ..., en*m) is then an isomorphism onto the product of those
fields, which :func:`decompose` constructs and verifies exhaustively.

The multiset of component field orders (the :class:`Signature`) is a
complete isomorphism invariant, so :func:`is_isomorphic` just compares
signatures; an independent brute-force bijection search
(:func:`find_isomorphism`) is provided as a cross-checking oracle for small
carriers.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable

from meadows.errors import ConsistencyError, NotAFieldError
from meadows.meadow import Meadow, require_meadow
from meadows.polyfield import is_prime
from meadows.rings import (
    Element,
    FiniteCommRing,
    TableRing,
    make_product,
    make_zmod,
)

#: Above this order, decompose() skips only the quadratic pairwise
#: homomorphism check; bijectivity and the unary checks always run.
PAIRWISE_VERIFY_BOUND = 512


def idempotents(meadow: Meadow) -> list[Element]:
    """All nonzero e with e*e = e, in ascending carrier order."""
    r = meadow.ring
    return [e for e in r.elements() if e != r.zero and r.mul(e, e) == e]


def _require_idempotent(meadow: Meadow, e: Element) -> None:
    r = meadow.ring
    if not 0 <= e < r.order or e == r.zero or r.mul(e, e) != e:
        raise ValueError(f"{e} is not an idempotent of {r.label}")


def idem_leq(meadow: Meadow, e: Element, e2: Element) -> bool:
    """The idempotent partial order: e <= e' iff e*e' = e."""
    _require_idempotent(meadow, e)
    _require_idempotent(meadow, e2)
    return meadow.mul(e, e2) == e


def minimal_idempotents(meadow: Meadow) -> list[Element]:
    """Idempotents with no other idempotent below them, ascending."""
    ids = idempotents(meadow)
    return [
        e
        for e in ids
        if all(e2 == e or meadow.mul(e2, e) != e2 for e2 in ids)
    ]


@dataclass(frozen=True)
class Component:
    """The subring e*M, reindexed to a carrier of its own.

    ``carrier`` lists the elements of e*M as indices of the parent meadow,
    ascending; ``meadow`` is the same structure on carrier range(len).  The
    inverse map is inherited from the parent, which is sound because e*M is
    closed under the parent's inverse.
    """

    idempotent: Element
    carrier: tuple[Element, ...]
    meadow: Meadow


def component(meadow: Meadow, e: Element) -> Component:
    """The meadow e*M with multiplicative identity e."""
    _require_idempotent(meadow, e)
    r = meadow.ring
    n = r.order
    # Work off the parent's flat tables: the subring build is quadratic in
    # the carrier and per-call structured operations would dominate it.
    radd, rmul, rneg = r.add_table(), r.mul_table(), r.neg_table()
    carrier = tuple(sorted({rmul[e * n + m] for m in r.elements()}))
    pos = {a: i for i, a in enumerate(carrier)}
    k = len(carrier)
    add = array("i", [0] * (k * k))
    mul = array("i", [0] * (k * k))
    neg = array("i", [0] * k)
    try:
        for i, a in enumerate(carrier):
            neg[i] = pos[rneg[a]]
            row = a * n
            for j, b in enumerate(carrier):
                add[i * k + j] = pos[radd[row + b]]
                mul[i * k + j] = pos[rmul[row + b]]
        inv = tuple(pos[meadow.inv(a)] for a in carrier)
    except KeyError as exc:
        raise ConsistencyError(
            f"subring {e}*M is not closed; offending element {exc}"
        ) from None
    sub = TableRing(
        k, pos[r.zero], pos[e], add, mul, neg, label=f"{e}*({r.label})"
    )
    return Component(e, carrier, Meadow(sub, inv))


def identify_field(meadow: Meadow) -> tuple[int, int]:
    """(p, k) for a meadow that is a field of order p**k.

    The field test is x*inv(x) = 1 for every nonzero x; the characteristic
    is computed structurally as the additive order of 1 (and must come out
    prime), so corrupted non-fields are caught rather than assumed away.
    """
    r = meadow.ring
    if r.order == 1:
        raise NotAFieldError(f"{r.label} is the zero ring, not a field")
    for x in r.elements():
        if x != r.zero and r.mul(x, meadow.inv(x)) != r.one:
            raise NotAFieldError(
                f"{r.label} is not a field: x*inv(x) != 1 at x={x}"
            )
    p, s = 1, r.one
    while s != r.zero:
        s = r.add(s, r.one)
        p += 1
        if p > r.order:
            raise ConsistencyError(f"additive order of 1 exceeds order of {r.label}")
    if not is_prime(p):
        raise NotAFieldError(f"{r.label}: characteristic {p} is not prime")
    q, k = 1, 0
    while q < r.order:
        q *= p
        k += 1
    if q != r.order:
        raise NotAFieldError(
            f"{r.label}: order {r.order} is not a power of the characteristic {p}"
        )
    return p, k


@dataclass(frozen=True)
class Signature:
    """Sorted multiset of component field orders: the isomorphism invariant.

    Parts are (p, k) pairs sorted ascending by p**k, then by p.  The empty
    signature belongs to the zero ring.
    """

    parts: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, parts: Iterable[tuple[int, int]]) -> Signature:
        return cls(tuple(sorted(parts, key=lambda pk: (pk[0] ** pk[1], pk[0]))))

    @property
    def order(self) -> int:
        n = 1
        for p, k in self.parts:
            n *= p**k
        return n

    @property
    def is_minimal(self) -> bool:
        """True iff all exponents are 1 and the primes are pairwise distinct."""
        primes = [p for p, k in self.parts if k == 1]
        return len(primes) == len(self.parts) and len(set(primes)) == len(primes)

    def __str__(self) -> str:
        if not self.parts:
            return "(zero ring)"
        return " x ".join(f"GF({p**k})" for p, k in self.parts)


@dataclass(frozen=True)
class Decomposition:
    """A meadow's minimal idempotents, component fields, and isomorphism.

    ``iso`` maps parent elements to indices of ``product`` (the direct
    product of the component meadows, factors in ``minimals`` order) and
    ``iso_inv`` is its inverse.  ``pairwise_verified`` records whether the
    quadratic homomorphism check ran (it is skipped above
    PAIRWISE_VERIFY_BOUND; the bijection and unary checks always run).
    """

    meadow: Meadow
    minimals: tuple[Element, ...]
    components: tuple[Component, ...]
    fields: tuple[tuple[int, int], ...]
    product: Meadow
    iso: tuple[Element, ...]
    iso_inv: tuple[Element, ...]
    signature: Signature
    pairwise_verified: bool


def decompose(meadow: Meadow) -> Decomposition:
    """Split a meadow into the product of the fields its minimal idempotents generate.

    The isomorphism m -> (e1*m, ..., en*m) is constructed explicitly and
    verified: bijectivity, preservation of 0, 1 and the inverse always; the
    full addition/multiplication homomorphism on all pairs up to order
    PAIRWISE_VERIFY_BOUND.  Verification failure is a ConsistencyError since
    it cannot happen for a genuine meadow.

    The zero ring decomposes into the empty product: no minimal idempotents
    and the empty signature.
    """
    r = meadow.ring
    if r.order == 1:
        return Decomposition(
            meadow=meadow,
            minimals=(),
            components=(),
            fields=(),
            product=require_meadow(make_zmod(1)),
            iso=(0,),
            iso_inv=(0,),
            signature=Signature(()),
            pairwise_verified=True,
        )

    minimals = tuple(minimal_idempotents(meadow))
    for i, e in enumerate(minimals):
        for f in minimals[i + 1 :]:
            if r.mul(e, f) != r.zero:
                raise ConsistencyError(f"minimal idempotents {e}, {f} not orthogonal")
    total = r.zero
    for e in minimals:
        total = r.add(total, e)
    if total != r.one:
        raise ConsistencyError(f"minimal idempotents sum to {total}, not 1")

    comps = tuple(component(meadow, e) for e in minimals)
    fields = tuple(identify_field(c.meadow) for c in comps)
    product_ring = make_product(
        [c.meadow.ring for c in comps], max_order=max(r.order, 1)
    )
    product = require_meadow(product_ring)
    if product.order != r.order:
        raise ConsistencyError(
            f"component orders multiply to {product.order}, expected {r.order}"
        )

    positions = [{a: i for i, a in enumerate(c.carrier)} for c in comps]
    iso = tuple(
        product_ring.encode(
            tuple(pos[r.mul(e, m)] for e, pos in zip(minimals, positions))
        )
        for m in r.elements()
    )
    if sorted(iso) != list(r.elements()):
        raise ConsistencyError("decomposition map is not a bijection")
    iso_inv = [0] * r.order
    for m, im in enumerate(iso):
        iso_inv[im] = m

    if iso[r.zero] != product.zero or iso[r.one] != product.one:
        raise ConsistencyError("decomposition map moves 0 or 1")
    for m in r.elements():
        if iso[meadow.inv(m)] != product.inv(iso[m]):
            raise ConsistencyError(
                f"decomposition map does not commute with the inverse at {m}"
            )
    pairwise = r.order <= PAIRWISE_VERIFY_BOUND
    if pairwise:
        n = r.order
        add, mul = r.add_table(), r.mul_table()
        padd, pmul = product_ring.add_table(), product_ring.mul_table()
        for x in r.elements():
            hx = iso[x]
            for y in r.elements():
                if iso[add[x * n + y]] != padd[hx * n + iso[y]]:
                    raise ConsistencyError(
                        f"decomposition map is not additive at ({x}, {y})"
                    )
                if iso[mul[x * n + y]] != pmul[hx * n + iso[y]]:
                    raise ConsistencyError(
                        f"decomposition map is not multiplicative at ({x}, {y})"
                    )

    return Decomposition(
        meadow=meadow,
        minimals=minimals,
        components=comps,
        fields=fields,
        product=product,
        iso=iso,
        iso_inv=tuple(iso_inv),
        signature=Signature.of(fields),
        pairwise_verified=pairwise,
    )


def signature(meadow: Meadow) -> Signature:
    """The canonical signature of a meadow (via full decomposition)."""
    return decompose(meadow).signature


def is_isomorphic(m1: Meadow, m2: Meadow) -> bool:
    """Signature equality; complete because signatures classify finite meadows."""
    return signature(m1) == signature(m2)


def is_ring_isomorphism(
    phi: tuple[Element, ...] | list[Element],
    r1: FiniteCommRing,
    r2: FiniteCommRing,
) -> bool:
    """Check that phi is a bijective ring map r1 -> r2 (constants included)."""
    n = r1.order
    if r2.order != n or len(phi) != n or sorted(phi) != list(range(n)):
        return False
    if phi[r1.zero] != r2.zero or phi[r1.one] != r2.one:
        return False
    for x in range(n):
        for y in range(n):
            if phi[r1.add(x, y)] != r2.add(phi[x], phi[y]):
                return False
            if phi[r1.mul(x, y)] != r2.mul(phi[x], phi[y]):
                return False
    return True


def find_isomorphism(m1: Meadow, m2: Meadow) -> tuple[Element, ...] | None:
    """Brute-force bijection search preserving both tables; fixes 0 and 1.

    A backtracking oracle for small orders, independent of signatures; used
    to cross-validate :func:`is_isomorphic`.  Forced values (images of sums
    and products of already-mapped elements) are propagated eagerly, which
    prunes the search to near-nothing at the supported sizes.
    """
    n = m1.order
    if m2.order != n:
        return None
    a1, u1 = m1.ring.add_table(), m1.ring.mul_table()
    a2, u2 = m2.ring.add_table(), m2.ring.mul_table()

    phi = [-1] * n
    used = [False] * n
    assigned: list[Element] = []

    def assign(pairs: list[tuple[Element, Element]]) -> list[Element] | None:
        """Apply assignments plus their consequences; returns the trail."""
        trail: list[Element] = []
        queue = list(pairs)
        while queue:
            x, y = queue.pop()
            if phi[x] == y:
                continue
            if phi[x] != -1 or used[y]:
                for t in trail:
                    used[phi[t]] = False
                    phi[t] = -1
                    assigned.pop()
                return None
            phi[x] = y
            used[y] = True
            assigned.append(x)
            trail.append(x)
            for w in assigned:
                for t1, t2 in ((a1, a2), (u1, u2)):
                    s = t1[x * n + w]
                    img = t2[y * n + phi[w]]
                    if phi[s] == -1 and not used[img]:
                        queue.append((s, img))
                    elif phi[s] != img:
                        for t in trail:
                            used[phi[t]] = False
                            phi[t] = -1
                            assigned.pop()
                        return None
        return trail

    def undo(trail: list[Element]) -> None:
        for t in trail:
            used[phi[t]] = False
            phi[t] = -1
            assigned.pop()

    def search() -> bool:
        x = next((i for i in range(n) if phi[i] == -1), None)
        if x is None:
            return True
        for y in range(n):
            if used[y]:
                continue
            trail = assign([(x, y)])
            if trail is not None:
                if search():
                    return True
                undo(trail)
        return False

    start = assign([(m1.zero, m2.zero), (m1.one, m2.one)])
    if start is None:
        return None
    if search():
        return tuple(phi)
    return None


def find_proper_submeadow(meadow: Meadow) -> tuple[Element, ...] | None:
    """A proper subset containing 0 and 1, closed under +, -, *, inverse.

    Any closed subset containing the constants contains the closure of
    {0, 1}, so that closure is the least candidate: it is returned when
    proper, and None is returned when it is everything (then no proper
    submeadow exists at all).
    """
    r = meadow.ring
    closure = {r.zero, r.one}
    frontier = list(closure)
    while frontier:
        x = frontier.pop()
        for y in (r.neg(x), meadow.inv(x)):
            if y not in closure:
                closure.add(y)
                frontier.append(y)
        for y in list(closure):
            for z in (r.add(x, y), r.mul(x, y)):
                if z not in closure:
                    closure.add(z)
                    frontier.append(z)
    if len(closure) < r.order:
        return tuple(sorted(closure))
    return None


def is_minimal_meadow(meadow: Meadow) -> bool:
    """True iff the signature is squarefree: all exponents 1, distinct primes.

    Equivalent to having no proper submeadow; the subset search
    (:func:`find_proper_submeadow`) is the cross-validating oracle.
    """
    return signature(meadow).is_minimal


def check_idempotent_laws(meadow: Meadow) -> list[str]:
    """Exhaustive idempotent-lattice checks; returns violations (empty = ok).

    Covered: <= is a partial order; nonzero products of idempotents are
    idempotents; e < e' makes e' - e an idempotent; distinct minimal
    idempotents are orthogonal; orthogonal idempotents sum to an idempotent;
    the minimal idempotents sum to 1; every idempotent is self-inverse.
    """
    bad: list[str] = []
    r = meadow.ring
    ids = idempotents(meadow)
    leq = {(e, f): r.mul(e, f) == e for e in ids for f in ids}

    for e in ids:
        if not leq[(e, e)]:
            bad.append(f"<= not reflexive at e={e}")
        if meadow.inv(e) != e:
            bad.append(f"idempotent not self-inverse at e={e}")
    for e in ids:
        for f in ids:
            if leq[(e, f)] and leq[(f, e)] and e != f:
                bad.append(f"<= not antisymmetric at e={e}, e'={f}")
            for g in ids:
                if leq[(e, f)] and leq[(f, g)] and not leq[(e, g)]:
                    bad.append(f"<= not transitive at e={e}, e'={f}, e''={g}")

    idset = set(ids)
    for e in ids:
        for f in ids:
            ef = r.mul(e, f)
            if ef != r.zero and ef not in idset:
                bad.append(f"product {e}*{f} = {ef} is neither 0 nor idempotent")
            if leq[(e, f)] and e != f and r.sub(f, e) not in idset:
                bad.append(f"difference {f} - {e} is not an idempotent")
            if ef == r.zero:
                s = r.add(e, f)
                if s not in idset:
                    bad.append(f"orthogonal sum {e} + {f} is not an idempotent")

    minimals = minimal_idempotents(meadow)
    for i, e in enumerate(minimals):
        for f in minimals[i + 1 :]:
            if r.mul(e, f) != r.zero:
                bad.append(f"minimal idempotents {e}, {f} are not orthogonal")
    total = r.zero
    for e in minimals:
        total = r.add(total, e)
    if total != r.one:
        bad.append(f"minimal idempotents sum to {total}, not 1")
    return bad

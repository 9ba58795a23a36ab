"""Counting and classification: self-inverses, invertibles, meadows per order.

The closed-form counts (2**l * 3**(n-l) self-inverses, prod(p**k - 1)
invertibles, both read off the signature) are always computed ALONGSIDE a
brute-force carrier scan, never instead of it; any disagreement is raised as
a ConsistencyError because agreement is exactly what this package exists to
demonstrate.
"""
from __future__ import annotations

from dataclasses import dataclass

from meadows.errors import CarrierBoundError, ConsistencyError
from meadows.meadow import Meadow, NotAMeadow, require_meadow, to_meadow
from meadows.polyfield import prime_factors
from meadows.rings import (
    DEFAULT_STRUCTURED_BOUND,
    Element,
    ProductRing,
    make_galois_ring,
    make_product,
    make_zmod,
)
from meadows.structure import Signature, signature as meadow_signature

FACTOR_BOUND = 10**6
ZMOD_LAW_BOUND = 512


def is_squarefree(n: int) -> bool:
    """True iff no prime square divides n (trial division, n <= 10**6)."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n > FACTOR_BOUND:
        raise CarrierBoundError(f"squarefree test capped at {FACTOR_BOUND}, got {n}")
    return all(e == 1 for _, e in prime_factors(n))


@dataclass(frozen=True)
class CountReport:
    """Self-inverse and invertible counts, brute force versus closed form.

    A component field contributes 2 self-inverses in characteristic 2 and 3
    otherwise (the self-inverses of a field are 0, 1 and -1, and -1 = 1 when
    the characteristic is 2), so with l characteristic-2 components out of n
    the meadow has 2**l * 3**(n-l) self-inverses and prod(q_i - 1)
    invertibles.
    """

    order: int
    signature: Signature
    char2_components: int  # the exponent l above
    self_inverse_count: int
    self_inverse_formula: int
    self_inverse_elements: tuple[Element, ...]
    invertible_count: int
    invertible_formula: int
    invertible_elements: tuple[Element, ...]


def count_self_inverse(meadow: Meadow) -> tuple[int, int]:
    """(brute, formula) counts of m with m = inv(m); must agree."""
    report = count_report(meadow)
    return report.self_inverse_count, report.self_inverse_formula


def count_invertible(meadow: Meadow) -> tuple[int, int]:
    """(brute, formula) counts of m with m*inv(m) = 1; must agree."""
    report = count_report(meadow)
    return report.invertible_count, report.invertible_formula


def count_report(meadow: Meadow) -> CountReport:
    """Both counts with their element lists, formulas cross-checked."""
    sig = meadow_signature(meadow)
    n_parts = len(sig.parts)
    l = sum(1 for p, _ in sig.parts if p == 2)
    formula_self = 2**l * 3 ** (n_parts - l)
    formula_inv = 1
    for p, k in sig.parts:
        formula_inv *= p**k - 1

    r = meadow.ring
    self_els = tuple(m for m in r.elements() if meadow.inv(m) == m)
    unit_els = tuple(m for m in r.elements() if r.mul(m, meadow.inv(m)) == r.one)
    if len(self_els) != formula_self:
        raise ConsistencyError(
            f"{r.label}: {len(self_els)} self-inverses found, formula says {formula_self}"
        )
    if len(unit_els) != formula_inv:
        raise ConsistencyError(
            f"{r.label}: {len(unit_els)} invertibles found, formula says {formula_inv}"
        )
    return CountReport(
        order=r.order,
        signature=sig,
        char2_components=l,
        self_inverse_count=len(self_els),
        self_inverse_formula=formula_self,
        self_inverse_elements=self_els,
        invertible_count=len(unit_els),
        invertible_formula=formula_inv,
        invertible_elements=unit_els,
    )


def _partitions(k: int) -> list[tuple[int, ...]]:
    """All descending partitions of k >= 0 (the empty partition for 0)."""
    if k == 0:
        return [()]
    out = []

    def rec(remaining: int, cap: int, acc: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(acc)
            return
        for part in range(min(remaining, cap), 0, -1):
            rec(remaining - part, part, acc + (part,))

    rec(k, k, ())
    return out


@dataclass(frozen=True)
class ClassifyReport:
    """All meadow signatures of one order, fewest components first."""

    order: int
    signatures: tuple[Signature, ...]
    minimal: Signature | None  # the (unique) squarefree signature, if any

    @property
    def count(self) -> int:
        return len(self.signatures)


def classify_order(n: int) -> ClassifyReport:
    """Every meadow of order n up to isomorphism, as signatures.

    A meadow of order n is a product of Galois fields whose orders multiply
    to n, so the signatures are exactly the ways of splitting each prime
    exponent of n into a partition.  Output is sorted (component count, then
    parts) for determinism.  n = 1 yields the single empty signature.
    """
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n > FACTOR_BOUND:
        raise CarrierBoundError(f"classification capped at {FACTOR_BOUND}, got {n}")
    choices: list[list[tuple[tuple[int, int], ...]]] = []
    for p, e in prime_factors(n):
        choices.append([tuple((p, k) for k in part) for part in _partitions(e)])
    sigs = [Signature(())]
    for options in choices:
        sigs = [
            Signature.of(sig.parts + extra) for sig in sigs for extra in options
        ]
    sigs.sort(key=lambda s: (len(s.parts), s.parts))
    minimal = next((s for s in sigs if s.is_minimal), None)
    return ClassifyReport(n, tuple(sigs), minimal)


def meadow_from_signature(
    sig: Signature, max_order: int = DEFAULT_STRUCTURED_BOUND
) -> Meadow:
    """A concrete witness meadow: the product of the signature's fields."""
    if not sig.parts:
        return require_meadow(make_zmod(1))
    factors = [make_galois_ring(p, k, max_order=max_order) for p, k in sig.parts]
    return require_meadow(make_product(factors, max_order=max_order))


@dataclass(frozen=True)
class LawReport:
    """Outcome of sweeping the squarefree law over Z/nZ for n up to a bound."""

    bound: int
    entries: tuple[tuple[int, bool, bool], ...]  # (n, squarefree, is_meadow)
    counterexamples: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def meadow_orders(self) -> tuple[int, ...]:
        return tuple(n for n, _, m in self.entries if m)


def zmod_meadow_law(bound: int) -> LawReport:
    """Check 'Z/nZ is a meadow iff n is squarefree' for 1 <= n <= bound.

    The meadow side is decided by exhaustive inverse search, not by the
    number theory, so the sweep genuinely tests the equivalence.
    """
    if not 1 <= bound <= ZMOD_LAW_BOUND:
        raise CarrierBoundError(f"law sweep bound must be in [1, {ZMOD_LAW_BOUND}]")
    entries = []
    bad = []
    for n in range(1, bound + 1):
        sf = is_squarefree(n)
        m = not isinstance(to_meadow(make_zmod(n)), NotAMeadow)
        entries.append((n, sf, m))
        if sf != m:
            bad.append(n)
    return LawReport(bound, tuple(entries), tuple(bad))


def crt_isomorphism(n: int) -> tuple[tuple[Element, ...], ProductRing]:
    """The residue map Z/nZ -> Z/p1 x ... x Z/pk for squarefree n >= 2.

    Returns (phi, product) with phi[x] the product-ring index of
    (x mod p1, ..., x mod pk), primes ascending.  This is the explicit
    Chinese-remainder isomorphism; verifying it is a ring isomorphism is
    the caller's (or the test suite's) job.
    """
    if n < 2 or not is_squarefree(n):
        raise ValueError(f"expected a squarefree integer >= 2, got {n}")
    primes = [p for p, _ in prime_factors(n)]
    product = make_product([make_zmod(p) for p in primes])
    phi = tuple(product.encode(tuple(x % p for p in primes)) for x in range(n))
    return phi, product

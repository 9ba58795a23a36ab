"""Exact polynomial arithmetic over prime fields and Galois field construction.

A polynomial over GF(p) is stored as a tuple of coefficients in little-endian
order: ``(c0, c1, ..., cd)`` stands for ``c0 + c1*x + ... + cd*x**d`` with
every ``ci`` in ``[0, p)`` and ``cd != 0``.  The zero polynomial is the empty
tuple.  This canonical form makes equality structural.

Elements of GF(p^n) are numbered ``0 .. p**n - 1`` by the base-p value of
their coefficient vector, the degree-0 coefficient being the least
significant digit.  Under that numbering element 0 is the field zero and
element 1 the field one, and the numbering of polynomials of degree < n is
total, so a field's carrier is simply ``range(p**n)``.

Field construction is deterministic: ``make_galois_field(p, n)`` always picks
the irreducible monic modulus of degree n whose non-leading coefficient
vector has the smallest base-p rank (for n = 1 the modulus is x, which makes
the arithmetic plain mod p).  Irreducibility is decided by exhaustive trial
division, which is entirely adequate at the supported sizes (orders up to
4096 by default).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from meadows.errors import CarrierBoundError

DEFAULT_FIELD_BOUND = 4096


def is_prime(m: int) -> bool:
    """Trial-division primality test, adequate for small carrier sizes."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_factors(m: int) -> list[tuple[int, int]]:
    """Factor m >= 1 into sorted (prime, exponent) pairs by trial division."""
    if m < 1:
        raise ValueError(f"cannot factor {m}: expected a positive integer")
    out: list[tuple[int, int]] = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


@dataclass(frozen=True)
class Polynomial:
    """A canonical-form polynomial over GF(p).

    ``coeffs`` is little-endian and never has a trailing zero; use
    :func:`make_poly` to build one from an arbitrary coefficient sequence.
    """

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(f"coefficient modulus must be >= 2, got {self.p}")
        if any(not (0 <= c < self.p) for c in self.coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.p})")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient: not canonical form")

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if c == 1 else f"{c}{xs}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Polynomial(p={self.p}, {self})"


def make_poly(p: int, coeffs: Iterable[int]) -> Polynomial:
    """Build a canonical polynomial, reducing coefficients mod p."""
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return Polynomial(p, tuple(cs))


def poly_zero(p: int) -> Polynomial:
    return Polynomial(p, ())


def poly_one(p: int) -> Polynomial:
    return Polynomial(p, (1,))


def poly_x(p: int) -> Polynomial:
    return Polynomial(p, (0, 1))


def _check_same_modulus(*polys: Polynomial) -> int:
    p = polys[0].p
    for q in polys[1:]:
        if q.p != p:
            raise ValueError(f"mixed coefficient moduli: {p} and {q.p}")
    return p


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    """Coefficientwise sum mod p."""
    p = _check_same_modulus(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return make_poly(p, [x + y for x, y in zip(ca, cb)])


def poly_neg(a: Polynomial) -> Polynomial:
    return make_poly(a.p, [-c for c in a.coeffs])


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return poly_add(a, poly_neg(b))


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Convolution product mod p."""
    p = _check_same_modulus(a, b)
    if a.is_zero or b.is_zero:
        return poly_zero(p)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i + j] = (out[i + j] + ca * cb) % p
    return make_poly(p, out)


def poly_divmod(a: Polynomial, m: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder of a by a monic divisor m of degree >= 1."""
    p = _check_same_modulus(a, m)
    if not m.is_monic or m.degree < 1:
        raise ValueError(f"divisor must be monic of degree >= 1, got {m!r}")
    rem = list(a.coeffs)
    quo = [0] * max(0, len(rem) - m.degree)
    for i in range(len(rem) - 1, m.degree - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quo[i - m.degree] = c
        for j, cm in enumerate(m.coeffs):
            rem[i - m.degree + j] = (rem[i - m.degree + j] - c * cm) % p
    return make_poly(p, quo), make_poly(p, rem)


def poly_mod(a: Polynomial, m: Polynomial) -> Polynomial:
    return poly_divmod(a, m)[1]


def poly_mulmod(a: Polynomial, b: Polynomial, m: Polynomial) -> Polynomial:
    """(a * b) reduced mod m; m must be monic of degree >= 1."""
    _check_same_modulus(a, b, m)
    return poly_mod(poly_mul(a, b), m)


def poly_powmod(a: Polynomial, e: int, m: Polynomial) -> Polynomial:
    """a**e mod m by square and multiply, e >= 0."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = poly_mod(poly_one(a.p), m) if m.degree >= 1 else poly_one(a.p)
    base = poly_mod(a, m)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, m)
        base = poly_mulmod(base, base, m)
        e >>= 1
    return result


def poly_rank(a: Polynomial) -> int:
    """Base-p value of the coefficient vector (degree 0 least significant)."""
    r = 0
    for c in reversed(a.coeffs):
        r = r * a.p + c
    return r


def poly_from_rank(p: int, rank: int) -> Polynomial:
    """Inverse of :func:`poly_rank`."""
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    cs = []
    while rank:
        rank, c = divmod(rank, p)
        cs.append(c)
    return Polynomial(p, tuple(cs))


def monic_from_rank(p: int, degree: int, rank: int) -> Polynomial:
    """The monic polynomial x**degree + f where f has base-p rank ``rank``."""
    if not 0 <= rank < p**degree:
        raise ValueError("rank out of range for the requested degree")
    low = poly_from_rank(p, rank).coeffs
    cs = low + (0,) * (degree - len(low)) + (1,)
    return Polynomial(p, cs)


def is_irreducible(m: Polynomial) -> bool:
    """Exhaustive trial division by all monic divisors of degree <= deg(m)/2.

    Intended for desk-scale moduli (irreducibility of the ~p^(d/2) candidate
    divisors is never needed; plain remainder tests suffice).
    """
    if m.is_zero or m.degree < 1:
        raise ValueError(f"irreducibility is defined for degree >= 1, got {m!r}")
    p = m.p
    for d in range(1, m.degree // 2 + 1):
        for rank in range(p**d):
            if poly_mod(m, monic_from_rank(p, d, rank)).is_zero:
                return False
    return True


class GaloisField:
    """The finite field GF(p^n) on the carrier ``range(p**n)``.

    Arithmetic is on element numbers (base-p ranks of coefficient vectors);
    ``element`` and ``index`` convert to and from :class:`Polynomial`.
    Instances are immutable; the exp/log tables used to speed up bulk
    multiplication are derived caches.
    """

    def __init__(self, p: int, n: int, modulus: Polynomial):
        if modulus.p != p or modulus.degree != n or not modulus.is_monic:
            raise ValueError(f"modulus {modulus!r} does not define GF({p}^{n})")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus!r} is reducible")
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = modulus
        self._exp: list[int] | None = None
        self._log: list[int] | None = None

    def __repr__(self) -> str:
        return f"GF({self.q}) = GF({self.p})[x]/({self.modulus})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaloisField):
            return NotImplemented
        return (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    def elements(self) -> range:
        return range(self.q)

    def element(self, i: int) -> Polynomial:
        if not 0 <= i < self.q:
            raise ValueError(f"element {i} outside carrier of order {self.q}")
        return poly_from_rank(self.p, i)

    def index(self, a: Polynomial) -> int:
        if a.p != self.p or a.degree >= self.n:
            raise ValueError(f"{a!r} is not a representative in GF({self.q})")
        return poly_rank(a)

    def add(self, i: int, j: int) -> int:
        p, out, w = self.p, 0, 1
        while i or j:
            out += ((i % p + j % p) % p) * w
            i //= p
            j //= p
            w *= p
        return out

    def neg(self, i: int) -> int:
        p, out, w = self.p, 0, 1
        while i:
            out += (-(i % p)) % p * w
            i //= p
            w *= p
        return out

    def mul(self, i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        return poly_rank(poly_mulmod(self.element(i), self.element(j), self.modulus))

    def pow(self, i: int, e: int) -> int:
        """i**e with e >= 0; the empty product is 1."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        result, base = 1, i
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inverse(self, i: int) -> int:
        """Total inverse: 0 maps to 0, nonzero x to x**(q-2)."""
        if i == 0:
            return 0
        return self.pow(i, self.q - 2)

    def log_tables(self) -> tuple[list[int], list[int]]:
        """(exp, log) for the cyclic group of units; log[0] is unused (-1).

        exp has length q-1 with exp[k] = g**k for a fixed generator g; used
        to build bulk multiplication tables in O(1) per entry.
        """
        if self._exp is None:
            q = self.q
            g = self._find_generator()
            exp = [0] * (q - 1)
            log = [-1] * q
            e = 1
            for k in range(q - 1):
                exp[k] = e
                log[e] = k
                e = self.mul(e, g)
            self._exp, self._log = exp, log
        return self._exp, self._log  # type: ignore[return-value]

    def _find_generator(self) -> int:
        m = self.q - 1
        if m == 1:
            return 1
        checks = [m // r for r, _ in prime_factors(m)]
        for g in range(2, self.q):
            if all(self.pow(g, c) != 1 for c in checks):
                return g
        raise AssertionError("no generator found: the unit group must be cyclic")


def make_galois_field(p: int, n: int, max_order: int = DEFAULT_FIELD_BOUND) -> GaloisField:
    """Construct GF(p^n) with the deterministic smallest-rank irreducible modulus."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError(f"extension degree must be >= 1, got {n}")
    if p**n > max_order:
        raise CarrierBoundError(f"field order {p**n} exceeds the bound {max_order}")
    if n == 1:
        return GaloisField(p, 1, poly_x(p))
    for rank in range(p**n):
        candidate = monic_from_rank(p, n, rank)
        if is_irreducible(candidate):
            return GaloisField(p, n, candidate)
    raise AssertionError(f"no irreducible monic of degree {n} over GF({p})")


def field_inverse(field: GaloisField, x: int) -> int:
    """Total multiplicative inverse in a Galois field (0 maps to 0)."""
    return field.inverse(x)

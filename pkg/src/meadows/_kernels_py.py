"""Pure-Python verification kernels.

These are the fallback twins of the compiled routines in ``_ckernels``; both
backends take flat row-major operation tables (``table[x*n + y]``) and must
produce bit-identical results, including witness tuples, so the scan order
here is the contract.
"""
from __future__ import annotations

from meadows.errors import ConsistencyError


def _assoc_witness(n, t):
    for x in range(n):
        for y in range(n):
            a = t[x * n + y]
            for z in range(n):
                if t[a * n + z] != t[x * n + t[y * n + z]]:
                    return (x, y, z)
    return None


def _comm_witness(n, t):
    for x in range(n):
        for y in range(n):
            if t[x * n + y] != t[y * n + x]:
                return (x, y)
    return None


def _unit_witness(n, t, e):
    for x in range(n):
        if t[x * n + e] != x:
            return (x,)
    return None


def _neg_witness(n, add, neg, zero):
    # Combined check of x + (-x) = 0 and uniqueness of the additive inverse.
    for x in range(n):
        if add[x * n + neg[x]] != zero:
            return (x,)
        count = 0
        for y in range(n):
            if add[x * n + y] == zero:
                count += 1
        if count != 1:
            return (x,)
    return None


def _distrib_witness(n, add, mul):
    for x in range(n):
        for y in range(n):
            xy = mul[x * n + y]
            for z in range(n):
                if mul[x * n + add[y * n + z]] != add[xy * n + mul[x * n + z]]:
                    return (x, y, z)
    return None


def axiom_witnesses(n, add, mul, neg, zero, one):
    """First violation (or None) for each of the eight ring axioms, in order."""
    return [
        _assoc_witness(n, add),
        _comm_witness(n, add),
        _unit_witness(n, add, zero),
        _neg_witness(n, add, neg, zero),
        _assoc_witness(n, mul),
        _comm_witness(n, mul),
        _unit_witness(n, mul, one),
        _distrib_witness(n, add, mul),
    ]


def basicprop_witnesses(n, add, mul, neg, zero, one):
    """Witnesses for the seven derived ring identities, in order:

    unique 1; 0*x = 0; (-x)*y = -(x*y); (-1)*x = -x; -0 = 0;
    (-x) + (-y) = -(x+y); -(-x) = x.
    """
    out = []

    w = None
    for e in range(n):
        if e == one:
            continue
        if all(mul[e * n + x] == x for x in range(n)):
            w = (e,)
            break
    out.append(w)

    w = None
    for x in range(n):
        if mul[zero * n + x] != zero:
            w = (x,)
            break
    out.append(w)

    w = None
    for x in range(n):
        nx = neg[x]
        for y in range(n):
            if mul[nx * n + y] != neg[mul[x * n + y]]:
                w = (x, y)
                break
        if w:
            break
    out.append(w)

    w = None
    none = neg[one]
    for x in range(n):
        if mul[none * n + x] != neg[x]:
            w = (x,)
            break
    out.append(w)

    out.append(None if neg[zero] == zero else ())

    w = None
    for x in range(n):
        nx = neg[x]
        for y in range(n):
            if add[nx * n + neg[y]] != neg[add[x * n + y]]:
                w = (x, y)
                break
        if w:
            break
    out.append(w)

    w = None
    for x in range(n):
        if neg[neg[x]] != x:
            w = (x,)
            break
    out.append(w)

    return out


def inverse_scan(n, mul):
    """Generalized inverse of every element by linear carrier scan.

    Returns a list with inv[x] = y where x*x*y = x and y*y*x = y, or -1 when
    no such y exists.  A second witness for any x means the table cannot be
    a commutative ring and raises ConsistencyError.
    """
    inv = [0] * n
    for x in range(n):
        xx = mul[x * n + x]
        found = -1
        for y in range(n):
            if mul[xx * n + y] == x and mul[mul[y * n + y] * n + x] == y:
                if found >= 0:
                    raise ConsistencyError(
                        f"two generalized inverses for element {x}: "
                        f"{found} and {y} (corrupted multiplication table)"
                    )
                found = y
        inv[x] = found
    return inv

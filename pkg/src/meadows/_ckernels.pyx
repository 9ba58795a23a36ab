# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled verification kernels.

Twin of ``meadows._kernels_py``: same functions, same scan order, same
witness tuples.  Tables are flat row-major int buffers (array('i')).
"""

from meadows.errors import ConsistencyError


cdef _assoc_witness(int n, const int[::1] t):
    cdef int x, y, z, a
    for x in range(n):
        for y in range(n):
            a = t[x * n + y]
            for z in range(n):
                if t[a * n + z] != t[x * n + t[y * n + z]]:
                    return (x, y, z)
    return None


cdef _comm_witness(int n, const int[::1] t):
    cdef int x, y
    for x in range(n):
        for y in range(n):
            if t[x * n + y] != t[y * n + x]:
                return (x, y)
    return None


cdef _unit_witness(int n, const int[::1] t, int e):
    cdef int x
    for x in range(n):
        if t[x * n + e] != x:
            return (x,)
    return None


cdef _neg_witness(int n, const int[::1] add, const int[::1] neg, int zero):
    cdef int x, y, count
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


cdef _distrib_witness(int n, const int[::1] add, const int[::1] mul):
    cdef int x, y, z, xy
    for x in range(n):
        for y in range(n):
            xy = mul[x * n + y]
            for z in range(n):
                if mul[x * n + add[y * n + z]] != add[xy * n + mul[x * n + z]]:
                    return (x, y, z)
    return None


def axiom_witnesses(int n, const int[::1] add, const int[::1] mul,
                    const int[::1] neg, int zero, int one):
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


def basicprop_witnesses(int n, const int[::1] add, const int[::1] mul,
                        const int[::1] neg, int zero, int one):
    """Witnesses for the seven derived ring identities (see the pure twin)."""
    cdef int x, y, e, nx, none
    cdef bint ok
    out = []

    w = None
    for e in range(n):
        if e == one:
            continue
        ok = True
        for x in range(n):
            if mul[e * n + x] != x:
                ok = False
                break
        if ok:
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
        if w is not None:
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
        if w is not None:
            break
    out.append(w)

    w = None
    for x in range(n):
        if neg[neg[x]] != x:
            w = (x,)
            break
    out.append(w)

    return out


def inverse_scan(int n, const int[::1] mul):
    """Generalized inverse of every element by linear carrier scan.

    inv[x] = the unique y with x*x*y = x and y*y*x = y, or -1 if absent;
    raises ConsistencyError if two witnesses turn up.
    """
    cdef int x, y, xx, found
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

"""Shared fixtures: meadow catalogs and table helpers."""
from __future__ import annotations

import pytest

from meadows import classify_order, meadow_from_signature
from meadows.meadow import Meadow
from meadows.structure import Signature


def meadows_up_to(max_order: int) -> list[tuple[Signature, Meadow]]:
    """One witness meadow per isomorphism class of order <= max_order."""
    out = []
    for n in range(1, max_order + 1):
        for sig in classify_order(n).signatures:
            out.append((sig, meadow_from_signature(sig)))
    return out


@pytest.fixture(scope="session")
def catalog8() -> list[tuple[Signature, Meadow]]:
    return meadows_up_to(8)


@pytest.fixture(scope="session")
def catalog16() -> list[tuple[Signature, Meadow]]:
    return meadows_up_to(16)


@pytest.fixture(scope="session")
def catalog64() -> list[tuple[Signature, Meadow]]:
    return meadows_up_to(64)


def mul_table_2d(meadow: Meadow) -> list[list[int]]:
    n = meadow.order
    flat = meadow.ring.mul_table()
    return [list(flat[x * n : (x + 1) * n]) for x in range(n)]


def add_table_2d(meadow: Meadow) -> list[list[int]]:
    n = meadow.order
    flat = meadow.ring.add_table()
    return [list(flat[x * n : (x + 1) * n]) for x in range(n)]


def upper_triangular_f2() -> tuple[list[list[int]], list[list[int]], int, int]:
    """The ring of upper triangular 2x2 matrices over GF(2), order 8.

    Elements are (a, b, d) for [[a, b], [0, d]], indexed a + 2b + 4d.  A
    noncommutative ring with identity: the standard counterpoint for the
    skew-inverse tests.
    """

    def unpack(i: int) -> tuple[int, int, int]:
        return i & 1, (i >> 1) & 1, (i >> 2) & 1

    def pack(a: int, b: int, d: int) -> int:
        return a | (b << 1) | (d << 2)

    add = [[0] * 8 for _ in range(8)]
    mul = [[0] * 8 for _ in range(8)]
    for i in range(8):
        a1, b1, d1 = unpack(i)
        for j in range(8):
            a2, b2, d2 = unpack(j)
            add[i][j] = pack(a1 ^ a2, b1 ^ b2, d1 ^ d2)
            mul[i][j] = pack(a1 & a2, (a1 & b2) ^ (b1 & d2), d1 & d2)
    zero, one = 0, pack(1, 0, 1)
    return add, mul, zero, one

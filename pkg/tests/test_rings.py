"""Ring constructors, the axiom checker, and the RingSpec table format."""
from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meadows.errors import (
    AxiomViolationError,
    CarrierBoundError,
    RingSpecError,
)
from meadows.rings import (
    RingSpec,
    check_axioms,
    dump_ring,
    load_ring,
    make_galois_ring,
    make_product,
    make_zmod,
    parse_ringspec,
    render_ringspec,
    ring_equal,
)

SAMPLE_RINGS = [
    make_zmod(1),
    make_zmod(4),
    make_zmod(10),
    make_galois_ring(2, 2),
    make_galois_ring(3, 2),
    make_galois_ring(2, 3),
    make_product([make_zmod(2), make_galois_ring(5, 1)]),
    make_product([make_galois_ring(2, 2), make_zmod(3)]),
    make_product([make_zmod(3), make_galois_ring(2, 2), make_zmod(2)]),
]


class TestZmod:
    def test_mod_ten_arithmetic(self):
        r = make_zmod(10)
        assert r.add(7, 5) == 2
        assert r.mul(7, 5) == 5

    def test_zero_ring(self):
        r = make_zmod(1)
        assert r.order == 1 and r.zero == r.one == 0
        assert r.degenerate
        assert r.add(0, 0) == 0 == r.mul(0, 0)

    def test_mod_four_zero_divisor(self):
        assert make_zmod(4).mul(2, 2) == 0

    def test_bounds(self):
        with pytest.raises(ValueError):
            make_zmod(0)
        with pytest.raises(CarrierBoundError):
            make_zmod(4097)
        make_zmod(4096)


class TestProduct:
    def test_order_multiplies(self):
        r = make_product([make_galois_ring(2, 1), make_galois_ring(5, 1)])
        assert r.order == 10

    def test_unary_product_is_the_factor(self):
        f = make_galois_ring(2, 1)
        assert ring_equal(make_product([f]), f)

    def test_orthogonal_units(self):
        r = make_product([make_galois_ring(2, 1), make_galois_ring(2, 1)])
        e1 = r.encode((1, 0))
        e2 = r.encode((0, 1))
        assert r.mul(e1, e2) == r.zero

    def test_encode_decode_roundtrip(self):
        r = make_product([make_zmod(3), make_zmod(4), make_zmod(2)])
        for x in r.elements():
            assert r.encode(r.decode(x)) == x

    def test_projections_are_homomorphisms(self):
        r = make_product([make_zmod(3), make_galois_ring(2, 2)])
        for x, y in itertools.product(r.elements(), repeat=2):
            dx, dy = r.decode(x), r.decode(y)
            assert r.decode(r.add(x, y)) == tuple(
                f.add(a, b) for f, a, b in zip(r.factors, dx, dy)
            )
            assert r.decode(r.mul(x, y)) == tuple(
                f.mul(a, b) for f, a, b in zip(r.factors, dx, dy)
            )

    def test_empty_product_rejected(self):
        with pytest.raises(ValueError):
            make_product([])

    def test_bound(self):
        with pytest.raises(CarrierBoundError):
            make_product([make_zmod(100), make_zmod(100)])


class TestTableFastPaths:
    """The per-kind table builders must agree with the scattered operations."""

    @pytest.mark.parametrize("ring", SAMPLE_RINGS, ids=lambda r: r.label)
    def test_add_table(self, ring):
        n, t = ring.order, ring.add_table()
        for x in range(n):
            for y in range(n):
                assert t[x * n + y] == ring.add(x, y)

    @pytest.mark.parametrize("ring", SAMPLE_RINGS, ids=lambda r: r.label)
    def test_mul_table(self, ring):
        n, t = ring.order, ring.mul_table()
        for x in range(n):
            for y in range(n):
                assert t[x * n + y] == ring.mul(x, y)

    def test_log_based_mul_table(self):
        # Orders above 81 take the exp/log route; spot-check one.
        ring = make_galois_ring(5, 3, max_order=4096)
        n, t = ring.order, ring.mul_table()
        import random

        rng = random.Random(7)
        for _ in range(300):
            x, y = rng.randrange(n), rng.randrange(n)
            assert t[x * n + y] == ring.field.mul(x, y)


class TestDerivedIdentities:
    @pytest.mark.parametrize("ring", SAMPLE_RINGS, ids=lambda r: r.label)
    def test_basic_consequences(self, ring):
        minus_one = ring.neg(ring.one)
        for x in ring.elements():
            assert ring.mul(ring.zero, x) == ring.zero
            assert ring.mul(minus_one, x) == ring.neg(x)
            assert ring.neg(ring.neg(x)) == x
        assert ring.neg(ring.zero) == ring.zero

    def test_catalog_rings_up_to_64(self, catalog64):
        for sig, m in catalog64:
            ring = m.ring
            minus_one = ring.neg(ring.one)
            for x in ring.elements():
                assert ring.mul(ring.zero, x) == ring.zero
                assert ring.mul(minus_one, x) == ring.neg(x)
                assert ring.neg(ring.neg(x)) == x


class TestCheckAxioms:
    @pytest.mark.parametrize("ring", SAMPLE_RINGS, ids=lambda r: r.label)
    def test_structured_rings_pass(self, ring):
        report = check_axioms(ring)
        assert report.ok
        assert report.first_failure is None
        assert len(report.axioms) == 8 and len(report.derived) == 7

    def test_bound(self):
        with pytest.raises(CarrierBoundError):
            check_axioms(make_zmod(600), max_order=512)

    def test_report_lines_mention_status(self):
        lines = check_axioms(make_zmod(6)).lines()
        assert len(lines) == 15
        assert all(line.endswith("pass") for line in lines)


def spec_of_tables(order, zero, one, add, mul):
    return RingSpec(order, zero, one, tuple(map(tuple, add)), tuple(map(tuple, mul)))


class TestLoadRing:
    def test_mod_six_roundtrip(self):
        original = make_zmod(6)
        ring = load_ring(dump_ring(original))
        assert ring_equal(ring, original)

    def test_additive_identity_violation(self):
        # x XNOR y is associative and commutative but 0 + 0 = 1.
        spec = spec_of_tables(2, 0, 1, [[1, 0], [0, 1]], [[0, 0], [0, 1]])
        with pytest.raises(AxiomViolationError) as info:
            load_ring(spec)
        assert info.value.name == "(3)"
        assert info.value.witness == (0,)

    def test_commutativity_violation(self):
        # mul(x, y) = x is associative with right identity 1.
        spec = spec_of_tables(2, 0, 1, [[0, 1], [1, 0]], [[0, 0], [1, 1]])
        with pytest.raises(AxiomViolationError) as info:
            load_ring(spec)
        assert info.value.name == "(6)"
        assert info.value.witness == (0, 1)

    def test_missing_negation_hits_axiom_four(self):
        # max/min on {0,1,2}: a distributive lattice satisfies every axiom
        # except additive inverses.
        n = 3
        add = [[max(x, y) for y in range(n)] for x in range(n)]
        mul = [[min(x, y) for y in range(n)] for x in range(n)]
        spec = spec_of_tables(n, 0, 2, add, mul)
        with pytest.raises(AxiomViolationError) as info:
            load_ring(spec)
        assert info.value.name == "(4)"
        assert info.value.witness == (1,)

    def test_order_bound(self):
        with pytest.raises(CarrierBoundError):
            load_ring(dump_ring(make_zmod(6)), max_order=4)


class TestRingSpecFormat:
    def test_render_parse_roundtrip(self):
        spec = dump_ring(make_galois_ring(2, 2))
        assert parse_ringspec(render_ringspec(spec)) == spec

    def test_comments_and_blanks_ignored(self):
        text = render_ringspec(dump_ring(make_zmod(2)))
        noisy = "# table of Z/2Z\n\n" + text.replace(
            "order 2", "order 2   # two elements"
        )
        assert parse_ringspec(noisy) == dump_ring(make_zmod(2))

    @pytest.mark.parametrize(
        "mangle",
        [
            lambda t: t.replace("meadowspec 1", "ringspec 1"),
            lambda t: t.replace("order 2", "order two"),
            lambda t: t.replace("0 1\n1 0\nmul", "0 1\nmul"),  # a missing row
            lambda t: t.replace("1 0\nmul", "1 0 1\nmul"),  # a row too wide
            lambda t: t + "extra\n",
            lambda t: t.replace("zero 0", "zero 5"),  # constant out of range
        ],
    )
    def test_malformed_documents_rejected(self, mangle):
        text = render_ringspec(dump_ring(make_zmod(2)))
        with pytest.raises(RingSpecError):
            parse_ringspec(mangle(text))

    def test_non_closed_table_rejected(self):
        text = render_ringspec(dump_ring(make_zmod(2))).replace("1 0\nmul", "1 9\nmul")
        with pytest.raises(RingSpecError):
            parse_ringspec(text)

    def test_truncated_document(self):
        with pytest.raises(RingSpecError):
            parse_ringspec("meadowspec 1\norder 2\n")

    @given(
        n=st.integers(1, 5),
        seed=st.integers(0, 10**6),
    )
    @settings(max_examples=40, deadline=None)
    def test_arbitrary_closed_tables_round_trip(self, n, seed):
        # The document format is agnostic about the ring axioms; any closed
        # table round-trips through render/parse exactly.
        import random

        rng = random.Random(seed)
        rows = lambda: tuple(
            tuple(rng.randrange(n) for _ in range(n)) for _ in range(n)
        )
        spec = RingSpec(n, rng.randrange(n), rng.randrange(n), rows(), rows())
        assert parse_ringspec(render_ringspec(spec)) == spec

    @pytest.mark.parametrize("ring", SAMPLE_RINGS, ids=lambda r: r.label)
    def test_dump_load_identity(self, ring):
        if ring.order > 64:
            pytest.skip("kept small; the law is size-independent")
        assert ring_equal(load_ring(dump_ring(ring)), ring)


AXIOM_EVALUATORS = {
    "(1)": lambda r, w: r.add(r.add(w[0], w[1]), w[2]) != r.add(w[0], r.add(w[1], w[2])),
    "(2)": lambda r, w: r.add(w[0], w[1]) != r.add(w[1], w[0]),
    "(3)": lambda r, w: r.add(w[0], r.zero) != w[0],
    "(4)": lambda r, w: sum(1 for y in r.elements() if r.add(w[0], y) == r.zero) != 1
    or r.add(w[0], r.neg(w[0])) != r.zero,
    "(5)": lambda r, w: r.mul(r.mul(w[0], w[1]), w[2]) != r.mul(w[0], r.mul(w[1], w[2])),
    "(6)": lambda r, w: r.mul(w[0], w[1]) != r.mul(w[1], w[0]),
    "(7)": lambda r, w: r.mul(w[0], r.one) != w[0],
    "(8)": lambda r, w: r.mul(w[0], r.add(w[1], w[2]))
    != r.add(r.mul(w[0], w[1]), r.mul(w[0], w[2])),
}


class TestWitnessesAreGenuine:
    """Every failure the checker reports must actually falsify its law."""

    @given(
        n=st.integers(2, 8),
        table=st.sampled_from(["add", "mul"]),
        cell=st.integers(0, 63),
        value=st.integers(0, 7),
        seed=st.integers(0, 10**6),
    )
    @settings(max_examples=80, deadline=None)
    def test_corrupted_cell_witnesses(self, n, table, cell, value, seed):
        spec = dump_ring(make_zmod(n))
        rows = list(map(list, spec.add_rows if table == "add" else spec.mul_rows))
        rows[(cell // n) % n][cell % n] = value % n
        mutated = RingSpec(
            n,
            0,
            1 % n,
            tuple(map(tuple, rows)) if table == "add" else spec.add_rows,
            spec.mul_rows if table == "add" else tuple(map(tuple, rows)),
        )
        ring = load_ring(mutated, check=False)
        report = check_axioms(ring)
        for c in report.axioms:
            if c.status == "fail":
                assert AXIOM_EVALUATORS[c.name](ring, c.witness), (c, mutated)


class TestRelabeledRings:
    @given(seed=st.integers(0, 10**6))
    @settings(max_examples=25, deadline=None)
    def test_any_relabeling_still_a_ring(self, seed):
        import random

        rng = random.Random(seed)
        n = 6
        perm = list(range(n))
        rng.shuffle(perm)
        base = make_zmod(n)
        # Conjugate the tables by the permutation: op'(a, b) = p(op(p^-1 a, p^-1 b)).
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        add = [[perm[base.add(inv[x], inv[y])] for y in range(n)] for x in range(n)]
        mul = [[perm[base.mul(inv[x], inv[y])] for y in range(n)] for x in range(n)]
        spec = spec_of_tables(n, perm[0], perm[1], add, mul)
        ring = load_ring(spec)  # eager check must pass
        assert check_axioms(ring).ok

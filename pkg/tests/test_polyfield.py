"""Polynomial arithmetic and Galois field construction."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meadows.errors import CarrierBoundError
from meadows.polyfield import (
    Polynomial,
    field_inverse,
    is_irreducible,
    is_prime,
    make_galois_field,
    make_poly,
    monic_from_rank,
    poly_add,
    poly_divmod,
    poly_from_rank,
    poly_mod,
    poly_mul,
    poly_mulmod,
    poly_rank,
    poly_zero,
)

# Fields with at most 64 elements: the exhaustive-suite scale.
SMALL_FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
                (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2)]


class TestPolynomialBasics:
    def test_canonical_form_enforced(self):
        with pytest.raises(ValueError):
            Polynomial(2, (1, 0))  # trailing zero
        with pytest.raises(ValueError):
            Polynomial(2, (2,))  # coefficient out of range
        with pytest.raises(ValueError):
            Polynomial(1, (0,))  # modulus too small

    def test_make_poly_normalizes(self):
        assert make_poly(3, [4, 7, 3]) == Polynomial(3, (1, 1))
        assert make_poly(2, [0, 0]) == poly_zero(2)

    def test_str(self):
        assert str(make_poly(2, [1, 1, 1])) == "x^2 + x + 1"
        assert str(make_poly(3, [1, 2])) == "2x + 1"
        assert str(poly_zero(5)) == "0"

    def test_degree(self):
        assert poly_zero(2).degree == -1
        assert make_poly(2, [1, 1]).degree == 1


class TestPolyOps:
    def test_add_char2_self_cancels(self):
        x_plus_1 = make_poly(2, [1, 1])
        assert poly_add(x_plus_1, x_plus_1) == poly_zero(2)

    def test_add_simple(self):
        assert poly_add(make_poly(2, [0, 1]), make_poly(2, [1])) == make_poly(2, [1, 1])

    def test_add_mod3_cancels(self):
        a = make_poly(3, [1, 0, 2])  # 2x^2 + 1
        b = make_poly(3, [2, 0, 1])  # x^2 + 2
        assert poly_add(a, b) == poly_zero(3)

    def test_add_rejects_mixed_moduli(self):
        with pytest.raises(ValueError):
            poly_add(make_poly(2, [1]), make_poly(3, [1]))

    def test_mulmod_reduction(self):
        x = make_poly(2, [0, 1])
        m = make_poly(2, [1, 1, 1])
        assert poly_mulmod(x, x, m) == make_poly(2, [1, 1])  # x^2 = x + 1 mod m

    def test_mulmod_identity_and_zero(self):
        m = make_poly(3, [1, 0, 1])
        a = make_poly(3, [2, 2, 2, 1])
        assert poly_mulmod(a, make_poly(3, [1]), m) == poly_mod(a, m)
        assert poly_mulmod(a, poly_zero(3), m) == poly_zero(3)

    def test_mulmod_rejects_bad_modulus(self):
        a = make_poly(3, [1, 1])
        with pytest.raises(ValueError):
            poly_mulmod(a, a, make_poly(3, [1, 2]))  # not monic
        with pytest.raises(ValueError):
            poly_mulmod(a, a, make_poly(3, [1]))  # constant

    def test_divmod_reconstructs(self):
        a = make_poly(5, [3, 1, 4, 1, 2])
        m = make_poly(5, [2, 0, 1])
        q, r = poly_divmod(a, m)
        assert r.degree < m.degree
        assert poly_add(poly_mul(q, m), r) == a


def brute_irreducible(m: Polynomial) -> bool:
    """Oracle: search for a factor pair f*g = m with both degrees >= 1."""
    p = m.p
    for d in range(1, m.degree):
        for rank_f in range(p**d):
            f = monic_from_rank(p, d, rank_f)
            for rank_g in range(p ** (m.degree - d)):
                g = monic_from_rank(p, m.degree - d, rank_g)
                if poly_mul(f, g) == m:
                    return False
    return True


class TestIrreducibility:
    def test_known_cases(self):
        assert is_irreducible(make_poly(2, [1, 1, 1]))
        assert not is_irreducible(make_poly(2, [1, 0, 1]))  # (x+1)^2
        assert is_irreducible(make_poly(5, [0, 1]))  # degree 1

    def test_rejects_constants(self):
        with pytest.raises(ValueError):
            is_irreducible(make_poly(2, [1]))
        with pytest.raises(ValueError):
            is_irreducible(poly_zero(2))

    @pytest.mark.parametrize("p,maxdeg", [(2, 6), (3, 4), (5, 2), (7, 2)])
    def test_agrees_with_factor_search(self, p, maxdeg):
        # Non-monic polynomials are unit multiples of monic ones, so monic
        # candidates cover all of them.
        for d in range(2, maxdeg + 1):
            for rank in range(p**d):
                m = monic_from_rank(p, d, rank)
                assert is_irreducible(m) == brute_irreducible(m), str(m)


class TestGaloisField:
    def test_gf4_modulus(self):
        f = make_galois_field(2, 2)
        assert f.modulus == make_poly(2, [1, 1, 1])
        assert f.q == 4

    def test_gf8_modulus(self):
        assert make_galois_field(2, 3).modulus == make_poly(2, [1, 1, 0, 1])

    def test_prime_field_modulus_is_x(self):
        f = make_galois_field(5, 1)
        assert f.modulus == make_poly(5, [0, 1])
        assert [f.add(2, 4), f.mul(2, 4)] == [1, 3]

    def test_deterministic(self):
        assert make_galois_field(3, 2) == make_galois_field(3, 2)

    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            make_galois_field(4, 1)

    def test_carrier_bound(self):
        with pytest.raises(CarrierBoundError):
            make_galois_field(2, 13)
        make_galois_field(2, 12)  # exactly 4096 is allowed

    @pytest.mark.parametrize("p,n", SMALL_FIELDS)
    def test_frobenius_fixed_points(self, p, n):
        f = make_galois_field(p, n)
        for x in f.elements():
            assert f.pow(x, f.q) == x

    @pytest.mark.parametrize("p,n", SMALL_FIELDS)
    def test_inverse_laws(self, p, n):
        f = make_galois_field(p, n)
        assert field_inverse(f, 0) == 0
        for x in range(1, f.q):
            assert f.mul(x, field_inverse(f, x)) == 1

    def test_gf4_generator_inverse(self):
        f = make_galois_field(2, 2)
        g = f.index(make_poly(2, [0, 1]))  # the class of x
        assert field_inverse(f, g) == f.mul(g, g)

    def test_gf5_inverse_of_two(self):
        assert field_inverse(make_galois_field(5, 1), 2) == 3

    @pytest.mark.parametrize("p,n", [(2, 4), (3, 3), (5, 2)])
    def test_log_tables_match_mulmod(self, p, n):
        f = make_galois_field(p, n)
        exp, log = f.log_tables()
        for x in range(1, f.q):
            for y in range(1, f.q):
                assert exp[(log[x] + log[y]) % (f.q - 1)] == f.mul(x, y)

    def test_element_index_roundtrip(self):
        f = make_galois_field(3, 2)
        for i in f.elements():
            assert f.index(f.element(i)) == i


class TestPrimality:
    @pytest.mark.parametrize("n,expected", [(1, False), (2, True), (3, True),
                                            (4, False), (97, True), (91, False)])
    def test_is_prime(self, n, expected):
        assert is_prime(n) == expected


@st.composite
def polys(draw, p: int):
    coeffs = draw(st.lists(st.integers(0, p - 1), max_size=6))
    return make_poly(p, coeffs)


class TestPolyProperties:
    @given(data=st.data(), p=st.sampled_from([2, 3, 5]))
    @settings(max_examples=60)
    def test_rank_roundtrip(self, data, p):
        a = data.draw(polys(p))
        assert poly_from_rank(p, poly_rank(a)) == a

    @given(data=st.data(), p=st.sampled_from([2, 3, 5]))
    @settings(max_examples=60)
    def test_mul_commutes(self, data, p):
        a, b = data.draw(polys(p)), data.draw(polys(p))
        assert poly_mul(a, b) == poly_mul(b, a)

    @given(data=st.data(), p=st.sampled_from([2, 3]))
    @settings(max_examples=60)
    def test_mulmod_is_mod_of_mul(self, data, p):
        a, b = data.draw(polys(p)), data.draw(polys(p))
        rank = data.draw(st.integers(0, p**3 - 1))
        m = monic_from_rank(p, 3, rank)
        assert poly_mulmod(a, b, m) == poly_mod(poly_mul(a, b), m)

    @given(data=st.data(), p=st.sampled_from([2, 3, 5]))
    @settings(max_examples=60)
    def test_add_assoc(self, data, p):
        a, b, c = data.draw(polys(p)), data.draw(polys(p)), data.draw(polys(p))
        assert poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c))


class TestFieldElementNumbering:
    def test_zero_and_one(self):
        for p, n in [(2, 3), (3, 2), (7, 1)]:
            f = make_galois_field(p, n)
            assert f.element(0) == poly_zero(p)
            assert f.element(1) == make_poly(p, [1])

    def test_add_matches_polynomial_add(self):
        f = make_galois_field(3, 2)
        for i in f.elements():
            for j in f.elements():
                expected = f.index(poly_add(f.element(i), f.element(j)))
                assert f.add(i, j) == expected

    def test_field_inverse_is_power_q_minus_2(self):
        for p, n in [(2, 2), (3, 2), (7, 1)]:
            f = make_galois_field(p, n)
            for x in range(1, f.q):
                assert field_inverse(f, x) == f.pow(x, f.q - 2)

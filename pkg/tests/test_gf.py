"""Field construction, packed-scalar arithmetic, and minimal polynomials."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualbch.gf import (
    FieldElem,
    Poly,
    elem_pow,
    field_new,
    minimal_polynomial,
    poly_eval_in_ext,
    prime_power,
    rref,
    scalar_field,
    subfield_embed,
    subfield_project,
)


def naive_order(ctx, x):
    acc = x
    for d in range(1, ctx.order):
        if acc == ctx.one():
            return d
        acc = ctx.mul(acc, x)
    raise AssertionError("no order found")


class TestFieldNew:
    def test_gf2(self):
        ctx = field_new(2, 1)
        assert ctx.order == 2
        assert ctx.modulus == (1, 1)  # x + 1
        assert ctx.generator == FieldElem((1,))

    def test_gf64_modulus_is_first_primitive(self):
        # lexicographic-first primitive polynomial of degree 6 over GF(2)
        ctx = field_new(2, 6)
        assert ctx.modulus == (1, 1, 0, 0, 0, 0, 1)  # x^6 + x + 1

    def test_gf64_generator_is_primitive(self):
        ctx = field_new(2, 6)
        one = ctx.one()
        for d in (1, 3, 7, 9, 21):  # proper divisors of 63
            assert elem_pow(ctx, ctx.generator, d) != one
        assert elem_pow(ctx, ctx.generator, 63) == one

    def test_gf729_generator_order(self):
        ctx = field_new(3, 6)
        assert naive_order(ctx, ctx.generator) == 728

    @pytest.mark.parametrize("p,k", [(2, 1), (2, 4), (3, 2), (5, 2), (7, 1), (13, 1)])
    def test_generator_order_small(self, p, k):
        ctx = field_new(p, k)
        assert naive_order(ctx, ctx.generator) == p**k - 1

    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            field_new(4, 2)


class TestElemOps:
    def test_pow_edges(self):
        ctx = field_new(2, 6)
        g = ctx.generator
        assert elem_pow(ctx, g, 0) == ctx.one()
        assert elem_pow(ctx, g, ctx.order - 1) == ctx.one()
        g9 = elem_pow(ctx, g, 9)
        assert naive_order(ctx, g9) == 7  # 63 / gcd(63, 9)

    def test_pack_roundtrip(self):
        ctx = field_new(3, 3)
        for v in range(ctx.order):
            assert ctx.pack(ctx.unpack(v)) == v

    @given(st.integers(0, 63), st.integers(0, 63))
    def test_gf64_field_laws(self, a, b):
        ctx = field_new(2, 6)
        x, y = ctx.unpack(a), ctx.unpack(b)
        assert ctx.add(x, y) == ctx.add(y, x)
        assert ctx.mul(x, y) == ctx.mul(y, x)
        assert ctx.sub(ctx.add(x, y), y) == x
        if a != 0:
            assert ctx.mul(x, ctx.inv(x)) == ctx.one()

    def test_mul_matches_table_free_path(self):
        # same arithmetic with and without exp/log tables
        ctx_a = field_new(3, 4)
        ctx_b = field_new(3, 4)
        ctx_b._ensure_tables()
        import dualbch.gf as gf

        old = gf.MAX_TABLE_ORDER
        gf.MAX_TABLE_ORDER = 1  # force the direct path on ctx_a
        try:
            rng = np.random.default_rng(7)
            for _ in range(50):
                a, b = rng.integers(0, 81, size=2)
                x, y = ctx_a.unpack(int(a)), ctx_a.unpack(int(b))
                assert ctx_a.mul(x, y) == ctx_b.mul(x, y)
        finally:
            gf.MAX_TABLE_ORDER = old


class TestScalarField:
    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_field_laws(self, q):
        f = scalar_field(q)
        for a in range(q):
            assert f.add(a, f.neg(a)) == 0
            if a:
                assert f.mul(a, f.inv(a)) == 1
            for b in range(q):
                assert f.add(a, b) == f.add(b, a)
                assert f.mul(a, b) == f.mul(b, a)
                assert f.sub(f.add(a, b), b) == a
        # distributivity, exhaustive for small q
        for a in range(q):
            for b in range(q):
                for c in range(q):
                    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))

    def test_prime_power_matches_ctx(self):
        f = scalar_field(4)
        ctx = f.ctx
        for a in range(4):
            for b in range(4):
                assert f.mul(a, b) == ctx.pack(ctx.mul(ctx.unpack(a), ctx.unpack(b)))

    def test_not_prime_power(self):
        with pytest.raises(ValueError):
            scalar_field(6)
        assert prime_power(12) is None
        assert prime_power(8) == (2, 3)
        assert prime_power(9) == (3, 2)


class TestPoly:
    def test_trim_and_degree(self):
        f = scalar_field(3)
        assert Poly((1, 2, 0, 0), f).coeffs == (1, 2)
        assert Poly.zero(f).degree == -1
        assert Poly.one(f).degree == 0

    def test_x_pow_minus_one(self):
        f = scalar_field(5)
        p = Poly.x_pow_minus_one(4, f)
        assert p.coeffs == (4, 0, 0, 0, 1)
        f2 = scalar_field(2)
        assert Poly.x_pow_minus_one(3, f2).coeffs == (1, 0, 0, 1)

    @given(st.data())
    @settings(max_examples=60)
    def test_divmod_roundtrip(self, data):
        q = data.draw(st.sampled_from([2, 3, 4, 5]))
        f = scalar_field(q)
        a = Poly(data.draw(st.lists(st.integers(0, q - 1), max_size=12)), f)
        b = Poly(data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=6)), f)
        if b.is_zero:
            return
        quo, rem = divmod(a, b)
        assert quo * b + rem == a
        assert rem.degree < b.degree

    def test_mul_table_path_matches_prime_path(self):
        # GF(4) multiplication agrees with naive convolution over the ctx
        f = scalar_field(4)
        a = Poly((1, 2, 3), f)
        b = Poly((2, 0, 1, 3), f)
        prod = a * b
        naive = Poly.zero(f)
        for i, ai in enumerate(a.coeffs):
            shifted = Poly((0,) * i + tuple(b.coeffs), f).scale(ai)
            naive = naive + shifted
        assert prod == naive

    def test_gcd(self):
        f = scalar_field(2)
        x3_1 = Poly.x_pow_minus_one(3, f)
        x6_1 = Poly.x_pow_minus_one(6, f)
        assert x3_1.gcd(x6_1) == x3_1
        assert x3_1.gcd(Poly.one(f)) == Poly.one(f)

    def test_reciprocal(self):
        f = scalar_field(3)
        p = Poly((1, 0, 2), f)
        assert p.reciprocal().coeffs == (2, 0, 1)

    def test_eval(self):
        f = scalar_field(5)
        p = Poly((1, 2, 3), f)  # 1 + 2x + 3x^2
        assert p.eval(0) == 1
        assert p.eval(2) == (1 + 4 + 12) % 5


class TestRref:
    def test_singular_over_gf3(self):
        f = scalar_field(3)
        # determinant is -3, so the matrix drops to rank 2 exactly over GF(3)
        m = np.array([[1, 2, 0], [2, 2, 1], [0, 1, 1]], dtype=np.int32)
        R, piv = rref(m, f)
        assert len(piv) == 2
        assert not R[2].any()

    def test_full_rank_identity(self):
        f = scalar_field(5)
        m = np.array([[2, 1, 0], [0, 3, 1], [1, 0, 3]], dtype=np.int32)  # det 16
        R, piv = rref(m, f)
        assert piv == [0, 1, 2]
        assert np.array_equal(R, np.eye(3, dtype=np.int32))

    def test_rref_pivots_are_unit_columns(self):
        f = scalar_field(4)
        rng = np.random.default_rng(3)
        m = rng.integers(0, 4, size=(4, 7)).astype(np.int32)
        R, piv = rref(m, f)
        for i, c in enumerate(piv):
            col = R[:, c]
            assert col[i] == 1 and np.count_nonzero(col) == 1


class TestMinimalPolynomial:
    def test_coset_zero_is_x_minus_one(self):
        ctx = field_new(2, 6)
        mp = minimal_polynomial(ctx, ctx.one(), [0], 2)
        assert mp.coeffs == (1, 1)  # x + 1 over GF(2)

    def test_coset_one_gf64(self):
        ctx = field_new(2, 6)
        beta = ctx.generator  # n = 63, lambda = 1
        mp = minimal_polynomial(ctx, beta, [1, 2, 4, 8, 16, 32], 2)
        assert mp.degree == 6
        assert mp.is_monic
        # divides x^63 - 1
        f = scalar_field(2)
        assert (Poly.x_pow_minus_one(63, f) % mp).is_zero
        # the modulus polynomial of the field is the minimal polynomial of alpha
        assert mp.coeffs == ctx.modulus

    def test_ternary_cubic(self):
        # n = 26, q = 3, coset of 2 is {2, 6, 18}
        ctx = field_new(3, 3)
        beta2 = elem_pow(ctx, ctx.generator, 2)
        mp = minimal_polynomial(ctx, beta2, [2, 6, 18], 3)
        assert mp.degree == 3
        for i in (2, 6, 18):
            pt = elem_pow(ctx, ctx.generator, i)
            assert poly_eval_in_ext(ctx, mp, pt) == ctx.zero()

    def test_wrong_coset_raises(self):
        ctx = field_new(2, 6)
        beta = ctx.generator
        with pytest.raises(ValueError):
            minimal_polynomial(ctx, beta, [1, 2], 2)  # orbit has size 6, not 2

    @pytest.mark.parametrize(
        "p,k,q,lam",
        [(2, 6, 2, 1), (3, 3, 3, 1), (5, 2, 5, 1), (2, 4, 4, 1)],
    )
    def test_product_over_cosets_is_x_n_minus_one(self, p, k, q, lam):
        # q-cyclotomic cosets mod n = q^m - 1 partition the roots of x^n - 1
        ctx = field_new(p, k)
        e = prime_power(q)[1]
        m = k // e
        n = q**m - 1
        seen = set()
        prod = Poly.one(scalar_field(q))
        for a in range(n):
            if a in seen:
                continue
            coset = sorted(set((a * q**j) % n for j in range(m)))
            seen.update(coset)
            beta_power = elem_pow(ctx, ctx.generator, lam * coset[0])
            prod = prod * minimal_polynomial(ctx, beta_power, coset, q)
        assert prod == Poly.x_pow_minus_one(n, scalar_field(q))

    def test_distinct_cosets_give_coprime_factors(self):
        ctx = field_new(2, 4)
        f = scalar_field(2)
        m1 = minimal_polynomial(ctx, ctx.generator, [1, 2, 4, 8], 2)
        b3 = elem_pow(ctx, ctx.generator, 3)
        m3 = minimal_polynomial(ctx, b3, [3, 6, 12, 9], 2)
        assert m1.gcd(m3) == Poly.one(f)


class TestSubfield:
    def test_prime_subfield_constants(self):
        ctx = field_new(3, 2)
        assert subfield_project(ctx, ctx.zero(), 3) == 0
        assert subfield_project(ctx, ctx.one(), 3) == 1
        two = ctx.add(ctx.one(), ctx.one())
        assert subfield_project(ctx, two, 3) == 2

    def test_non_member_raises(self):
        ctx = field_new(2, 6)
        with pytest.raises(ValueError):
            subfield_project(ctx, ctx.generator, 2)  # alpha is not in GF(2)

    def test_gf729_to_gf9_generator_image(self):
        # the image of an order-8 element has order 8 in GF(9)'s own terms
        ctx = field_new(3, 6)
        g = elem_pow(ctx, ctx.generator, (729 - 1) // 8)
        img = subfield_project(ctx, g, 9)
        f9 = scalar_field(9)
        acc, order = img, 1
        while acc != 1:
            acc = int(f9.mul(acc, img))
            order += 1
            assert order <= 8
        assert order == 8

    def test_projection_is_homomorphism(self):
        ctx = field_new(2, 6)
        q = 8
        g = elem_pow(ctx, ctx.generator, (64 - 1) // (q - 1))
        elems = [ctx.zero()] + [elem_pow(ctx, g, i) for i in range(q - 1)]
        f = scalar_field(q)
        for x in elems:
            for y in elems:
                px, py = subfield_project(ctx, x, q), subfield_project(ctx, y, q)
                assert subfield_project(ctx, ctx.add(x, y), q) == f.add(px, py)
                assert subfield_project(ctx, ctx.mul(x, y), q) == f.mul(px, py)

    def test_embed_roundtrip(self):
        ctx = field_new(3, 6)
        for v in range(9):
            assert subfield_project(ctx, subfield_embed(ctx, v, 9), 9) == v

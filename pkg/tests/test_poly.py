"""Polynomial core: monomial orders, arithmetic, apolarity action, parsing."""

import math
import random
from fractions import Fraction

import pytest

from perazzo import (
    HomogeneousPoly,
    ParseError,
    VariableSet,
    apply_monomial_op,
    binary_form_from_coeffs,
    binary_variables,
    coeff_vector,
    monomial_count,
    monomials,
    parse_poly,
    perazzo_variables,
)
from perazzo.poly import ROLE_UV, ROLE_X, random_binary_form


def test_monomials_graded_lex_descending():
    out = monomials(3, 2)
    assert out == [
        (2, 0, 0),
        (1, 1, 0),
        (1, 0, 1),
        (0, 2, 0),
        (0, 1, 1),
        (0, 0, 2),
    ]
    for nvars, degree in [(1, 4), (2, 5), (4, 3), (5, 2)]:
        ms = monomials(nvars, degree)
        assert len(ms) == monomial_count(nvars, degree)
        assert len(set(ms)) == len(ms)
        assert all(sum(m) == degree for m in ms)
        assert ms == sorted(ms, reverse=True)


def test_monomial_count_matches_binomial():
    for n in range(1, 6):
        for d in range(0, 7):
            assert monomial_count(n, d) == math.comb(n + d - 1, d)


def test_variable_set_validation():
    with pytest.raises(ValueError):
        VariableSet(("u", "u"))
    with pytest.raises(ValueError):
        VariableSet(("u", "v"), ("uv-block",))
    with pytest.raises(ValueError):
        VariableSet(("u", "v"), ("nonsense", "nonsense"))


def test_variable_set_dual_is_involution():
    ring = perazzo_variables()
    assert ring.dual().names == ("y0", "y1", "y2", "U", "V")
    assert ring.dual().dual() == ring
    assert ring.block_indices(ROLE_X) == (0, 1, 2)
    assert ring.block_indices(ROLE_UV) == (3, 4)


def test_poly_constructor_rejects_bad_terms(uv):
    with pytest.raises(ValueError):
        HomogeneousPoly(uv, 2, {(1, 0): 1})  # degree mismatch
    with pytest.raises(ValueError):
        HomogeneousPoly(uv, 2, {(1, 1, 0): 1})  # wrong arity
    with pytest.raises(ValueError):
        HomogeneousPoly(uv, -1)
    # zero coefficients are dropped, zero polynomial keeps its degree tag
    p = HomogeneousPoly(uv, 3, {(2, 1): 0})
    assert p.is_zero() and p.degree == 3


def test_poly_arithmetic_identities(uv, u, v):
    rng = random.Random(7)
    for _ in range(20):
        d1, d2 = rng.randint(1, 4), rng.randint(1, 4)
        p = random_binary_form(d1, bound=8, seed=rng.randint(0, 10**6))
        q = random_binary_form(d1, bound=8, seed=rng.randint(0, 10**6))
        r = random_binary_form(d2, bound=8, seed=rng.randint(0, 10**6))
        assert p + q == q + p
        assert (p + q) * r == p * r + q * r
        assert p - p == HomogeneousPoly.zero(uv, d1)
        assert p.scale(3) - p.scale(2) == p
    assert (u + v) ** 2 == u * u + (u * v).scale(2) + v * v
    with pytest.raises(ValueError):
        (u + v) ** -1
    with pytest.raises(ValueError):
        u + u * v  # mixed degrees


def test_leading_monomial_is_graded_lex(u, v):
    p = (u * v).scale(4) + v * v
    assert p.leading_monomial() == (1, 1)
    assert (u + v).leading_monomial() == (1, 0)
    with pytest.raises(ValueError):
        HomogeneousPoly.zero(u.vars, 2).leading_monomial()


def test_apply_monomial_op_is_exact_differentiation(uv):
    # d^2/du^2 (u^3 v) = 6 u v ; d^2/du dv (u^3 v) = 3 u^2
    p = HomogeneousPoly.monomial(uv, (3, 1))
    assert apply_monomial_op((2, 0), p) == HomogeneousPoly.monomial(uv, (1, 1), 6)
    assert apply_monomial_op((1, 1), p) == HomogeneousPoly.monomial(uv, (2, 0), 3)
    assert apply_monomial_op((0, 2), p).is_zero()
    # degree overflow maps to the zero form
    assert apply_monomial_op((5, 0), p).is_zero()


def test_apply_monomial_op_commutes(uv):
    rng = random.Random(11)
    for _ in range(10):
        p = random_binary_form(5, bound=9, seed=rng.randint(0, 10**6))
        one_shot = apply_monomial_op((2, 1), p)
        stepwise = apply_monomial_op(
            (1, 0), apply_monomial_op((1, 1), p)
        )
        assert one_shot == stepwise


def test_coeff_vector_round_trip(uv):
    rng = random.Random(3)
    for _ in range(15):
        e = rng.randint(1, 7)
        p = random_binary_form(e, bound=20, seed=rng.randint(0, 10**6))
        plain = coeff_vector(p, descale=False)
        assert binary_form_from_coeffs(plain, uv) == p
        descaled = coeff_vector(p, descale=True)
        assert binary_form_from_coeffs(descaled, uv, descaled=True) == p
        assert all(
            plain[i] == descaled[i] * math.comb(e, i) for i in range(e + 1)
        )


def test_coeff_vector_uses_uv_block_of_bigger_ring(xring):
    # a binary form embedded in the five-variable ring reads off the uv-block
    f = parse_poly("u^2-3*u*v+v^2", xring)
    assert coeff_vector(f) == (1, -3, 1)
    with pytest.raises(ValueError):
        coeff_vector(parse_poly("x0*u+x1*v", xring))


def test_render_parse_round_trip(uv, xring):
    rng = random.Random(23)
    for _ in range(25):
        p = random_binary_form(rng.randint(1, 6), bound=30, seed=rng.randint(0, 10**6))
        assert parse_poly(p.render(), uv) == p
    f = parse_poly("x0*u^2+x1*u*v+x2*v^2", xring)
    assert parse_poly(f.render(), xring) == f


def test_parse_rationals_and_signs(uv):
    p = parse_poly("3/2*u^2 - -v^2", uv)
    assert p.coefficient((2, 0)) == Fraction(3, 2)
    assert p.coefficient((0, 2)) == 1
    assert parse_poly("u^2-u^2", uv).is_zero()
    assert parse_poly("0", uv, degree=5).degree == 5


def test_parse_errors_carry_position(uv):
    with pytest.raises(ParseError) as err:
        parse_poly("u^2 + w", uv)
    assert err.value.position == 6
    for bad in ["", "u^2+", "u^2*", "u^2 v", "(u+v)^2", "u^1/2", "3/0*u"]:
        with pytest.raises(ParseError):
            parse_poly(bad, uv)
    with pytest.raises(ParseError):
        parse_poly("u^2+v^3", uv)  # non-homogeneous
    with pytest.raises(ParseError):
        parse_poly("u^2", uv, degree=3)  # degree contradiction


def test_random_binary_form_deterministic(uv):
    a = random_binary_form(4, bound=10, seed=99)
    b = random_binary_form(4, bound=10, seed=99)
    c = random_binary_form(4, bound=10, seed=100)
    assert a == b
    assert a != c
    assert a.degree == 4 and not a.is_zero()

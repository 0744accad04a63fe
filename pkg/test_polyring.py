import random
from fractions import Fraction

import pytest
import sympy

from polyring import (
    MultiPoly,
    PolyError,
    format_coef,
    from_json,
    from_sympy,
    homogeneous_part,
    parse_coef,
    poly_apply_operator,
    poly_coefficients,
    poly_degree,
    poly_eval,
    poly_interpolate,
    poly_mul,
    poly_pow,
    poly_restrict,
    poly_shift,
    to_json,
    to_latex,
    to_sympy,
    to_text,
)

L1 = MultiPoly.variable(0, 2)
L2 = MultiPoly.variable(1, 2)


def a2_layer():
    half = Fraction(1, 2)
    return 1 + Fraction(3, 2) * (L1 + L2) + half * (L1 ** 2 + L2 ** 2) + 2 * L1 * L2


def random_poly(rng, nvars, degree, terms=6):
    out = {}
    for _ in range(terms):
        e = [0] * nvars
        for _ in range(rng.randint(0, degree)):
            e[rng.randrange(nvars)] += 1
        out[tuple(e)] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return MultiPoly(out, nvars)


def test_arithmetic():
    p = (L1 + 1) ** 2
    assert p.coefficient((2, 0)) == 1
    assert p.coefficient((1, 0)) == 2
    assert p.coefficient((0, 0)) == 1
    assert p - p == MultiPoly.zero(2)
    assert (L1 - L2) * (L1 + L2) == L1 ** 2 - L2 ** 2
    assert 3 - L1 == -(L1 - 3)
    assert p.degree == 2 and p.term_count == 3


def test_integral_coefficients_stay_int():
    p = MultiPoly({(1, 0): Fraction(4, 2)}, 2)
    assert type(p.coefficient((1, 0))) is int
    assert type(poly_eval(p * Fraction(1, 2), (3, 0))) is int


def test_rejects_bad_input():
    with pytest.raises(PolyError):
        L1 + MultiPoly.variable(0, 3)
    with pytest.raises(PolyError):
        MultiPoly({(1,): 0.5}, 1)
    with pytest.raises(PolyError):
        MultiPoly({(1, 0, 0): 1}, 2)
    with pytest.raises(PolyError):
        poly_eval(L1, (1,))
    with pytest.raises(PolyError):
        MultiPoly.variable(2, 2)


def test_truncated_product():
    p = poly_pow(L1 + L2 + 1, 2)
    q = L1 + 1
    full = poly_mul(p, q)
    cut = poly_mul(p, q, max_degree=2)
    assert poly_degree(cut) == 2
    assert cut == full - homogeneous_part(full, 3)


def test_shift_matches_evaluation():
    rng = random.Random(7)
    for _ in range(10):
        p = random_poly(rng, 3, 4)
        v = tuple(rng.randint(-3, 3) for _ in range(3))
        shifted = poly_shift(p, v)
        for _ in range(5):
            x = tuple(rng.randint(-5, 5) for _ in range(3))
            assert poly_eval(shifted, x) == poly_eval(p, tuple(a + b for a, b in zip(x, v)))


def test_ring_axioms():
    rng = random.Random(3)
    zero, one = MultiPoly.zero(3), MultiPoly.constant(1, 3)
    for _ in range(15):
        p, q, s = (random_poly(rng, 3, 3) for _ in range(3))
        assert (p + q) + s == p + (q + s)
        assert (p * q) * s == p * (q * s)
        assert p * (q + s) == p * q + p * s
        assert p + q == q + p and p * q == q * p
        assert p + zero == p and p * one == p
        assert p * zero == zero and p - p == zero


def test_shift_composes():
    rng = random.Random(11)
    for _ in range(10):
        p = random_poly(rng, 3, 4)
        u = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3))
        v = tuple(rng.randint(-3, 3) for _ in range(3))
        assert poly_shift(poly_shift(p, u), v) == poly_shift(p, tuple(a + b for a, b in zip(u, v)))
    assert poly_shift(p, (0, 0, 0)) == p


def test_rational_points():
    p = a2_layer()
    assert poly_eval(p, (1, 1)) == 7
    assert poly_eval(p, (Fraction(1, 2), 0)) == Fraction(15, 8)
    assert p(2, 0) == 6


def test_restrict():
    p = a2_layer()
    r = poly_restrict(p, {1: 0})
    assert r.nvars == 2
    assert r == 1 + Fraction(3, 2) * L1 + Fraction(1, 2) * L1 ** 2


def test_interpolation_recovers_polynomial():
    rng = random.Random(3)
    for nvars, degree in [(1, 3), (2, 2), (3, 3)]:
        p = random_poly(rng, nvars, degree, terms=8)
        assert poly_interpolate(lambda x: poly_eval(p, x), nvars, degree) == p


def test_apply_operator_derivatives():
    p = L1 ** 3 * L2 + L2 ** 2
    assert poly_apply_operator(p, L1) == 3 * L1 ** 2 * L2
    assert poly_apply_operator(p, L2 ** 2) == MultiPoly.constant(2, 2)
    assert poly_apply_operator(p, MultiPoly.constant(1, 2)) == p
    assert poly_apply_operator(p, MultiPoly.zero(2)).is_zero()


def test_apply_exponential_shift():
    # exp(sum v_i d_i), truncated past deg p, is the shift by v
    rng = random.Random(5)
    p = random_poly(rng, 2, 4)
    v = (2, -1)
    u = MultiPoly.linear(v)
    series = MultiPoly.zero(2)
    term = MultiPoly.constant(1, 2)
    for n in range(poly_degree(p) + 1):
        series = series + term
        term = term * u * Fraction(1, n + 1)
    assert poly_apply_operator(p, series) == poly_shift(p, v)


def test_grlex_text():
    assert to_text(a2_layer()) == "1 + 3/2*l1 + 3/2*l2 + 1/2*l1**2 + 2*l1*l2 + 1/2*l2**2"
    assert to_text(L1 - 1) == "-1 + l1"
    assert to_text(MultiPoly.zero(2)) == "0"
    assert [e for e, _ in poly_coefficients(L2 ** 2 + L1)] == [(1, 0), (0, 2)]


def test_json_document():
    doc = to_json(a2_layer())
    assert doc["vars"] == ["l1", "l2"]
    assert doc["terms"][1] == {"exp": [1, 0], "coef": "3/2"}
    assert from_json(doc) == a2_layer()
    with pytest.raises(PolyError):
        from_json({"vars": ["l1"], "terms": [{"exp": [1]}]})


def test_coef_text():
    assert format_coef(Fraction(6, 4)) == "3/2"
    assert format_coef(-3) == "-3"
    assert parse_coef("-3/6") == Fraction(-1, 2)
    assert parse_coef("4/2") == 2
    with pytest.raises(PolyError):
        parse_coef("x")


def test_sympy_bridge():
    l1, l2 = sympy.symbols("l1:3")
    expr = sympy.Rational(3, 2) * l1 * l2 - 4 * l2 ** 3 + 7
    p = from_sympy(expr, (l1, l2))
    assert p.coefficient((1, 1)) == Fraction(3, 2)
    assert sympy.expand(to_sympy(p) - expr) == 0
    with pytest.raises(PolyError):
        from_sympy(sympy.sqrt(2) * l1, (l1, l2))
    latex = to_latex(p)
    assert "\\lambda_{1}" in latex and "\\lambda_{2}" in latex
    assert "l1" not in latex

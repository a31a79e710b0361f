"""Polynomial family tests.

The coefficient tables for n = 0..5 are frozen by hand from the recurrence:
    m: 2, 3x, 9x^2-4, 27x^3-18x, 81x^4-72x^2+8, 243x^5-270x^3+60x
    Gm_n(x) = m_n(x) + i m_{n-1}(x) for n >= 1, Gm_0(x) = 2 + (3i/2)x.
Specializing x = 1 must reproduce the number families exactly, and the
floating point closed form is only ever a spot check.
"""

import itertools

import pytest
from hypothesis import given, strategies as st

from gmlucas.arith import Dyadic, GaussianDyadic, Poly, poly_eval
from gmlucas.polyfam import (
    CharRoots,
    Method,
    binet_numeric,
    char_roots,
    eval_gml_poly,
    gml_poly,
    gml_poly_explicit,
    gml_poly_from_ml,
    gml_poly_negative,
    iter_gml_poly,
    iter_ml_poly,
    ml_poly,
    ml_poly_explicit,
    ml_poly_negative,
    poly_recurrence_term,
)
from gmlucas.sequences import gml_binet, ml_binet

I = GaussianDyadic.I

TABLE_M = (
    Poly((2,)),
    Poly((0, 3)),
    Poly((-4, 0, 9)),
    Poly((0, -18, 0, 27)),
    Poly((8, 0, -72, 0, 81)),
    Poly((0, 60, 0, -270, 0, 243)),
)
TABLE_GM = (
    Poly((2, GaussianDyadic(0, Dyadic(3, 1)))),
    Poly((GaussianDyadic(0, 2), 3)),
    Poly((-4, GaussianDyadic(0, 3), 9)),
    Poly((GaussianDyadic(0, -4), -18, GaussianDyadic(0, 9), 27)),
    Poly((8, GaussianDyadic(0, -18), -72, GaussianDyadic(0, 27), 81)),
    Poly((GaussianDyadic(0, 8), 60, GaussianDyadic(0, -72), -270,
          GaussianDyadic(0, 81), 243)),
)


def test_polynomial_table():
    for n in range(6):
        assert ml_poly(n).value == TABLE_M[n]
        assert gml_poly(n).value == TABLE_GM[n]


def test_iterators_match_direct_terms():
    for n, (m_val, gm_val) in enumerate(
            itertools.islice(zip(iter_ml_poly(), iter_gml_poly()), 12)):
        assert m_val == ml_poly(n).value
        assert gm_val == gml_poly(n).value


def test_explicit_equals_recurrence():
    for n in range(41):
        assert ml_poly_explicit(n).value == ml_poly(n).value
        if n >= 1:
            assert gml_poly_explicit(n).value == gml_poly(n).value


def test_relation_to_base_family():
    for n in range(1, 31):
        assert gml_poly_from_ml(n).value == gml_poly(n).value
        assert gml_poly(n).value == ml_poly(n).value + I * ml_poly(n - 1).value


def test_degree_and_leading_coefficient():
    for n in range(1, 31):
        p = ml_poly(n).value
        assert p.degree == n
        assert p.coeff(n) == GaussianDyadic(3**n)


def test_parity_structure():
    # only degrees n, n-2, n-4, ... appear
    for n in range(31):
        p = ml_poly(n).value
        for j in range(n + 1):
            if (n - j) % 2 == 1:
                assert p.coeff(j) == GaussianDyadic.ZERO


def test_specialization_collapses_to_numbers():
    one = GaussianDyadic.ONE
    for n in range(51):
        assert poly_eval(ml_poly(n).value, one) == ml_binet(n).value
        assert poly_eval(gml_poly(n).value, one) == gml_binet(n).value


def test_evaluation_at_two():
    # m_3(x) = 27x^3 - 18x, so m_3(2) = 216 - 36 = 180; m_2(2) = 36 - 4 = 32
    assert poly_eval(ml_poly(3).value, 2) == GaussianDyadic(180)
    assert eval_gml_poly(3, 2) == GaussianDyadic(180, 32)


def test_negative_polynomials():
    assert ml_poly_negative(1).value == Poly((0, Dyadic(3, 1)))
    assert ml_poly_negative(2).value == Poly((-1, 0, Dyadic(9, 2)))
    for n in range(1, 21):
        assert ml_poly_negative(n).value.mul_pow2(n) == ml_poly(n).value


def test_negative_gaussian_splits_into_negative_base_terms():
    # Gm_{-n}(x) = m_{-n}(x) + i m_{-(n+1)}(x)
    for n in range(1, 21):
        want = ml_poly_negative(n).value + I * ml_poly_negative(n + 1).value
        assert gml_poly_negative(n).value == want


def test_backward_closure_through_zero():
    three_x = Poly((0, 3))

    def term(k: int) -> Poly:
        return ml_poly(k).value if k >= 0 else ml_poly_negative(-k).value

    for k in range(-10, 12):
        assert term(k) == three_x * term(k - 1) - 2 * term(k - 2)


def test_negative_specialization_matches_negative_numbers():
    from gmlucas.sequences import gml_negative, ml_negative

    one = GaussianDyadic.ONE
    for n in range(1, 21):
        assert poly_eval(ml_poly_negative(n).value, one) == ml_negative(n).value
        assert poly_eval(gml_poly_negative(n).value, one) == gml_negative(n).value


def test_term_records():
    t = ml_poly(4)
    assert (t.index, t.method) == (4, Method.RECURRENCE)
    assert ml_poly_explicit(4).method is Method.EXPLICIT
    assert gml_poly_from_ml(4).method is Method.RELATION
    assert ml_poly_negative(3).index == -3
    with pytest.raises(AttributeError):
        t.index = 0


def test_preconditions():
    for fn in (ml_poly, gml_poly, ml_poly_explicit):
        with pytest.raises(ValueError):
            fn(-1)
    for fn in (gml_poly_explicit, gml_poly_from_ml, ml_poly_negative,
               gml_poly_negative):
        with pytest.raises(ValueError):
            fn(0)
    with pytest.raises(ValueError):
        poly_recurrence_term(Poly((1,)), Poly((1,)), -1)


def test_generic_poly_walker_seeds():
    # seeds 1, x: step 2 is 3x * x - 2 * 1 = 3x^2 - 2
    s2 = poly_recurrence_term(Poly.ONE, Poly.X, 2)
    assert s2 == Poly((-2, 0, 3))


def test_char_roots_satisfy_quadratic():
    for x in (1.0, 2.0, 3.0, 2.5, 0.5, -1.0):
        roots = char_roots(x)
        assert isinstance(roots, CharRoots)
        for lam in (roots.lambda1, roots.lambda2):
            assert abs(lam * lam - 3 * x * lam + 2) < 1e-9
        assert abs(roots.lambda1 + roots.lambda2 - 3 * x) < 1e-12
        assert abs(roots.lambda1 * roots.lambda2 - 2) < 1e-12


def test_char_roots_at_one_are_integers():
    roots = char_roots(1)
    assert roots.lambda1 == 2.0
    assert roots.lambda2 == 1.0


def test_binet_numeric_spot_value():
    got = binet_numeric(3, 2)
    want = complex(180, 32)
    assert abs(got - want) <= 1e-9 * (1 + abs(want))


def test_binet_numeric_exact_at_one():
    # roots are the integers 2 and 1, so floats stay exact
    for n in range(31):
        want = complex(eval_gml_poly(n, 1))
        assert binet_numeric(n, 1) == want


def test_binet_numeric_tracks_exact_route():
    points = ((2, GaussianDyadic(2)), (3, GaussianDyadic(3)),
              (2.5, GaussianDyadic(Dyadic(5, 1))))
    for n in range(31):
        for x_float, x_exact in points:
            want = complex(eval_gml_poly(n, x_exact))
            got = binet_numeric(n, x_float)
            assert abs(got - want) <= 1e-9 * (1 + abs(want))


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(0, 12))
def test_poly_walker_specializes_to_number_walker(a, b, n):
    from gmlucas.sequences import recurrence_term

    p = poly_recurrence_term(Poly((a,)), Poly((b,)), n)
    assert poly_eval(p, 1) == GaussianDyadic(recurrence_term(a, b, n))

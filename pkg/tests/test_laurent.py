"""Exact-arithmetic layer: Laurent polynomials, quotients, w-expansions."""

import random
from fractions import Fraction

import pytest

from etalink.laurent import (
    LaurentError,
    LaurentPoly,
    RationalLaurent,
    WSeries,
    W_IN_T,
    alexander_from_conway,
    conway_normalize,
    det_laurent,
    expand_rational_w,
    substitute_z2,
    symmetric_to_w,
    to_w_basis,
    w_to_t,
)

T = LaurentPoly.var()
ONE = LaurentPoly.one()


def _rand_poly(rng, max_exp=5, max_coeff=6, terms=6):
    return LaurentPoly(
        [(rng.randint(-max_exp, max_exp), rng.randint(-max_coeff, max_coeff))
         for _ in range(rng.randint(0, terms))]
    )


# -- basic ring structure -----------------------------------------------------

def test_zero_and_one():
    assert LaurentPoly.zero().is_zero
    assert not ONE.is_zero
    assert ONE.at_one() == 1
    assert (ONE - ONE).is_zero


def test_arithmetic_matches_fraction_evaluation():
    rng = random.Random(101)
    x = Fraction(3, 2)
    for _ in range(50):
        p, q = _rand_poly(rng), _rand_poly(rng)
        assert (p + q)(x) == p(x) + q(x)
        assert (p - q)(x) == p(x) - q(x)
        assert (p * q)(x) == p(x) * q(x)
        assert (-p)(x) == -p(x)


def test_pow_and_shift():
    p = T + 1
    assert p ** 3 == T ** 3 + 3 * T ** 2 + 3 * T + 1
    assert p.shift(-2) == LaurentPoly({-1: 1, -2: 1})
    assert (T ** 0) == ONE


def test_involution():
    rng = random.Random(102)
    for _ in range(30):
        p = _rand_poly(rng)
        assert p.involute().involute() == p
        assert p.involute()(Fraction(2)) == p(Fraction(1, 2))


def test_exact_div_roundtrip():
    rng = random.Random(103)
    for _ in range(60):
        p = _rand_poly(rng)
        q = _rand_poly(rng)
        if q.is_zero:
            continue
        assert (p * q).exact_div(q) == p


def test_exact_div_rejects_inexact():
    with pytest.raises(LaurentError):
        (T + 1).exact_div(T - 1)
    with pytest.raises(LaurentError):
        LaurentPoly.const(3).exact_div(LaurentPoly.const(2))


def test_content_and_scalar_div():
    p = LaurentPoly({2: 6, 0: -9})
    assert p.content() == 3
    assert p.scalar_div(3) == LaurentPoly({2: 2, 0: -3})
    with pytest.raises(LaurentError):
        p.scalar_div(4)


# -- rendering and parsing -----------------------------------------------------

def test_to_string_canonical_forms():
    assert LaurentPoly({0: 4, 1: -2, -1: -2}).to_string() == "4 - 2*t - 2*t^-1"
    assert LaurentPoly({0: 2, 1: -1, -1: -1}).to_string() == "2 - t - t^-1"
    assert LaurentPoly({1: -1, 2: 1}).to_string() == "-t + t^2"
    assert LaurentPoly.zero().to_string() == "0"
    assert LaurentPoly({0: -3}).to_string() == "-3"
    assert LaurentPoly({2: 1, 0: 1}).to_string("z") == "1 + z^2"


def test_parse_roundtrip_random():
    rng = random.Random(104)
    for _ in range(80):
        p = _rand_poly(rng)
        assert LaurentPoly.parse(p.to_string()) == p
        assert LaurentPoly.parse(p.to_string("z"), "z") == p


def test_parse_spec_forms():
    assert LaurentPoly.parse("4 - 2*t - 2*t^-1") == LaurentPoly({0: 4, 1: -2, -1: -2})
    assert LaurentPoly.parse("t^2+t^-2-2") == LaurentPoly({2: 1, -2: 1, 0: -2})
    assert LaurentPoly.parse("0").is_zero
    with pytest.raises(LaurentError):
        LaurentPoly.parse("t^")
    with pytest.raises(LaurentError):
        LaurentPoly.parse("2t")


# -- symmetric decomposition into w = 2 - t - 1/t -----------------------------

def test_w_in_t_identity():
    assert W_IN_T.to_string() == "2 - t - t^-1"
    assert W_IN_T.is_symmetric()
    assert W_IN_T.at_one() == 0


def test_symmetric_to_w_roundtrip():
    rng = random.Random(105)
    for _ in range(40):
        # Build a random symmetric polynomial as q(t) + q(1/t).
        q = _rand_poly(rng)
        p = q + q.involute()
        pw = symmetric_to_w(p)
        assert w_to_t(pw) == p


def test_symmetric_to_w_rejects_asymmetric():
    with pytest.raises(LaurentError):
        symmetric_to_w(T)


def test_to_w_basis_known_values():
    # -(t^2 + t^-2 - 2) = 4w - w^2
    p = -(T ** 2 + T.involute() ** 2 - 2 * ONE)
    assert to_w_basis(p) == [4, -1]
    # 2 - t - t^-1 = w
    assert to_w_basis(W_IN_T) == [1]
    assert to_w_basis(LaurentPoly.zero()) == []
    # t + t^-1 - 2 = -w
    assert to_w_basis(-W_IN_T) == [-1]


def test_to_w_basis_requires_vanishing_at_one():
    with pytest.raises(LaurentError):
        to_w_basis(ONE)


def test_power_sums_in_w_match_evaluation():
    # t^n + t^-n - 2 as a polynomial in w, checked at a rational point.
    x = Fraction(5, 3)
    w_val = 2 - x - 1 / x
    for n in range(1, 9):
        p = T ** n + T.involute() ** n - 2 * ONE
        bs = to_w_basis(p)
        assert sum(b * w_val ** (k + 1) for k, b in enumerate(bs)) == p(x)


# -- Conway / Alexander substitutions ------------------------------------------

def test_conway_normalize_trefoil():
    delta = T - 1 + T.involute()  # t - 1 + t^-1
    assert conway_normalize(delta).to_string("z") == "1 + z^2"
    assert conway_normalize(-delta).to_string("z") == "1 + z^2"


def test_conway_alexander_roundtrip():
    rng = random.Random(106)
    for _ in range(30):
        # Random symmetric delta with delta(1) = 1.
        q = _rand_poly(rng, max_exp=3, max_coeff=3)
        p = q + q.involute()
        delta = p - (p.at_one() - 1)
        nabla = conway_normalize(delta)
        assert nabla.coeff(0) == 1
        assert nabla.even_exponents_only()
        assert alexander_from_conway(nabla) == delta


def test_conway_normalize_rejects_bad_determinant():
    with pytest.raises(LaurentError):
        conway_normalize(T + T.involute())  # evaluates to 2 at t = 1


def test_substitute_z2_rejects_odd():
    with pytest.raises(LaurentError):
        substitute_z2(LaurentPoly.var())


# -- rational functions ---------------------------------------------------------

def test_rational_canonicalization():
    a = RationalLaurent(2 * W_IN_T, 2 * (ONE - W_IN_T))
    b = RationalLaurent(W_IN_T, ONE - W_IN_T)
    assert a == b
    assert a.num == b.num and a.den == b.den
    # Denominator lowest term normalized to exponent 0, positive coefficient.
    assert a.den.min_exp == 0
    assert a.den.coeff(0) > 0


def test_rational_arithmetic():
    r = RationalLaurent(ONE, T + 1)
    s = RationalLaurent(ONE, T - 1)
    assert (r + s) == RationalLaurent(2 * T, T * T - 1)
    assert (r * s) == RationalLaurent(ONE, T * T - 1)
    assert (r - r).is_zero
    assert r.inverse() == RationalLaurent(T + 1, ONE)
    assert (1 - r) == RationalLaurent(T, T + 1)


def test_rational_symmetry():
    sym = RationalLaurent(W_IN_T, ONE - W_IN_T)
    assert sym.is_symmetric()
    asym = RationalLaurent(T, ONE + T)
    assert not asym.is_symmetric()


def test_rational_as_poly():
    r = RationalLaurent((T + 1) * (T - 1), T + 1)
    assert r.is_polynomial
    assert r.as_poly() == T - 1
    assert not RationalLaurent(ONE, T + 1).is_polynomial


def test_rational_zero_denominator_rejected():
    with pytest.raises(LaurentError):
        RationalLaurent(ONE, LaurentPoly.zero())


# -- w-series expansion ----------------------------------------------------------

def test_expand_w_over_one_minus_w():
    r = RationalLaurent(W_IN_T, ONE - W_IN_T)  # w / (1 - w)
    s = expand_rational_w(r, 6)
    assert s.coeffs == (1, 1, 1, 1, 1, 1)
    assert s.beta(1) == 1 and s.beta(6) == 1
    with pytest.raises(LaurentError):
        s.beta(7)


def test_expand_w_over_one_plus_w():
    r = RationalLaurent(W_IN_T, ONE + W_IN_T)
    assert expand_rational_w(r, 5).coeffs == (1, -1, 1, -1, 1)


def test_expand_polynomial_case():
    s = expand_rational_w(RationalLaurent.from_poly(w_to_t(LaurentPoly({2: 1}))), 4)
    assert s.coeffs == (0, 1, 0, 0)


def test_expand_composite_eta_series():
    # w/(1-w) + w = w(2-w)/(1-w) expands as 2w + w^2 + w^3 + ...
    r = RationalLaurent(W_IN_T, ONE - W_IN_T) + W_IN_T
    assert expand_rational_w(r, 6).coeffs == (2, 1, 1, 1, 1, 1)


def test_expand_rejects_nonvanishing():
    with pytest.raises(LaurentError):
        expand_rational_w(RationalLaurent.from_int(1), 3)


def test_expand_rejects_asymmetric():
    with pytest.raises(LaurentError):
        expand_rational_w(RationalLaurent(T, ONE + T ** 2), 3)


def test_expand_zero():
    assert expand_rational_w(RationalLaurent.from_int(0), 4).coeffs == (0, 0, 0, 0)


def test_wseries_validation():
    with pytest.raises(LaurentError):
        WSeries((1, 2), 3)


# -- determinants -----------------------------------------------------------------

def _det_fraction(rows):
    """Gaussian elimination over Fraction, the evaluation oracle."""
    m = [row[:] for row in rows]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return det


def test_det_small_cases():
    assert det_laurent([]) == ONE
    assert det_laurent([[T]]) == T
    assert det_laurent([[T, ONE], [ONE, T]]) == T * T - 1
    z = LaurentPoly.zero()
    assert det_laurent([[T, z], [z, T.involute()]]) == ONE


def test_det_matches_evaluation_oracle():
    rng = random.Random(107)
    x = Fraction(7, 5)
    for n in (2, 3, 4, 5, 6):
        for _ in range(6):
            m = [[_rand_poly(rng, max_exp=2, max_coeff=3, terms=3)
                  for _ in range(n)] for _ in range(n)]
            expected = _det_fraction([[p(x) for p in row] for row in m])
            assert det_laurent(m)(x) == expected


def test_det_bareiss_agrees_with_cofactor():
    from etalink.laurent import _det_bareiss, _det_cofactor
    rng = random.Random(108)
    for _ in range(8):
        n = 5
        m = [[_rand_poly(rng, max_exp=1, max_coeff=2, terms=2)
              for _ in range(n)] for _ in range(n)]
        assert _det_bareiss(m) == _det_cofactor(m)


def test_det_rejects_ragged():
    with pytest.raises(LaurentError):
        det_laurent([[ONE, ONE], [ONE]])

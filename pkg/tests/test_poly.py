import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from convalgebra.convolution import convolve_finite
from convalgebra.errors import ContextMismatch, DomainError, ParseError
from convalgebra.ideals import PolynomialRing, PrincipalIdeal, QuotientRing, project
from convalgebra.poly import (
    Polynomial,
    PolynomialAlgebra,
    ProductAlgebra,
    compose,
    evaluate,
    homogeneous_component,
    parse_polynomial,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_xgcd,
    total_degree,
)
from convalgebra.scalars import CC, QQ

from conftest import F2, F7, random_scalar


def P(text, field=QQ, nvars=None):
    return parse_polynomial(text, field, nvars)


def random_poly(rng, field, nvars, max_deg=3, terms=4):
    p = Polynomial.zero(nvars, field)
    for _ in range(rng.randint(0, terms)):
        alpha = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        p = p + Polynomial.monomial(alpha, field, random_scalar(rng, field))
    return p


def random_homogeneous(rng, field, nvars, deg, terms=3):
    p = Polynomial.zero(nvars, field)
    for _ in range(rng.randint(1, terms)):
        cuts = sorted(rng.randint(0, deg) for _ in range(nvars - 1))
        alpha = tuple(b - a for a, b in zip([0] + cuts, cuts + [deg]))
        p = p + Polynomial.monomial(alpha, field, random_scalar(rng, field))
    return p


def test_poly_mul_examples():
    assert P("1+t") * P("1-t") == P("1-t^2")
    assert P("t1*t2", nvars=2) == Polynomial.monomial((1, 1), QQ)
    t1, t2 = Polynomial.variable(0, 2, QQ), Polynomial.variable(1, 2, QQ)
    assert dict((t1 * t2).terms()) == {(1, 1): 1}
    assert poly_mul(P("1+t", F2), P("1+t", F2)) == P("1+t^2", F2)


def test_poly_mul_is_convolution():
    rng = random.Random(1)
    for _ in range(50):
        p, q = random_poly(rng, QQ, 2), random_poly(rng, QQ, 2)
        assert poly_mul(p, q).coeffs == convolve_finite(p.coeffs, q.coeffs)


def test_poly_mul_arity_mismatch():
    with pytest.raises(ContextMismatch):
        poly_mul(Polynomial.variable(0, 1, QQ), Polynomial.variable(0, 2, QQ))


def test_total_degree_examples():
    assert total_degree(P("1 + t1*t2^2", nvars=2)) == 3
    assert total_degree(Polynomial.constant(1, QQ, 5)) == 0
    assert total_degree(Polynomial.zero(2, QQ)) is None


def test_homogeneous_component_examples():
    p = P("1 + t1 + t1*t2", nvars=2)
    assert homogeneous_component(p, 1) == P("t1", nvars=2)
    assert homogeneous_component(p, 5) == Polynomial.zero(2, QQ)
    sq = P("(t1+t2)^2")
    assert sq == P("t1^2 + 2*t1*t2 + t2^2")
    assert homogeneous_component(sq, 2) == sq


def test_homogeneous_decomposition_sums_back():
    rng = random.Random(2)
    for _ in range(100):
        p = random_poly(rng, F7, 3)
        d = p.total_degree() or 0
        total = Polynomial.zero(3, F7)
        for l in range(d + 1):
            h = homogeneous_component(p, l)
            assert all(sum(a) == l for a, _ in h.terms())
            total = total + h
        assert total == p


def test_evaluate_examples():
    assert evaluate(P("t^2 - 1"), [3]) == 8
    rng = random.Random(3)
    for _ in range(20):
        p = random_poly(rng, QQ, 2)
        assert evaluate(p, [0, 0]) == p.constant_term()
    assert evaluate(P("t1*t2", F7), [F7(2), F7(5)]) == F7(3)
    assert (2 * 5) % 7 == 3


def test_evaluate_arity_mismatch():
    with pytest.raises(DomainError):
        evaluate(P("t1*t2"), [1])
    with pytest.raises(DomainError):
        compose(P("t1*t2"), [P("t")])


def test_evaluate_unit_goes_to_unit():
    A = ProductAlgebra(QQ, 3)
    assert evaluate(Polynomial.one(2, QQ), [(1, 2, 3), (0, 0, 0)], A) == A.one()
    B = PolynomialAlgebra(QQ, 2)
    assert evaluate(Polynomial.one(1, QQ), [P("t1+t2")], B) == Polynomial.one(2, QQ)


def test_evaluate_product_algebra_coordinatewise():
    A = ProductAlgebra(F7, 2)
    p = P("t1^2 + 3*t1*t2 + 1", F7)
    a, b = (F7(2), F7(4)), (F7(5), F7(6))
    got = evaluate(p, [a, b], A)
    assert got == (evaluate(p, [a[0], b[0]]), evaluate(p, [a[1], b[1]]))


@pytest.mark.parametrize("field", [QQ, F7], ids=repr)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_evaluation_homomorphism(field, n):
    rng = random.Random(n)
    for _ in range(100):
        p, q = random_poly(rng, field, n), random_poly(rng, field, n)
        a = [field(random_scalar(rng, field)) for _ in range(n)]
        assert evaluate(p + q, a) == evaluate(p, a) + evaluate(q, a)
        assert evaluate(p * q, a) == evaluate(p, a) * evaluate(q, a)


def test_compose_examples():
    assert compose(P("t^2"), [P("t+1")]) == P("t^2 + 2*t + 1")
    assert compose(P("t1 + t2"), [P("t^2"), P("t^3")]) == P("t^2 + t^3")
    p = P("t1^2 + 3*t1*t2", nvars=2)
    q1, q2 = P("t1^3 - t2^3", nvars=2), P("t1^2*t2", nvars=2)
    c = compose(p, [q1, q2])
    assert c.is_homogeneous(6)


def test_compose_function_level_associativity():
    rng = random.Random(4)
    for _ in range(60):
        p = random_poly(rng, QQ, 2)
        qs = [random_poly(rng, QQ, 3, max_deg=2) for _ in range(2)]
        b = [random_scalar(rng, QQ) for _ in range(3)]
        assert evaluate(compose(p, qs), b) == evaluate(p, [evaluate(q, b) for q in qs])


def test_compose_homogeneity_law():
    rng = random.Random(5)
    for _ in range(100):
        l, l2 = rng.randint(0, 3), rng.randint(0, 3)
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        field = rng.choice([QQ, F2, F7])
        p = random_homogeneous(rng, field, n, l)
        qs = [random_homogeneous(rng, field, m, l2) for _ in range(n)]
        c = compose(p, qs)
        assert all(sum(a) == l * l2 for a, _ in c.terms())


def test_compose_degenerate_zero():
    # over F2, (t1 + t2) o (t, t) = 2t = 0
    c = compose(P("t1 + t2", F2), [P("t", F2), P("t", F2)])
    assert c == Polynomial.zero(1, F2)
    assert c.is_homogeneous(1)


def test_grading_product_law():
    rng = random.Random(6)
    for _ in range(100):
        l1, l2 = rng.randint(0, 4), rng.randint(0, 4)
        p = random_homogeneous(rng, QQ, 2, l1)
        q = random_homogeneous(rng, QQ, 2, l2)
        assert (p * q).is_homogeneous(l1 + l2)


def _independent_hom(p, ring, ideal):
    """t1 -> t, t2 -> -t into Q[t]/(t^2+1), built term by term."""
    total = ring.zero
    for (a1, a2), c in p.terms():
        total = total + Polynomial.monomial((a1 + a2,), QQ, c * (-1) ** a2)
    return project(total, ideal)


def test_homomorphism_reconstructed_from_coordinate_images():
    ring = PolynomialRing(QQ)
    ideal = PrincipalIdeal(ring, P("t^2 + 1"))
    A = QuotientRing(ideal)
    t1, t2 = Polynomial.variable(0, 2, QQ), Polynomial.variable(1, 2, QQ)
    images = [_independent_hom(t1, ring, ideal), _independent_hom(t2, ring, ideal)]
    rng = random.Random(7)
    for _ in range(100):
        p = random_poly(rng, QQ, 2, max_deg=4)
        assert evaluate(p, images, A) == _independent_hom(p, ring, ideal)


def test_univariate_euclid():
    a, b = P("t^3 - 1"), P("t^2 - 1")
    q, r = poly_divmod(a, b)
    assert q * b + r == a and (r.degree or 0) < b.degree
    assert poly_gcd(a, b) == P("t - 1")
    g, s, t = poly_xgcd(a, b)
    assert s * a + t * b == g == P("t - 1")


def test_printer_canonical_output():
    p = P("t1^2 + 2*t1*t2 + t2^2 + 3 - 1/2*t1*t2^3")
    assert str(p) == "3 + t2^2 + 2*t1*t2 + t1^2 - 1/2*t1*t2^3"
    assert str(Polynomial.zero(1, QQ)) == "0"
    assert str(P("2 - t", F7)) == "2 + 6*t"


def test_parse_errors():
    for bad in ["t^", "1 +", "t^-1", "x*y", "(t"]:
        with pytest.raises(ParseError):
            P(bad)


@st.composite
def polynomials(draw):
    field = draw(st.sampled_from([QQ, F7, CC]))
    n = draw(st.integers(1, 3))
    if field == CC:
        coef = st.builds(complex, st.integers(-9, 9), st.integers(-9, 9))
    elif field == QQ:
        coef = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))
    else:
        coef = st.integers(0, 6)
    alpha = st.tuples(*[st.integers(0, 4)] * n)
    entries = draw(st.dictionaries(alpha, coef, max_size=6))
    return Polynomial(n, field, entries)


@settings(max_examples=300, deadline=None)
@given(polynomials())
def test_print_parse_round_trip(p):
    assert parse_polynomial(str(p), p.field, p.nvars) == p

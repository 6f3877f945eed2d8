import math
import random
from fractions import Fraction

import pytest

from convalgebra.errors import DomainError, NotInvertible, ParseError
from convalgebra.scalars import (
    CC,
    QQ,
    PrimeField,
    characteristic,
    conjugate,
    field_invert,
    format_float,
    is_prime,
    modulus,
    normalize_rational,
    parse_field,
)

from conftest import F2, F7, random_nonzero_scalar, random_scalar


@pytest.mark.parametrize(
    "num, den, expected",
    [(2, 4, Fraction(1, 2)), (3, -6, Fraction(-1, 2)), (0, 7, Fraction(0))],
)
def test_normalize_rational(num, den, expected):
    r = normalize_rational(num, den)
    assert r == expected
    assert r.denominator > 0
    assert math.gcd(abs(r.numerator), r.denominator) == 1


def test_normalize_rational_zero_denominator():
    with pytest.raises(DomainError):
        normalize_rational(1, 0)


def test_zero_is_canonical():
    r = normalize_rational(0, -5)
    assert (r.numerator, r.denominator) == (0, 1)


def test_invert_examples():
    assert field_invert(Fraction(2, 3)) == Fraction(3, 2)
    # brute-force search for y with 3y = 1 in F_7
    oracle = [y for y in range(7) if (3 * y) % 7 == 1]
    assert oracle == [5]
    assert field_invert(F7(3)) == F7(5)
    assert field_invert(1j) == -1j


@pytest.mark.parametrize("field", [QQ, F7, CC])
def test_invert_zero_rejected(field):
    with pytest.raises(NotInvertible, match="not invertible"):
        field.invert(field.zero)


def _char_by_addition(field, limit=1000):
    total = field.zero
    for n in range(1, limit + 1):
        total = total + field.one
        if not total:
            return n
    return 0


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 97])
def test_characteristic_prime_field(p):
    F = PrimeField(p)
    assert characteristic(F) == p == _char_by_addition(F)


def test_characteristic_zero_fields():
    assert characteristic(QQ) == 0
    assert characteristic(CC) == 0
    assert _char_by_addition(QQ, 200) == 0
    assert characteristic(F2) == 2


@pytest.mark.parametrize("p", [0, 1, 4, 9, 91, 561])
def test_composite_modulus_rejected(p):
    with pytest.raises(DomainError):
        PrimeField(p)


def test_is_prime_against_sieve():
    limit = 2000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    assert [n for n in range(limit) if is_prime(n)] == [n for n in range(limit) if sieve[n]]


def test_modulus_examples():
    assert modulus(3 + 4j) == 5
    assert modulus(0) == 0
    assert modulus(1 + 1j) == pytest.approx(1.41421356, abs=1e-8)
    assert modulus(1 + 1j) == pytest.approx(math.sqrt(2), rel=1e-15)


def test_complex_rejects_nonfinite():
    with pytest.raises(DomainError):
        CC(complex(float("nan"), 0))
    with pytest.raises(DomainError):
        CC(float("inf"))


@pytest.mark.parametrize("field", [QQ, F2, F7, PrimeField(97)])
def test_field_axioms_exact(field):
    rng = random.Random(field.characteristic() + 1)
    zero, one = field.zero, field.one
    for _ in range(1000):
        a, b, c = (random_scalar(rng, field) for _ in range(3))
        a, b, c = field(a), field(b), field(c)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * field.invert(a) == one


def test_field_axioms_complex():
    rng = random.Random(3)

    def close(x, y):
        return abs(x - y) <= 1e-12 * max(1.0, abs(x), abs(y))

    for _ in range(1000):
        a, b, c = (random_scalar(rng, CC) for _ in range(3))
        assert close((a + b) + c, a + (b + c))
        assert close((a * b) * c, a * (b * c))
        assert a + b == b + a and a * b == b * a
        assert close(a * (b + c), a * b + a * c)
        assert a + 0 == a and a * 1 == a
        assert a + (-a) == 0
        if a:
            assert close(a * CC.invert(a), 1)


def test_complex_modulus_properties():
    rng = random.Random(4)
    for _ in range(1000):
        z, w = random_scalar(rng, CC), random_scalar(rng, CC)
        assert modulus(z * w) == pytest.approx(modulus(z) * modulus(w), rel=1e-12)
        assert modulus(z + w) <= modulus(z) + modulus(w) + 1e-12
        assert abs(conjugate(z + w) - (conjugate(z) + conjugate(w))) <= 1e-12 * (1 + abs(z) + abs(w))
        assert abs(conjugate(z * w) - conjugate(z) * conjugate(w)) <= 1e-12 * (1 + abs(z * w))


@pytest.mark.parametrize(
    "field, text, value",
    [
        (QQ, "3/-6", Fraction(-1, 2)),
        (QQ, "1/0", None),
        (QQ, "-1/2", Fraction(-1, 2)),
        (QQ, "7", Fraction(7)),
        (QQ, "1.25", Fraction(5, 4)),
        (F7, "3 mod 7", F7(3)),
        (F7, "10", F7(3)),
        (CC, "3+4i", 3 + 4j),
        (CC, "-2.5-1e-3i", complex(-2.5, -1e-3)),
        (CC, "-i", -1j),
        (CC, "2", 2 + 0j),
    ],
)
def test_scalar_parsing(field, text, value):
    if value is None:
        with pytest.raises(ParseError):
            field.parse(text)
    else:
        assert field.parse(text) == value


def test_scalar_text_round_trip_exact(rng):
    for field in (QQ, F7):
        for _ in range(200):
            x = field(random_scalar(rng, field, bound=1000))
            assert field.parse(field.format(x)) == x


def test_prime_field_text_wrong_modulus():
    with pytest.raises(ParseError):
        F7.parse("3 mod 5")


def test_parse_field_names():
    assert parse_field("Q") == QQ
    assert parse_field("C") == CC
    assert parse_field("Fp:7") == F7
    assert parse_field("F7") == F7
    with pytest.raises(ParseError):
        parse_field("R")


def test_format_float_rules():
    assert format_float(-0.0) == "0"
    assert format_float(2.23606797749979) == "2.23606798"
    assert format_float(1.5e-7) == "1.5e-07"


def test_mixing_prime_fields_rejected():
    with pytest.raises(DomainError):
        F7(1) + PrimeField(5)(1)


def test_random_nonzero_helper_never_zero(rng):
    assert all(random_nonzero_scalar(rng, F2) == F2(1) for _ in range(20))

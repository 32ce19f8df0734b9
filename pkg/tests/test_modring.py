import pytest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from cliffordlab.modring import (
    FpElem,
    MixedModulusError,
    Modulus,
    ZeroInverseError,
    half,
    inv,
    is_prime,
    rational_from_str,
    rational_to_str,
)

PRIMES = [3, 5, 7, 11, 13]


def test_modulus_rejects_composite_and_two():
    with pytest.raises(ValueError):
        Modulus(9)
    with pytest.raises(ValueError):
        Modulus(2)
    with pytest.raises(ValueError):
        Modulus(1)
    assert Modulus(3).d == 3


def test_is_prime_small():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("d", PRIMES)
def test_half_unit_doubles_to_one(d):
    mod = Modulus(d)
    assert (2 * mod.half_unit) % d == 1


def test_elem_reduces_and_arithmetic():
    mod = Modulus(5)
    a = mod.elem(7)
    assert a.value == 2
    b = mod.elem(4)
    assert (a + b).value == 1
    assert (a - b).value == 3
    assert (a * b).value == 3
    assert (-a).value == 3
    assert int(b) == 4


def test_mixed_modulus_raises():
    with pytest.raises(MixedModulusError):
        Modulus(3).elem(1) + Modulus(5).elem(1)


@pytest.mark.parametrize("d", PRIMES)
def test_inverse_and_half(d):
    mod = Modulus(d)
    for v in range(1, d):
        a = mod.elem(v)
        assert (inv(a) * a).value == 1
        h = half(a)
        assert (h + h).value == v
    with pytest.raises(ZeroInverseError):
        inv(mod.elem(0))


@given(st.fractions())
def test_rational_str_round_trip(r):
    assert rational_from_str(rational_to_str(r)) == r


def test_rational_str_format():
    assert rational_to_str(Fraction(3)) == "3"
    assert rational_to_str(Fraction(-3, 4)) == "-3/4"

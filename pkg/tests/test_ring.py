from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ringcodes.exceptions import ParseError
from ringcodes.ring import (CANONICAL_POSITION, CLASS_SIZES, E1, E2, E3, E4, ONE, U, UV, V, ZERO,
                            Gaussian, RElement, chi, element, enumerate_ring, from_coeff, from_crt,
                            gray_symbol, lee_class, lee_weight_r, mul, mul_via_coefficients)
from ringcodes.z4 import lee_weight_vec

elements = st.integers(0, 255).map(element)


def test_from_coeff_examples():
    assert UV.crt == (0, 0, 0, 1)
    assert ONE.crt == (1, 1, 1, 1)
    assert U.crt == (0, 1, 0, 1)  # r4 = a+b+c+d picks up b


def test_from_crt_examples():
    assert from_crt(1, 0, 0, 0).coeff == (1, 3, 3, 1)
    assert from_crt(0, 0, 0, 0) == ZERO
    assert from_crt(0, 0, 0, 1) == UV


def test_idempotents():
    assert E1 == ONE - U - V + UV
    assert E1 + E2 + E3 + E4 == ONE
    for i, e in enumerate((E1, E2, E3, E4)):
        assert e * e == e
        for f in (E1, E2, E3, E4)[i + 1:]:
            assert (e * f).is_zero()


def test_relations():
    assert U * U == U and V * V == V
    assert U * V == UV and UV.crt == (0, 0, 0, 1)


def test_gray_symbol_examples():
    assert gray_symbol(ZERO) == (0, 0, 0, 0)
    assert gray_symbol(from_coeff(2)) == (2, 2, 2, 2)
    assert gray_symbol(E1) == (1, 0, 0, 0)


@pytest.mark.parametrize("x, w", [(from_coeff(2), 8), (UV, 1), (ZERO, 0)])
def test_lee_weight_examples(x, w):
    assert lee_weight_r(x) == w


def test_chi_examples():
    assert chi(ZERO) == Gaussian(1, 0)
    assert chi(UV) == Gaussian(0, 1)
    assert chi(from_coeff(0, 0, 0, 2)) == Gaussian(-1, 0)


def test_lee_class_examples():
    assert lee_class(ZERO) == 0
    assert lee_class(RElement.parse("1+3u+3v+uv")) == 1
    assert lee_class(from_coeff(2)) == 8


def test_enumerate_ring_order():
    ring = enumerate_ring()
    assert len(ring) == 256
    assert ring[0] == ZERO and ring[-1] == from_coeff(2)
    assert tuple(Counter(lee_class(x) for x in ring)[k] for k in range(9)) == CLASS_SIZES
    assert sorted(CANONICAL_POSITION.tolist()) == list(range(256))


def test_text_format():
    x = from_coeff(1, 3, 3, 1)
    assert str(x) == "1+3u+3v+uv"
    assert x.crt_str() == "[1,0,0,0]"
    assert RElement.parse(str(x)) == x
    assert str(from_coeff(2, 0, 1, 0)) == "2+v"
    with pytest.raises(ParseError):
        RElement.parse("1+x")


def test_exhaustive_roundtrip_and_products():
    ring = enumerate_ring()
    for x in ring:
        assert from_crt(*x.crt) == x and from_coeff(*x.coeff) == x
    for x in ring:
        for y in ring:
            assert mul(x, y) == mul_via_coefficients(x, y)


def test_chi_is_additive_character():
    ring = enumerate_ring()
    for x in ring:
        for y in ring[::7]:
            assert chi(x + y) == chi(x) * chi(y)


def test_chi_nontrivial_on_minimal_ideals():
    ring = enumerate_ring()
    for e in (E1, E2, E3, E4):
        assert any(chi(e * x) != Gaussian(1, 0) for x in ring)


def test_class_sizes_binomial():
    assert CLASS_SIZES == tuple(int(c) for c in np.polynomial.polynomial.polypow([1, 1], 8))


@given(elements, elements)
def test_gray_isometry_on_symbols(x, y):
    diff = [(a - b) % 4 for a, b in zip(gray_symbol(x), gray_symbol(y))]
    assert lee_weight_r(x - y) == lee_weight_vec(diff)


@given(elements, elements, elements)
def test_ring_axioms(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x

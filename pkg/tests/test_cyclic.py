import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringcodes.cyclic import (RCyclicSpec, Z4CyclicSpec, cyclic_code_z4, cyclic_type, dual_cyclic_z4,
                              length23_spec, ideal_from_generators, is_cyclic, is_cyclic_r,
                              is_quasi_cyclic, parse_r_generator, quasi_shift, r_cyclic_from_components,
                              r_generator_components)
from ringcodes.exceptions import DivisibilityError
from ringcodes.fixtures import factorization, monic_divisors
from ringcodes.linear import RCode, Z4Code
from ringcodes.oracles import r_span_by_closure
from ringcodes.ring import crt_code
from ringcodes.z4 import Z4Poly, cyclic_shift

P = Z4Poly.parse


def divisor_pairs(n):
    divs = monic_divisors(n)
    for s0, f0 in divs:
        for s1, f1 in divs:
            if s1 <= s0:
                yield f0, f1


def test_factorizations_multiply_out():
    for n in (3, 5, 7, 9, 23):
        assert len(factorization(n)) >= 2


def test_cyclic_code_examples():
    c = cyclic_code_z4(Z4CyclicSpec(7, P("x-1"), Z4Poly(), P("x-1")))
    assert c.cardinality == 2 ** 12 == len(c.codewords())
    assert cyclic_code_z4(Z4CyclicSpec(3, P("x^3-1"))).cardinality == 1
    assert cyclic_code_z4(Z4CyclicSpec(3, P("x^2+x+1"))).cardinality == 4


def test_validate_names_the_broken_link():
    with pytest.raises(DivisibilityError, match="does not divide x\\^3-1"):
        Z4CyclicSpec(3, P("x^2+x+3")).validate()
    with pytest.raises(DivisibilityError, match="g = "):
        Z4CyclicSpec(7, P("x-1"), Z4Poly(), P("x^3+2x^2+x+3")).validate()
    with pytest.raises(DivisibilityError, match="not monic"):
        Z4CyclicSpec(3, P("2x+1")).validate()


def test_ideal_examples():
    assert ideal_from_generators([P("x-1")], 2).codeword_set() == {(0, 0), (3, 1), (1, 3), (2, 2)}
    assert ideal_from_generators([P("1")], 3) == Z4Code.full(3)
    assert ideal_from_generators([P("2")], 1).codeword_set() == {(0,), (2,)}


def test_is_cyclic_examples():
    assert is_cyclic(Z4Code([[1, 1]]))
    assert not is_cyclic(Z4Code([[1, 0]]))
    assert is_cyclic_r(parse_r_generator("x^2+x+3", 3))
    assert not is_cyclic_r(RCode([Z4Code([[1, 0]])] + [Z4Code.zero(2)] * 3))


def test_cyclic_type_examples():
    assert cyclic_type(P("x-1"), P("x-1"), 7) == (6, 0)
    l = factorization(7)
    assert cyclic_type(l[0] * l[1], l[0], 7) == (3, 3)
    assert cyclic_type(P("x^2+x+1"), P("1"), 3) == (1, 2)


@pytest.mark.parametrize("n", [7, 9])
def test_type_formula_matches_standard_form(n):
    for f0, f1 in divisor_pairs(n):
        code = Z4CyclicSpec(n, f0, Z4Poly(), f1).code()
        assert cyclic_type(f0, f1, n) == code.type


def test_dual_examples():
    spec = Z4CyclicSpec(7, P("x-1"), Z4Poly(), P("x-1"))
    d = dual_cyclic_z4(spec)
    assert d.f == d.g == P("x^6+x^5+x^4+x^3+x^2+x+1")
    assert d.code().cardinality == 4
    assert dual_cyclic_z4(Z4CyclicSpec(3, P("1"))).code().cardinality == 1


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_dual_spec_spans_dual(n):
    """Every (f + 2p, 2g) with g | f built from shipped factors, including p != 0."""
    xn = Z4Poly.x_n_minus_1(n)
    for f, g in divisor_pairs(n):
        f_hat = xn // f
        # p = 0 plus every shipped divisor q with g | q*f_hat and deg q < deg f
        for p in {Z4Poly(), *(q for _, q in monic_divisors(n) if g.divides(q * f_hat) and q.degree < f.degree)}:
            spec = Z4CyclicSpec(n, f, p, g).validate()
            dual = dual_cyclic_z4(spec)
            dual.validate()
            assert dual.code() == spec.code().dual()


def test_r_generator_examples():
    c = parse_r_generator("x^2+x+3", 3)
    assert len({tuple(map(tuple, x.codewords())) for x in c.components}) == 1
    assert c.type == (4, 8)
    c = parse_r_generator("(1-v)(x+3)+v(x^4+x^3+x^2+x+1)+2", 5)
    assert c.type == (10, 10)
    c = parse_r_generator("uv", 1)
    assert [x.cardinality for x in c.components] == [1, 1, 1, 4]


def test_r_cyclic_from_components():
    s = Z4CyclicSpec(3, P("x^2+x+1"))
    spec = r_cyclic_from_components([s] * 4)
    gens = spec.generator_polynomials()
    assert [c.is_scalar() for c in gens[0]] == [True] * 3
    assert spec.code_from_generators() == spec.code()
    zero = r_cyclic_from_components([Z4CyclicSpec(3, P("x^3-1"))] * 4)
    assert zero.code().cardinality == 1
    with pytest.raises(ValueError):
        r_cyclic_from_components([s] * 3)


def test_length23_spec_shape():
    spec = length23_spec()
    assert isinstance(spec, RCyclicSpec)
    assert [s.cardinality for s in spec.components] == [2 ** 23] * 4
    assert spec.components[0] == spec.components[1] and spec.components[2] == spec.components[3]


def test_quasi_shift_examples():
    assert quasi_shift((1, 2, 3, 0), 4) == (1, 2, 3, 0)
    assert quasi_shift((1, 2, 3, 0), 2) == (2, 1, 0, 3)
    with pytest.raises(ValueError):
        quasi_shift((1, 2, 3), 2)


def test_r_ideal_against_closure():
    """The component route agrees with closing the generator's shifts under +, u*, v*."""
    for n, expr in [(3, "x^2+x+3"), (3, "u+vx"), (3, "2+uvx"), (2, "(1-u)(x+1)+2v")]:
        code = parse_r_generator(expr, n)
        proj = r_generator_components(expr, n)
        vec = tuple(crt_code(tuple(int(proj[i].vector(n)[k]) for i in range(4))) for k in range(n))
        span = r_span_by_closure([cyclic_shift(vec, k) for k in range(n)], n)
        assert len(span) == code.cardinality
        assert span == {tuple(int(x) for x in w) for w in code.codewords()}


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.data())
def test_cardinality_formula(n, data):
    pairs = list(divisor_pairs(n))
    f, g = data.draw(st.sampled_from(pairs))
    spec = Z4CyclicSpec(n, f, Z4Poly(), g)
    code = spec.code()
    assert code.cardinality == spec.cardinality
    if code.cardinality <= 1 << 16:
        assert len(code.codewords()) == spec.cardinality
    assert is_cyclic(code)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.data())
def test_cyclic_iff_components_iff_duals(n, data):
    divs = [f for _, f in monic_divisors(n)]
    code = RCode(Z4CyclicSpec(n, f).code() for f in data.draw(st.lists(st.sampled_from(divs), min_size=4, max_size=4)))
    assert is_cyclic_r(code) == all(is_cyclic(c) for c in code.components) == is_cyclic_r(code.dual())
    assert is_cyclic_r(code)
    assert is_quasi_cyclic(code.gray_image(), 4)
    broken = RCode([Z4Code([[1] + [0] * (n - 1)])] + list(code.components[1:]))
    assert not is_cyclic_r(broken) and not is_cyclic_r(broken.dual())

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringcodes.exceptions import BudgetExceeded, UndefinedDistance
from ringcodes.linear import (CodeParams, RCode, Z4Code, all_vectors, build_rcode, decompose_rcode,
                              diagonal_two_code, gray_image, gray_vector, standard_form)
from ringcodes.oracles import brute_force_dual, brute_force_z4_dual, random_rcode, random_z4_code, rows_to_set
from ringcodes.ring import E1, LEE, ONE, element, from_coeff


def rcode_strategy(n):
    return st.integers(0, 2 ** 32 - 1).map(lambda s: random_rcode(n, np.random.default_rng(s)))


def z4_strategy(max_n=4):
    return st.tuples(st.integers(1, max_n), st.integers(0, 2 ** 32 - 1)).map(
        lambda t: random_z4_code(t[0], np.random.default_rng(t[1])))


def test_enumeration_examples():
    assert Z4Code([[2]]).codeword_set() == {(0,), (2,)}
    assert Z4Code([[1, 1]]).codeword_set() == {(0, 0), (1, 1), (2, 2), (3, 3)}
    assert len(Z4Code([[1, 1], [0, 2]]).codeword_set()) == 8


@pytest.mark.parametrize("rows, k", [([[2]], (0, 1)), ([[1, 1]], (1, 0)), ([[1, 1], [0, 2]], (1, 1))])
def test_standard_form_types(rows, k):
    assert Z4Code(rows).type == k


def test_standard_form_prefers_units():
    sf = standard_form([[2, 1], [2, 0]], 2)
    assert (sf.k1, sf.k2) == (1, 1)
    assert sf.perm == (1, 0)  # the unit in column 1 is taken before the 2 in column 0
    assert sf.matrix.tolist() == [[1, 0], [0, 2]]
    assert standard_form([[2, 1], [0, 2]], 2).k2 == 0  # (0,2) = 2*(2,1)


def test_dual_examples():
    assert Z4Code([[1, 1]]).dual() == Z4Code([[3, 1]])
    assert Z4Code.full(3).dual().cardinality == 1
    assert Z4Code([[2]]).dual() == Z4Code([[2]])


def test_rcode_examples():
    assert RCode.zero(2).cardinality == 1
    assert RCode.full(2).cardinality == 256 ** 2
    c = decompose_rcode([[E1]], 1)
    assert [x.cardinality for x in c.components] == [4, 1, 1, 1]
    assert all(x.cardinality == 4 for x in decompose_rcode([[ONE]], 1).components)
    assert all(x == Z4Code([[2]]) for x in decompose_rcode([[from_coeff(2)]], 1).components)


def test_rcode_duals_and_self_duality():
    assert RCode.full(2).dual().cardinality == 1
    for n in range(1, 5):
        diag = RCode([diagonal_two_code(n)] * 4)
        assert diag.is_self_dual()
    assert not RCode.full(1).is_self_dual()
    assert RCode.zero(2).is_self_orthogonal() and not RCode.zero(2).is_self_dual()


def test_gray_image_examples():
    assert gray_image(RCode.zero(2)).cardinality == 1 and gray_image(RCode.zero(2)).n == 8
    assert gray_image(decompose_rcode([[E1]], 1)) == Z4Code([[1, 0, 0, 0]])


def test_min_distance_examples():
    assert RCode.full(2).min_distances() == (1, 1)
    assert RCode([Z4Code([[2, 2]])] * 4).min_distances()[0] == 4
    with pytest.raises(UndefinedDistance):
        RCode.zero(2).min_distances()


def test_params_json():
    p = RCode([Z4Code([[1, 1]])] * 4).params()
    assert p == CodeParams(2, 4, 0, 2, 2)
    assert p.to_json() == {"n": 2, "k1": 4, "k2": 0, "dLee": 2, "dHamming": 2}


def test_budget():
    with pytest.raises(BudgetExceeded) as info:
        Z4Code.full(4).codewords(budget=100)
    assert info.value.size == 256


def test_rdual_matches_brute_force_n1():
    rng = np.random.default_rng(11)
    for _ in range(20):
        c = random_rcode(1, rng)
        assert rows_to_set(brute_force_dual(c)) == rows_to_set(c.dual().codewords())


@given(z4_strategy())
def test_cardinality_matches_enumeration(code):
    assert len(code.codewords()) == code.cardinality == len(code.codeword_set())


@given(z4_strategy())
def test_z4_dual_brute_force(code):
    dual = code.dual()
    assert dual.codeword_set() == rows_to_set(brute_force_z4_dual(code))
    assert code.cardinality * dual.cardinality == 4 ** code.n


@given(z4_strategy())
def test_membership(code):
    words = code.codeword_set()
    for v in map(tuple, all_vectors(code.n)[:: max(1, 4 ** code.n // 64)]):
        assert code.contains(v) == (v in words)


@settings(max_examples=30, deadline=None)
@given(rcode_strategy(2))
def test_gray_duality_commutes(code):
    assert gray_image(code.dual()).codeword_set() == gray_image(code).dual().codeword_set()
    assert gray_image(code).cardinality == code.cardinality
    assert code.cardinality * code.dual().cardinality == 256 ** code.n


@settings(max_examples=30, deadline=None)
@given(rcode_strategy(2))
def test_decompose_build_identity(code):
    again = decompose_rcode(code.generators(), code.n)
    assert again == code
    assert build_rcode(*code.components) == code


@settings(max_examples=30, deadline=None)
@given(rcode_strategy(2))
def test_gray_isometry(code):
    words = code.codewords()[:40]
    for a in words[:8]:
        for b in words:
            diff = [(element(int(x)) - element(int(y))).code for x, y in zip(a, b)]
            gray = np.subtract(gray_vector(a), gray_vector(b)) % 4
            assert int(LEE[diff].sum()) == int(np.minimum(gray, 4 - gray).sum())


@settings(max_examples=25, deadline=None)
@given(rcode_strategy(2))
def test_component_minimum_matches_direct(code):
    if code.cardinality == 1:
        return
    words = code.codewords()[1:]
    assert code.min_distances()[0] == int(LEE[words].sum(axis=1).min())
    assert code.min_distances()[1] == int((words != 0).sum(axis=1).min())

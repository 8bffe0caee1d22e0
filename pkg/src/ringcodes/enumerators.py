"""Complete, symmetrized and two-variable Lee weight enumerators of R-codes.

Conventions
-----------
* A *composition* (one clwe monomial) is a sorted tuple of
  ``(position, count)`` pairs, where ``position`` indexes the canonical ring
  ordering of :func:`ringcodes.ring.enumerate_ring`.  Use
  :func:`composition_vector` for the dense 256-entry form.
* An SLWE is a ``Counter`` from 9-tuples of exponents of
  ``x, y, z, w, p, s, t, l, m`` (Lee classes 0..8) to integer coefficients.
* A Lee polynomial is a list ``[A_0, ..., A_{8n}]`` standing for
  ``sum A_i x^(8n-i) y^i``.

All arithmetic is exact; Python integers are used wherever a coefficient
can outgrow 64 bits.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb

import numpy as np

from .exceptions import IdentityViolation
from .linear import DEFAULT_BUDGET, RCode
from .ring import CANONICAL_POSITION, COEFF, LEE, MUL_TABLE, lee_classes

VARIABLES = ("x", "y", "z", "w", "p", "s", "t", "l", "m")


# --- character data --------------------------------------------------------

#: CHI_POWER_TABLE[a, b] = d-coefficient of a*b, so chi(a*b) = i**CHI_POWER_TABLE[a, b]
CHI_POWER_TABLE = COEFF[MUL_TABLE, 3]
_RE = np.array([1, 0, -1, 0], dtype=np.int64)
_IM = np.array([0, 1, 0, -1], dtype=np.int64)


@lru_cache(maxsize=1)
def character_sum_table():
    """9x9 matrix ``S[k][j] = sum_{r in D_j} chi(a r)`` for ``a`` in ``D_k``.

    Computed for every ``a`` in every class; raises
    :class:`IdentityViolation` if two elements of one class give different
    rows or if any sum has a nonzero imaginary part.
    """
    classes = lee_classes()
    table = np.zeros((9, 9), dtype=np.int64)
    for k, cls in enumerate(classes):
        first = None
        for a in cls:
            powers = CHI_POWER_TABLE[a.code]
            row_re = np.zeros(9, dtype=np.int64)
            row_im = np.zeros(9, dtype=np.int64)
            np.add.at(row_re, LEE, _RE[powers])
            np.add.at(row_im, LEE, _IM[powers])
            if row_im.any():
                raise IdentityViolation(f"class sums for {a} are not real", (str(a), row_im.tolist()))
            if first is None:
                first = (a, row_re)
            elif not np.array_equal(first[1], row_re):
                raise IdentityViolation(
                    f"class sums differ between {first[0]} and {a} in D_{k}",
                    (str(first[0]), str(a), first[1].tolist(), row_re.tolist()))
        table[k] = first[1]
    table.setflags(write=False)
    return table


def character_matrix():
    """The 256x256 matrix chi(a*b) as (real, imaginary) integer arrays, indexed by CRT code."""
    return _RE[CHI_POWER_TABLE], _IM[CHI_POWER_TABLE]


# --- enumerators -----------------------------------------------------------

def _words(code_or_words, budget):
    if isinstance(code_or_words, RCode):
        return code_or_words.codewords(budget), code_or_words.n
    words = np.asarray(code_or_words, dtype=np.int64)
    if words.ndim != 2:
        raise ValueError("expected a 2-d array of CRT codes")
    return words, words.shape[1]


def clwe_of(code_or_words, budget=DEFAULT_BUDGET):
    """Complete Lee weight enumerator: composition -> multiplicity."""
    words, _ = _words(code_or_words, budget)
    positions = np.sort(CANONICAL_POSITION[words], axis=1)
    out = Counter()
    for row in map(tuple, positions.tolist()):
        out[_compress(row)] += 1
    return out


def _compress(sorted_positions):
    out = []
    for p in sorted_positions:
        if out and out[-1][0] == p:
            out[-1][1] += 1
        else:
            out.append([p, 1])
    return tuple((p, c) for p, c in out)


def composition_vector(composition):
    """Dense 256-entry count vector of a composition key."""
    vec = [0] * 256
    for p, c in composition:
        vec[p] = c
    return vec


_CLASS_OF_POSITION = np.empty(256, dtype=np.int64)
_CLASS_OF_POSITION[CANONICAL_POSITION] = LEE


def symmetrize(clwe):
    """Merge the 256 variables into the 9 Lee-class variables."""
    out = Counter()
    for comp, mult in clwe.items():
        exps = [0] * 9
        for p, c in comp:
            exps[_CLASS_OF_POSITION[p]] += c
        out[tuple(exps)] += mult
    return out


def slwe_of(code_or_words, budget=DEFAULT_BUDGET):
    """Symmetrized Lee weight enumerator computed straight from the codewords."""
    words, _ = _words(code_or_words, budget)
    out = Counter()
    counts = np.zeros((len(words), 9), dtype=np.int64)
    for k in range(words.shape[1]):
        np.add.at(counts, (np.arange(len(words)), LEE[words[:, k]]), 1)
    rows, mult = np.unique(counts, axis=0, return_counts=True)
    for r, m in zip(rows.tolist(), mult.tolist()):
        out[tuple(r)] += m
    return out


def lee_of(slwe):
    """Substitute class-i variable by x^(8-i) y^i; returns ``[A_0..A_8n]``."""
    if not slwe:
        return []
    n = sum(next(iter(slwe)))
    out = [0] * (8 * n + 1)
    for exps, c in slwe.items():
        out[sum(i * e for i, e in enumerate(exps))] += c
    return out


def lee_direct(code_or_words, budget=DEFAULT_BUDGET):
    """Lee weight distribution by direct count over the codewords."""
    words, n = _words(code_or_words, budget)
    weights = LEE[words].sum(axis=1)
    return [int(a) for a in np.bincount(weights, minlength=8 * n + 1)]


def lee_enumerator(code, budget=DEFAULT_BUDGET):
    """Lee distribution of an R-code as the product of its components' Lee enumerators.

    Exact for any length whose components fit the budget; no R-level
    enumeration is performed.
    """
    total = [1]
    for comp in code.components:
        lee_hist, _ = comp.weight_distributions(budget)
        total = _convolve(total, [int(a) for a in lee_hist])
    return total


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def evaluate_slwe(slwe, values):
    total = 0
    for exps, c in slwe.items():
        term = c
        for v, e in zip(values, exps):
            term *= v ** e
        total += term
    return total


# --- MacWilliams transforms ------------------------------------------------

def _poly_mul(p, q):
    out = Counter()
    for a, x in p.items():
        for b, y in q.items():
            out[tuple(i + j for i, j in zip(a, b))] += x * y
    return out


@lru_cache(maxsize=None)
def _b_power(k, e):
    if e == 0:
        return Counter({(0,) * 9: 1})
    base = Counter()
    for j, c in enumerate(character_sum_table()[k].tolist()):
        if c:
            base[tuple(int(i == j) for i in range(9))] = c
    return _poly_mul(_b_power(k, e - 1), base)


def _divide_exact(poly_items, size):
    out = Counter()
    for key, c in poly_items:
        if c % size:
            raise IdentityViolation(f"coefficient {c} of {key} is not divisible by |C| = {size}",
                                    (key, c, size))
        if c:
            out[key] = c // size
    return out


def macwilliams_slwe(slwe, code_size):
    """slwe of the dual: (1/|C|) slwe_C(B_0, ..., B_8) with B_k from the character table."""
    total = Counter()
    for exps, c in slwe.items():
        term = Counter({(0,) * 9: c})
        for k, e in enumerate(exps):
            if e:
                term = _poly_mul(term, _b_power(k, e))
        total.update(term)
    return _divide_exact(total.items(), code_size)


@lru_cache(maxsize=None)
def _plus_minus(a, b):
    """Coefficients (by y-degree) of (x+y)^a (x-y)^b."""
    left = [comb(a, i) for i in range(a + 1)]
    right = [comb(b, i) * (-1) ** i for i in range(b + 1)]
    return tuple(_convolve(left, right))


def macwilliams_lee(lee, code_size):
    """Lee distribution of the dual: (1/|C|) Lee_C(x+y, x-y)."""
    deg = len(lee) - 1
    out = [0] * (deg + 1)
    for i, a in enumerate(lee):
        if a:
            for j, c in enumerate(_plus_minus(deg - i, i)):
                out[j] += a * c
    divided = _divide_exact(enumerate(out), code_size)
    return [divided.get(j, 0) for j in range(deg + 1)]


def e_polynomials():
    """``sum_j S[k][j] x^(8-j) y^j`` for k = 0..8, as coefficient lists by y-degree."""
    return [character_sum_table()[k].tolist() for k in range(9)]


# --- identity checks by evaluation ----------------------------------------

def _gauss_sum_of_products(words, re, im):
    """sum over rows w of prod_k (re[w_k] + i im[w_k]), exact."""
    bound = int(max(np.abs(re).max(), np.abs(im).max(), 1)) * 2
    n = words.shape[1]
    safe = len(words) * bound ** n < 2 ** 62
    dtype = np.int64 if safe else object
    R = np.ones(len(words), dtype=dtype)
    I = np.zeros(len(words), dtype=dtype)
    re = re.astype(dtype)
    im = im.astype(dtype)
    for k in range(n):
        a, b = re[words[:, k]], im[words[:, k]]
        R, I = R * a - I * b, R * b + I * a
    return int(R.sum()), int(I.sum())


def evaluation_points(count=45, seed=0):
    """Deterministic evaluation points for the 256 clwe variables.

    Half of the points are integer, half Gaussian-integer; values are drawn
    from ``[-3, 3]`` by a fixed-seed generator so runs are reproducible.
    """
    rng = np.random.default_rng(seed)
    points = []
    for t in range(count):
        re = rng.integers(-3, 4, size=256)
        im = np.zeros(256, dtype=np.int64) if t % 2 == 0 else rng.integers(-3, 4, size=256)
        points.append((re.astype(np.int64), im.astype(np.int64)))
    return points


def verify_clwe_macwilliams(code, dual_words=None, points=None, budget=DEFAULT_BUDGET):
    """Check clwe_{C^perp}(X) = (1/|C|) clwe_C(M X) at every evaluation point.

    The 256-variable polynomials are never expanded; both sides are
    evaluated exactly.  Raises :class:`IdentityViolation` with the failing
    point, otherwise returns True.
    """
    words = code.codewords(budget)
    if dual_words is None:
        dual_words = code.dual().codewords(budget)
    if points is None:
        points = evaluation_points(max(45, 5 * 9))
    m_re, m_im = character_matrix()
    size = len(words)
    for idx, (x_re, x_im) in enumerate(points):
        lhs = _gauss_sum_of_products(dual_words, x_re, x_im)
        y_re = m_re @ x_re - m_im @ x_im
        y_im = m_re @ x_im + m_im @ x_re
        rhs = _gauss_sum_of_products(words, y_re, y_im)
        if (lhs[0] * size, lhs[1] * size) != rhs:
            raise IdentityViolation(f"clwe identity fails at evaluation point {idx}",
                                    {"point": idx, "lhs_times_size": (lhs[0] * size, lhs[1] * size),
                                     "rhs": rhs})
    return True


def hadamard_transform(table):
    """f^(c) = sum_d chi(c.d) f(d) for ``table`` of shape (256,)*n indexed by CRT codes."""
    m_re, m_im = character_matrix()
    re = np.asarray(table, dtype=object)
    im = np.zeros_like(re)
    m_re, m_im = m_re.astype(object), m_im.astype(object)
    for axis in range(re.ndim):
        r2 = np.moveaxis(np.tensordot(m_re, re, axes=([1], [axis])) - np.tensordot(m_im, im, axes=([1], [axis])), 0, axis)
        i2 = np.moveaxis(np.tensordot(m_re, im, axes=([1], [axis])) + np.tensordot(m_im, re, axes=([1], [axis])), 0, axis)
        re, im = r2, i2
    return re, im


def hadamard_check(code, f, budget=DEFAULT_BUDGET):
    """Check sum_{d in C^perp} f(d) = (1/|C|) sum_{c in C} f^(c).

    ``f`` is either a callable on tuples of CRT codes or an array of shape
    ``(256,)*n``.  Intended for n <= 2.
    """
    n = code.n
    if callable(f):
        grid = np.indices((256,) * n).reshape(n, -1).T
        table = np.array([f(tuple(int(v) for v in d)) for d in grid], dtype=object).reshape((256,) * n)
    else:
        table = np.asarray(f, dtype=object)
    f_re, f_im = hadamard_transform(table)
    words = code.codewords(budget)
    dual_words = code.dual().codewords(budget)
    idx = tuple(words.T)
    rhs_re, rhs_im = int(f_re[idx].sum()), int(f_im[idx].sum())
    lhs = int(table[tuple(dual_words.T)].sum())
    if rhs_im != 0 or lhs * len(words) != rhs_re:
        raise IdentityViolation("Hadamard identity fails",
                                {"lhs_times_size": lhs * len(words), "rhs": (rhs_re, rhs_im)})
    return True

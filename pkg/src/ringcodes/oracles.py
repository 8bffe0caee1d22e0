"""Brute-force reference computations used to check the structural routes.

Nothing here relies on the CRT decomposition of codes: R products are
formed by expanding in the basis 1, u, v, uv, and duals are found by
scanning the whole ambient space.
"""

from __future__ import annotations

import numpy as np

from .linear import RCode, Z4Code, all_vectors
from .ring import ADD_TABLE, COEFF, element, from_coeff, mul_via_coefficients

#: products by coefficient expansion, indexed by CRT code
MUL_COEFF_TABLE = np.array(
    [[mul_via_coefficients(element(a), element(b)).code for b in range(256)] for a in range(256)],
    dtype=np.int64,
)


def inner_product_zero(vectors, generator):
    """Mask of rows of ``vectors`` (CRT codes) orthogonal to ``generator`` over R."""
    acc = np.zeros((len(vectors), 4), dtype=np.int64)
    for k, g in enumerate(generator):
        acc += COEFF[MUL_COEFF_TABLE[vectors[:, k], g]]
    return ~(acc % 4).any(axis=1)


def brute_force_dual(code, generators=None):
    """All x in R^n with x.g = 0 for every R-generator g; returns CRT-code rows."""
    n = code.n if isinstance(code, RCode) else len(generators[0])
    if generators is None:
        generators = code.generators()
    space = np.indices((256,) * n).reshape(n, -1).T
    mask = np.ones(len(space), dtype=bool)
    for g in generators:
        mask &= inner_product_zero(space, g)
    return space[mask]


def brute_force_z4_dual(code):
    """Dual of a Z4 code by scanning Z4^n (feasible for n <= 8)."""
    space = all_vectors(code.n)
    G = code.generator
    if not len(G):
        return space
    return space[~((space @ G.T) % 4).any(axis=1)]


def rows_to_set(rows):
    return {tuple(int(x) for x in r) for r in rows}


def random_z4_code(n, rng, max_rows=None):
    """Random Z4 code: a few random rows, each optionally doubled to produce 2-torsion."""
    max_rows = n + 1 if max_rows is None else max_rows
    k = int(rng.integers(0, max_rows + 1))
    rows = rng.integers(0, 4, size=(k, n))
    if k:
        rows = rows * rng.choice([1, 1, 2], size=(k, 1))
    return Z4Code(rows % 4, n)


def random_rcode(n, rng):
    return RCode(random_z4_code(n, rng) for _ in range(4))


def random_r_generators(n, rng, count=None):
    """Random R-vectors (CRT codes) to be used as generators of an R-linear code."""
    count = int(rng.integers(0, n + 2)) if count is None else count
    out = []
    for _ in range(count):
        coeffs = rng.integers(0, 4, size=(n, 4))
        out.append(tuple(from_coeff(*map(int, c)).code for c in coeffs))
    return out


def r_span_by_closure(generators, n):
    """R-span of ``generators`` by closing under addition and multiplication by u, v.

    Uses coefficient-route products only.  Returns a set of tuples of CRT codes.
    """
    u, v = from_coeff(0, 1).code, from_coeff(0, 0, 1).code
    zero = (0,) * n
    span = {zero}
    frontier = [zero]
    seeds = set()
    for g in generators:
        g = tuple(g)
        for s in (g, tuple(MUL_COEFF_TABLE[u][x] for x in g), tuple(MUL_COEFF_TABLE[v][x] for x in g),
                  tuple(MUL_COEFF_TABLE[MUL_COEFF_TABLE[u][v]][x] for x in g)):
            seeds.add(tuple(int(x) for x in s))
    while frontier:
        new = []
        for w in frontier:
            for s in seeds:
                c = tuple(int(ADD_TABLE[a, b]) for a, b in zip(w, s))
                if c not in span:
                    span.add(c)
                    new.append(c)
        frontier = new
    return span

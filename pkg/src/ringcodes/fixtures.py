"""Shipped polynomial data: factorizations of x^n - 1 over Z4 and the odd-length cyclic code table.

Every factorization is multiplied out and compared with x^n - 1 when first
requested; a mismatch raises immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations
from operator import mul

from .exceptions import IdentityViolation
from .z4 import Z4Poly

# basic irreducible factors of x^n - 1 over Z4 (odd n)
_FACTORS = {
    3: ("x+3", "x^2+x+1"),
    5: ("x+3", "x^4+x^3+x^2+x+1"),
    7: ("x+3", "x^3+2x^2+x+3", "x^3+3x^2+2x+3"),
    9: ("x+3", "x^2+x+1", "x^6+x^3+1"),
    # L2's "3^{7}" term is read as 3x^7; the product check below confirms it
    23: ("x+3",
         "x^11+2x^10+3x^9+3x^7+3x^6+3x^5+2x^4+x+3",
         "x^11+3x^10+2x^7+x^6+x^5+x^4+x^2+2x+3"),
}


@lru_cache(maxsize=None)
def factorization(n):
    """Basic irreducible factors of x^n - 1 over Z4, verified by multiplication."""
    if n not in _FACTORS:
        raise KeyError(f"no shipped factorization of x^{n}-1 (have {sorted(_FACTORS)})")
    factors = tuple(Z4Poly.parse(t) for t in _FACTORS[n])
    product_ = reduce(mul, factors, Z4Poly([1]))
    if product_ != Z4Poly.x_n_minus_1(n):
        raise IdentityViolation(f"shipped factors of x^{n}-1 multiply to {product_}", factors)
    return factors


def monic_divisors(n):
    """All monic divisors of x^n - 1 as products of subsets of the basic factors."""
    factors = factorization(n)
    out = []
    for r in range(len(factors) + 1):
        for idx in combinations(range(len(factors)), r):
            out.append((frozenset(idx), reduce(mul, (factors[i] for i in idx), Z4Poly([1]))))
    return out


def length23_factors():
    """L1, L2, L3 with x^23 - 1 = L1*L2*L3."""
    return factorization(23)


@dataclass(frozen=True)
class TableRow:
    index: int
    n: int
    text: str
    expr: str
    length: int
    k1: int
    k2: int
    d_lee: int
    note: str = ""


_T1 = [
    (3, "x^2+x+3", None, (12, 4, 8, 2)),
    (3, "(1-u)(x^2+x+1)+2", None, (12, 2, 10, 2)),
    (5, "x^4+x^3+x^2+x+1", None, (20, 4, 0, 5)),
    (5, "(1-v)(x+3)+v(x^4+x^3+x^2+x+1)+2", None, (20, 10, 10, 2)),
    (7, "x^3+2x^2+x+1", None, (28, 16, 12, 2)),
    (7, "x^4+x^3+3x^2+3", None, (28, 12, 12, 4)),
    (7, "x^6+x^5+x^4+3x^3+3x^2+x+3", None, (28, 4, 12, 6)),
    (7, "x^4+x^3+3x^2+2x+1", None, (28, 0, 12, 8)),
    (7, "uvx^3+2uvx^2+x+1", None, (28, 12, 6, 2)),
    (7, "x^4+(1+2v)x^3+3x^2+2x+1", None, (28, 12, 8, 4)),
    (7, "(1-uv)(x^6+x^5+x^4+x^3+3x^2+x+3+uv(x+3)",
     "(1-uv)(x^6+x^5+x^4+x^3+3x^2+x+3)+uv(x+3)", (28, 3, 15, 4)),
    (7, "(1-uv)(x^6+x^5+x^4+x^3+3x^2+x+3+uv(x^3+2x^2+x+3)",
     "(1-uv)(x^6+x^5+x^4+x^3+3x^2+x+3)+uv(x^3+2x^2+x+3)", (28, 4, 12, 6)),
    (9, "(1-u-v+uv)(x^2+x+1)+(u+v-uv)(x^6+x^3+1)+2", None, (36, 16, 20, 2)),
    (9, "(1-v)(x+1)+v(x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1)+2", None, (36, 18, 18, 2)),
    (9, "x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+3+2uv(x^6+x^3+3x^2+3x)", None, (36, 4, 20, 4)),
]

CYCLIC_TABLE = tuple(
    TableRow(
        index=i + 1, n=n, text=text, expr=fixed or text,
        length=p[0], k1=p[1], k2=p[2], d_lee=p[3],
        note=("generator text has an unbalanced parenthesis; closed before '+uv'"
              if fixed else ""),
    )
    for i, (n, text, fixed, p) in enumerate(_T1)
)

#: rows whose minimum Lee distance must agree exactly
STRICT_DISTANCE_ROWS = (1, 3, 5, 6, 7, 8)

#: tabulated parameters of the length-23 code: (length, k1, k2, d_Lee)
LENGTH23_TABULATED = (92, 44, 4, 10)

"""The 256-element ring R = Z4 + uZ4 + vZ4 + uvZ4 with u^2 = u, v^2 = v, uv = vu.

Every element is held in both coordinate systems: the coefficient form
``a + b*u + c*v + d*uv`` and the CRT form ``(r1, r2, r3, r4)`` with
``r = r1*e1 + r2*e2 + r3*e3 + r4*e4``.  Multiplication is componentwise on
the CRT side.

Array code elsewhere in the package addresses elements by their *CRT code*
``r1 + 4*r2 + 16*r3 + 64*r4`` (see :data:`CRT`); :func:`enumerate_ring`
gives the canonical ordering used for enumerator variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .z4 import lee_weight_z4

CLASS_SIZES = (1, 8, 28, 56, 70, 56, 28, 8, 1)


def coeff_to_crt(a, b, c, d):
    return (a % 4, (a + b) % 4, (a + c) % 4, (a + b + c + d) % 4)


def crt_to_coeff(r1, r2, r3, r4):
    return (r1 % 4, (r2 - r1) % 4, (r3 - r1) % 4, (r4 - r2 - r3 + r1) % 4)


def crt_code(crt):
    r1, r2, r3, r4 = crt
    return r1 + 4 * r2 + 16 * r3 + 64 * r4


class RElement:
    """One element of R.  Use :func:`from_coeff` / :func:`from_crt` to build."""

    __slots__ = ("coeff", "crt", "code")

    def __init__(self, coeff, crt):
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "crt", crt)
        object.__setattr__(self, "code", crt_code(crt))

    def __setattr__(self, name, value):
        raise AttributeError("RElement is immutable")

    def __eq__(self, other):
        if isinstance(other, int):
            other = from_coeff(other, 0, 0, 0)
        return isinstance(other, RElement) and self.code == other.code

    def __hash__(self):
        return self.code

    def __add__(self, other):
        other = _lift(other)
        return _BY_CODE[crt_code(tuple((x + y) % 4 for x, y in zip(self.crt, other.crt)))]

    __radd__ = __add__

    def __neg__(self):
        return _BY_CODE[crt_code(tuple(-x % 4 for x in self.crt))]

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        return mul(self, _lift(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        return _BY_CODE[crt_code(tuple(pow(x, k, 4) for x in self.crt))]

    def is_zero(self):
        return self.code == 0

    def is_scalar(self):
        """True if the element lies in the prime subring Z4."""
        return self.coeff[1:] == (0, 0, 0)

    def __repr__(self):
        return f"RElement({str(self)!r})"

    def __str__(self):
        terms = []
        for c, name in zip(self.coeff, ("", "u", "v", "uv")):
            if not c:
                continue
            if not name:
                terms.append(str(c))
            else:
                terms.append(name if c == 1 else f"{c}{name}")
        return "+".join(terms) or "0"

    def crt_str(self):
        return "[" + ",".join(map(str, self.crt)) + "]"

    @classmethod
    def parse(cls, text):
        """Parse ``1+3u+3v+uv``-style text."""
        from .expr import parse_element

        return parse_element(text)


def _lift(x):
    return from_coeff(x, 0, 0, 0) if isinstance(x, int) else x


_BY_CODE = [None] * 256
for _crt in product(range(4), repeat=4):
    _el = RElement(crt_to_coeff(*_crt), _crt)
    _BY_CODE[_el.code] = _el
del _crt, _el


def from_coeff(a, b=0, c=0, d=0):
    return _BY_CODE[crt_code(coeff_to_crt(a, b, c, d))]


def from_crt(r1, r2, r3, r4):
    return _BY_CODE[crt_code((r1 % 4, r2 % 4, r3 % 4, r4 % 4))]


def element(code):
    """Element with the given CRT code (0..255)."""
    return _BY_CODE[code]


ZERO = from_coeff(0)
ONE = from_coeff(1)
U = from_coeff(0, 1)
V = from_coeff(0, 0, 1)
UV = from_coeff(0, 0, 0, 1)
E1, E2, E3, E4 = (from_crt(*row) for row in np.eye(4, dtype=int).tolist())
IDEMPOTENTS = (E1, E2, E3, E4)


def mul(x, y):
    """Product in R, computed componentwise on CRT coordinates."""
    return _BY_CODE[crt_code(tuple(p * q % 4 for p, q in zip(x.crt, y.crt)))]


def mul_via_coefficients(x, y):
    """Product expanded in the basis 1, u, v, uv using u^2=u, v^2=v, uv=vu.

    Independent of the CRT route; used to cross-check :func:`mul`.
    """
    a, b, c, d = x.coeff
    p, q, r, s = y.coeff
    one = a * p
    u = a * q + b * p + b * q
    v = a * r + c * p + c * r
    # u*v, u*uv, v*uv, uv*uv all collapse to uv
    uv = a * s + d * p + b * r + c * q + b * s + d * q + c * s + d * r + d * s
    return from_coeff(one % 4, u % 4, v % 4, uv % 4)


def gray_symbol(x):
    return x.crt


def lee_weight_r(x):
    return sum(lee_weight_z4(r) for r in x.crt)


def lee_class(x):
    return lee_weight_r(x)


def hamming_weight_r(v):
    return sum(1 for x in v if not x.is_zero())


@dataclass(frozen=True)
class Gaussian:
    """Exact Gaussian integer ``re + im*i``."""

    re: int = 0
    im: int = 0

    def __add__(self, other):
        other = _gauss(other)
        return Gaussian(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_gauss(other))

    def __mul__(self, other):
        other = _gauss(other)
        return Gaussian(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Gaussian(1, 0)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.re == other and self.im == 0
        return isinstance(other, Gaussian) and (self.re, self.im) == (other.re, other.im)

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        return f"{self.re}{self.im:+d}i"


def _gauss(x):
    return Gaussian(x, 0) if isinstance(x, int) else x


I_POWERS = (Gaussian(1, 0), Gaussian(0, 1), Gaussian(-1, 0), Gaussian(0, -1))


def chi(x):
    """Additive character a + ub + vc + uvd -> i^d."""
    return I_POWERS[x.coeff[3]]


def enumerate_ring():
    """All 256 elements ordered by Lee class, then lexicographically by (a, b, c, d)."""
    return list(_CANONICAL)


_CANONICAL = tuple(sorted(_BY_CODE, key=lambda el: (lee_weight_r(el), el.coeff)))

#: canonical position (0-based) of each element, indexed by CRT code
CANONICAL_POSITION = np.empty(256, dtype=np.int64)
for _pos, _el in enumerate(_CANONICAL):
    CANONICAL_POSITION[_el.code] = _pos
del _pos, _el

# array views indexed by CRT code
CRT = np.array([el.crt for el in _BY_CODE], dtype=np.int64)
COEFF = np.array([el.coeff for el in _BY_CODE], dtype=np.int64)
LEE = np.array([lee_weight_r(el) for el in _BY_CODE], dtype=np.int64)
MUL_TABLE =np.array([[mul(x, y).code for y in _BY_CODE] for x in _BY_CODE], dtype=np.int64)
ADD_TABLE = np.array([[(x + y).code for y in _BY_CODE] for x in _BY_CODE], dtype=np.int64)
CHI_POWER = COEFF[:, 3].copy()


def lee_classes():
    """Lee-weight fibers D_0..D_8 as lists of elements in canonical order."""
    out = [[] for _ in range(9)]
    for el in _CANONICAL:
        out[lee_weight_r(el)].append(el)
    return out

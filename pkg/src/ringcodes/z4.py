"""Arithmetic over Z4: scalars, vectors and polynomials."""

from __future__ import annotations

import math
from itertools import zip_longest

from .exceptions import DivisibilityError

#: degree of the zero polynomial; compares below every integer degree
NEG_INF = -math.inf

_LEE = (0, 1, 2, 1)
UNITS = (1, 3)


def lee_weight_z4(x):
    return _LEE[x % 4]


def lee_weight_vec(v):
    return sum(_LEE[x % 4] for x in v)


def hamming_weight_vec(v):
    return sum(1 for x in v if x % 4)


def cyclic_shift(v, k=1):
    """Rotate right by ``k`` positions: (c0, ..., c_{n-1}) -> (c_{n-1}, c0, ...)."""
    v = tuple(v)
    if not v:
        return v
    k %= len(v)
    return v[-k:] + v[:-k] if k else v


def inverse(x):
    x %= 4
    if x not in UNITS:
        raise ZeroDivisionError(f"{x} is not a unit of Z4")
    return x  # 1*1 = 3*3 = 1 mod 4


class Z4Poly:
    """Polynomial over Z4, coefficients stored lowest degree first.

    Instances are immutable and always canonical (no trailing zeros), so
    ``==`` and ``hash`` are structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) % 4 for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Z4Poly is immutable")

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def x_n_minus_1(cls, n):
        return cls([3] + [0] * (n - 1) + [1])

    @classmethod
    def parse(cls, text):
        """Parse ``x^4+x^3+3x^2+2x+1`` style text (coefficients reduced mod 4)."""
        from .expr import parse_polynomial

        return parse_polynomial(text, scalar=True)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.leading == 1

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = Z4Poly([other])
        return isinstance(other, Z4Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Z4Poly", self.coeffs))

    def __add__(self, other):
        other = _as_poly(other)
        return Z4Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Z4Poly(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Z4Poly(other * a for a in self.coeffs)
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Z4Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Z4Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, d):
        return poly_divmod(self, d)

    def __floordiv__(self, d):
        return poly_divmod(self, d)[0]

    def __mod__(self, d):
        return poly_divmod(self, d)[1]

    def divides(self, other):
        """True iff ``self`` (monic) divides ``other`` in Z4[x]."""
        return poly_divmod(other, self)[1].is_zero()

    def vector(self, n):
        """Coefficient vector of ``self mod (x^n - 1)``, length ``n``."""
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            out[i % n] = (out[i % n] + a) % 4
        return tuple(out)

    def reduce_mod(self, n):
        return Z4Poly(self.vector(n))

    def __repr__(self):
        return f"Z4Poly({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)


def _as_poly(p):
    return Z4Poly([p]) if isinstance(p, int) else p


def poly_mul_mod(a, b, n):
    """Product of ``a`` and ``b`` in Z4[x]/(x^n - 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return (a * b).reduce_mod(n)


def poly_divmod(a, d):
    """Long division by a monic divisor: returns ``(q, r)`` with ``a = q*d + r``."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if not d.is_monic():
        raise DivisibilityError(f"divisor {d} is not monic")
    r = list(a.coeffs)
    dd = len(d.coeffs) - 1
    if len(r) - 1 < dd:
        return Z4Poly(), a
    q = [0] * (len(r) - dd)
    for k in range(len(r) - 1, dd - 1, -1):
        c = r[k] % 4
        if c:
            q[k - dd] = c
            for j, b in enumerate(d.coeffs):
                r[k - dd + j] -= c * b
    return Z4Poly(q), Z4Poly(r[:dd])


def reciprocal(f):
    """``x^deg(f) * f(1/x)``: the coefficient sequence reversed."""
    if f.is_zero():
        raise ValueError("reciprocal of the zero polynomial is undefined")
    return Z4Poly(reversed(f.coeffs))

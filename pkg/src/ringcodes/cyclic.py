"""Cyclic codes over Z4 and R from generator polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import DivisibilityError
from .expr import parse_r_polynomial
from .linear import RCode, Z4Code, decompose_rcode
from .ring import IDEMPOTENTS, ZERO, from_coeff
from .z4 import NEG_INF, Z4Poly, cyclic_shift, poly_divmod, reciprocal


def _shifts(vec):
    return [cyclic_shift(vec, k) for k in range(len(vec))]


def ideal_from_generators(gens, n):
    """Z4-span of every cyclic shift of every generator, taken mod x^n - 1."""
    rows = []
    for g in gens:
        if isinstance(g, str):
            g = Z4Poly.parse(g)
        rows.extend(_shifts(g.vector(n)))
    return Z4Code(rows, n)


@dataclass(frozen=True)
class Z4CyclicSpec:
    """Cyclic code ``(f + 2p, 2g)`` in Z4[x]/(x^n - 1)."""

    n: int
    f: Z4Poly
    p: Z4Poly = field(default_factory=Z4Poly)
    g: Z4Poly = None

    def __post_init__(self):
        if self.g is None:
            object.__setattr__(self, "g", self.f)

    def validate(self):
        """Raise :class:`DivisibilityError` naming the first broken link of g | f | x^n - 1."""
        xn = Z4Poly.x_n_minus_1(self.n)
        for name, poly in (("f", self.f), ("g", self.g)):
            if not poly.is_monic():
                raise DivisibilityError(f"{name} = {poly} is not monic")
        if not self.f.divides(xn):
            raise DivisibilityError(f"f = {self.f} does not divide x^{self.n}-1")
        if not self.g.divides(self.f):
            raise DivisibilityError(f"g = {self.g} does not divide f = {self.f}")
        if not self.g.divides(self.p * (xn // self.f)):
            raise DivisibilityError(
                f"g = {self.g} does not divide p*(x^{self.n}-1)/f with p = {self.p}")
        return self

    @property
    def cardinality(self):
        return 2 ** (2 * self.n - self.f.degree - self.g.degree)

    def generators(self):
        return [self.f + 2 * self.p, 2 * self.g]

    def code(self):
        return cyclic_code_z4(self)


def cyclic_code_z4(spec):
    spec.validate()
    return ideal_from_generators(spec.generators(), spec.n)


def is_cyclic(code):
    """True iff the shift of every generator row lies in the code."""
    return all(code.contains(cyclic_shift(tuple(row))) for row in code.generator)


def is_cyclic_r(code):
    return all(is_cyclic(c) for c in code.components)


def cyclic_type(f0, f1, n):
    """Type ``(k1, k2)`` of ``(f0, 2 f1)`` for odd n and monic f1 | f0 | x^n - 1."""
    if n % 2 == 0:
        raise ValueError("the type formula needs odd n")
    Z4CyclicSpec(n, f0, Z4Poly(), f1).validate()
    return n - f0.degree, f0.degree - f1.degree


def _make_monic(poly):
    lead = poly.leading
    return poly * lead  # units of Z4 are their own inverses


def dual_cyclic_z4(spec):
    """Generators of the dual code: (g^* + 2 x^(deg g^ - deg u) u^*, 2 f^*)."""
    spec.validate()
    n = spec.n
    xn = Z4Poly.x_n_minus_1(n)
    f_hat = xn // spec.f
    g_hat = xn // spec.g
    u, rem = poly_divmod(spec.p * f_hat, spec.g)
    if not rem.is_zero():
        raise DivisibilityError(f"p*(x^{n}-1)/f is not divisible by g = {spec.g}")
    # u is only determined mod g^; the formula needs deg u < deg g^
    u = poly_divmod(u, g_hat)[1] if not g_hat.is_zero() else u
    g_star = reciprocal(g_hat)
    unit = g_star.leading
    new_f = g_star * unit
    if u.is_zero():
        new_p = Z4Poly()
    else:
        new_p = Z4Poly.monomial(g_hat.degree - u.degree) * reciprocal(u) * unit
    new_g = _make_monic(reciprocal(f_hat))
    return Z4CyclicSpec(n, new_f, new_p.reduce_mod(n) if new_p.degree >= n else new_p, new_g)


@dataclass(frozen=True)
class RCyclicSpec:
    """Cyclic R-code from four component specs.

    The combined generators are ``sum e_i (f_i + 2 p_i)`` and ``2 sum e_i g_i``.
    """

    n: int
    components: tuple

    def generator_polynomials(self):
        """The two R-polynomials as coefficient lists of RElements."""
        return [_combine([s.f + 2 * s.p for s in self.components], self.n),
                _combine([2 * s.g for s in self.components], self.n)]

    def code(self):
        return RCode(cyclic_code_z4(s) for s in self.components)

    def code_from_generators(self):
        """The R-ideal spanned by the combined generators, independent of :meth:`code`."""
        rows = []
        for coeffs in self.generator_polynomials():
            vec = tuple(c.code for c in coeffs)
            rows.extend(_shifts(vec))
        return decompose_rcode(rows, self.n)


def _combine(polys, n):
    """sum_i e_i * polys[i] with the result reduced mod x^n - 1."""
    coeffs = [ZERO] * n
    for e, poly in zip(IDEMPOTENTS, polys):
        for k, c in enumerate(poly.vector(n)):
            coeffs[k] = coeffs[k] + e * c
    return coeffs


def r_cyclic_from_components(specs):
    specs = tuple(specs)
    if len(specs) != 4:
        raise ValueError("four component specs are required")
    lengths = {s.n for s in specs}
    if len(lengths) != 1:
        raise ValueError(f"component lengths differ: {sorted(lengths)}")
    return RCyclicSpec(lengths.pop(), specs)


def r_generator_components(expr, n):
    """Project an R[x] expression, reduced mod x^n - 1, onto its four CRT Z4-polynomials."""
    coeffs = parse_r_polynomial(expr) if isinstance(expr, str) else list(expr)
    folded = [ZERO] * n
    for k, c in enumerate(coeffs):
        folded[k % n] = folded[k % n] + c
    return tuple(Z4Poly(c.crt[i] for c in folded) for i in range(4))


def parse_r_generator(expr, n):
    """R-code generated (as an ideal) by one or more ``;``-separated expressions."""
    parts = [p for p in expr.split(";") if p.strip()] if isinstance(expr, str) else [expr]
    projected = [r_generator_components(p, n) for p in parts]
    return RCode(ideal_from_generators([proj[i] for proj in projected], n) for i in range(4))


def quasi_shift(v, s):
    """Cyclically shift each of the ``s`` equal blocks of ``v`` by one position."""
    v = tuple(v)
    if s < 1 or len(v) % s:
        raise ValueError(f"length {len(v)} is not divisible by {s}")
    m = len(v) // s
    out = ()
    for b in range(s):
        out += cyclic_shift(v[b * m:(b + 1) * m])
    return out


def is_quasi_cyclic(code, s):
    """True iff ``code`` (a Z4Code) is invariant under the index-``s`` quasi-shift."""
    return all(code.contains(quasi_shift(tuple(row), s)) for row in code.generator)


def length23_spec():
    """Component specs of the length-23 code: C1 = C2 = (L1 L2 + 2 L2), C3 = C4 = (L1 L3 + 2 L3)."""
    from .fixtures import length23_factors

    l1, l2, l3 = length23_factors()
    a = Z4CyclicSpec(23, l1 * l2, l2, l2)
    b = Z4CyclicSpec(23, l1 * l3, l3, l3)
    return r_cyclic_from_components((a, a, b, b))

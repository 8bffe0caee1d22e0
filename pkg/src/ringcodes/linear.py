"""Linear codes over Z4 and over R.

An R-linear code is stored through its unique decomposition
``C = e1*C1 + e2*C2 + e3*C3 + e4*C4`` into four Z4-linear codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from . import _enum
from .exceptions import BudgetExceeded, UndefinedDistance
from .ring import CRT, IDEMPOTENTS, crt_code, element

DEFAULT_BUDGET = 1 << 25


@dataclass(frozen=True)
class StandardForm:
    """Generator ``[[I, A, B], [0, 2I, 2C]]`` of a column-permuted copy of a code.

    ``perm[j]`` is the original column placed at position ``j``.  ``C`` holds
    the 0/1 matrix whose double appears in the second block row.
    """

    k1: int
    k2: int
    perm: tuple
    matrix: np.ndarray
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray


def _as_rows(rows, n):
    arr = np.asarray(rows, dtype=np.int64)
    if arr.size == 0:
        if n is None:
            raise ValueError("length is required for a code with no generator rows")
        return np.zeros((0, n), dtype=np.int64)
    if arr.ndim == 1:
        arr = arr[None, :]
    if n is not None and arr.shape[1] != n:
        raise ValueError(f"rows have length {arr.shape[1]}, expected {n}")
    return arr % 4


def standard_form(rows, n=None):
    """Row-reduce a Z4 generator matrix to standard form.

    Columns are scanned left to right.  Unit pivots are taken first and
    normalised to 1; once no unit remains, pivots equal to 2 are taken on
    the remaining columns.  Columns are swapped to bring pivots to the
    diagonal and the swaps are recorded in ``perm``.
    """
    M = _as_rows(rows, n).copy()
    k, n = M.shape
    perm = list(range(n))

    def swap_cols(i, j):
        M[:, [i, j]] = M[:, [j, i]]
        perm[i], perm[j] = perm[j], perm[i]

    r = 0
    for col in range(n):
        if r == k:
            break
        hits = [(i, j) for j in range(r, n) for i in range(r, k) if M[i, j] % 2]
        if not hits:
            break
        i, j = min(hits, key=lambda t: (t[1], t[0]))
        M[[r, i]] = M[[i, r]]
        swap_cols(r, j)
        M[r] = (M[r] * M[r, r]) % 4  # units are self-inverse in Z4
        for i2 in range(k):
            if i2 != r and M[i2, r]:
                M[i2] = (M[i2] - M[i2, r] * M[r]) % 4
        r += 1
    k1 = r
    for col in range(n):
        if r == k:
            break
        hits = [(i, j) for j in range(r, n) for i in range(r, k) if M[i, j]]
        if not hits:
            break
        i, j = min(hits, key=lambda t: (t[1], t[0]))
        M[[r, i]] = M[[i, r]]
        swap_cols(r, j)
        for i2 in range(k):
            if i2 != r and M[i2, r] >= 2:
                M[i2] = (M[i2] - M[r]) % 4
        r += 1
    k2 = r - k1
    M = M[:r]
    A = M[:k1, k1:k1 + k2].copy()
    B = M[:k1, k1 + k2:].copy()
    C = M[k1:, k1 + k2:] // 2
    return StandardForm(k1, k2, tuple(perm), M, A, B, C)


class Z4Code:
    """A Z4-linear code of length ``n`` given by generator rows."""

    def __init__(self, rows, n=None):
        self.generator = _as_rows(rows, n)
        self.n = self.generator.shape[1]

    @classmethod
    def zero(cls, n):
        return cls([], n)

    @classmethod
    def full(cls, n):
        return cls(np.eye(n, dtype=np.int64), n)

    @classmethod
    def repetition(cls, n):
        return cls([[1] * n])

    @classmethod
    def repetition_dual(cls, n):
        return cls.repetition(n).dual()

    @cached_property
    def standard_form(self):
        return standard_form(self.generator, self.n)

    @property
    def type(self):
        return self.standard_form.k1, self.standard_form.k2

    @property
    def cardinality(self):
        k1, k2 = self.type
        return 4 ** k1 * 2 ** k2

    def __len__(self):
        return self.cardinality

    @cached_property
    def basis(self):
        """Standard-form rows in original coordinates, paired with their additive order."""
        sf = self.standard_form
        inv = np.argsort(sf.perm)
        rows = sf.matrix[:, inv]
        return [(tuple(int(x) for x in row), 4 if i < sf.k1 else 2) for i, row in enumerate(rows)]

    def _check_budget(self, budget):
        if self.cardinality > budget:
            raise BudgetExceeded(self.cardinality, budget)

    def codewords(self, budget=DEFAULT_BUDGET):
        """All codewords as a ``(|C|, n)`` uint8 array (first row is zero)."""
        self._check_budget(budget)
        if not self.basis:
            return np.zeros((1, self.n), dtype=np.uint8)
        return _enum.span_array(self.basis)

    def codeword_set(self, budget=DEFAULT_BUDGET):
        return {tuple(int(x) for x in w) for w in self.codewords(budget)}

    def contains(self, v):
        """Exact membership test by reduction against the standard form."""
        sf = self.standard_form
        w = (np.asarray(v, dtype=np.int64) % 4)[list(sf.perm)]
        for i in range(sf.k1):
            if w[i]:
                w = (w - w[i] * sf.matrix[i]) % 4
        for j in range(sf.k2):
            c = sf.k1 + j
            if w[c] % 2:
                return False
            if w[c]:
                w = (w - sf.matrix[c]) % 4
        return not w.any()

    def issubset(self, other):
        return all(other.contains(row) for row in self.generator)

    def __eq__(self, other):
        return (isinstance(other, Z4Code) and self.n == other.n
                and self.type == other.type and self.issubset(other))

    __hash__ = None

    def dual(self):
        """Dual code built from the standard-form blocks, columns restored."""
        sf = self.standard_form
        n, k1, k2 = self.n, sf.k1, sf.k2
        k3 = n - k1 - k2
        A, B, C = sf.A, sf.B, sf.C
        top = np.hstack([(-B.T - C.T @ A.T) % 4, C.T % 4, np.eye(k3, dtype=np.int64)])
        bottom = np.hstack([(2 * A.T) % 4, 2 * np.eye(k2, dtype=np.int64),
                            np.zeros((k2, k3), dtype=np.int64)])
        H = np.vstack([top.reshape(k3, n), bottom.reshape(k2, n)])
        inv = np.argsort(sf.perm)
        return Z4Code(H[:, inv] % 4, n)

    def is_self_orthogonal(self):
        G = self.generator
        return not ((G @ G.T) % 4).any()

    def is_self_dual(self):
        return self.is_self_orthogonal() and self.cardinality ** 2 == 4 ** self.n

    @cached_property
    def _minimum(self):
        return _enum.min_weights(self.basis, self.n)

    def min_distances(self, budget=DEFAULT_BUDGET):
        """``(d_Lee, d_Hamming)`` by exhaustive scan of the codewords."""
        self._check_budget(budget)
        if self._minimum is None:
            raise UndefinedDistance("the zero code has no minimum distance")
        return self._minimum[0], self._minimum[2]

    def min_lee_distance(self, budget=DEFAULT_BUDGET):
        return self.min_distances(budget)[0]

    def min_hamming_distance(self, budget=DEFAULT_BUDGET):
        return self.min_distances(budget)[1]

    def min_lee_witness(self, budget=DEFAULT_BUDGET):
        self.min_distances(budget)
        return self._minimum[1]

    def weight_distributions(self, budget=DEFAULT_BUDGET):
        """Lee (length 2n+1) and Hamming (length n+1) weight distributions."""
        self._check_budget(budget)
        if not self.basis:
            lee = np.zeros(2 * self.n + 1, dtype=np.int64)
            ham = np.zeros(self.n + 1, dtype=np.int64)
            lee[0] = ham[0] = 1
            return lee, ham
        return _enum.weight_histograms(self.basis, self.n)

    def __repr__(self):
        k1, k2 = self.type
        return f"Z4Code(n={self.n}, type=4^{k1}*2^{k2})"


def enumerate_codewords(code, budget=DEFAULT_BUDGET):
    return code.codeword_set(budget)


def dual_z4(code):
    return code.dual()


@dataclass(frozen=True)
class CodeParams:
    n: int
    k1: int
    k2: int
    d_lee: int | None
    d_hamming: int | None

    def to_json(self):
        return {"n": self.n, "k1": self.k1, "k2": self.k2,
                "dLee": self.d_lee, "dHamming": self.d_hamming}


class RCode:
    """Linear code over R held as its component quadruple (C1, C2, C3, C4)."""

    def __init__(self, components):
        components = tuple(components)
        if len(components) != 4:
            raise ValueError("an R-code has exactly four components")
        lengths = {c.n for c in components}
        if len(lengths) != 1:
            raise ValueError(f"component lengths differ: {sorted(lengths)}")
        self.components = components
        self.n = lengths.pop()

    @classmethod
    def zero(cls, n):
        return cls([Z4Code.zero(n)] * 4)

    @classmethod
    def full(cls, n):
        return cls([Z4Code.full(n)] * 4)

    @property
    def cardinality(self):
        out = 1
        for c in self.components:
            out *= c.cardinality
        return out

    def __len__(self):
        return self.cardinality

    @property
    def type(self):
        """Type exponents of the Gray image: sums of the component exponents."""
        return (sum(c.type[0] for c in self.components),
                sum(c.type[1] for c in self.components))

    def generators(self):
        """R-vectors e_i * g for every standard-form row g of C_i (CRT codes)."""
        out = []
        for i, comp in enumerate(self.components):
            for row, _ in comp.basis:
                crt = np.zeros((self.n, 4), dtype=np.int64)
                crt[:, i] = row
                out.append(tuple(crt_code(tuple(c)) for c in crt))
        return out

    def generator_matrix(self):
        """Stacked ``(e1 G1; e2 G2; e3 G3; e4 G4)`` as rows of RElements."""
        return [[element(c) for c in row] for row in self.generators()]

    def codewords(self, budget=DEFAULT_BUDGET):
        """All codewords as a ``(|C|, n)`` array of CRT codes."""
        if self.cardinality > budget:
            raise BudgetExceeded(self.cardinality, budget)
        parts = [c.codewords(budget).astype(np.int64) for c in self.components]
        out = np.zeros((1, self.n), dtype=np.int64)
        for i, words in enumerate(parts):
            out = (out[:, None, :] + (4 ** i) * words[None, :, :]).reshape(-1, self.n)
        return out

    def dual(self):
        return RCode(c.dual() for c in self.components)

    def is_self_orthogonal(self):
        return all(c.is_self_orthogonal() for c in self.components)

    def is_self_dual(self):
        return all(c.is_self_dual() for c in self.components)

    def contains(self, v):
        crt = CRT[np.asarray(v, dtype=np.int64)]
        return all(c.contains(crt[:, i]) for i, c in enumerate(self.components))

    def __eq__(self, other):
        return isinstance(other, RCode) and self.components == other.components

    __hash__ = None

    def min_distances(self, budget=DEFAULT_BUDGET):
        """``(d_Lee, d_Hamming)`` as minima over the nonzero components."""
        found = [c.min_distances(budget) for c in self.components if c.cardinality > 1]
        if not found:
            raise UndefinedDistance("the zero code has no minimum distance")
        return min(d for d, _ in found), min(h for _, h in found)

    def params(self, budget=DEFAULT_BUDGET):
        k1, k2 = self.type
        try:
            d_lee, d_ham = self.min_distances(budget)
        except UndefinedDistance:
            d_lee = d_ham = None
        return CodeParams(self.n, k1, k2, d_lee, d_ham)

    def gray_image(self):
        return gray_image(self)

    def __repr__(self):
        return f"RCode(n={self.n}, components={list(self.components)})"


def build_rcode(c1, c2, c3, c4):
    return RCode((c1, c2, c3, c4))


def decompose_rcode(generators, n=None):
    """Components of the R-span of ``generators`` (rows of RElements or CRT codes)."""
    rows = [[x if isinstance(x, (int, np.integer)) else x.code for x in g] for g in generators]
    if n is None:
        if not rows:
            raise ValueError("length is required when there are no generators")
        n = len(rows[0])
    crt = CRT[np.asarray(rows, dtype=np.int64).reshape(-1, n)]
    return RCode(Z4Code(crt[:, :, i], n) for i in range(4))


def dual_rcode(code):
    return code.dual()


def gray_image(code):
    """Block-diagonal generator ``diag(G1, G2, G3, G4)`` of the Gray image, length 4n."""
    n = code.n
    rows = []
    for i, comp in enumerate(code.components):
        for row in comp.generator:
            full = np.zeros(4 * n, dtype=np.int64)
            full[i * n:(i + 1) * n] = row
            rows.append(full)
    return Z4Code(rows, 4 * n)


def gray_vector(v):
    """Gray image of an R-vector given as CRT codes: block-ordered CRT coordinates."""
    crt = CRT[np.asarray(v, dtype=np.int64)]
    return tuple(int(x) for x in crt.T.ravel())


def is_self_dual(code):
    return code.is_self_dual()


def is_self_orthogonal(code):
    return code.is_self_orthogonal()


def min_distances(code, budget=DEFAULT_BUDGET):
    return code.min_distances(budget)


def diagonal_two_code(n):
    """The self-dual Z4 code generated by 2*I_n."""
    return Z4Code(2 * np.eye(n, dtype=np.int64), n)


def all_vectors(n, q=4):
    """Every vector of Z_q^n as an ``(q^n, n)`` array, lexicographic."""
    return np.array(list(product(range(q), repeat=n)), dtype=np.int64).reshape(-1, n)

"""Singleton bound and MDS analysis over Z4 and R."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

import numpy as np

from .exceptions import UndefinedDistance
from .linear import DEFAULT_BUDGET, Z4Code

FAMILIES = ("full space", "repetition", "repetition-dual")


@dataclass(frozen=True)
class SingletonReport:
    n: int
    log_size: Fraction  # log base |alphabet| of |C|
    d_hamming: int
    bound: Fraction
    is_mds: bool

    def to_json(self):
        return {"n": self.n, "logSize": str(self.log_size), "dHamming": self.d_hamming,
                "bound": str(self.bound), "isMDS": self.is_mds}


def log4_size(code):
    k1, k2 = code.type
    return k1 + Fraction(k2, 2)


def singleton_z4(code, budget=DEFAULT_BUDGET):
    if code.cardinality == 1:
        raise UndefinedDistance("the zero code has no minimum distance")
    d = code.min_hamming_distance(budget)
    log = log4_size(code)
    bound = code.n - log + 1
    return SingletonReport(code.n, log, d, bound, d == bound)


def singleton_r(code, budget=DEFAULT_BUDGET):
    _, d = code.min_distances(budget)
    log = sum(log4_size(c) for c in code.components) / 4
    bound = code.n - log + 1
    return SingletonReport(code.n, log, d, bound, d == bound)


def _is_unit_repetition(code):
    """True iff code = <w> for a vector w whose entries are all units."""
    if code.type != (1, 0):
        return False
    return all(int(x) % 2 for x in code.generator[0])


def mds_family(code):
    """Trivial MDS family ``code`` equals as a codeword set, or None."""
    n = code.n
    for name, ref in zip(FAMILIES, (Z4Code.full(n), Z4Code.repetition(n), Z4Code.repetition_dual(n))):
        if ref.cardinality > 1 and code == ref:
            return name
    return None


def equivalent_family(code):
    """Trivial MDS family containing ``code`` up to unit scaling and permutation of coordinates."""
    if code.cardinality == 1:
        return None
    if code.cardinality == 4 ** code.n:
        return "full space"
    if _is_unit_repetition(code):
        return "repetition"
    if _is_unit_repetition(code.dual()):
        return "repetition-dual"
    return None


@dataclass(frozen=True)
class Classification:
    n: int
    type: tuple
    d_hamming: int
    is_mds: bool
    family: str | None
    equivalent_family: str | None
    finding: str | None = None

    def to_json(self):
        return {"n": self.n, "type": list(self.type), "dHamming": self.d_hamming,
                "isMDS": self.is_mds, "family": self.family,
                "equivalentFamily": self.equivalent_family, "finding": self.finding}


def classify_z4_mds(code, budget=DEFAULT_BUDGET):
    """Singleton status plus membership in the three trivial MDS families.

    ``family`` is decided by codeword-set equality with Z4^n, <1> or <1>^perp.
    ``finding`` is set when the code is MDS but equals none of them, or
    equals one but is not MDS.  ``equivalent_family`` is the weaker
    membership up to unit scaling of coordinates.
    """
    report = singleton_z4(code, budget)
    family = mds_family(code)
    finding = None
    if report.is_mds and family is None:
        finding = "MDS code outside the trivial families"
    elif family is not None and not report.is_mds:
        finding = f"{family} code fails the Singleton bound with equality"
    return Classification(code.n, code.type, report.d_hamming, report.is_mds, family,
                          equivalent_family(code), finding)


def _code_key(code):
    words = code.codewords()
    order = np.lexsort(words.T[::-1])
    return words[order].tobytes()


def all_z4_codes(n):
    """Every Z4-linear code of length n, from all standard-form generators under all column orders."""
    seen = {}
    for k1 in range(n + 1):
        for k2 in range(n - k1 + 1):
            k3 = n - k1 - k2
            for a in product(range(4), repeat=k1 * k2):
                for b in product(range(4), repeat=k1 * k3):
                    for c in product(range(2), repeat=k2 * k3):
                        A = np.array(a, dtype=np.int64).reshape(k1, k2)
                        B = np.array(b, dtype=np.int64).reshape(k1, k3)
                        C = np.array(c, dtype=np.int64).reshape(k2, k3)
                        top = np.hstack([np.eye(k1, dtype=np.int64), A, B])
                        bottom = np.hstack([np.zeros((k2, k1), dtype=np.int64),
                                            2 * np.eye(k2, dtype=np.int64), 2 * C])
                        G = np.vstack([top.reshape(k1, n), bottom.reshape(k2, n)])
                        for perm in set(permutations(range(n))):
                            code = Z4Code(G[:, list(perm)], n)
                            key = _code_key(code)
                            if key not in seen:
                                seen[key] = code
    return sorted(seen.values(), key=lambda c: (c.cardinality, _code_key(c)))


@dataclass
class StructureCheck:
    name: str
    statement: str
    premises: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def status(self):
        if self.counterexamples:
            return "counterexample"
        return "confirmed" if self.premises else "vacuous"

    def to_json(self, limit=10):
        return {"name": self.name, "statement": self.statement, "status": self.status,
                "premisesMet": self.premises, "counterexamples": self.counterexamples[:limit],
                "counterexampleCount": len(self.counterexamples)}


@dataclass(frozen=True)
class _Comp:
    """Precomputed component data used by the sweep."""

    code: Z4Code
    log: Fraction
    d: int | None
    is_mds: bool

    @property
    def params(self):
        return (self.code.n, str(self.log), self.d)

    def describe(self):
        return {"generator": self.code.generator.tolist(), "type": list(self.code.type),
                "dHamming": self.d, "isMDS": self.is_mds}


def _component(code):
    if code.cardinality == 1:
        return _Comp(code, Fraction(0), None, False)
    rep = singleton_z4(code)
    return _Comp(code, rep.log_size, rep.d_hamming, rep.is_mds)


def directed_pool(n, rng):
    """Trivial MDS codes, the zero code and a spread of non-MDS codes of length n."""
    from .oracles import random_z4_code

    codes = [Z4Code.zero(n), Z4Code.full(n), Z4Code.repetition(n), Z4Code.repetition_dual(n),
             Z4Code([[2] * n]), Z4Code(2 * np.eye(n, dtype=np.int64)),
             Z4Code([[1] + [0] * (n - 1)]), Z4Code([[1] * n, [0] * (n - 1) + [2]]),
             Z4Code(np.eye(n, dtype=np.int64)[:-1]) if n > 1 else Z4Code.zero(n)]
    for _ in range(8):
        codes.append(random_z4_code(n, rng))
    unique = {}
    for c in codes:
        unique.setdefault(_code_key(c), c)
    return list(unique.values())


def _check_tuple(n, comps, checks):
    """Apply every structure check to one R-code given by four component records."""
    nonzero = [c for c in comps if c.d is not None]
    if not nonzero:
        return
    d = min(c.d for c in nonzero)
    log = sum(c.log for c in comps) / 4
    is_mds = d == n - log + 1
    mds_flags = [c.is_mds for c in comps]
    same = len({c.params for c in comps}) == 1
    all_mds_same = all(mds_flags) and same

    def witness():
        return {"n": n, "components": [c.describe() for c in comps], "dHamming": d,
                "logSize": str(log), "isMDS": is_mds}

    def record(key, premise, conclusion):
        if premise:
            checks[key].premises += 1
            if not conclusion:
                checks[key].counterexamples.append(witness())

    full = (n, str(Fraction(n)), 1)
    dual_rep = (n, str(Fraction(n - 1)), 2)
    rep = (n, str(Fraction(1)), n)
    record("distance-one", is_mds and d == 1, all(c.params == full for c in comps))
    record("distance-two", is_mds and d == 2, all(c.params == dual_rep for c in comps))
    record("some-component-mds", is_mds, any(mds_flags))
    record("three-components-mds", is_mds and sum(mds_flags) >= 3, all_mds_same)
    record("two-components-mds", is_mds and sum(mds_flags) >= 2, all_mds_same)
    record("repetition-propagates", is_mds and any(c.is_mds and c.params == rep for c in comps),
           all(c.params == rep for c in comps))
    record("equal-parameters-forward", is_mds, all_mds_same)
    record("equal-parameters-backward", all_mds_same, is_mds)


_STATEMENTS = {
    "classification": "a Z4 code is MDS iff it equals Z4^n, <1> or <1>^perp",
    "classification-up-to-scaling": "a Z4 code is MDS iff it is Z4^n, <1> or <1>^perp up to unit scaling of coordinates",
    "distance-one": "C MDS with d_H = 1 => every C_i is (n, 4^n, 1)",
    "distance-two": "C MDS with d_H = 2 => every C_i is (n, 4^(n-1), 2)",
    "some-component-mds": "C MDS => at least one C_i MDS",
    "three-components-mds": "C MDS and three C_i MDS => all C_i MDS with equal parameters",
    "two-components-mds": "C MDS and two C_i MDS => all C_i MDS with equal parameters",
    "repetition-propagates": "C MDS and some C_i MDS with parameters (n, 4, n) => all C_i are (n, 4, n)",
    "equal-parameters-forward": "C MDS => all C_i MDS with equal parameters",
    "equal-parameters-backward": "all C_i MDS with equal parameters => C MDS",
}


def verify_mds_structure(max_n, seed=0, exhaustive_n=2):
    """Sweep R-codes built from component pools and check the MDS structure results.

    For ``n <= exhaustive_n`` the pool is every Z4 code of length n; beyond
    that it is :func:`directed_pool`.  All ordered 4-tuples of pool codes
    are checked.  Findings are returned as data.
    """
    if not 1 <= max_n <= 4:
        raise ValueError("max_n must lie in 1..4")
    rng = np.random.default_rng(seed)
    checks = {k: StructureCheck(k, v) for k, v in _STATEMENTS.items()}
    pools = {}
    candidates = 0
    for n in range(1, max_n + 1):
        pool = all_z4_codes(n) if n <= exhaustive_n else directed_pool(n, rng)
        comps = [_component(c) for c in pool]
        pools[n] = len(comps)
        for c in comps:
            if c.d is None:
                continue
            cls = classify_z4_mds(c.code)
            checks["classification"].premises += 1
            if cls.finding:
                checks["classification"].counterexamples.append({"n": n, **c.describe(), "finding": cls.finding})
            checks["classification-up-to-scaling"].premises += 1
            if cls.is_mds != (cls.equivalent_family is not None):
                checks["classification-up-to-scaling"].counterexamples.append({"n": n, **c.describe()})
        for tup in product(comps, repeat=4):
            candidates += 1
            _check_tuple(n, tup, checks)
    counterexamples = sum(len(c.counterexamples) for c in checks.values())
    return {
        "maxN": max_n,
        "seed": seed,
        "exhaustiveUpTo": exhaustive_n,
        "poolSizes": {str(k): v for k, v in pools.items()},
        "candidates": candidates,
        "checks": [c.to_json() for c in checks.values()],
        "counterexamples": counterexamples,
    }


def classify_all_z4(max_n=3):
    """Classify every nonzero Z4 code of length <= max_n.

    ``findings`` lists MDS codes equal to no family representative;
    ``scaledFindings`` lists those outside the families even up to unit
    scaling of coordinates.
    """
    checked, findings, scaled = 0, [], []
    for n in range(1, max_n + 1):
        for code in all_z4_codes(n):
            if code.cardinality == 1:
                continue
            checked += 1
            cls = classify_z4_mds(code)
            entry = {"generator": code.generator.tolist(), **cls.to_json()}
            if cls.finding:
                findings.append(entry)
            if cls.is_mds != (cls.equivalent_family is not None):
                scaled.append(entry)
    return {"maxN": max_n, "checked": checked, "findings": findings, "scaledFindings": scaled}

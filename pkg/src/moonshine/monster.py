"""Moonshine numerology: embedded datasets, the McKay/Thompson decomposition
identities, bounded decomposition search, and the truncated two-variable
product identity p^-1 prod (1 - p^m q^n)^c(mn) = J(p) - J(q).

The product identity only holds with the normalized coefficients (c(0) = 0):
a constant term of 744 would smuggle factors (1 - p^m)^744 into the left side,
and the verifier exposes exactly that as a negative control.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .modular import j_normalized
from .qseries import BiLaurentSeries


class InsufficientData(ValueError):
    """The embedded or supplied datasets are too short for the request."""


class InsufficientCoefficients(ValueError):
    """The coefficient table does not reach the order the check needs."""


class SearchSpaceTooLarge(RuntimeError):
    """The bounded decomposition search exceeded its node budget."""


def _read_table(text):
    values = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        idx, val = line.split()
        values[int(idx)] = int(val)
    return values


def _resource_text(name):
    return resources.files("moonshine.data").joinpath(name).read_text()


@dataclass(frozen=True)
class CoeffTable:
    """Exact coefficients c(n) for n = -1 .. max_index, with provenance."""

    values: dict
    provenance: str
    normalized: bool = True

    def __post_init__(self):
        top = max(self.values)
        if set(self.values) != set(range(-1, top + 1)):
            raise ValueError("coefficient table must cover a contiguous range from -1")
        if self.values[-1] != 1:
            raise ValueError("c(-1) must be 1")
        if self.normalized and self.values.get(0, 0) != 0:
            raise ValueError("normalized table must have c(0) = 0")

    @classmethod
    def from_resource(cls) -> "CoeffTable":
        return cls(_read_table(_resource_text("j_coefficients.txt")), "embedded")

    @classmethod
    def from_expansion(cls, order: int) -> "CoeffTable":
        """Coefficients computed live from the Eisenstein-series pipeline."""
        series = j_normalized(order).series
        return cls({n: series.coefficient(n) for n in range(-1, order)}, "computed")

    @property
    def max_index(self) -> int:
        return max(self.values)

    def has(self, n: int) -> bool:
        return n in self.values

    def c(self, n: int) -> int:
        """c(n), with the convention c(n) = 0 for n < -1."""
        if n < -1:
            return 0
        if n not in self.values:
            raise InsufficientCoefficients(f"c({n}) is beyond the table (max {self.max_index})")
        return self.values[n]

    def with_value(self, n: int, value: int) -> "CoeffTable":
        """A perturbed copy (for negative controls)."""
        values = dict(self.values)
        values[n] = value
        normalized = self.normalized and not (n == 0 and value != 0) and not (n == -1)
        return CoeffTable(values, f"{self.provenance}, c({n}) overridden", normalized)


@dataclass(frozen=True)
class IrrepDims:
    """Leading monster irreducible dimensions r_1 <= r_2 <= ... (1-based)."""

    dims: tuple

    def __post_init__(self):
        if not self.dims or self.dims[0] != 1:
            raise ValueError("r_1 must be 1")
        if any(a >= b for a, b in zip(self.dims, self.dims[1:])):
            raise ValueError("dimensions must be strictly increasing")

    @classmethod
    def from_resource(cls) -> "IrrepDims":
        table = _read_table(_resource_text("monster_irrep_dims.txt"))
        return cls(tuple(table[i] for i in sorted(table)))

    @classmethod
    def from_file(cls, path) -> "IrrepDims":
        with open(path) as fh:
            table = _read_table(fh.read())
        if set(table) != set(range(1, len(table) + 1)):
            raise ValueError("irrep table must be indexed 1..k")
        return cls(tuple(table[i] for i in sorted(table)))

    @property
    def count(self) -> int:
        return len(self.dims)

    def r(self, i: int) -> int:
        if not 1 <= i <= len(self.dims):
            raise InsufficientData(f"r_{i} is not available (have {len(self.dims)} entries)")
        return self.dims[i - 1]

    def extended(self, *extra: int) -> "IrrepDims":
        return IrrepDims(self.dims + tuple(extra))


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities (m_1, ..., m_k) with sum m_i * r_i equal to ``total``."""

    multiplicities: tuple
    total: int


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_CONFIGURED = "not-configured"


@dataclass(frozen=True)
class IdentityCheck:
    label: str
    q_exponent: int
    coefficient: int | None
    decomposition: Decomposition | None
    status: CheckStatus


# The five classical decomposition identities, as multiplicity vectors over
# r_1, r_2, ...; the n-th identity targets the coefficient of q^(n-1).  The
# last two are gated on r_6, r_7 being configured (they are not shipped).
THOMPSON_IDENTITIES = (
    ("c(2)", 1, (1, 1)),
    ("c(3)", 2, (1, 1, 1)),
    ("c(4)", 3, (2, 2, 1, 1)),
    ("c(5)", 4, (3, 3, 1, 2, 1)),
    ("c(6)", 5, (4, 5, 3, 2, 1, 1, 1)),
)
_GATED_ON_FULL_HEAD = ("c(5)", "c(6)")


def mckay_identity_check(coeffs: CoeffTable, dims: IrrepDims):
    """Evaluate the five decomposition identities exactly.

    Returns one :class:`IdentityCheck` per identity.  The c(5) and c(6)
    checks report NOT_CONFIGURED unless at least seven dimensions are
    configured; they are never silently passed.
    """
    if dims.count < 5:
        raise InsufficientData("need at least the first five irreducible dimensions")
    results = []
    for label, n, mults in THOMPSON_IDENTITIES:
        gated = label in _GATED_ON_FULL_HEAD and dims.count < 7
        if gated or len(mults) > dims.count:
            results.append(IdentityCheck(label, n, None, None, CheckStatus.NOT_CONFIGURED))
            continue
        if not coeffs.has(n):
            raise InsufficientData(f"coefficient table too short for {label}")
        expected = coeffs.c(n)
        actual = sum(m * dims.r(i + 1) for i, m in enumerate(mults))
        status = CheckStatus.PASS if actual == expected else CheckStatus.FAIL
        results.append(IdentityCheck(label, n, expected, Decomposition(mults, actual), status))
    return results


def graded_dimension_check(coeffs: CoeffTable, claimed_dims) -> bool:
    """Whether the claimed graded dimensions, indexed from -1, match c(n)."""
    for i, dim in enumerate(claimed_dims, start=-1):
        if not coeffs.has(i) or coeffs.c(i) != dim:
            return False
    return True


def decompose_bounded(target: int, dims: IrrepDims, max_mult: int, max_parts: int,
                      node_budget: int = 10_000_000):
    """All multiplicity vectors over the first ``max_parts`` dimensions.

    Depth-first search from the largest dimension downward, each multiplicity
    bounded by ``max_mult``; results are exact and exhaustive within the
    bounds.
    """
    if target < 0:
        raise ValueError("target must be >= 0")
    if max_mult < 1 or max_parts < 1:
        raise ValueError("bounds must be >= 1")
    if dims.count < max_parts:
        raise InsufficientData(f"need {max_parts} dimensions, have {dims.count}")
    rs = dims.dims[:max_parts]
    reach = [0]
    for r in rs:
        reach.append(reach[-1] + max_mult * r)
    results = []
    nodes = 0

    def walk(i, remaining, tail):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchSpaceTooLarge(f"more than {node_budget} search nodes")
        if i < 0:
            if remaining == 0:
                results.append(Decomposition(tuple(reversed(tail)), target))
            return
        if remaining > reach[i + 1]:
            return
        for m in range(min(max_mult, remaining // rs[i]), -1, -1):
            tail.append(m)
            walk(i - 1, remaining - m * rs[i], tail)
            tail.pop()

    walk(max_parts - 1, target, [])
    return results


@dataclass(frozen=True)
class KnzResult:
    lhs: BiLaurentSeries
    rhs: BiLaurentSeries
    equal: bool

    def mismatches(self):
        """Sorted (m, n, lhs, rhs) for every monomial where the sides differ."""
        keys = set(self.lhs.terms) | set(self.rhs.terms)
        out = []
        for m, n in sorted(keys):
            a = self.lhs.terms.get((m, n), 0)
            b = self.rhs.terms.get((m, n), 0)
            if a != b:
                out.append((m, n, a, b))
        return out


def _binomial_factor(m, n, exponent, rect):
    """(1 - p^m q^n)^exponent expanded inside the rectangle (m >= 1)."""
    pmin, pmax, qmin, qmax = rect
    terms = {}
    j = 0
    while True:
        pe, qe = j * m, j * n
        if pe > pmax or qe > qmax or qe < qmin:
            break
        terms[(pe, qe)] = -math.comb(exponent, j) if j & 1 else math.comb(exponent, j)
        j += 1
    return BiLaurentSeries(terms, rect)


def knz_verify(order: int, coeffs: CoeffTable | None = None,
               unnormalized_c0: bool = False) -> KnzResult:
    """Verify p^-1 prod_{m>=1, n} (1 - p^m q^n)^c(mn) = J(p) - J(q), truncated.

    Both sides are computed on the exponent rectangle [-1, order]^2.  The
    exponents use c(0) = 0 and c(k) = 0 for k < -1; passing
    ``unnormalized_c0=True`` forces c(0) = 744 instead, which breaks the
    identity (the negative control distinguishing J - 744 from J).
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    need = (order + 1) ** 2
    if coeffs is None:
        coeffs = CoeffTable.from_expansion(need + 1)
    if coeffs.max_index < max(need, order):
        raise InsufficientCoefficients(
            f"need c(n) through n = {max(need, order)}, table stops at {coeffs.max_index}")

    def c_exp(k):
        if k == 0 and unnormalized_c0:
            return 744
        return coeffs.c(k)

    # The working rectangle keeps the p^-1 prefactor out until the end, and
    # its q-range extends one past the target: the (m, n) = (1, -1) factor,
    # multiplied first, is the only source of negative q-degrees, so factor
    # terms at q-degree order+1 still land inside the target after it.  All
    # later factors only raise degrees, making the truncation lossless.
    work_rect = (0, order + 1, -1, order + 1)
    acc = _binomial_factor(1, -1, c_exp(-1), work_rect)
    for m in range(1, order + 2):
        for n in range(0, order + 2):
            e = c_exp(m * n)
            if e:
                acc = acc * _binomial_factor(m, n, e, work_rect)
    final_rect = (-1, order, -1, order)
    lhs = acc.truncated((0, order + 1, -1, order)).shifted(-1, 0, rect=final_rect)

    rhs_terms = {}
    for k in range(-1, order + 1):
        ck = 1 if k == -1 else (0 if k == 0 else coeffs.c(k))
        if ck:
            rhs_terms[(k, 0)] = rhs_terms.get((k, 0), 0) + ck
            rhs_terms[(0, k)] = rhs_terms.get((0, k), 0) - ck
    rhs = BiLaurentSeries(rhs_terms, final_rect)
    return KnzResult(lhs, rhs, lhs == rhs)


# -- documented monster constants ---------------------------------------------

MONSTER_ORDER_FACTORIZATION = (
    (2, 46), (3, 20), (5, 9), (7, 6), (11, 2), (13, 3), (17, 1), (19, 1),
    (23, 1), (29, 1), (31, 1), (41, 1), (47, 1), (59, 1), (71, 1),
)


def monster_order() -> int:
    """The order of the monster group, from its prime factorization."""
    out = 1
    for p, e in MONSTER_ORDER_FACTORIZATION:
        out *= p**e
    return out


@dataclass(frozen=True)
class MonsterFacts:
    """Documented constants about the monster; recorded, not computed."""

    order_factorization: tuple = MONSTER_ORDER_FACTORIZATION
    conjugacy_class_count: int = 194
    distinct_mckay_thompson_series: int = 172
    mckay_thompson_span_dimension: int = 163

    @property
    def order(self) -> int:
        return monster_order()


MONSTER_FACTS = MonsterFacts()

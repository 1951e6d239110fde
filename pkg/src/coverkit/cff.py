"""Constructors for (n, (r, s))-cover-free families at desk scale.

Three routes:

* ``construct_cff_derandomized`` derandomizes the probabilistic existence
  argument by the method of conditional expectations, fixing one bit at a
  time. Undecided bits are modeled as independent Bernoulli(p) with
  p = r/(r+s), the density that maximizes the per-constraint coverage
  probability c = p**r * (1-p)**s.
* ``construct_cff_randomized`` is the Las Vegas version: sample rows at
  density p in batches until nothing is uncovered.
* ``construct_cff_sperner`` solves the (1, 1) case exactly with an
  antichain of half-size subsets.

Every constructor verifies its own output before returning it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb, log

from .core import CffSpec, SymbolMatrix
from .errors import ConvergenceError, ParameterError, ResourceLimitError
from .verify import verify_cff

# Hard cap on the number of (R, S) constraints a constructor will track.
CONSTRAINT_CAP = 2**26

# Las Vegas batch cap; hitting it means the spec is far beyond desk scale.
MAX_BATCHES = 10_000


@dataclass(frozen=True)
class GreedyTraceRow:
    """One emitted row: the symbols chosen, how many constraints it newly
    covered, and how many remain after it."""

    row: tuple[int, ...]
    covered: int
    remaining: int


@dataclass(frozen=True)
class GreedyTrace:
    """Audit trail of a conditional-expectations run."""

    rows: tuple[GreedyTraceRow, ...]

    def __post_init__(self) -> None:
        remaining = None
        for rec in self.rows:
            if remaining is not None and rec.remaining >= remaining:
                raise ParameterError("remaining counts must strictly decrease")
            remaining = rec.remaining
        if self.rows and self.rows[-1].remaining != 0:
            raise ParameterError("trace must end with zero remaining constraints")

    @property
    def total_rows(self) -> int:
        return len(self.rows)


def greedy_row_bound(num_constraints: int, coverage_rate: float) -> int:
    """Rows needed when every row covers at least ``coverage_rate`` of what
    remains: floor(ln M / -ln(1 - c)) + 1. A rate of 1 means one row."""
    if num_constraints <= 1 or coverage_rate >= 1.0:
        return 1
    return int(log(num_constraints) / -log(1.0 - coverage_rate)) + 1


def derandomized_size_bound(spec: CffSpec) -> int:
    """The guaranteed row-count bound of the derandomized constructor."""
    m_total = comb(spec.n, spec.r) * comb(spec.n - spec.r, spec.s)
    p = spec.r / spec.d
    c = p**spec.r * (1.0 - p) ** spec.s  # 0**0 == 1 covers the edges
    return greedy_row_bound(m_total, c)


def _constraint_cap_check(spec: CffSpec) -> int:
    m_total = comb(spec.n, spec.r) * comb(spec.n - spec.r, spec.s)
    if m_total > CONSTRAINT_CAP:
        raise ResourceLimitError(
            f"constraint set of size {m_total} exceeds the cap of {CONSTRAINT_CAP}"
        )
    return m_total


def _checked(m: SymbolMatrix, spec: CffSpec) -> SymbolMatrix:
    verdict = verify_cff(m, spec.r, spec.s)
    if not verdict.valid:  # pragma: no cover - constructor correctness guard
        raise AssertionError(f"constructed matrix fails its own spec: {verdict.witness}")
    return m


def _constant_row_family(spec: CffSpec) -> tuple[SymbolMatrix, GreedyTrace]:
    """Closed form for r = 0 (all-zero row) and s = 0 (all-one row)."""
    bit = 0 if spec.r == 0 else 1
    row = (bit,) * spec.n
    m = SymbolMatrix(n=spec.n, q=2, rows=(row,))
    m_total = comb(spec.n, spec.r) * comb(spec.n - spec.r, spec.s)
    trace = GreedyTrace((GreedyTraceRow(row, m_total, 0),))
    return _checked(m, spec), trace


def construct_cff_derandomized(spec: CffSpec) -> tuple[SymbolMatrix, GreedyTrace]:
    """Build an (n, (r, s))-cover-free family by conditional expectations.

    Rows are emitted one at a time; within a row, bit j is fixed to the
    value that maximizes the conditional expected number of still-uncovered
    constraints the row will cover, ties broken toward 0. The comparison is
    exact: both candidate expectations are integer numerators over the
    common denominator d**d, so bit decisions are platform-independent.

    The row count satisfies floor(ln M / -ln(1-c)) + 1 with
    M = C(n,r) * C(n-r,s) and c = p**r (1-p)**s.
    """
    m_total = _constraint_cap_check(spec)
    if spec.r == 0 or spec.s == 0:
        return _constant_row_family(spec)

    n, r, s, d = spec.n, spec.r, spec.s, spec.d
    # num[a][b] = r**a * s**b * d**(d-a-b): the numerator of p**a (1-p)**b
    # over the common denominator d**d.
    num = [[r**a * s**b * d ** (d - a - b) for b in range(s + 1)] for a in range(r + 1)]

    # Constraint index: per-column membership lists for R and S sides.
    col_r: list[list[int]] = [[] for _ in range(n)]
    col_s: list[list[int]] = [[] for _ in range(n)]
    idx = 0
    cols = range(n)
    for R in combinations(cols, r):
        taken = set(R)
        rest = [j for j in cols if j not in taken]
        for S in combinations(rest, s):
            for j in R:
                col_r[j].append(idx)
            for j in S:
                col_s[j].append(idx)
            idx += 1
    assert idx == m_total

    uncovered = bytearray([1]) * m_total
    remaining = m_total
    rows: list[tuple[int, ...]] = []
    trace_rows: list[GreedyTraceRow] = []

    while remaining:
        # alive[i]: constraint i is uncovered and no decided bit of the
        # current row conflicts with it yet.
        alive = bytearray(uncovered)
        a = [r] * m_total  # undecided positions of each constraint's R side
        b = [s] * m_total  # and of its S side
        bits = []
        for j in range(n):
            t1 = 0
            for i in col_r[j]:
                if alive[i]:
                    t1 += num[a[i] - 1][b[i]]
            t0 = 0
            for i in col_s[j]:
                if alive[i]:
                    t0 += num[a[i]][b[i] - 1]
            if t1 > t0:
                bits.append(1)
                for i in col_s[j]:
                    alive[i] = 0
                for i in col_r[j]:
                    if alive[i]:
                        a[i] -= 1
            else:
                bits.append(0)
                for i in col_r[j]:
                    alive[i] = 0
                for i in col_s[j]:
                    if alive[i]:
                        b[i] -= 1
        covered = 0
        for i in range(m_total):
            if alive[i]:
                uncovered[i] = 0
                covered += 1
        remaining -= covered
        row = tuple(bits)
        rows.append(row)
        trace_rows.append(GreedyTraceRow(row, covered, remaining))

    m = SymbolMatrix(n=n, q=2, rows=tuple(rows))
    return _checked(m, spec), GreedyTrace(tuple(trace_rows))


def construct_cff_randomized(spec: CffSpec, seed: int, batch: int = 16) -> SymbolMatrix:
    """Las Vegas construction: append batches of Bernoulli(r/(r+s)) rows
    until every constraint is covered.

    Always returns a verified family; the output is a pure function of
    (spec, seed, batch). For r = 0 or s = 0 the constant-row closed form is
    returned directly.
    """
    _constraint_cap_check(spec)
    if batch < 1:
        raise ParameterError(f"batch must be positive, got {batch}")
    if spec.r == 0 or spec.s == 0:
        return _constant_row_family(spec)[0]

    n, r, s = spec.n, spec.r, spec.s
    p = r / spec.d
    rng = random.Random(seed)

    pending: list[tuple[int, int]] = []  # (rmask, smask) still uncovered
    cols = range(n)
    for R in combinations(cols, r):
        rmask = 0
        for j in R:
            rmask |= 1 << j
        taken = set(R)
        rest = [j for j in cols if j not in taken]
        for S in combinations(rest, s):
            smask = 0
            for j in S:
                smask |= 1 << j
            pending.append((rmask, smask))

    rows: list[tuple[int, ...]] = []
    for _ in range(MAX_BATCHES):
        fresh_masks = []
        for _ in range(batch):
            bits = tuple(1 if rng.random() < p else 0 for _ in range(n))
            rows.append(bits)
            fresh_masks.append(sum(bit << j for j, bit in enumerate(bits)))
        pending = [
            (rmask, smask)
            for rmask, smask in pending
            if not any(row & rmask == rmask and row & smask == 0 for row in fresh_masks)
        ]
        if not pending:
            m = SymbolMatrix(n=n, q=2, rows=tuple(rows))
            return _checked(m, spec)
    raise ConvergenceError(
        f"no ({spec.n}, ({spec.r}, {spec.s})) family after {MAX_BATCHES} batches of {batch}"
    )


def sperner_row_count(n: int) -> int:
    """Least N with C(N, floor(N/2)) >= n: the optimal (n, (1, 1)) size."""
    if n < 2:
        raise ParameterError(f"need n >= 2, got {n}")
    rows = 1
    while comb(rows, rows // 2) < n:
        rows += 1
    return rows


def construct_cff_sperner(n: int) -> SymbolMatrix:
    """Optimal (n, (1, 1))-cover-free family from an antichain.

    Columns are the first n floor(N/2)-subsets of the row set in
    lexicographic order, with N minimal such that C(N, floor(N/2)) >= n.
    Distinct equal-size subsets are pairwise incomparable, which is exactly
    the (1, 1) cover-free property.
    """
    rows = sperner_row_count(n)
    half = rows // 2
    chosen = []
    for subset in combinations(range(rows), half):
        chosen.append(set(subset))
        if len(chosen) == n:
            break
    matrix_rows = tuple(
        tuple(1 if i in block else 0 for block in chosen) for i in range(rows)
    )
    m = SymbolMatrix(n=n, q=2, rows=matrix_rows)
    return _checked(m, CffSpec(n=n, r=1, s=1))

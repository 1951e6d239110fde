"""Exhaustive, definitional verification of the universal-set and
cover-free properties, with concrete violation witnesses.

Both verifiers enumerate every constraint:

* universal: every d-subset S of columns must show all q**d patterns;
* cover-free: every disjoint pair (R, S) with |R| = r, |S| = s must have a
  row that is all-1 on R and all-0 on S.

Edge conventions for the cover-free check: r = 0 reads the empty
intersection as the full ground set, so the requirement becomes "some row
is all-0 on S"; s = 0 symmetrically requires "some row is all-1 on R".
These conventions are exactly what makes the universal/cover-free bridge
hold for the all-zero and all-one patterns.

Violated verdicts always carry the lexicographically first failing
constraint so they are deterministic and testable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal, Union

from .core import CffSpec, SymbolMatrix, UniversalSpec
from .errors import AlphabetError, ParameterError, ResourceLimitError

# Per-subset pattern bitmaps are q**d bytes; refuse anything bigger.
PATTERN_CAP = 2**24


@dataclass(frozen=True)
class UniversalWitness:
    """A d-subset of columns and the pattern missing from its projection."""

    columns: tuple[int, ...]
    pattern: tuple[int, ...]


@dataclass(frozen=True)
class CffWitness:
    """Disjoint column sets (R, S) no row separates (all-1 on R, all-0 on S)."""

    r_columns: tuple[int, ...]
    s_columns: tuple[int, ...]


Witness = Union[UniversalWitness, CffWitness]


@dataclass(frozen=True)
class Verdict:
    status: Literal["valid", "violated"]
    witness: Witness | None = None

    def __post_init__(self) -> None:
        if (self.status == "violated") != (self.witness is not None):
            raise ParameterError("witness must be present exactly when violated")

    @property
    def valid(self) -> bool:
        return self.status == "valid"


_VALID = Verdict("valid")


def _pattern_tuple(index: int, d: int, q: int) -> tuple[int, ...]:
    digits = []
    for _ in range(d):
        index, sym = divmod(index, q)
        digits.append(sym)
    return tuple(reversed(digits))


def _check_universal_params(m: SymbolMatrix, d: int) -> None:
    if not 1 <= d <= m.n:
        raise ParameterError(f"need 1 <= d <= n, got d={d}, n={m.n}")
    if m.q**d > PATTERN_CAP:
        raise ResourceLimitError(
            f"pattern space q**d = {m.q}**{d} exceeds the cap of {PATTERN_CAP}"
        )


def verify_universal(m: SymbolMatrix, d: int) -> Verdict:
    """Check that every d columns of ``m`` exhibit all q**d patterns.

    Returns a valid verdict, or the lexicographically first missing
    (columns, pattern) pair under (subset, then pattern) order.
    """
    _check_universal_params(m, d)
    q = m.q
    total = q**d
    for S in combinations(range(m.n), d):
        seen = bytearray(total)
        hits = 0
        for row in m.rows:
            idx = 0
            for j in S:
                idx = idx * q + row[j]
            if not seen[idx]:
                seen[idx] = 1
                hits += 1
                if hits == total:
                    break
        if hits != total:
            missing = seen.index(0)
            return Verdict("violated", UniversalWitness(S, _pattern_tuple(missing, d, q)))
    return _VALID


def _check_cff_params(m: SymbolMatrix, r: int, s: int) -> None:
    if m.q != 2:
        raise AlphabetError(f"cover-free check needs a binary matrix, got q = {m.q}")
    if r < 0 or s < 0 or r + s < 1:
        raise ParameterError(f"need r, s >= 0 and r+s >= 1, got ({r}, {s})")
    if r + s > m.n:
        raise ParameterError(f"need r+s <= n, got r+s={r + s}, n={m.n}")


def _cff_pairs(n: int, r: int, s: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All disjoint (R, S) column pairs in lexicographic (R, then S) order."""
    cols = range(n)
    for R in combinations(cols, r):
        taken = set(R)
        rest = [j for j in cols if j not in taken]
        yield from ((R, S) for S in combinations(rest, s))


def verify_cff(m: SymbolMatrix, r: int, s: int) -> Verdict:
    """Check the (n, (r, s)) cover-free property of a binary matrix.

    Returns a valid verdict, or the lexicographically first failing
    (R, S) pair.
    """
    _check_cff_params(m, r, s)
    masks = m.row_masks
    for R, S in _cff_pairs(m.n, r, s):
        rmask = 0
        for j in R:
            rmask |= 1 << j
        smask = 0
        for j in S:
            smask |= 1 << j
        for row in masks:
            if row & rmask == rmask and row & smask == 0:
                break
        else:
            return Verdict("violated", CffWitness(R, S))
    return _VALID


def count_uncovered(m: SymbolMatrix, spec: UniversalSpec | CffSpec) -> int:
    """Exact number of unmet constraints of ``m`` against ``spec``.

    Zero exactly when the corresponding verifier returns valid. Used as the
    progress metric by the greedy constructors and in reports.
    """
    if spec.n != m.n:
        raise ParameterError(f"spec has n={spec.n} but matrix has n={m.n}")
    if isinstance(spec, UniversalSpec):
        if spec.q != m.q:
            raise ParameterError(f"spec has q={spec.q} but matrix has q={m.q}")
        _check_universal_params(m, spec.d)
        q, d = m.q, spec.d
        total = q**d
        missing = 0
        for S in combinations(range(m.n), d):
            seen = bytearray(total)
            hits = 0
            for row in m.rows:
                idx = 0
                for j in S:
                    idx = idx * q + row[j]
                if not seen[idx]:
                    seen[idx] = 1
                    hits += 1
                    if hits == total:
                        break
            missing += total - hits
        return missing
    if isinstance(spec, CffSpec):
        _check_cff_params(m, spec.r, spec.s)
        masks = m.row_masks
        missing = 0
        for R, S in _cff_pairs(m.n, spec.r, spec.s):
            rmask = 0
            for j in R:
                rmask |= 1 << j
            smask = 0
            for j in S:
                smask |= 1 << j
            if not any(row & rmask == rmask and row & smask == 0 for row in masks):
                missing += 1
        return missing
    raise ParameterError(f"unsupported spec type {type(spec).__name__}")

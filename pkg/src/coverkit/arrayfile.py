"""Text persistence for symbol matrices.

A document is one header line followed by one line per row:

    kind=universal n=4 q=2 rows=6 d=2 method=lemma1+derand
    0000
    ...

Header keys come in the fixed order kind, n, q, rows, then any optional
keys (d, method, r, s, seed) alphabetically. Rows are strings of base-36
digits, one symbol per character ('a' is symbol 10). Lines end with LF and
the document carries a trailing newline; there is no other whitespace.

``read_array`` is strict: it accepts exactly the grammar ``write_array``
emits, validates every invariant before building a matrix, and names the
offending line in each diagnostic. Reading and writing are mutually
inverse on all valid documents.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .core import MAX_ALPHABET, SYMBOL_DIGITS, SymbolMatrix
from .errors import ConsistencyError, FormatError

KINDS = ("universal", "cff", "raw")

# Optional header keys, in their emitted (alphabetical) order, and the keys
# each kind must / may carry beyond the common four.
OPTIONAL_KEYS = ("d", "method", "r", "s", "seed")
_REQUIRED_BY_KIND = {"universal": ("d",), "cff": ("r", "s"), "raw": ()}
_INT_KEYS = {"n", "q", "rows", "d", "r", "s", "seed"}


@dataclass(frozen=True)
class ArrayFileHeader:
    """Metadata line of an array document."""

    kind: str
    n: int
    q: int
    rows: int
    d: int | None = None
    r: int | None = None
    s: int | None = None
    method: str | None = None
    seed: int | None = None


def _validate_header(header: ArrayFileHeader, *, where: str = "header") -> None:
    if header.kind not in KINDS:
        raise FormatError(f"{where}: unknown kind {header.kind!r}")
    if header.n < 1:
        raise FormatError(f"{where}: n must be positive, got {header.n}")
    if not 2 <= header.q <= MAX_ALPHABET:
        raise FormatError(f"{where}: q must be in [2, {MAX_ALPHABET}], got {header.q}")
    if header.rows < 0:
        raise FormatError(f"{where}: rows must be non-negative, got {header.rows}")
    required = _REQUIRED_BY_KIND[header.kind]
    for key in ("d", "r", "s"):
        value = getattr(header, key)
        if key in required and value is None:
            raise FormatError(f"{where}: kind={header.kind} requires key {key}")
        if key not in required and value is not None:
            raise FormatError(f"{where}: key {key} is not allowed for kind={header.kind}")
    if header.kind == "universal" and not 1 <= header.d <= header.n:
        raise FormatError(f"{where}: need 1 <= d <= n, got d={header.d}, n={header.n}")
    if header.kind == "cff":
        if header.r < 0 or header.s < 0 or not 1 <= header.r + header.s <= header.n:
            raise FormatError(
                f"{where}: need r, s >= 0 and 1 <= r+s <= n, got r={header.r}, s={header.s}"
            )
        if header.q != 2:
            raise FormatError(f"{where}: kind=cff requires q=2, got q={header.q}")
    if header.method is not None:
        if not header.method or any(ch.isspace() or ch == "=" for ch in header.method):
            raise FormatError(
                f"{where}: method must be a non-empty token without spaces or '='"
            )


def _header_pairs(header: ArrayFileHeader) -> list[tuple[str, str]]:
    pairs = [
        ("kind", header.kind),
        ("n", str(header.n)),
        ("q", str(header.q)),
        ("rows", str(header.rows)),
    ]
    for key in OPTIONAL_KEYS:
        value = getattr(header, key)
        if value is not None:
            pairs.append((key, str(value)))
    return pairs


def write_array(m: SymbolMatrix, header: ArrayFileHeader) -> str:
    """Serialize matrix and header; raises ConsistencyError on mismatch."""
    try:
        _validate_header(header)
    except FormatError as exc:
        raise ConsistencyError(str(exc)) from None
    if header.n != m.n or header.q != m.q or header.rows != m.num_rows:
        raise ConsistencyError(
            f"header (n={header.n}, q={header.q}, rows={header.rows}) does not match "
            f"matrix (n={m.n}, q={m.q}, rows={m.num_rows})"
        )
    lines = [" ".join(f"{k}={v}" for k, v in _header_pairs(header))]
    lines.extend(m.row_strings())
    return "\n".join(lines) + "\n"


def _parse_int(key: str, text: str, where: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise FormatError(f"{where}: key {key} needs an integer, got {text!r}") from None
    if str(value) != text:
        raise FormatError(f"{where}: key {key} value {text!r} is not in canonical form")
    return value


def _parse_header_line(line: str) -> ArrayFileHeader:
    where = "line 1"
    tokens = line.split(" ")
    fields: dict[str, object] = {}
    order: list[str] = []
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep or not key or not value:
            raise FormatError(f"{where}: malformed token {token!r}, expected key=value")
        if key in fields:
            raise FormatError(f"{where}: duplicate key {key}")
        if key not in ("kind", "n", "q", "rows") and key not in OPTIONAL_KEYS:
            raise FormatError(f"{where}: unknown key {key}")
        fields[key] = _parse_int(key, value, where) if key in _INT_KEYS else value
        order.append(key)
    for i, key in enumerate(("kind", "n", "q", "rows")):
        if i >= len(order) or order[i] != key:
            raise FormatError(
                f"{where}: header must start with kind, n, q, rows in that order"
            )
    extras = order[4:]
    if extras != sorted(extras):
        raise FormatError(f"{where}: optional keys must be in alphabetical order")
    header = ArrayFileHeader(**fields)  # type: ignore[arg-type]
    _validate_header(header, where=where)
    return header


def read_array(text: str) -> tuple[SymbolMatrix, ArrayFileHeader]:
    """Parse a document; inverse of write_array on valid input."""
    if not text.endswith("\n"):
        raise FormatError("end of input: missing trailing newline")
    lines = text.split("\n")
    assert lines[-1] == ""
    lines.pop()
    if not lines:
        raise FormatError("line 1: missing header")
    header = _parse_header_line(lines[0])
    body = lines[1:]
    if len(body) < header.rows:
        raise FormatError(
            f"end of input: header declares rows={header.rows} but found {len(body)} row lines"
        )
    if len(body) > header.rows:
        raise FormatError(
            f"line {header.rows + 2}: header declares rows={header.rows} "
            f"but extra content follows"
        )
    rows = []
    for i, line in enumerate(body):
        where = f"line {i + 2}"
        if len(line) != header.n:
            raise FormatError(f"{where}: row has {len(line)} symbols, expected n={header.n}")
        row = []
        for ch in line:
            sym = SYMBOL_DIGITS.find(ch)
            if sym < 0:
                raise FormatError(f"{where}: {ch!r} is not a symbol digit")
            if sym >= header.q:
                raise FormatError(f"{where}: symbol {sym} out of range for q={header.q}")
            row.append(sym)
        rows.append(tuple(row))
    matrix = SymbolMatrix(n=header.n, q=header.q, rows=tuple(rows))
    return matrix, header


def save_array(path: str | Path, m: SymbolMatrix, header: ArrayFileHeader) -> None:
    """Write a document atomically (temp file in place, then rename)."""
    target = Path(path)
    text = write_array(m, header)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_array(path: str | Path) -> tuple[SymbolMatrix, ArrayFileHeader]:
    with open(path, "r", newline="") as handle:
        return read_array(handle.read())

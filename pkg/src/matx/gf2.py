"""Bit-level GF(2) linear algebra.

Rows are stored as Python ints.  Position 1 of a printed row (the leftmost
character) is the most significant bit, so integer order on rows of equal
width is the same as lexicographic order on their printed strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_WIDTH = 64


def _check_width(width: int) -> None:
    if not 0 <= width <= MAX_WIDTH:
        raise ValueError(f"width {width} outside 0..{MAX_WIDTH}")


def parse_bits(text: str) -> int:
    """Parse a string such as ``"[01001]"`` into an int (leftmost bit high)."""
    s = text.strip().strip("[]").replace(" ", "").replace(",", "")
    if s and set(s) - {"0", "1"}:
        raise ValueError(f"not a bit string: {text!r}")
    return int(s, 2) if s else 0


def format_bits(value: int, width: int) -> str:
    return format(value, f"0{width}b") if width else ""


def weight(value: int) -> int:
    return bin(value).count("1")


@dataclass(frozen=True, order=True)
class BitVec:
    """A fixed-width row or column over GF(2)."""

    width: int
    value: int

    def __post_init__(self):
        _check_width(self.width)
        if self.value < 0 or self.value >> self.width:
            raise ValueError(f"value {self.value} does not fit in width {self.width}")

    @classmethod
    def parse(cls, text: str) -> BitVec:
        s = text.strip().strip("[]").replace(" ", "")
        return cls(len(s), parse_bits(s))

    def bit(self, pos: int) -> int:
        """Entry at 1-based position ``pos`` (1 = leftmost)."""
        if not 1 <= pos <= self.width:
            raise IndexError(pos)
        return (self.value >> (self.width - pos)) & 1

    @property
    def weight(self) -> int:
        return weight(self.value)

    def __xor__(self, other: BitVec) -> BitVec:
        if other.width != self.width:
            raise ValueError("width mismatch")
        return BitVec(self.width, self.value ^ other.value)

    def __str__(self) -> str:
        return format_bits(self.value, self.width)

    def __repr__(self) -> str:
        return f"BitVec('{self}')"


@dataclass(frozen=True)
class BitMatrix:
    """Dense GF(2) matrix; ``rows`` holds one int per row."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        _check_width(self.ncols)
        object.__setattr__(self, "rows", tuple(self.rows))
        for row in self.rows:
            if row < 0 or row >> self.ncols:
                raise ValueError(f"row {row} does not fit in {self.ncols} columns")

    @classmethod
    def from_strings(cls, rows: Sequence[str], ncols: int | None = None) -> BitMatrix:
        cleaned = [r.strip().strip("[]").replace(" ", "") for r in rows]
        if ncols is None:
            ncols = len(cleaned[0]) if cleaned else 0
        for r in cleaned:
            if len(r) != ncols:
                raise ValueError(f"row {r!r} has width {len(r)}, expected {ncols}")
        return cls(tuple(parse_bits(r) for r in cleaned), ncols)

    @classmethod
    def from_vecs(cls, vecs: Iterable[BitVec], ncols: int) -> BitMatrix:
        vecs = list(vecs)
        if any(v.width != ncols for v in vecs):
            raise ValueError("row width mismatch")
        return cls(tuple(v.value for v in vecs), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> BitVec:
        return BitVec(self.ncols, self.rows[i])

    def entry(self, i: int, j: int) -> int:
        """Entry at 0-based row ``i`` and 0-based column ``j``."""
        return (self.rows[i] >> (self.ncols - 1 - j)) & 1

    def column(self, j: int) -> int:
        """Column ``j`` (0-based) as an int of width ``nrows``, row 0 high."""
        shift = self.ncols - 1 - j
        value = 0
        for row in self.rows:
            value = (value << 1) | ((row >> shift) & 1)
        return value

    def columns(self) -> tuple[int, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def to_strings(self) -> list[str]:
        return [format_bits(r, self.ncols) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def rref(m: BitMatrix) -> tuple[BitMatrix, tuple[int, ...], int]:
    """Reduced row-echelon form.

    Returns ``(reduced, pivots, rank)``; pivots are 1-based column numbers
    in increasing order and zero rows are kept at the bottom.
    """
    rows = list(m.rows)
    pivots: list[int] = []
    top = 0
    for j in range(m.ncols):
        bit = 1 << (m.ncols - 1 - j)
        found = next((i for i in range(top, len(rows)) if rows[i] & bit), None)
        if found is None:
            continue
        rows[top], rows[found] = rows[found], rows[top]
        for i in range(len(rows)):
            if i != top and rows[i] & bit:
                rows[i] ^= rows[top]
        pivots.append(j + 1)
        top += 1
        if top == len(rows):
            break
    return BitMatrix(tuple(rows), m.ncols), tuple(pivots), len(pivots)


def rank_of(vectors: Iterable[int]) -> int:
    """GF(2) rank of a collection of int-encoded vectors."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def rank(m: BitMatrix) -> int:
    return rank_of(m.rows)


def transpose(m: BitMatrix) -> BitMatrix:
    return BitMatrix(m.columns(), m.nrows)


class XorBasis:
    """Incremental echelon basis that remembers how each vector was built.

    ``add`` returns False for a vector already in the span.  ``express``
    writes a vector as a combination of the inserted vectors, given as a
    bitmask over insertion order (bit ``k`` = k-th inserted vector).
    """

    __slots__ = ("_rows", "count")

    def __init__(self):
        self._rows: list[tuple[int, int, int]] = []  # (leading bit, vector, combination)
        self.count = 0

    def _reduce(self, v: int) -> tuple[int, int]:
        combo = 0
        for lead, row, c in self._rows:
            if v & lead:
                v ^= row
                combo ^= c
        return v, combo

    def contains(self, v: int) -> bool:
        return self._reduce(v)[0] == 0

    def add(self, v: int) -> bool:
        v, combo = self._reduce(v)
        if not v:
            return False
        combo ^= 1 << self.count
        self.count += 1
        lead = 1 << (v.bit_length() - 1)
        # Keep the rows fully reduced against each other.
        rows = []
        for l2, r2, c2 in self._rows:
            if r2 & lead:
                r2 ^= v
                c2 ^= combo
            rows.append((l2, r2, c2))
        rows.append((lead, v, combo))
        rows.sort(reverse=True)
        self._rows = rows
        return True

    def express(self, v: int) -> int | None:
        v, combo = self._reduce(v)
        return None if v else combo

    def copy(self) -> XorBasis:
        other = XorBasis()
        other._rows = list(self._rows)
        other.count = self.count
        return other


def in_row_space(m: BitMatrix, v: BitVec) -> bool:
    if v.width != m.ncols:
        raise ValueError(f"vector width {v.width} != matrix width {m.ncols}")
    basis = XorBasis()
    for row in m.rows:
        basis.add(row)
    return basis.contains(v.value)

"""Binary matroids held in standard form ``[I_r | D]``.

Ground-set elements are integer labels.  The first ``r`` labels index the
identity columns (row ``i`` of ``D`` belongs to ``labels[i]``) and the
remaining labels index the columns of ``D`` in order.  Values are treated
as immutable; every operation returns a new matroid and surviving elements
keep their labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatch, RankDeficient, TooLarge, UnknownLabel
from .gf2 import BitMatrix, XorBasis, format_bits, rank_of, weight

MAX_CONNECTIVITY_SIZE = 20
MAX_CIRCUIT_NULLITY = 20


class BinaryMatroid:
    __slots__ = ("rank", "size", "rows", "labels", "name", "_pos", "_vecs", "_cache")

    def __init__(self, rank: int, rows: Sequence[int], labels: Sequence[int], name: str | None = None):
        labels = tuple(labels)
        rows = tuple(rows)
        if len(rows) != rank:
            raise DimensionMismatch(f"expected {rank} rows, got {len(rows)}")
        if len(set(labels)) != len(labels):
            raise DimensionMismatch(f"duplicate labels in {labels}")
        m = len(labels) - rank
        if m < 0:
            raise DimensionMismatch(f"rank {rank} exceeds size {len(labels)}")
        for row in rows:
            if row < 0 or row >> m:
                raise DimensionMismatch(f"row {row:b} wider than {m} columns")
        self.rank = rank
        self.size = len(labels)
        self.rows = rows
        self.labels = labels
        self.name = name
        self._pos = {e: i for i, e in enumerate(labels)}
        self._vecs = None
        self._cache = {}

    # -- shape ---------------------------------------------------------
    @property
    def r(self) -> int:
        return self.rank

    @property
    def n(self) -> int:
        return self.size

    @property
    def corank(self) -> int:
        return self.size - self.rank

    @property
    def D(self) -> BitMatrix:
        return BitMatrix(self.rows, self.corank)

    @property
    def ground(self) -> frozenset:
        return frozenset(self.labels)

    @property
    def basis_labels(self) -> tuple[int, ...]:
        return self.labels[: self.rank]

    @property
    def nonbasis_labels(self) -> tuple[int, ...]:
        return self.labels[self.rank :]

    def position(self, label: int) -> int:
        try:
            return self._pos[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def column_ints(self) -> tuple[int, ...]:
        """Columns of ``[I_r | D]`` as ints of width ``r`` (row 0 high), by position."""
        if self._vecs is None:
            r, m = self.rank, self.corank
            vecs = [1 << (r - 1 - i) for i in range(r)]
            for j in range(m):
                shift = m - 1 - j
                v = 0
                for row in self.rows:
                    v = (v << 1) | ((row >> shift) & 1)
                vecs.append(v)
            self._vecs = tuple(vecs)
        return self._vecs

    def column(self, label: int) -> int:
        return self.column_ints()[self.position(label)]

    def check_labels(self, labels: Iterable[int]) -> frozenset:
        s = frozenset(labels)
        missing = s - self._pos.keys()
        if missing:
            raise UnknownLabel(sorted(missing))
        return s

    def mask_of(self, labels: Iterable[int]) -> int:
        mask = 0
        for e in labels:
            mask |= 1 << self.position(e)
        return mask

    def labels_of(self, mask: int) -> frozenset:
        return frozenset(e for i, e in enumerate(self.labels) if mask >> i & 1)

    def is_standard_labelled(self) -> bool:
        return self.labels == tuple(range(1, self.size + 1))

    # -- value semantics -------------------------------------------------
    def _key(self):
        return (self.rank, self.rows, self.labels)

    def __eq__(self, other):
        if not isinstance(other, BinaryMatroid):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<BinaryMatroid{tag} rank={self.rank} size={self.size}>"

    def row_strings(self) -> list[str]:
        return [format_bits(row, self.corank) for row in self.rows]

    def pretty(self) -> str:
        head = f"{self.name or 'M'}: rank {self.rank}, size {self.size}, labels {list(self.labels)}"
        return "\n".join([head] + ["  " + s for s in self.row_strings()])

    def with_name(self, name: str | None) -> BinaryMatroid:
        return BinaryMatroid(self.rank, self.rows, self.labels, name)


@dataclass(frozen=True)
class Separation:
    side_a: frozenset
    value: int

    def other_side(self, M: BinaryMatroid) -> frozenset:
        return M.ground - self.side_a


# -- construction ------------------------------------------------------------

def make(r: int, n: int, D: BitMatrix | Sequence[str] | Sequence[int] | None = None,
         labels: Sequence[int] | None = None, name: str | None = None) -> BinaryMatroid:
    """Matroid represented by ``[I_r | D]``.

    ``D`` may be a BitMatrix, a list of row strings, or a list of row ints of
    width ``n - r``.  Labels default to ``1..n``.
    """
    m = n - r
    if r < 0 or m < 0:
        raise DimensionMismatch(f"bad shape r={r}, n={n}")
    if D is None:
        rows: tuple[int, ...] = (0,) * r
    elif isinstance(D, BitMatrix):
        if D.ncols != m and D.nrows:
            raise DimensionMismatch(f"D has {D.ncols} columns, expected {m}")
        rows = D.rows
    else:
        D = list(D)
        if D and isinstance(D[0], str):
            try:
                bm = BitMatrix.from_strings(D, m) if m else BitMatrix(tuple(0 for _ in D), 0)
            except ValueError as exc:
                raise DimensionMismatch(str(exc)) from None
            rows = bm.rows
        else:
            rows = tuple(int(x) for x in D)
    if len(rows) != r:
        raise DimensionMismatch(f"D has {len(rows)} rows, expected {r}")
    if labels is None:
        labels = range(1, n + 1)
    labels = tuple(labels)
    if len(labels) != n:
        raise DimensionMismatch(f"{len(labels)} labels for {n} elements")
    return BinaryMatroid(r, rows, labels, name)


def from_columns(vectors: Sequence[int], labels: Sequence[int], rank: int | None = None,
                 name: str | None = None) -> BinaryMatroid:
    """Standardize a column list.

    The basis is chosen greedily in the given order (the lowest available
    position pivots first).  ``rank`` is the declared rank; fewer independent
    columns than declared raises RankDeficient.
    """
    labels = tuple(labels)
    if len(labels) != len(vectors):
        raise DimensionMismatch("one label per column required")
    basis = XorBasis()
    bpos: list[int] = []
    for i, v in enumerate(vectors):
        if basis.add(v):
            bpos.append(i)
    r = len(bpos)
    if rank is not None and r < rank:
        raise RankDeficient(f"columns have rank {r}, declared {rank}")
    bset = set(bpos)
    npos = [i for i in range(len(vectors)) if i not in bset]
    m = len(npos)
    rows = [0] * r
    for j, p in enumerate(npos):
        combo = basis.express(vectors[p])
        bit = 1 << (m - 1 - j)
        k = 0
        while combo:
            if combo & 1:
                rows[k] |= bit
            combo >>= 1
            k += 1
    new_labels = [labels[i] for i in bpos] + [labels[i] for i in npos]
    return BinaryMatroid(r, rows, new_labels, name)


def relabel(M: BinaryMatroid, mapping: dict) -> BinaryMatroid:
    """Rename elements; labels missing from ``mapping`` are kept."""
    return BinaryMatroid(M.rank, M.rows, [mapping.get(e, e) for e in M.labels], M.name)


def standardize(M: BinaryMatroid, order: Sequence[int]) -> BinaryMatroid:
    """Re-express M with its greedy basis taken in ``order`` (a permutation of labels)."""
    order = list(order)
    if sorted(order) != sorted(M.labels):
        raise UnknownLabel("order must be a permutation of the ground set")
    vecs = M.column_ints()
    return from_columns([vecs[M.position(e)] for e in order], order, name=M.name)


# -- duality and minors ------------------------------------------------------

def dual(M: BinaryMatroid) -> BinaryMatroid:
    m = M.corank
    cols = M.D.columns() if M.rank else (0,) * m
    name = None
    if M.name:
        name = M.name[:-1] if M.name.endswith("*") else M.name + "*"
    return BinaryMatroid(m, cols, M.nonbasis_labels + M.basis_labels, name)


def delete(M: BinaryMatroid, S: Iterable[int]) -> BinaryMatroid:
    S = M.check_labels(S)
    if not S:
        return M
    vecs = M.column_ints()
    keep = [i for i, e in enumerate(M.labels) if e not in S]
    nonbasis_only = all(M.position(e) >= M.rank for e in S)
    if nonbasis_only:
        m = M.corank
        kept_cols = [i - M.rank for i in keep if i >= M.rank]
        rows = []
        for row in M.rows:
            v = 0
            for j in kept_cols:
                v = (v << 1) | ((row >> (m - 1 - j)) & 1)
            rows.append(v)
        return BinaryMatroid(M.rank, rows, [M.labels[i] for i in keep])
    return from_columns([vecs[i] for i in keep], [M.labels[i] for i in keep])


def contract(M: BinaryMatroid, S: Iterable[int]) -> BinaryMatroid:
    S = M.check_labels(S)
    if not S:
        return M
    return dual(delete(dual(M), S)).with_name(None)


def minor(M: BinaryMatroid, contract_set: Iterable[int] = (), delete_set: Iterable[int] = ()) -> BinaryMatroid:
    return delete(contract(M, contract_set), delete_set)


# -- rank, circuits ----------------------------------------------------------

def subset_rank(M: BinaryMatroid, S: Iterable[int]) -> int:
    vecs = M.column_ints()
    return rank_of(vecs[M.position(e)] for e in set(S))


def _mask_rank(vecs: Sequence[int], mask: int) -> int:
    basis: list[int] = []
    i = 0
    while mask:
        if mask & 1:
            v = vecs[i]
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
        mask >>= 1
        i += 1
    return len(basis)


def circuit_masks(M: BinaryMatroid) -> tuple[int, ...]:
    """Circuits as bitmasks over positions (bit ``i`` = ``M.labels[i]``)."""
    cached = M._cache.get("circuits")
    if cached is not None:
        return cached
    r, m = M.rank, M.corank
    if m > MAX_CIRCUIT_NULLITY:
        raise TooLarge(f"nullity {m} exceeds {MAX_CIRCUIT_NULLITY}")
    vecs = M.column_ints()
    rows = M.rows
    out = []
    for T in range(1, 1 << m):
        mask = 0
        for i, row in enumerate(rows):
            if weight(row & T) & 1:
                mask |= 1 << i
        # nonbasis column j sits at position r + j and is bit (m-1-j) of T
        t = T
        j = m - 1
        while t:
            if t & 1:
                mask |= 1 << (r + j)
            t >>= 1
            j -= 1
        if _mask_rank(vecs, mask) == weight(mask) - 1:
            out.append(mask)
    result = tuple(sorted(out, key=lambda x: (weight(x), x)))
    M._cache["circuits"] = result
    return result


def cocircuit_masks(M: BinaryMatroid) -> tuple[int, ...]:
    """Cocircuits as bitmasks over positions of M."""
    cached = M._cache.get("cocircuits")
    if cached is not None:
        return cached
    if M.rank > MAX_CIRCUIT_NULLITY:
        raise TooLarge(f"rank {M.rank} exceeds {MAX_CIRCUIT_NULLITY}")
    D = dual(M)
    remap = [M.position(e) for e in D.labels]
    out = []
    for c in circuit_masks(D):
        mask = 0
        for i, p in enumerate(remap):
            if c >> i & 1:
                mask |= 1 << p
        out.append(mask)
    result = tuple(sorted(out, key=lambda x: (weight(x), x)))
    M._cache["cocircuits"] = result
    return result


def circuits(M: BinaryMatroid) -> set[frozenset]:
    return {M.labels_of(c) for c in circuit_masks(M)}


def cocircuits(M: BinaryMatroid) -> set[frozenset]:
    return {M.labels_of(c) for c in cocircuit_masks(M)}


def is_circuit(M: BinaryMatroid, S: Iterable[int]) -> bool:
    S = M.check_labels(S)
    if not S:
        return False
    k = len(S)
    if subset_rank(M, S) != k - 1:
        return False
    return all(subset_rank(M, S - {e}) == k - 1 for e in S)


def is_cocircuit(M: BinaryMatroid, S: Iterable[int]) -> bool:
    return is_circuit(dual(M), S)


def connectivity(M: BinaryMatroid, S: Iterable[int]) -> int:
    """The connectivity function r(S) + r(E - S) - r(M)."""
    S = M.check_labels(S)
    return subset_rank(M, S) + subset_rank(M, M.ground - S) - M.rank


# -- connectivity ------------------------------------------------------------

def is_simple(M: BinaryMatroid) -> bool:
    vecs = M.column_ints()
    return 0 not in vecs and len(set(vecs)) == len(vecs)


def is_cosimple(M: BinaryMatroid) -> bool:
    return is_simple(dual(M))


def _scan_lambda(M: BinaryMatroid):
    """Yield ``(mask, size, lambda)`` for every subset containing position 0.

    Uses lambda(X) = rank D[X_B, Y_N] + rank D[Y_B, X_N] for the standard
    representation, so only small row ranks are needed.
    """
    r, m, n = M.rank, M.corank, M.size
    if n > MAX_CONNECTIVITY_SIZE:
        raise TooLarge(f"size {n} exceeds {MAX_CONNECTIVITY_SIZE}")
    rows = M.rows
    full_n = (1 << m) - 1
    # position r + j <-> bit (m - 1 - j) of a column mask
    col_pos = [(1 << (m - 1 - j), r + j) for j in range(m)]
    for XN in range(1 << m):
        YN = full_n ^ XN
        npos_mask = 0
        for bit, p in col_pos:
            if XN & bit:
                npos_mask |= 1 << p
        nsize = weight(XN)
        for XB in range(1 << r):
            mask = XB | npos_mask
            if not mask & 1:
                # fix position 0 inside X to halve the work
                continue
            basis1: list[int] = []
            basis2: list[int] = []
            for i in range(r):
                if XB >> i & 1:
                    v = rows[i] & YN
                    bs = basis1
                else:
                    v = rows[i] & XN
                    bs = basis2
                for b in bs:
                    v = min(v, v ^ b)
                if v:
                    bs.append(v)
            yield mask, weight(XB) + nsize, len(basis1) + len(basis2)


def is_3connected(M: BinaryMatroid) -> bool:
    """No 1- or 2-separation (Oxley's convention, so U_{1,3} and U_{2,3} count)."""
    n = M.size
    if n > MAX_CONNECTIVITY_SIZE:
        raise TooLarge(f"size {n} exceeds {MAX_CONNECTIVITY_SIZE}")
    if n >= 4 and not (is_simple(M) and is_cosimple(M)):
        return False
    for mask, k, lam in _scan_lambda(M):
        small = min(k, n - k)
        if lam < 1 and small >= 1:
            return False
        if lam < 2 and small >= 2:
            return False
    return True


def exact_3separations(M: BinaryMatroid, min_side: int = 4) -> list[Separation]:
    """Partitions with lambda = 2 and both sides of size >= min_side.

    Each unordered pair appears once, represented by the side that holds the
    smallest label.
    """
    n = M.size
    anchor = M.position(min(M.labels)) if n else 0
    # _scan_lambda anchors on position 0; flip sides when the anchor differs
    out = []
    full = (1 << n) - 1
    for mask, k, lam in _scan_lambda(M):
        if lam != 2 or min(k, n - k) < min_side:
            continue
        if not mask >> anchor & 1:
            mask = full ^ mask
        out.append(Separation(M.labels_of(mask), 2))
    out.sort(key=lambda s: sorted(s.side_a))
    return out


def is_internally_4connected(M: BinaryMatroid) -> bool:
    if not is_3connected(M):
        return False
    n = M.size
    for mask, k, lam in _scan_lambda(M):
        if lam == 2 and min(k, n - k) >= 4:
            return False
    return True


def independent_sets(M: BinaryMatroid, k: int) -> Iterable[tuple[int, ...]]:
    """Independent k-subsets of labels, in lexicographic label order."""
    vecs = M.column_ints()
    for combo in combinations(sorted(M.labels), k):
        if rank_of(vecs[M.position(e)] for e in combo) == k:
            yield combo

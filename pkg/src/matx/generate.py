"""Single-element extensions and coextensions, classification, and census.

A simple single-element extension of a 3-connected matroid with at least
four elements is again 3-connected, and dually for cosimple coextensions.
The generators below only emit simple/cosimple candidates, so the
connectivity filter reduces to checking the base once.
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BudgetExceeded, InvalidCandidate, NotAnExtension
from .gf2 import BitVec, weight
from .isomorph import are_isomorphic, canonical_form, has_minor, invariant_key
from .matroid import BinaryMatroid, delete, is_3connected, is_cocircuit

log = logging.getLogger(__name__)


# -- candidates --------------------------------------------------------------

def extension_candidates(M: BinaryMatroid) -> list[BitVec]:
    """Columns with at least two ones that are not already columns of [I_r | D]."""
    r = M.rank
    present = set(M.column_ints())
    return [BitVec(r, v) for v in range(1, 1 << r) if weight(v) >= 2 and v not in present]


def coextension_candidates(M: BinaryMatroid) -> list[BitVec]:
    """Rows with at least two ones that are not already rows of D."""
    m = M.corank
    present = set(M.rows)
    return [BitVec(m, v) for v in range(1, 1 << m) if weight(v) >= 2 and v not in present]


def _as_int(vec: BitVec | str | int, width: int) -> int:
    if isinstance(vec, str):
        vec = BitVec.parse(vec)
    if isinstance(vec, BitVec):
        if vec.width != width:
            raise InvalidCandidate(f"expected width {width}, got {vec.width}")
        return vec.value
    if vec < 0 or vec >> width:
        raise InvalidCandidate(f"{vec} does not fit in width {width}")
    return vec


def extend_by(M: BinaryMatroid, col: BitVec | str | int) -> BinaryMatroid:
    """Append a column; it is labelled n + 1 (or max label + 1 off the standard labelling)."""
    v = _as_int(col, M.rank)
    if weight(v) < 2 or v in M.column_ints():
        raise InvalidCandidate(f"column {v:0{M.rank}b} is not a simple extension of this matroid")
    rows = [(row << 1) | ((v >> (M.rank - 1 - i)) & 1) for i, row in enumerate(M.rows)]
    new = M.size + 1 if M.is_standard_labelled() else max(M.labels, default=0) + 1
    return BinaryMatroid(M.rank, rows, M.labels + (new,))


def coextend_by(M: BinaryMatroid, row: BitVec | str | int) -> BinaryMatroid:
    """Append a row to D together with a new identity column.

    On the standard labelling the new element is r + 1 and the old labels
    r + 1 .. n move up by one; otherwise it takes max label + 1.
    """
    v = _as_int(row, M.corank)
    if weight(v) < 2 or v in M.rows:
        raise InvalidCandidate(f"row {v:0{M.corank}b} is not a cosimple coextension of this matroid")
    r = M.rank
    if M.is_standard_labelled():
        labels = tuple(range(1, M.size + 2))
    else:
        new = max(M.labels, default=0) + 1
        labels = M.basis_labels + (new,) + M.nonbasis_labels
    return BinaryMatroid(r + 1, M.rows + (v,), labels)


def added_label(M: BinaryMatroid, child: BinaryMatroid, mode: str) -> int:
    """Label of the element that ``extend_by``/``coextend_by`` introduced."""
    if mode == "extend":
        return child.labels[-1]
    return child.labels[M.rank]


def triad_coextend(M: BinaryMatroid, e1: int, e2: int) -> BinaryMatroid:
    """Coextend by the row whose only ones sit under the columns e1 and e2.

    Both elements must be columns of D.  The result is checked to contain
    the triad {e1, e2, f} for the new element f.
    """
    m = M.corank
    p1, p2 = M.position(e1) - M.rank, M.position(e2) - M.rank
    if p1 < 0 or p2 < 0 or p1 == p2:
        raise InvalidCandidate(f"{e1}, {e2} must be distinct non-basis elements")
    v = (1 << (m - 1 - p1)) | (1 << (m - 1 - p2))
    child = coextend_by(M, v)
    f = added_label(M, child, "coextend")
    shift = {e: child.labels[i + (1 if i >= M.rank else 0)] for i, e in enumerate(M.labels)}
    triad = {shift[e1], shift[e2], f}
    if not is_cocircuit(child, triad):
        raise InvalidCandidate(f"{sorted(triad)} is not a triad")
    return child


def pruned_second_rows(N: BinaryMatroid, M: BinaryMatroid,
                       excluded: Sequence[BinaryMatroid] = ()) -> list[tuple[BitVec, str]]:
    """Rows worth trying when coextending M = N + one column.

    Type I: admissible coextension rows of N (no excluded minor) with either
    last entry.  Type II: unit rows with last entry 1.  Type III: rows of M's
    D with the last entry flipped.
    """
    if (M.rank != N.rank or M.size != N.size + 1
            or delete(M, [M.labels[-1]]).rows != N.rows):
        raise NotAnExtension("M is not N plus one column")
    m = N.corank
    out: list[tuple[BitVec, str]] = []
    for row in coextension_candidates(N):
        child = coextend_by(N, row)
        if all(has_minor(child, X) is None for X in excluded):
            out.append((BitVec(m + 1, row.value << 1), "I"))
            out.append((BitVec(m + 1, (row.value << 1) | 1), "I"))
    for j in range(m):
        out.append((BitVec(m + 1, (1 << (m - j)) | 1), "II"))
    for row in M.rows:
        out.append((BitVec(m + 1, row ^ 1), "III"))
    return out


# -- classification ------------------------------------------------------------

@dataclass
class CandidateClass:
    key: bytes
    members: list[BitVec]
    representative: BinaryMatroid
    name: str | None = None
    has_excluded: dict[str, bool] = field(default_factory=dict)

    @property
    def label(self) -> str:
        return self.name or short_hash(self.key)

    @property
    def member_strings(self) -> list[str]:
        return [str(v) for v in self.members]

    def in_class(self) -> bool:
        return not any(self.has_excluded.values())


@dataclass
class ClassPartition:
    base: BinaryMatroid
    mode: str
    candidates: list[BitVec]
    classes: list[CandidateClass]

    def surviving(self) -> list[CandidateClass]:
        return [c for c in self.classes if c.in_class()]

    def class_of(self, vec: BitVec | str) -> CandidateClass:
        if isinstance(vec, str):
            vec = BitVec.parse(vec)
        for c in self.classes:
            if vec in c.members:
                return c
        raise KeyError(str(vec))

    def named(self, name: str) -> CandidateClass:
        for c in self.classes:
            if c.name == name:
                return c
        raise KeyError(name)

    def groups(self) -> list[frozenset]:
        return [frozenset(c.member_strings) for c in self.classes]


def short_hash(key: bytes) -> str:
    return "#" + hashlib.sha1(key).hexdigest()[:8]


def _apply(M: BinaryMatroid, mode: str, vec) -> BinaryMatroid:
    if mode == "extend":
        return extend_by(M, vec)
    if mode == "coextend":
        return coextend_by(M, vec)
    raise ValueError(f"mode must be 'extend' or 'coextend', not {mode!r}")


def classify(M: BinaryMatroid, mode: str, three_connected: bool = True,
             excluded: Sequence[BinaryMatroid] = (), names: bool = True) -> ClassPartition:
    """Apply every candidate, group the results by isomorphism class.

    Classes appear in order of their first member.  With ``names`` set,
    classes isomorphic to a catalog entry (or its dual) carry that name.
    ``excluded`` only records per-class minor flags; use
    ``ClassPartition.surviving`` to filter.
    """
    cands = extension_candidates(M) if mode == "extend" else coextension_candidates(M)
    base_ok = M.size >= 4 and is_3connected(M)
    classes: dict[bytes, CandidateClass] = {}
    for vec in cands:
        child = _apply(M, mode, vec)
        if three_connected and not base_ok and not is_3connected(child):
            continue
        key = canonical_form(child)
        cls = classes.get(key)
        if cls is None:
            cls = classes[key] = CandidateClass(key, [], child)
        cls.members.append(vec)
    ordered = list(classes.values())
    if names:
        from .catalog import name_of
        for c in ordered:
            c.name = name_of(c.representative)
    for c in ordered:
        for X in excluded:
            c.has_excluded[X.name or short_hash(canonical_form(X))] = has_minor(c.representative, X) is not None
    return ClassPartition(M, mode, cands, ordered)


# -- census ------------------------------------------------------------------

@dataclass
class CensusNode:
    matroid: BinaryMatroid
    seed: str
    steps: tuple[tuple[str, BitVec], ...]
    key: bytes

    @property
    def size(self) -> int:
        return self.matroid.size

    @property
    def rank(self) -> int:
        return self.matroid.rank

    def replay(self, seed: BinaryMatroid) -> BinaryMatroid:
        M = seed
        for mode, vec in self.steps:
            M = _apply(M, mode, vec)
        return M

    def provenance(self) -> str:
        parts = [self.seed] + [f"{'+' if m == 'extend' else '^'}{v}" for m, v in self.steps]
        return " ".join(parts)


@dataclass
class _State:
    node: CensusNode
    level: int  # trailing consecutive extensions, capped at 2
    last_ext: set = field(default_factory=set)  # labels, meaningful at level 1


class _Registry:
    """Nodes deduplicated by isomorphism; canonical forms only on fingerprint clashes."""

    def __init__(self):
        self.by_inv: dict[bytes, list[_State]] = {}

    def find(self, M: BinaryMatroid) -> _State | None:
        bucket = self.by_inv.get(invariant_key(M))
        if not bucket:
            return None
        key = canonical_form(M)
        for st in bucket:
            if st.node.key == key:
                return st
        return None

    def add(self, st: _State) -> None:
        self.by_inv.setdefault(invariant_key(st.node.matroid), []).append(st)

    def states(self) -> list[_State]:
        return [st for bucket in self.by_inv.values() for st in bucket]

    def __len__(self):
        return sum(len(b) for b in self.by_inv.values())


def _expand(M: BinaryMatroid, level: int, last_ext: tuple[int, ...], excluded: tuple,
            max_size: int, max_rank: int, prune: bool) -> list[tuple]:
    """Admissible children of one census node, in candidate order.

    Each item is ``(steps, child, level, last)`` with ``steps`` relative to M.
    Pure function of its arguments so layers can be expanded in worker
    processes and merged in a fixed order.
    """
    def admissible(X: BinaryMatroid) -> bool:
        return all(has_minor(X, N) is None for N in excluded)

    out = []
    if M.size + 1 <= max_size:
        for vec in extension_candidates(M):
            child = extend_by(M, vec)
            if not admissible(child):
                continue
            new_label = child.labels[-1]
            child_level = min(level + 1, 2) if prune else 0
            out.append(((("extend", vec),), child, child_level, new_label))
            if prune and level == 1 and child.size + 1 <= max_size and child.rank + 1 <= max_rank:
                for prev in last_ext:
                    try:
                        grand = triad_coextend(child, prev, new_label)
                    except InvalidCandidate:
                        continue
                    if admissible(grand):
                        row = BitVec(child.corank, grand.rows[-1])
                        out.append(((("extend", vec), ("coextend", row)), grand, 0, None))
    if M.rank + 1 <= max_rank and M.size + 1 <= max_size and not (prune and level >= 2):
        for vec in coextension_candidates(M):
            child = coextend_by(M, vec)
            if admissible(child):
                out.append(((("coextend", vec),), child, 0, None))
    return out


def _expand_packed(args):
    return _expand(*args)


def census(seed: BinaryMatroid, excluded: Sequence[BinaryMatroid], max_size: int,
           max_rank: int, prune: bool = True, max_nodes: int = 20000,
           seed_name: str | None = None, jobs: int = 1) -> list[CensusNode]:
    """Closure of ``seed`` under 3-connected single-element extensions and
    coextensions that avoid ``excluded``, one node per isomorphism class.

    With ``prune`` the chains follow the ordering rule: after two consecutive
    extensions the only coextension tried is the triad row over the two new
    columns, and after three or more none is tried.  Without ``prune`` every
    candidate is applied.  ``jobs > 1`` expands each layer in worker
    processes; the result does not depend on it.  Returns nodes sorted by
    (size, rank, key).
    """
    if not is_3connected(seed):
        raise ValueError("seed must be 3-connected")
    if any(has_minor(seed, X) is not None for X in excluded):
        raise ValueError("seed has an excluded minor")
    name = seed_name or seed.name or "seed"
    excluded = tuple(excluded)

    reg = _Registry()
    reg.add(_State(CensusNode(seed, name, (), canonical_form(seed)), 0))

    def offer(M: BinaryMatroid, steps: tuple, level: int, last: int | None) -> None:
        st = reg.find(M)
        if st is None:
            if len(reg) >= max_nodes:
                raise BudgetExceeded(f"census exceeded {max_nodes} nodes")
            node = CensusNode(M, name, steps, canonical_form(M))
            reg.add(_State(node, level, {last} if level == 1 and last is not None else set()))
        elif level < st.level:
            st.level = level
            st.last_ext = {last} if level == 1 and last is not None else set()
        elif level == st.level == 1 and last is not None:
            bij = are_isomorphic(M, st.node.matroid)
            st.last_ext.add(bij[last])

    pool = None
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        for size in range(seed.size, max_size + 1):
            layer = sorted((st for st in reg.states() if st.node.size == size),
                           key=lambda st: (st.node.rank, st.node.key))
            args = [(st.node.matroid, st.level, tuple(sorted(st.last_ext)), excluded,
                     max_size, max_rank, prune) for st in layer]
            results = pool.map(_expand_packed, args) if pool else map(_expand_packed, args)
            for st, children in zip(layer, results):
                for steps, child, level, last in children:
                    offer(child, st.node.steps + steps, level, last)
    finally:
        if pool:
            pool.shutdown()
    nodes = [st.node for st in reg.states()]
    nodes.sort(key=lambda nd: (nd.size, nd.rank, nd.key))
    log.info("census from %s: %d nodes", name, len(nodes))
    return nodes


def is_splitter(M: BinaryMatroid, excluded: Sequence[BinaryMatroid]) -> bool:
    """No 3-connected single-element extension or coextension of M avoids ``excluded``."""
    for vec in extension_candidates(M):
        if all(has_minor(extend_by(M, vec), X) is None for X in excluded):
            return False
    for vec in coextension_candidates(M):
        if all(has_minor(coextend_by(M, vec), X) is None for X in excluded):
            return False
    return True


def deletion_classes(M: BinaryMatroid, min_size: int) -> list[tuple[tuple[int, ...], BinaryMatroid]]:
    """One (deleted labels, restriction) per isomorphism class of spanning
    restrictions of M with at least ``min_size`` elements.

    Built level by level from single deletions, so the work grows with the
    number of classes rather than the number of subsets.  The deletion set
    kept for a class is the lexicographically first one reached.
    """
    out: list[tuple[tuple[int, ...], BinaryMatroid]] = [((), M)]
    layer = [((), M)]
    seen = {canonical_form(M)}
    while layer and layer[0][1].size - 1 >= min_size:
        nxt: dict[bytes, tuple[tuple[int, ...], BinaryMatroid]] = {}
        for S, N in layer:
            for e in N.labels:
                child = delete(N, [e])
                if child.rank != M.rank:
                    continue
                key = canonical_form(child)
                if key in seen:
                    if key in nxt:
                        T = tuple(sorted(S + (e,)))
                        if T < nxt[key][0]:
                            nxt[key] = (T, child)
                    continue
                seen.add(key)
                nxt[key] = (tuple(sorted(S + (e,))), child)
        layer = sorted(nxt.values(), key=lambda t: t[0])
        out.extend(layer)
    return out

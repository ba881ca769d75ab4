"""Canonical forms, isomorphism with explicit bijections, and minor testing."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import TooLarge
from .gf2 import XorBasis, weight
from .matroid import (
    BinaryMatroid,
    circuit_masks,
    cocircuit_masks,
    contract,
    delete,
    dual,
    from_columns,
    relabel,
    standardize,
)

MAX_SIZE = 20


def _check_size(M: BinaryMatroid) -> None:
    if M.size > MAX_SIZE:
        raise TooLarge(f"size {M.size} exceeds {MAX_SIZE}")


def _members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def invariant_key(M: BinaryMatroid) -> bytes:
    """Cheap isomorphism-invariant fingerprint."""
    _check_size(M)
    circs = circuit_masks(M)
    cocircs = cocircuit_masks(M)
    per_element = [0] * M.size
    for c in circs:
        for p in _members(c):
            per_element[p] += 1
    key = (
        M.size,
        M.rank,
        tuple(sorted(weight(c) for c in circs)),
        tuple(sorted(weight(c) for c in cocircs)),
        tuple(sorted(per_element)),
    )
    return repr(key).encode()


def element_colors(M: BinaryMatroid) -> tuple[int, ...]:
    """Stable colouring of positions by iterated circuit/cocircuit refinement.

    Colour ids are ranks of sorted signatures, so they do not depend on the
    labelling and can be compared across isomorphic matroids.
    """
    cached = M._cache.get("colors")
    if cached is not None:
        return cached
    n = M.size
    edges = [(0, _members(c)) for c in circuit_masks(M)]
    edges += [(1, _members(c)) for c in cocircuit_masks(M)]
    incident: list[list[int]] = [[] for _ in range(n)]
    for k, (_, mem) in enumerate(edges):
        for p in mem:
            incident[p].append(k)
    colors = [0] * n
    ncolors = 1
    while True:
        edge_sig = [(tag, len(mem), tuple(sorted(colors[p] for p in mem))) for tag, mem in edges]
        sigs = [(colors[p], tuple(sorted(edge_sig[k] for k in incident[p]))) for p in range(n)]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == ncolors:
            break
        colors, ncolors = new, len(table)
    result = tuple(colors)
    M._cache["colors"] = result
    return result


def _reverse_bits(combo: int, r: int) -> int:
    # bit k of combo (k-th chosen basis element) -> bit r-1-k
    out = 0
    for k in range(r):
        if combo >> k & 1:
            out |= 1 << (r - 1 - k)
    return out


@dataclass(frozen=True)
class _Leaf:
    key: tuple
    order: tuple[int, ...]  # positions in canonical order: loops, then level by level


def _canonical_leaf(M: BinaryMatroid) -> _Leaf:
    """Depth-first search over ordered bases with two kinds of pruning.

    Choosing the d-th basis element fixes the coordinates of every element
    that enters the span at that step; those (colour, coordinate) pairs form
    the d-th block of the key, so a branch whose key prefix already exceeds
    the best one is cut.  Two leaves with equal keys give an automorphism,
    and children of a node that lie in one orbit of the automorphisms fixing
    that node's prefix have identical subtrees, so only one is explored.
    """
    cached = M._cache.get("leaf")
    if cached is not None:
        return cached
    _check_size(M)
    n, r = M.size, M.rank
    vecs = M.column_ints()
    colors = element_colors(M)
    loops = sorted((colors[p], p) for p in range(n) if vecs[p] == 0)
    key0 = tuple(c for c, _ in loops)
    head = tuple(p for _, p in loops)

    best_blocks: list[tuple] = []
    best_order: list[tuple[int, ...]] = []
    gens: list[tuple[int, ...]] = []

    def orbit_reps(fixed: tuple[int, ...], cands: list[int]) -> list[int]:
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            if all(g[p] == p for p in fixed):
                for x in cands:
                    a, b = find(x), find(g[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        seen, reps = set(), []
        for x in cands:
            root = find(x)
            if root not in seen:
                seen.add(root)
                reps.append(x)
        return reps

    def dfs(chosen, basis, unspanned, placed, blocks):
        depth = len(chosen)
        if depth == r:
            order = head + placed
            if not best_blocks or blocks < best_blocks:
                best_blocks[:] = blocks
                best_order[:] = [order]
            else:
                g = [0] * n
                for a, b in zip(best_order[0], order):
                    g[a] = b
                gens.append(tuple(g))
            return
        low = min(colors[p] for p in unspanned)
        cands = [p for p in unspanned if colors[p] == low]
        done: set[int] = set()
        for p in cands:
            if p in done:
                continue
            # recompute orbits lazily: generators may have arrived from earlier siblings
            if gens:
                reps = orbit_reps(chosen, cands)
                if p not in reps:
                    continue
            done.add(p)
            nb = basis.copy()
            nb.add(vecs[p])
            entered, rest = [], []
            for q in unspanned:
                combo = nb.express(vecs[q])
                if combo is None:
                    rest.append(q)
                else:
                    entered.append((colors[q], _reverse_bits(combo, r), q))
            entered.sort()
            block = (low, tuple((c, v) for c, v, _ in entered))
            prefix = blocks + [block]
            if best_blocks and prefix > best_blocks[: depth + 1]:
                continue
            dfs(chosen + (p,), nb, rest, placed + tuple(q for _, _, q in entered), prefix)

    dfs((), XorBasis(), [p for p in range(n) if vecs[p]], (), [])
    result = _Leaf((r, n, key0, tuple(best_blocks)), best_order[0] if best_order else head)
    M._cache["leaf"] = result
    return result


def _canonical_labels(M: BinaryMatroid) -> tuple[tuple, tuple[int, ...]]:
    """(key, labels in canonical order), searching on the side of smaller rank.

    M and N are isomorphic exactly when their duals are, and the basis search
    is far cheaper at low rank, so a matroid whose rank exceeds its corank is
    canonized through its dual.
    """
    cached = M._cache.get("canon")
    if cached is not None:
        return cached
    if M.rank > M.corank:
        D = dual(M)
        leaf = _canonical_leaf(D)
        result = (("dual",) + leaf.key, tuple(D.labels[p] for p in leaf.order))
    else:
        leaf = _canonical_leaf(M)
        result = (leaf.key, tuple(M.labels[p] for p in leaf.order))
    M._cache["canon"] = result
    return result


def canonical_form(M: BinaryMatroid) -> bytes:
    """Byte string that is equal for two matroids exactly when they are isomorphic.

    The search runs over ordered bases whose colour sequence is minimal and
    keeps the smallest sorted table of (colour, coordinate) pairs.
    """
    return repr(_canonical_labels(M)[0]).encode()


def canonical_matroid(M: BinaryMatroid) -> BinaryMatroid:
    """Representative of M's class labelled 1..n in canonical order."""
    _, order = _canonical_labels(M)
    vecs = M.column_ints()
    return from_columns([vecs[M.position(e)] for e in order], range(1, M.size + 1), name=M.name)


def is_isomorphism(M1: BinaryMatroid, M2: BinaryMatroid, bijection: dict) -> bool:
    """Check that ``bijection`` (labels of M1 -> labels of M2) is an isomorphism."""
    if M1.rank != M2.rank or M1.size != M2.size:
        return False
    if set(bijection) != set(M1.labels) or set(bijection.values()) != set(M2.labels):
        return False
    S1 = standardize(M1, M1.labels)
    S2 = standardize(M2, [bijection[e] for e in M1.labels])
    return S2.rows == S1.rows and S2.labels == tuple(bijection[e] for e in S1.labels)


def are_isomorphic(M1: BinaryMatroid, M2: BinaryMatroid) -> dict | None:
    """A label bijection M1 -> M2 preserving circuits, or None."""
    _check_size(M1)
    _check_size(M2)
    if M1.rank != M2.rank or M1.size != M2.size:
        return None
    if invariant_key(M1) != invariant_key(M2):
        return None
    (k1, o1), (k2, o2) = _canonical_labels(M1), _canonical_labels(M2)
    if k1 != k2:
        return None
    bij = dict(zip(o1, o2))
    assert is_isomorphism(M1, M2, bij), "canonical leaves agree but bijection fails"
    return bij


def is_selfdual(M: BinaryMatroid) -> bool:
    return are_isomorphic(M, dual(M)) is not None


# -- minors ------------------------------------------------------------------

@dataclass(frozen=True)
class MinorWitness:
    """``M / contract_set \\ delete_set`` is carried onto N by ``bijection``.

    ``bijection`` maps the surviving labels of M to the labels of N.
    """

    contract_set: frozenset
    delete_set: frozenset
    bijection: dict = field(hash=False)

    def describe(self) -> str:
        c = ",".join(map(str, sorted(self.contract_set))) or "-"
        d = ",".join(map(str, sorted(self.delete_set))) or "-"
        pairs = " ".join(f"{a}->{b}" for a, b in sorted(self.bijection.items()))
        return f"/{{{c}}} \\{{{d}}} [{pairs}]"


def replay_witness(M: BinaryMatroid, N: BinaryMatroid, w: MinorWitness) -> bool:
    """Apply the witness and compare with N's representation bit for bit."""
    if w.contract_set & w.delete_set:
        return False
    try:
        m = delete(contract(M, w.contract_set), w.delete_set)
    except Exception:
        return False
    if set(w.bijection) != set(m.labels):
        return False
    image = relabel(m, w.bijection)
    return is_isomorphism(image, N, {e: e for e in image.labels})


class _MinorPlan:
    """Assignment order for embedding N.

    Images are chosen for an ordered basis of N; every other element of N is
    placed as soon as its fundamental circuit lies inside the assigned
    prefix.  The ordered basis is picked to make those checks fire early.
    """

    def __init__(self, N: BinaryMatroid):
        r, n = N.rank, N.size
        vecs = N.column_ints()
        self.rank = r
        best = None
        for combo in combinations(range(n), r):
            basis = XorBasis()
            if not all(basis.add(vecs[p]) for p in combo):
                continue
            order = self._greedy_order(vecs, combo)
            cost = self._cost(vecs, order, n)
            if best is None or cost < best[0]:
                best = (cost, order)
        order = best[1] if best else ()
        self.basis_order = list(order)
        basis = XorBasis()
        for p in order:
            basis.add(vecs[p])
        self.checks: list[list[tuple[int, list[int]]]] = [[] for _ in range(r + 1)]
        # checks[d] fire once basis steps 0..d-1 are assigned
        in_basis = set(order)
        for q in range(n):
            if q in in_basis:
                continue
            combo = basis.express(vecs[q])
            steps = [k for k in range(r) if combo >> k & 1]
            depth = max(steps) + 1 if steps else 0
            self.checks[depth].append((q, steps))
        self.distinct_nonzero = len({v for v in vecs if v})
        self.loops = sum(1 for v in vecs if v == 0)

    @staticmethod
    def _span_count(vecs, span: set) -> int:
        return sum(1 for v in vecs if v in span)

    @classmethod
    def _greedy_order(cls, vecs, combo) -> tuple[int, ...]:
        order: list[int] = []
        span = {0}
        left = list(combo)
        while left:
            def score(p):
                s2 = span | {x ^ vecs[p] for x in span}
                return (-cls._span_count(vecs, s2), p)
            p = min(left, key=score)
            left.remove(p)
            order.append(p)
            span = span | {x ^ vecs[p] for x in span}
        return tuple(order)

    @classmethod
    def _cost(cls, vecs, order, n: int) -> float:
        # rough tree size: branching ~ (n + 2 - depth), each check halves it
        span = {0}
        nodes = 1.0
        total = 0.0
        for d, p in enumerate(order, 1):
            span = span | {x ^ vecs[p] for x in span}
            checks = cls._span_count(vecs, span) - d
            nodes *= max(n + 2 - d, 1)
            total += nodes * 0.5 ** checks
        return total


def _reduce_mod(span_rows: list[tuple[int, int]], v: int) -> int:
    for lead, row in span_rows:
        if v & lead:
            v ^= row
    return v


def _restriction_search(plan: _MinorPlan, red: dict[int, int], order: list[int]):
    """Embed N into the elements ``order`` of M (their reduced vectors in ``red``).

    Returns a dict N position -> M position, or None.
    """
    r = plan.rank
    by_value: dict[int, list[int]] = {}
    for p in order:
        by_value.setdefault(red[p], []).append(p)
    nonzero = len([v for v in by_value if v])
    if nonzero < plan.distinct_nonzero or len(by_value.get(0, ())) < plan.loops:
        return None
    candidates = [p for p in order if red[p]]
    used: set[int] = set()
    images: dict[int, int] = {}
    chosen_vals: list[int] = []
    checks = plan.checks
    basis_order = plan.basis_order

    def place(depth: int) -> list[tuple[int, int]] | None:
        placed = []
        for q, steps in checks[depth]:
            target = 0
            for s in steps:
                target ^= chosen_vals[s]
            for p in by_value.get(target, ()):
                if p not in used:
                    used.add(p)
                    images[q] = p
                    placed.append((q, p))
                    break
            else:
                undo(placed)
                return None
        return placed

    def undo(placed):
        for q, p in placed:
            used.discard(p)
            del images[q]

    def dfs(depth: int, span: frozenset) -> bool:
        if depth == r:
            return True
        q = basis_order[depth]
        for p in candidates:
            if p in used:
                continue
            v = red[p]
            if v in span:
                continue
            used.add(p)
            images[q] = p
            chosen_vals.append(v)
            placed = place(depth + 1)
            if placed is not None:
                if dfs(depth + 1, span | {x ^ v for x in span}):
                    return True
                undo(placed)
            chosen_vals.pop()
            used.discard(p)
            del images[q]
        return False

    if place(0) is None:
        return None
    if dfs(0, frozenset({0})):
        return dict(images)
    return None


def _plan_for(N: BinaryMatroid) -> _MinorPlan:
    plan = N._cache.get("minor_plan")
    if plan is None:
        plan = _MinorPlan(N)
        N._cache["minor_plan"] = plan
    return plan


def has_minor(M: BinaryMatroid, N: BinaryMatroid) -> MinorWitness | None:
    """Search for N as a minor of M.

    Contraction sets range over independent sets of size r(M) - r(N) in
    lexicographic label order; for each, N is embedded into the contraction
    by assigning images to a basis of N and checking every other column as
    soon as its support is placed.
    """
    _check_size(M)
    _check_size(N)
    k = M.rank - N.rank
    extra = M.size - N.size - k
    if k < 0 or extra < 0:
        return None
    plan = _plan_for(N)
    vecs = M.column_ints()
    by_label = sorted(M.labels)
    pos = [M.position(e) for e in by_label]
    for C in combinations(pos, k):
        span = XorBasis()
        if not all(span.add(vecs[p]) for p in C):
            continue
        # fully reduced echelon rows of span(C)
        rows: list[tuple[int, int]] = []
        for p in C:
            v = _reduce_mod(rows, vecs[p])
            lead = 1 << (v.bit_length() - 1)
            rows = [(l2, r2 ^ v if r2 & lead else r2) for l2, r2 in rows]
            rows.append((lead, v))
        Cset = set(C)
        rest = [p for p in pos if p not in Cset]
        red = {p: _reduce_mod(rows, vecs[p]) for p in rest}
        images = _restriction_search(plan, red, rest)
        if images is None:
            continue
        image_pos = set(images.values())
        bijection = {M.labels[mp]: N.labels[nq] for nq, mp in images.items()}
        return MinorWitness(
            frozenset(M.labels[p] for p in C),
            frozenset(M.labels[p] for p in rest if p not in image_pos),
            bijection,
        )
    return None


def in_class(M: BinaryMatroid, excluded: Iterable[BinaryMatroid]) -> bool:
    """True when M has none of ``excluded`` as a minor (connectivity not checked)."""
    return all(has_minor(M, X) is None for X in excluded)


def dedupe(matroids: Iterable[BinaryMatroid]) -> list[BinaryMatroid]:
    """First representative of each isomorphism class, in input order."""
    seen: dict[bytes, BinaryMatroid] = {}
    for M in matroids:
        seen.setdefault(canonical_form(M), M)
    return list(seen.values())


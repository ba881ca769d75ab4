from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matx import catalog
from matx.errors import DimensionMismatch, RankDeficient, UnknownLabel
from matx.matroid import (
    circuits, cocircuits, connectivity, contract, delete, dual, exact_3separations, from_columns,
    is_3connected, is_circuit, is_cocircuit, is_internally_4connected, make, minor, standardize,
    subset_rank,
)
from oracles import brute_rank


@st.composite
def matroids(draw, max_size=9):
    n = draw(st.integers(1, max_size))
    r = draw(st.integers(0, n))
    rows = draw(st.lists(st.integers(0, (1 << (n - r)) - 1), min_size=r, max_size=r))
    return make(r, n, rows)


def rank_by_columns(M, S):
    vecs = M.column_ints()
    return brute_rank([vecs[M.position(e)] for e in S])


def subsets(labels):
    for k in range(len(labels) + 1):
        yield from combinations(labels, k)


def test_make_defaults_and_errors():
    M = make(2, 4, ["11", "01"])
    assert M.labels == (1, 2, 3, 4)
    assert M.column(3) == 0b10 and M.column(4) == 0b11
    with pytest.raises(DimensionMismatch):
        make(2, 4, ["111", "011"])
    with pytest.raises(UnknownLabel):
        delete(M, [9])
    with pytest.raises(RankDeficient):
        from_columns([1, 1], [1, 2], rank=2)


@settings(max_examples=150, deadline=None)
@given(matroids())
def test_dual_rank_formula(M):
    Ms = dual(M)
    assert dual(Ms).rows == M.rows and dual(Ms).labels == M.labels
    for S in subsets(M.labels):
        rest = [e for e in M.labels if e not in S]
        assert rank_by_columns(Ms, S) == len(S) - M.rank + rank_by_columns(M, rest)


@settings(max_examples=150, deadline=None)
@given(matroids(), st.data())
def test_delete_contract_rank(M, data):
    e = data.draw(st.sampled_from(M.labels))
    d, c = delete(M, [e]), contract(M, [e])
    re = rank_by_columns(M, [e])
    for S in subsets(d.labels):
        assert subset_rank(d, S) == rank_by_columns(M, S)
        assert subset_rank(c, S) == rank_by_columns(M, list(S) + [e]) - re
    assert minor(M, [e], []) == c


@settings(max_examples=100, deadline=None)
@given(matroids(max_size=8))
def test_standardize_preserves_matroid(M):
    order = sorted(M.labels, reverse=True)
    S = standardize(M, order)
    for T in subsets(M.labels):
        assert subset_rank(S, T) == subset_rank(M, T)


@settings(max_examples=100, deadline=None)
@given(matroids(max_size=8))
def test_circuits_brute_force(M):
    def dependent(S):
        return rank_by_columns(M, S) < len(S)

    expect = {frozenset(S) for S in subsets(M.labels)
              if S and dependent(S) and all(not dependent(T) for T in combinations(S, len(S) - 1))}
    assert circuits(M) == expect
    assert cocircuits(M) == circuits(dual(M))


@settings(max_examples=150, deadline=None)
@given(matroids(max_size=9))
def test_connectivity_brute_force(M):
    n = M.size
    lam = {S: connectivity(M, S) for S in subsets(M.labels)}
    for S, value in lam.items():
        rest = [e for e in M.labels if e not in S]
        assert value == rank_by_columns(M, S) + rank_by_columns(M, rest) - M.rank
    two_sep = any(v < k and min(len(S), n - len(S)) >= k for S, v in lam.items() for k in (1, 2))
    assert is_3connected(M) == (not two_sep)
    big_three = any(v == 2 and min(len(S), n - len(S)) >= 4 for S, v in lam.items())
    assert is_internally_4connected(M) == (is_3connected(M) and not big_three)


def test_p9_separations_frozen():
    P9 = catalog.get("P9")
    assert is_3connected(P9)
    assert not is_internally_4connected(P9)
    sides = [sorted(s.side_a) for s in exact_3separations(P9)]
    assert sides == [[1, 2, 5, 6], [1, 2, 5, 6, 8], [1, 2, 5, 6, 9]]
    assert is_circuit(P9, [1, 2, 5, 6]) and is_cocircuit(P9, [1, 2, 5, 6])


def test_f7_and_dual_frozen():
    F7 = catalog.get("F7")
    assert (F7.rank, F7.size) == (3, 7)
    assert len(circuits(F7)) == 14
    assert len([C for C in circuits(F7) if len(C) == 3]) == 7
    assert is_internally_4connected(F7)
    assert dual(F7).rank == 4

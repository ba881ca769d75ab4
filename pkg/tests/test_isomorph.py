import random

from hypothesis import given, settings
from hypothesis import strategies as st

from matx import catalog
from matx.isomorph import (
    are_isomorphic, canonical_form, canonical_matroid, has_minor, is_isomorphism, is_selfdual,
    replay_witness,
)
from matx.matroid import dual, from_columns, make, minor
from oracles import explicit_isomorphic, minor_keys_by_size


@st.composite
def matroids(draw, min_size=1, max_size=8):
    n = draw(st.integers(min_size, max_size))
    r = draw(st.integers(0, n))
    rows = draw(st.lists(st.integers(0, (1 << (n - r)) - 1), min_size=r, max_size=r))
    return make(r, n, rows)


def scrambled(M, seed):
    """Same matroid after a random relabelling and a random choice of basis."""
    rng = random.Random(seed)
    order = list(M.labels)
    rng.shuffle(order)
    vecs = M.column_ints()
    new = rng.sample(range(100, 100 + M.size), M.size)
    return from_columns([vecs[M.position(e)] for e in order], new)


@settings(max_examples=200, deadline=None)
@given(matroids(), st.integers(0, 10**6))
def test_canonical_form_invariant_under_relabelling(M, seed):
    N = scrambled(M, seed)
    assert canonical_form(N) == canonical_form(M)
    bij = are_isomorphic(M, N)
    assert bij is not None and is_isomorphism(M, N, bij)


@settings(max_examples=200, deadline=None)
@given(matroids(max_size=7), matroids(max_size=7))
def test_canonical_form_matches_explicit_search(A, B):
    assert (canonical_form(A) == canonical_form(B)) == explicit_isomorphic(A, B)


@settings(max_examples=60, deadline=None)
@given(matroids(min_size=3, max_size=7), matroids(max_size=5))
def test_has_minor_matches_exhaustive(M, N):
    keys = minor_keys_by_size(M, canonical_form)
    expect = canonical_form(N) in keys.get(N.size, set())
    w = has_minor(M, N)
    assert (w is not None) == expect
    if w is not None:
        assert replay_witness(M, N, w)
        assert are_isomorphic(minor(M, w.contract_set, w.delete_set), N) is not None


def test_canonical_matroid_is_a_fixed_point():
    for name in ("P9", "E5", "M12", "R17"):
        C = canonical_matroid(catalog.get(name))
        assert canonical_matroid(C) == C


def test_selfdual_frozen():
    selfdual = {e.name for e in catalog.entries() if is_selfdual(e.matroid)}
    for name in ("E4", "E5", "M12", "R10", "Z4\\b4", "Z5\\c5", "AG(3,2)", "S8"):
        assert name in selfdual
    for name in ("P9", "F7", "R17", "Z", "D2"):
        assert name not in selfdual


def test_witness_description_frozen():
    w = has_minor(catalog.get("D1"), catalog.get("P9"))
    assert w is not None and not w.contract_set and len(w.delete_set) == 1
    assert w.describe().startswith("/{-} \\{")


def test_f7_is_not_a_minor_of_its_dual():
    assert has_minor(catalog.get("F7*"), catalog.get("F7")) is None
    assert are_isomorphic(catalog.get("F7"), dual(catalog.get("F7"))) is None

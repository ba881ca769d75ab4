import pytest

from matx import catalog
from matx.errors import InvalidCandidate
from matx.generate import (
    added_label, census, classify, coextend_by, coextension_candidates, deletion_classes, extend_by,
    extension_candidates, is_splitter, triad_coextend,
)
from matx.isomorph import are_isomorphic, canonical_form
from matx.matroid import contract, delete, dual, is_3connected, make

P9 = catalog.get("P9")
E4 = catalog.get("E4")


def test_candidate_counts_frozen():
    assert len(extension_candidates(P9)) == 6
    assert len(coextension_candidates(P9)) == 22
    assert len(extension_candidates(catalog.get("F7"))) == 0


@pytest.mark.parametrize("col", ["0000", "1000", "0111"])
def test_extend_rejects_loops_and_parallels(col):
    with pytest.raises(InvalidCandidate):
        extend_by(P9, col)


def test_extend_and_coextend_are_dual():
    M = extend_by(P9, "1110")
    assert M.size == 10 and M.rank == 4
    assert delete(M, [10]) == P9
    N = coextend_by(P9, "01001")
    assert added_label(P9, N, "coextend") == 5
    assert are_isomorphic(contract(N, [5]), P9) is not None
    assert are_isomorphic(dual(coextend_by(dual(P9), "1110")), extend_by(P9, "1110")) is not None


def test_classify_p9_extensions():
    P = classify(P9, "extend")
    assert [(c.label, c.member_strings) for c in P.classes] == [
        ("D3", ["0011"]), ("D2", ["0101", "0110", "1001", "1010"]), ("D1", ["1110"])]
    assert P.class_of("0110").label == "D2"
    assert P.named("D1").member_strings == ["1110"]


def test_classify_excluded_flags():
    P = classify(P9, "coextend", excluded=[E4])
    flagged = {c.label for c in P.classes if c.has_excluded["E4"]}
    assert flagged == {"E4"}
    assert {c.label for c in P.surviving()} == {"E1", "E2", "E3", "E5", "E6", "E6*", "E7"}


def test_triad_coextension_matches_row():
    D = catalog.get("D")
    assert triad_coextend(D, D.labels[-2], D.labels[-1]) == coextend_by(D, "0000011")


def test_census_trivial_caps():
    nodes = census(P9, [], 9, 4)
    assert [n.provenance() for n in nodes] == ["P9"]
    only_rank4 = census(P9, [E4], 10, 4)
    assert all(n.rank == 4 for n in only_rank4) and len(only_rank4) == 4


def test_census_rejects_bad_seeds():
    with pytest.raises(ValueError):
        census(make(2, 4, ["11", "00"]), [], 6, 3)
    with pytest.raises(ValueError):
        census(E4, [P9], 12, 6)


def test_census_replay_and_order():
    nodes = census(P9, [E4], 10, 5)
    assert len(nodes) == 11
    assert [n.size for n in nodes] == sorted(n.size for n in nodes)
    assert len({n.key for n in nodes}) == len(nodes)
    for n in nodes:
        M = n.replay(P9)
        assert canonical_form(M) == n.key
        assert is_3connected(M)


def test_census_is_independent_of_jobs():
    a = census(P9, [E4], 11, 5)
    b = census(P9, [E4], 11, 5, jobs=2)
    assert [(n.key, n.provenance()) for n in a] == [(n.key, n.provenance()) for n in b]


def test_splitter():
    assert is_splitter(catalog.get("M12"), [E4])
    assert not is_splitter(P9, [E4])


def test_deletion_classes_of_f7():
    out = deletion_classes(catalog.get("F7"), 5)
    assert [(S, N.size) for S, N in out] == [((), 7), ((1,), 6), ((1, 2), 5)]

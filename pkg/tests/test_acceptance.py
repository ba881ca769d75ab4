"""Acceptance criteria, one marker per criterion.

The terminal summary prints one PASS/FAIL line per criterion.  Where a
criterion is phrased more strongly than the mathematics allows, the literal
form is kept as a strict xfail next to a passing test of what does hold.
"""

import functools
import itertools
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matx import catalog, tables, verify
from matx.catalog import spike, spike_b, spike_c
from matx.generate import (
    census, classify, coextend_by, coextension_candidates, extend_by, extension_candidates, is_splitter,
)
from matx.gf2 import BitMatrix, BitVec, in_row_space, rref
from matx.isomorph import are_isomorphic, canonical_form, has_minor, is_selfdual, replay_witness
from matx.matroid import (
    contract, delete, dual, is_3connected, is_circuit, is_cocircuit, is_internally_4connected,
)
from oracles import brute_rank, explicit_isomorphic, minor_keys_by_size, span

get = catalog.get


@functools.lru_cache(maxsize=None)
def claim(cid):
    return verify.verify_claim(cid)


def iso(a, b):
    return are_isomorphic(a, b) is not None


@functools.lru_cache(maxsize=None)
def e5_census():
    return census(get("E5"), [get("E4")], 17, 6)


# -- 1: tables regenerate exactly -------------------------------------------

@pytest.mark.criterion(1)
@pytest.mark.parametrize("cid", ["T1A", "T1B", "T2A", "T2B", "T3"])
def test_table_claims_pass(cid):
    r = claim(cid)
    assert r.status == "pass", r.detail


@pytest.mark.criterion(1)
def test_table_counts():
    P = classify(get("P9"), "extend")
    assert len(P.candidates) == 6 and len(P.classes) == 3
    for name in ("D1", "D2", "D3"):
        assert len(extension_candidates(get(name))) == 5
    for name in ("X1", "X2", "X3"):
        assert len(extension_candidates(get(name))) == 4
    P = classify(get("P9"), "coextend")
    assert len(P.candidates) == 22 and len(P.classes) == 8
    E5 = get("E5-lemma")
    P = classify(E5, "extend", excluded=[get("E4")])
    assert len(P.candidates) == 21 and len(P.classes) == 7
    assert sorted(c.has_excluded["E4"] for c in P.classes) == sorted(f for _, _, f in tables.E5_EXTENSIONS)
    assert len(coextension_candidates(E5)) == 21
    for base, k in (("A", 14), ("B", 8), ("C", 14)):
        P = classify(get(base), "coextend", names=False)
        assert len(P.candidates) == 52 and len(P.classes) == k
        assert {frozenset(m) for m, _ in tables.ABC_COEXTENSIONS[base]} == set(P.groups())


# -- 2: the D2 coextension table ---------------------------------------------

@pytest.mark.criterion(2)
def test_d2_partition():
    P, duplicates, _ = verify.d2_coextension_report()
    assert len(P.candidates) == 53 and len(P.classes) == 12
    named = {c.name for c in P.classes if c.name}
    assert named == {"A", "Z", "C", "B"}
    assert P.class_of("000111").name == "Z" and P.class_of("101001").name == "B"


@pytest.mark.criterion(2)
def test_d2_exactly_two_discrepancies():
    r = claim("T4")
    flagged = [line for line in r.detail.splitlines() if line.startswith(("DISCREPANCY", "FAIL"))]
    assert r.status == "discrepancy"
    assert len(flagged) == 2
    assert "[100111]" in flagged[0] and "[101000]" in flagged[1]


# -- 3: circuit-cocircuit lemma ------------------------------------------------

@pytest.mark.criterion(3)
def test_separation_lemma():
    assert claim("L21.sep").status == "pass", claim("L21.sep").detail
    for name in ("P9", "D1", "D3"):
        assert is_circuit(get(name), [1, 2, 5, 6]) and is_cocircuit(get(name), [1, 2, 5, 6])
    for name in ("E1", "E2", "E3", "E6", "E6*", "E7"):
        assert is_circuit(get(name), [1, 2, 6, 7]) and is_cocircuit(get(name), [1, 2, 6, 7])
    assert is_internally_4connected(get("D2"))
    assert is_selfdual(get("E4")) and is_selfdual(get("E5"))


@pytest.mark.criterion(3)
def test_one_element_check_isolates_classes():
    P9 = get("P9")
    ext = {catalog.name_of(extend_by(P9, v)) for v in extension_candidates(P9)
           if not is_cocircuit(extend_by(P9, v), [1, 2, 5, 6])}
    co = {catalog.name_of(coextend_by(P9, v)) for v in coextension_candidates(P9)
          if not is_circuit(coextend_by(P9, v), [1, 2, 6, 7])}
    assert ext == {"D2"} and co == {"E4", "E5"}


# -- 4: the E5 lemma -----------------------------------------------------------

@pytest.mark.criterion(4)
@pytest.mark.parametrize("cid", ["L22.stage1", "L22.stage2", "L22.stage3"])
def test_e5_lemma_claims_pass(cid):
    assert claim(cid).status == "pass", claim(cid).detail


@pytest.mark.criterion(4)
def test_e5_lemma_facts():
    E4, M12, R17 = get("E4"), get("M12"), get("R17")
    b8 = classify(get("B"), "coextend", names=False).classes[7].representative
    c12 = classify(get("C"), "coextend", names=False).classes[11].representative
    assert iso(b8, c12) and iso(c12, M12)
    assert has_minor(M12, E4) is None and is_selfdual(M12) and is_3connected(M12)
    assert not is_internally_4connected(M12)
    assert is_splitter(M12, [E4])
    M = get("E5-lemma")
    for col in tables.E5_FREE_COLUMNS:
        M = extend_by(M, col)
    assert M.rows == R17.rows
    assert is_internally_4connected(R17) and has_minor(R17, E4) is None
    for base, idx, C, D in tables.ABC_E4_WITNESSES:
        cls = classify(get(base), "coextend", names=False).classes[idx - 1]
        assert iso(delete(contract(coextend_by(get(base), cls.members[0]), C), D), E4)
    for name, C, D in tables.TRIAD_E4_WITNESSES:
        Mp = coextend_by(get(name), "0000011")
        assert iso(delete(contract(Mp, C), D), E4)


# -- 5: census from E5 ---------------------------------------------------------

@pytest.mark.criterion(5)
def test_census_size_and_restrictions():
    nodes = e5_census()
    assert max(n.size for n in nodes) == 17
    assert [catalog.name_of(n.matroid) for n in nodes if n.size == 17] == ["R17"]
    R17 = get("R17")
    for n in nodes:
        if n.rank == 5:
            assert has_minor(R17, n.matroid) is not None, n.provenance()


@pytest.mark.criterion(5)
def test_census_rank6_members_are_m12_or_duals_of_rank5():
    nodes = e5_census()
    high = [n for n in nodes if n.rank >= 6]
    assert sorted(catalog.name_of(n.matroid) for n in high) == ["A*", "B*", "C*", "M12"]
    rank5 = {n.key for n in nodes if n.rank <= 5}
    for n in high:
        assert iso(n.matroid, get("M12")) or canonical_form(dual(n.matroid)) in rank5


@pytest.mark.criterion(5)
@pytest.mark.xfail(strict=True, reason="the rank-6 layer also holds A*, B*, C*, not only M12")
def test_census_literal_m12_only():
    high = [n for n in e5_census() if n.rank >= 6]
    assert len(high) == 1 and iso(high[0].matroid, get("M12"))


# -- 6: D2, Z and the inventories ---------------------------------------------

@pytest.mark.criterion(6)
def test_z_and_r16():
    Z = get("Z")
    assert iso(coextend_by(get("D2"), "000111"), Z)
    assert len(classify(Z, "extend").classes) == 3
    M = Z
    for col in tables.Z_COLUMNS:
        M = extend_by(M, col)
    assert iso(M, get("R16"))
    hits = [e for e in get("R17").labels if iso(delete(get("R17"), [e]), get("R16"))]
    assert hits == [3]


@pytest.mark.criterion(6)
@pytest.mark.xfail(strict=True, reason="in the printed labelling R16 is R17 minus element 3, not 17")
def test_r16_literal_label():
    assert iso(delete(get("R17"), [17]), get("R16"))


@pytest.mark.criterion(6)
def test_theorem_claim_has_only_text_discrepancies():
    r = claim("TH11.d2")
    assert r.status == "discrepancy"
    assert "FAIL" not in r.detail


@pytest.mark.criterion(6)
def test_inventories_and_pinpointed_mismatch():
    r = claim("COR.i4c")
    assert r.status == "discrepancy", r.detail
    assert "EX[P9*] as listed (16)" in r.detail
    [line] = [ln for ln in r.detail.splitlines() if ln.startswith("DISCREPANCY")]
    assert "8" in line and "PG(3,2)" in line


# -- 7: spikes and the F7* census ----------------------------------------------

@pytest.mark.criterion(7)
def test_oxley_claim():
    assert claim("OX").status == "pass", claim("OX").detail


@pytest.mark.criterion(7)
def test_spike_identities():
    Z4 = spike(4)
    assert iso(delete(Z4, [spike_b(4, 4)]), get("S8"))
    assert iso(delete(Z4, [spike_c(4)]), get("AG(3,2)"))
    for r in (4, 5, 6):
        Z = spike(r)
        assert is_selfdual(delete(Z, [spike_b(r, r)])) and is_selfdual(delete(Z, [spike_c(r)]))
        if r > 4:
            assert iso(delete(Z, [spike_b(r, r), spike_c(r)]), dual(spike(r - 1)))


# -- 8: oracle equivalences ----------------------------------------------------

@pytest.mark.criterion(8)
def test_pruned_census_equals_unpruned():
    assert claim("SST.EQ").status == "pass", claim("SST.EQ").detail


SMALL = [e for e in catalog.entries() if e.matroid.size <= 11]


@pytest.mark.criterion(8)
@pytest.mark.parametrize("big", SMALL, ids=[e.name for e in SMALL])
def test_has_minor_matches_exhaustive_search(big):
    M = big.matroid
    keys = minor_keys_by_size(M, canonical_form)
    for e in catalog.entries():
        N = e.matroid
        if N.size > M.size:
            continue
        w = has_minor(M, N)
        assert (w is not None) == (canonical_form(N) in keys.get(N.size, set())), e.name
        if w is not None:
            assert replay_witness(M, N, w)


@pytest.mark.criterion(8)
def test_canonical_form_matches_explicit_search():
    es = catalog.entries()
    for a, b in itertools.combinations_with_replacement(es, 2):
        same = canonical_form(a.matroid) == canonical_form(b.matroid)
        assert same == explicit_isomorphic(a.matroid, b.matroid), (a.name, b.name)


@pytest.mark.criterion(8)
@settings(max_examples=400, deadline=None)
@given(st.integers(1, 12).flatmap(lambda w: st.tuples(
    st.just(w), st.lists(st.integers(0, (1 << w) - 1), max_size=8), st.integers(0, (1 << w) - 1))))
def test_linear_algebra_matches_enumeration(case):
    width, rows, v = case
    m = BitMatrix(tuple(rows), width)
    red, piv, r = rref(m)
    assert r == brute_rank(rows) and span(red.rows) == span(rows)
    assert in_row_space(m, BitVec(width, v)) == (v in span(rows))


# -- 9: reproducible reports ---------------------------------------------------

@pytest.mark.criterion(9)
def test_parallel_reports_are_byte_identical(tmp_path):
    outs = []
    for k in (1, 2):
        path = tmp_path / f"r{k}.json"
        proc = subprocess.run([sys.executable, "-m", "matx.cli", "verify", "--all", "--jobs", "8",
                               "--report", str(path)], capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]

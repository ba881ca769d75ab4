"""Registry of executable claims.

Every claim recomputes its statement from catalog matrices and the printed
groupings in :mod:`matx.tables`, and returns a :class:`ClaimResult` whose
detail text names the witness (or the offending candidate).  Results are
deterministic: the detail never depends on timing, hashing order or the
number of worker processes.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import catalog, tables
from .catalog import get, name_of
from .errors import UnknownClaim
from .generate import (
    ClassPartition, census, classify, coextend_by, coextension_candidates, deletion_classes,
    extend_by, extension_candidates, is_splitter, pruned_second_rows, short_hash, triad_coextend,
)
from .isomorph import (
    MinorWitness, are_isomorphic, canonical_form, has_minor, is_selfdual, replay_witness,
)
from .matroid import (
    BinaryMatroid, contract, delete, dual, is_3connected, is_circuit, is_cocircuit,
    is_internally_4connected,
)

STATUSES = ("pass", "fail", "discrepancy")


@dataclass(frozen=True)
class ClaimResult:
    id: str
    status: str  # pass | fail | discrepancy
    detail: str
    paper_ref: str

    def to_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "detail": self.detail, "paperRef": self.paper_ref}


class _Check:
    """Collects failures and notes for one claim."""

    def __init__(self):
        self.failures: list[str] = []
        self.discrepancies: list[str] = []
        self.notes: list[str] = []

    def require(self, ok: bool, message: str) -> bool:
        if not ok:
            self.failures.append(message)
        return ok

    def note(self, message: str) -> None:
        self.notes.append(message)

    def discrepancy(self, message: str) -> None:
        self.discrepancies.append(message)

    def result(self, cid: str, ref: str) -> ClaimResult:
        if self.failures:
            status, lines = "fail", ["FAIL " + m for m in self.failures] + self.discrepancies + self.notes
        elif self.discrepancies:
            status, lines = "discrepancy", ["DISCREPANCY " + m for m in self.discrepancies] + self.notes
        else:
            status, lines = "pass", self.notes
        return ClaimResult(cid, status, "\n".join(lines), ref)


def _iso(a: BinaryMatroid, b: BinaryMatroid) -> bool:
    return are_isomorphic(a, b) is not None


def _label(M: BinaryMatroid) -> str:
    return name_of(M) or short_hash(canonical_form(M))


def _set(items) -> str:
    return "{" + ", ".join(str(x) for x in sorted(items)) + "}"


def _restriction(base: str, S, N: BinaryMatroid) -> str:
    name = name_of(N)
    if not S:
        return base
    where = f"{base} \\ {_set(S)}"
    return f"{name} = {where}" if name else where


def _fmt(strings) -> str:
    return " ".join(f"[{s}]" for s in strings)


def _compare_partition(chk: _Check, where: str, P: ClassPartition, printed) -> None:
    """Printed groups must be exactly the computed classes, names resolved by isomorphism."""
    computed = {frozenset(c.member_strings): c for c in P.classes}
    printed_all = sorted(s for members, _ in printed for s in members)
    cand = sorted(s for c in P.classes for s in c.member_strings)
    for s in sorted(set(cand) - set(printed_all)):
        chk.require(False, f"{where}: candidate [{s}] is computed but not printed")
    raw = {str(v) for v in P.candidates}
    for s in sorted(set(printed_all) - set(cand)):
        why = "gives a matroid that is not 3-connected" if s in raw else "is not a candidate"
        chk.require(False, f"{where}: printed [{s}] {why}")
    for members, name in printed:
        cls = computed.get(frozenset(members))
        if cls is None:
            for s in members:
                if s in cand:
                    other = P.class_of(s)
                    if set(other.member_strings) != set(members):
                        chk.require(False, f"{where}: [{s}] printed with {_fmt(members)} "
                                           f"but computed class is {_fmt(other.member_strings)}")
            continue
        if name is not None and not name.startswith("coext"):
            chk.require(cls.name == name, f"{where}: class {_fmt(members)} is {cls.label}, printed {name}")


# -- table claims ------------------------------------------------------------

def _t1a() -> _Check:
    chk = _Check()
    for base, printed in tables.P9_EXTENSION_CHAIN.items():
        P = classify(get(base), "extend")
        _compare_partition(chk, base, P, printed)
        chk.note(f"{base}: " + "; ".join(f"{c.label} {_fmt(c.member_strings)}" for c in P.classes))
    return chk


def _t1b() -> _Check:
    chk = _Check()
    P = classify(get("P9"), "coextend")
    chk.require(len(P.candidates) == 22, f"P9 has {len(P.candidates)} coextension candidates, not 22")
    chk.require(len(P.classes) == 8, f"P9 coextensions fall in {len(P.classes)} classes, not 8")
    _compare_partition(chk, "P9", P, tables.P9_COEXTENSIONS)
    chk.note("P9: " + "; ".join(f"{c.label} {_fmt(c.member_strings)}" for c in P.classes))
    return chk


def _t2a() -> _Check:
    chk = _Check()
    E4 = get("E4")
    P = classify(get("E5-lemma"), "extend", excluded=[E4])
    chk.require(len(P.candidates) == 21 and len(P.classes) == 7,
                f"{len(P.candidates)} candidates in {len(P.classes)} classes, expected 21 in 7")
    _compare_partition(chk, "E5", P, [(m, n) for m, n, _ in tables.E5_EXTENSIONS])
    for members, _, flag in tables.E5_EXTENSIONS:
        cls = P.class_of(members[0])
        chk.require(cls.has_excluded["E4"] == flag,
                    f"E5 {_fmt(members)}: E4-minor {cls.has_excluded['E4']}, printed {flag}")
    for c in P.classes:
        w = has_minor(c.representative, E4)
        chk.note(f"{c.label} {_fmt(c.member_strings)} E4-minor: "
                 + (w.describe() if w else "none"))
    chk.note("computed on the E5 representation used for the E5 lemma")
    return chk


def _t2b() -> _Check:
    chk = _Check()
    E4 = get("E4")
    P = classify(get("E5-lemma"), "coextend", excluded=[E4])
    chk.require(len(P.candidates) == 21 and len(P.classes) == 7,
                f"{len(P.candidates)} candidates in {len(P.classes)} classes, expected 21 in 7")
    _compare_partition(chk, "E5", P, tables.E5_COEXTENSIONS)
    for members, name in tables.E5_COEXTENSIONS:
        if name:
            cls = P.class_of(members[0])
            chk.require(_iso(cls.representative, dual(get(name[:-1]))),
                        f"class {_fmt(members)} is not isomorphic to the dual of {name[:-1]}")
            chk.require(not cls.has_excluded["E4"], f"{name} has an E4-minor")
    free = [c.label for c in P.classes if not c.has_excluded["E4"]]
    chk.note("E4-free coextension classes: " + ", ".join(free))
    return chk


def _t3() -> _Check:
    chk = _Check()
    E4 = get("E4")
    expected = {"A": 14, "B": 8, "C": 14}
    for base, printed in tables.ABC_COEXTENSIONS.items():
        P = classify(get(base), "coextend", excluded=[E4])
        chk.require(len(P.candidates) == 52, f"{base}: {len(P.candidates)} candidates, not 52")
        chk.require(len(P.classes) == expected[base],
                    f"{base}: {len(P.classes)} classes, not {expected[base]}")
        _compare_partition(chk, base, P, printed)
        free = [f"coext {i}" for i, c in enumerate(P.classes, 1) if not c.has_excluded["E4"]]
        chk.note(f"{base}: {len(P.classes)} classes; E4-free: {', '.join(free) or 'none'}")
    return chk


def d2_coextension_report() -> tuple[ClassPartition, list[str], list[str]]:
    """(partition, duplicated printed strings, anomaly lines) for the D2 table."""
    P = classify(get("D2"), "coextend", excluded=[get("E4")])
    printed = tables.D2_COEXTENSIONS
    seen: dict[str, list[str]] = {}
    for members, label, _, _ in printed:
        for s in members:
            seen.setdefault(s, []).append(label)
    duplicates = sorted(s for s, where in seen.items() if len(where) > 1)
    lines = []
    for s in duplicates:
        home = next(label for members, label, _, _ in printed
                    if set(P.class_of(s).member_strings) >= set(members) - set(duplicates)
                    and s in members)
        lines.append(f"[{s}] printed in rows {' and '.join(seen[s])}; computed class is row {home}")
    missing = sorted(set(str(v) for v in P.candidates) - set(seen))
    if missing:
        owners = sorted({next(label for members, label, _, _ in printed
                              if set(members) - set(duplicates) <= set(P.class_of(s).member_strings))
                         for s in missing})
        lines.append(f"unprinted candidates {_fmt(missing)} belong to row {', '.join(owners)}")
    return P, duplicates, lines


def _t4() -> _Check:
    chk = _Check()
    P, duplicates, lines = d2_coextension_report()
    chk.require(len(P.candidates) == 53, f"{len(P.candidates)} candidates, not 53")
    chk.require(len(P.classes) == 12, f"{len(P.classes)} classes, not 12")
    dup = set(duplicates)
    for members, label, name, minors in tables.D2_COEXTENSIONS:
        clean = [s for s in members if s not in dup]
        cls = P.class_of(clean[0])
        if not chk.require(set(clean) <= set(cls.member_strings),
                           f"row {label}: {_fmt(clean)} split across classes"):
            continue
        for s in members:
            if s in dup and s not in cls.member_strings:
                chk.discrepancy(f"row {label} prints [{s}], which lies in class "
                                f"{_fmt(P.class_of(s).member_strings)}")
        if name is not None:
            chk.require(cls.name == name, f"row {label}: class is {cls.label}, printed {name}")
        for m in minors:
            chk.require(has_minor(cls.representative, get(m)) is not None,
                        f"row {label}: no {m}-minor")
    chk.notes.extend(lines)
    chk.note("computed: " + "; ".join(f"{c.label} {_fmt(c.member_strings)}" for c in P.classes))
    return chk


# -- lemma claims ------------------------------------------------------------

def _l21() -> _Check:
    chk = _Check()
    for name in ("P9", "D1", "D3"):
        M = get(name)
        chk.require(is_circuit(M, [1, 2, 5, 6]) and is_cocircuit(M, [1, 2, 5, 6]),
                    f"{{1,2,5,6}} is not a circuit and cocircuit of {name}")
    for name in ("E1", "E2", "E3", "E6", "E6*", "E7"):
        M = get(name)
        chk.require(is_circuit(M, [1, 2, 6, 7]) and is_cocircuit(M, [1, 2, 6, 7]),
                    f"{{1,2,6,7}} is not a circuit and cocircuit of {name}")
    chk.require(is_internally_4connected(get("D2")), "D2 is not internally 4-connected")
    for name in ("E4", "E5"):
        chk.require(is_selfdual(get(name)), f"{name} is not self-dual")
    P9 = get("P9")
    bad_ext = sorted({_label(extend_by(P9, v)) for v in extension_candidates(P9)
                      if not (is_circuit(extend_by(P9, v), [1, 2, 5, 6])
                              and is_cocircuit(extend_by(P9, v), [1, 2, 5, 6]))})
    bad_co = sorted({_label(coextend_by(P9, v)) for v in coextension_candidates(P9)
                     if not (is_circuit(coextend_by(P9, v), [1, 2, 6, 7])
                             and is_cocircuit(coextend_by(P9, v), [1, 2, 6, 7]))})
    chk.require(bad_ext == ["D2"], f"extensions losing the separation: {bad_ext}, expected [D2]")
    chk.require(bad_co == ["E4", "E5"], f"coextensions losing the separation: {bad_co}, expected [E4, E5]")
    chk.note(f"separation fails only in extension classes {bad_ext} and coextension classes {bad_co}")
    return chk


def _witness(M: BinaryMatroid, N: BinaryMatroid, C, D) -> MinorWitness | None:
    minor = delete(contract(M, C), D)
    bij = are_isomorphic(minor, N)
    if bij is None:
        return None
    w = MinorWitness(frozenset(C), frozenset(D), bij)
    return w if replay_witness(M, N, w) else None


def _l22_stage1() -> _Check:
    chk = _Check()
    E4 = get("E4")
    parts = {b: classify(get(b), "coextend", names=False) for b in ("A", "B", "C")}
    for base, idx, C, D in tables.ABC_E4_WITNESSES:
        cls = parts[base].classes[idx - 1]
        M = coextend_by(get(base), cls.members[0])
        w = _witness(M, E4, C, D)
        if chk.require(w is not None, f"({base}, coextn{idx}) row [{cls.members[0]}]: "
                                      f"/{_set(C)} \\ {_set(D)} is not E4"):
            chk.note(f"({base}, coextn{idx}) row [{cls.members[0]}]: {w.describe()}")
    b8 = parts["B"].classes[7].representative
    c12 = parts["C"].classes[11].representative
    chk.require(_iso(b8, c12), "(B, coextn8) is not isomorphic to (C, coextn12)")
    chk.require(_iso(b8, get("M12")), "(B, coextn8) is not M12")
    chk.require(has_minor(b8, E4) is None, "M12 has an E4-minor")
    # the pruned row types find every E4-free coextension the full generator finds
    for base in ("A", "B", "C"):
        full = classify(get(base), "coextend", excluded=[E4], names=False).surviving()
        rows = [v for v, _ in pruned_second_rows(get("E5-lemma"), get(base), [E4])]
        keys = {canonical_form(coextend_by(get(base), v)) for v in rows}
        for c in full:
            chk.require(c.key in keys, f"{base}: E4-free class {_fmt(c.member_strings)} "
                                       "missed by the pruned rows")
    chk.note("(B, coextn8) and (C, coextn12) are both M12, which has no E4-minor")
    return chk


def _l22_stage2() -> _Check:
    chk = _Check()
    M12, E4 = get("M12"), get("E4")
    chk.require(is_splitter(M12, [E4]), "M12 has an E4-free 3-connected extension or coextension")
    chk.require(is_selfdual(M12), "M12 is not self-dual")
    chk.require(is_3connected(M12), "M12 is not 3-connected")
    chk.require(not is_internally_4connected(M12), "M12 is internally 4-connected")
    chk.require(has_minor(M12, E4) is None, "M12 has an E4-minor")
    chk.note(f"M12: {len(extension_candidates(M12))} extensions and "
             f"{len(coextension_candidates(M12))} coextensions, all with an E4-minor")
    return chk


def _l22_stage3() -> _Check:
    chk = _Check()
    E4, R17 = get("E4"), get("R17")
    found = set()
    for base, expect in (("A", {"D", "E", "F", "G"}), ("B", set(tables.B_EXTENDS_TO)),
                         ("C", set(tables.C_EXTENDS_TO))):
        names = {c.label for c in classify(get(base), "extend", excluded=[E4]).surviving()}
        chk.require(names == expect, f"E4-free extensions of {base}: {sorted(names)}, expected {sorted(expect)}")
        found |= names
    chk.require(found == {"D", "E", "F", "G"}, f"E4-free two-step extensions of E5: {sorted(found)}")
    A = get("A")
    for col, name in tables.A_COLUMN_CLASSES.items():
        chk.require(_label(extend_by(A, col)) == name, f"A + [{col}] is {_label(extend_by(A, col))}, not {name}")
    M = get("E5-lemma")
    for col in tables.E5_FREE_COLUMNS:
        M = extend_by(M, col)
    chk.require(M.rows == R17.rows, "E5 plus the seven columns differs from the printed 17-element matrix")
    chk.require(_iso(M, R17), "E5 plus the seven columns is not R17")
    for name, C, D in tables.TRIAD_E4_WITNESSES:
        base = get(name)
        Mp = triad_coextend(base, base.labels[-2], base.labels[-1])
        chk.require(Mp == coextend_by(base, "0000011"), f"{name}' differs from the row [0000011] coextension")
        w = _witness(Mp, E4, C, D)
        if chk.require(w is not None, f"{name}'/{_set(C)} \\ {_set(D)} is not E4"):
            chk.note(f"{name}': {w.describe()}")
    chk.require(is_internally_4connected(R17), "R17 is not internally 4-connected")
    chk.require(has_minor(R17, E4) is None, "R17 has an E4-minor")
    nodes = census(get("E5"), [E4], 17, 6)
    for nd in nodes:
        if nd.rank == 5:
            chk.require(has_minor(R17, nd.matroid) is not None,
                        f"rank-5 census member {_label(nd.matroid)} ({nd.provenance()}) is not a restriction of R17")
    high = [nd for nd in nodes if nd.rank >= 6]
    chk.note(f"census from E5: {len(nodes)} classes, largest {max(nd.size for nd in nodes)} elements; "
             f"rank 6: {', '.join(_label(nd.matroid) for nd in high)}")
    return chk


# -- theorem and corollary claims --------------------------------------------

def _th11() -> _Check:
    chk = _Check()
    E4, D2, Z = get("E4"), get("D2"), get("Z")
    Zc = coextend_by(D2, "000111")
    chk.require(Zc.rows == Z.rows and _iso(Zc, Z), "D2 plus row [000111] is not the printed Z")
    for name in ("X1", "X3"):
        X = get(name)
        Xp = triad_coextend(X, X.labels[-2], X.labels[-1])
        w = has_minor(Xp, E4)
        if chk.require(w is not None, f"triad coextension of {name} has no E4-minor"):
            chk.note(f"{name}' (row [0000011]): {w.describe()}")
    chk.discrepancy("the text names the extensions of D2 X1 and X2; the extensions of D2 are X1 and X3, "
                    "which are the ones checked")
    P = classify(Z, "extend")
    names = sorted(c.label for c in P.classes)
    chk.require(names == ["D", "F", "Y"], f"extension classes of Z: {names}, expected D, F, Y")
    chk.note("Z extensions: " + "; ".join(f"{c.label} {_fmt(c.member_strings)}" for c in P.classes))
    R16 = get("R16")
    M = Z
    for col in tables.Z_COLUMNS:
        M = extend_by(M, col)
    chk.require(M.rows == R16.rows and _iso(M, R16), "Z plus the listed columns is not R16")
    chk.discrepancy(f"the text adds 'six columns' to Z but lists {len(tables.Z_COLUMNS)}; "
                    f"Z plus those {len(tables.Z_COLUMNS)} gives the {M.size}-element R16")
    R17 = get("R17")
    hits = [e for e in R17.labels if _iso(delete(R17, [e]), R16)]
    chk.require(bool(hits), "R16 is not a single-element deletion of R17")
    if 17 not in hits:
        chk.discrepancy(f"R16 is not isomorphic to R17 \\ {{17}} in the printed 17-element labelling; "
                        f"R16 = R17 \\ {{e}} exactly for e in {hits} (the label 17 refers to a "
                        "representation that is not printed in full)")
    return chk


def _star(name: str) -> str:
    if name.endswith("*"):
        return name[:-1]
    return f"({name})*" if " " in name else name + "*"


def _inventory_lines(title: str, items: list[tuple[str, BinaryMatroid]]) -> str:
    return f"{title} ({len(items)}): " + ", ".join(n for n, _ in items)


def _cor_i4c() -> _Check:
    chk = _Check()
    P9, P9s = get("P9"), get("P9*")
    # PG(3,2) restrictions of size >= 10
    pg = [(S, N) for S, N in deletion_classes(get("PG(3,2)"), 10)]
    pg_p9 = [(S, N) for S, N in pg if has_minor(N, P9) is not None]
    not_i4c = sorted(_label(N) for S, N in pg_p9 if not is_internally_4connected(N))
    chk.require(not_i4c == ["D1", "D3", "X2"],
                f"PG(3,2) restrictions with a P9-minor that are not i4c: {not_i4c}, expected D1, D3, X2")
    pg_i4c = [(_restriction("PG(3,2)", S, N), N) for S, N in pg_p9 if is_internally_4connected(N)]
    chk.require(len(pg_i4c) == 8, f"{len(pg_i4c)} i4c PG(3,2) restrictions with a P9-minor, expected 8")
    pg_extra = [(_restriction("PG(3,2)", S, N), N) for S, N in pg
                if has_minor(N, P9) is None and is_internally_4connected(N)]
    # R16 chain
    R16 = get("R16")
    chain = [(f"R16 \\ {_set(S)}", delete(R16, S)) for S in tables.R16_CHAIN] + [("R10", get("R10"))]
    for name, N in chain:
        chk.require(is_internally_4connected(N), f"{name} is not internally 4-connected")
        chk.require(has_minor(N, P9s) is None, f"{name} has a P9*-minor")
    r16_i4c = [(_restriction("R16", S, N), N) for S, N in deletion_classes(R16, 10)
               if is_internally_4connected(N)]
    chain_keys = {canonical_form(N) for _, N in chain}
    r16_extra = [(n, N) for n, N in r16_i4c if canonical_form(N) not in chain_keys]
    base = [("F7", get("F7")), ("F7*", get("F7*"))]
    listed = base + pg_i4c + chain
    chk.require(len({canonical_form(N) for _, N in listed}) == len(listed), "listed inventory has repeats")
    chk.note(_inventory_lines("EX[P9*] as listed", listed))
    if len(listed) != 16:
        chk.require(False, f"listed EX[P9*] inventory has {len(listed)} members, not 16")
    full = listed + pg_extra + r16_extra
    chk.note(_inventory_lines("EX[P9*] counting every i4c restriction of size >= 10", full))
    for name, N in pg_extra + r16_extra:
        reg = has_minor(N, get("F7")) is None and has_minor(N, get("F7*")) is None
        chk.note(f"beyond the listed 16: {name} ({'regular' if reg else 'non-regular'})")
    for name, N in listed:
        chk.require(has_minor(N, P9s) is None, f"{name} has a P9*-minor")
    # duality maps EX[P9*] onto EX[P9], preserving internal 4-connectivity
    duals = [(_star(name), dual(N)) for name, N in listed]
    for name, N in duals:
        chk.require(has_minor(N, P9) is None, f"dual {name} has a P9-minor")
    chk.note(_inventory_lines("EX[P9] by duality", duals))
    if len(duals) != 8:
        pg_duals = [_star(n) for n, _ in pg_i4c]
        chk.discrepancy(f"EX[P9] is printed with 8 internally 4-connected members, but duality gives "
                        f"{len(duals)}; the duals of the PG(3,2) restrictions ({', '.join(pg_duals)}) "
                        "account for the difference")
    return chk


def _ox() -> _Check:
    chk = _Check()
    from .catalog import spike, spike_b, spike_c
    for base, expect in (("F7*", ["AG(3,2)", "S8"]), ("S8", ["P9", "Z4"]), ("AG(3,2)", ["Z4"])):
        names = sorted(c.label for c in classify(get(base), "extend").classes)
        chk.require(names == expect, f"extension classes of {base}: {names}, expected {expect}")
    Z4 = spike(4)
    chk.require(_iso(delete(Z4, [spike_b(4, 4)]), get("S8")), "Z4 \\ b4 is not S8")
    chk.require(_iso(delete(Z4, [spike_c(4)]), get("AG(3,2)")), "Z4 \\ c4 is not AG(3,2)")
    chk.require(_iso(delete(Z4, [spike_b(4, 4), spike_c(4)]), get("F7*")), "Z4 \\ {b4, c4} is not F7*")
    for r in (4, 5, 6):
        Z = spike(r)
        for what, e in (("b", spike_b(r, r)), ("c", spike_c(r))):
            chk.require(is_selfdual(delete(Z, [e])), f"Z{r} \\ {what}{r} is not self-dual")
            chk.require(is_3connected(delete(Z, [e])), f"Z{r} \\ {what}{r} is not 3-connected")
        if r >= 5:
            chk.require(_iso(delete(Z, [spike_b(r, r), spike_c(r)]), dual(spike(r - 1))),
                        f"Z{r} \\ {{b{r}, c{r}}} is not Z{r - 1}*")
    family = [get("F7"), get("F7*")]
    for r in (4, 5, 6):
        Z = spike(r)
        family += [Z, dual(Z), delete(Z, [spike_b(r, r)]), delete(Z, [spike_c(r)])]
    keys = {canonical_form(M) for M in family}
    nodes = census(get("F7*"), [get("P9"), get("P9*")], 12, 6)
    for nd in nodes:
        chk.require(nd.key in keys, f"census member {_label(nd.matroid)} ({nd.provenance()}) is outside the list")
    chk.note(f"census from F7* avoiding P9, P9*: {', '.join(_label(nd.matroid) for nd in nodes)}")
    return chk


def _sst_eq() -> _Check:
    chk = _Check()
    E4 = get("E4")
    for seed in ("P9", "E5"):
        a = census(get(seed), [E4], 12, 6, prune=True)
        b = census(get(seed), [E4], 12, 6, prune=False)
        ka, kb = {n.key for n in a}, {n.key for n in b}
        chk.require(ka == kb, f"{seed}: pruned census has {len(ka)} classes, unpruned {len(kb)}; "
                              f"only unpruned: {sorted(_label(n.matroid) for n in b if n.key not in ka)}")
        for nd in a:
            chk.require(_iso(nd.replay(get(seed)), nd.matroid), f"{seed}: {nd.provenance()} does not replay")
        chk.note(f"{seed}: {len(ka)} classes up to 12 elements in both modes")
    return chk


def _catalog_claim() -> _Check:
    chk = _Check()
    P9, E4 = get("P9"), get("E4")
    chk.require(_iso(P9, contract(get("E1"), [5])), "P9 is not E1 / 5")
    chk.require(_iso(P9, delete(get("D1"), [10])), "P9 is not D1 \\ 10")
    chk.require(E4 == coextend_by(P9, "01001") and is_3connected(E4) and is_selfdual(E4) and E4.size == 10,
                "E4 is not the 3-connected self-dual coextension of P9 by [01001]")
    chk.require(_iso(get("E5-lemma"), get("E5")), "the two E5 representations differ")
    chk.require(_iso(get("M12"), coextend_by(get("B"), "100111")), "M12 is not (B, coextn8)")
    R16, R17 = get("R16"), get("R17")
    if not _iso(R16, delete(R17, [17])):
        hits = [e for e in R17.labels if _iso(delete(R17, [e]), R16)]
        chk.require(bool(hits), "R16 is not a single-element deletion of R17")
        chk.discrepancy(f"R16 is not R17 \\ {{17}} in the printed labelling; it is R17 \\ {{e}} for e in {hits}")
    naive = delete(R16, catalog.R10_NAIVE_DELETION)
    w = has_minor(naive, get("F7"))
    if w is not None:
        chk.discrepancy(f"R16 \\ {{11..16}} is {_label(naive)}, not regular (F7-minor: {w.describe()}); "
                        f"R10 is taken as R16 \\ {_set(catalog.R10_DELETION)}")
    R10 = get("R10")
    regular = has_minor(R10, get("F7")) is None and has_minor(R10, get("F7*")) is None
    chk.require(R10.size == 10 and is_selfdual(R10) and regular, "R10 is not a 10-element self-dual regular matroid")
    chk.require(_iso(get("X2"), extend_by(get("D3"), "1110")), "D1 + [0011] is not D3 + [1110]")
    X1 = get("X1")
    chk.require(_iso(get("Y1"), extend_by(X1, "0011")) and _iso(get("Y2"), extend_by(X1, "1110")),
                "Y1, Y2 are not the extension classes of X1")
    w4 = [e for e in P9.labels if _iso(delete(P9, [e]), get("W4"))]
    chk.require(bool(w4), "W4 is not a single-element deletion of P9")
    names = sorted(c.label for c in classify(get("F7*"), "extend").classes)
    chk.require(names == ["AG(3,2)", "S8"], f"extension classes of F7*: {names}")
    chk.note(f"W4 = P9 \\ e for e in {w4}")
    return chk


_PAPER_REF = {
    "CAT": "matrix displays and construction recipes of the named matroids",
    "COR.i4c": "internally 4-connected members of EX[P9*] and EX[P9]",
    "L21.sep": "P9 3-decomposer lemma: circuit-cocircuit {1,2,5,6} and one-element check",
    "L22.stage1": "E5 lemma, first stage: coextensions of A, B, C",
    "L22.stage2": "E5 lemma, second stage: M12 is a splitter",
    "L22.stage3": "E5 lemma, third stage: extensions of A, B, C and the 17-element matroid",
    "OX": "Oxley's list F7, F7*, Zr, Zr*, Zr \\ br, Zr \\ cr and the chain from F7*",
    "SST.EQ": "triad rule for two consecutive extensions followed by a coextension",
    "T1A": "table of rank-4 extensions of P9",
    "T1B": "table of single-element coextensions of P9",
    "T2A": "table of simple single-element extensions of E5",
    "T2B": "table of cosimple single-element coextensions of E5",
    "T3": "table of cosimple single-element coextensions of A, B and C",
    "T4": "table of cosimple single-element coextensions of D2",
    "TH11.d2": "main theorem, D2 case: Z, X1, X3 and R16",
}

_REGISTRY: dict[str, Callable[[], _Check]] = {
    "CAT": _catalog_claim,
    "COR.i4c": _cor_i4c,
    "L21.sep": _l21,
    "L22.stage1": _l22_stage1,
    "L22.stage2": _l22_stage2,
    "L22.stage3": _l22_stage3,
    "OX": _ox,
    "SST.EQ": _sst_eq,
    "T1A": _t1a,
    "T1B": _t1b,
    "T2A": _t2a,
    "T2B": _t2b,
    "T3": _t3,
    "T4": _t4,
    "TH11.d2": _th11,
}

# accepted by verify_claim, not part of run_all
_ALIASES = {"L22.M12.splitter": "L22.stage2"}


def claim_ids() -> list[str]:
    return sorted(_REGISTRY)


def verify_claim(cid: str) -> ClaimResult:
    key = _ALIASES.get(cid, cid)
    if key not in _REGISTRY:
        raise UnknownClaim(cid)
    try:
        chk = _REGISTRY[key]()
    except Exception as exc:  # a crash is a failed claim, not a crashed run
        return ClaimResult(cid, "fail", f"error: {type(exc).__name__}: {exc}", _PAPER_REF[key])
    return chk.result(cid, _PAPER_REF[key])


@dataclass(frozen=True)
class Report:
    claims: tuple[ClaimResult, ...]

    @property
    def summary(self) -> dict[str, int]:
        return {s: sum(1 for c in self.claims if c.status == s) for s in STATUSES}

    def to_dict(self) -> dict:
        return {"claims": [c.to_dict() for c in self.claims], "summary": self.summary}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def run_all(jobs: int = 1, ids: list[str] | None = None) -> Report:
    """Run every claim (or ``ids``), optionally across worker processes."""
    ids = sorted(ids if ids is not None else _REGISTRY)
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(verify_claim, ids))
    else:
        results = [verify_claim(i) for i in ids]
    return Report(tuple(sorted(results, key=lambda c: c.id)))

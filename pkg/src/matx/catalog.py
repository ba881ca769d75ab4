"""Named binary matroids.

``printed`` entries are transcribed bit for bit from displayed matrices.
``reconstructed`` entries come from a construction recipe where the
displayed matrix is incomplete; ``derived`` entries are built from other
entries.  The consistency checks for the last two kinds live in the test
suite and in the ``catalog`` claim of the verifier.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import BadRank, UnknownName
from .gf2 import weight
from .isomorph import canonical_form, invariant_key
from .matroid import BinaryMatroid, delete, dual, from_columns, make


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matroid: BinaryMatroid
    source: str  # printed | reconstructed | derived
    note: str

    def line(self) -> str:
        return f"{self.name} {self.matroid.rank} {self.matroid.size} {self.source}"


def spike(r: int) -> BinaryMatroid:
    """Z_r: [I_r | b_1 .. b_r, c_r] with b_i = all ones except row i, c_r = all ones.

    Labels: identity 1..r, b_i -> r + i, c_r -> 2r + 1.
    """
    if r < 4:
        raise BadRank(f"spike needs r >= 4, got {r}")
    full = (1 << (r + 1)) - 1
    rows = [full ^ (1 << (r - i)) for i in range(r)]  # zero under b_{i+1}
    return make(r, 2 * r + 1, rows, name=f"Z{r}")


def spike_b(r: int, i: int) -> int:
    """Ground label of b_i in spike(r)."""
    return r + i


def spike_c(r: int) -> int:
    return 2 * r + 1


def pg(rank: int) -> BinaryMatroid:
    """Binary projective geometry: identity columns first, then the rest in increasing order."""
    if rank not in (3, 4):
        raise BadRank(f"pg supports rank 3 or 4, got {rank}")
    units = [1 << (rank - 1 - i) for i in range(rank)]
    rest = [v for v in range(1, 1 << rank) if weight(v) >= 2]
    cols = units + rest
    return from_columns(cols, range(1, len(cols) + 1), name=f"PG({rank - 1},2)")


def _m(r, n, rows, name):
    return make(r, n, rows, name=name)


def _printed() -> dict[str, tuple[BinaryMatroid, str]]:
    P = {}

    def add(name, r, rows, note):
        n = r + len(rows[0])
        P[name] = (_m(r, n, rows, name), note)

    add("D1", 4, ["011111", "101111", "110101", "111100"], "display beside the P9 extension table")
    add("D2", 4, ["011111", "101110", "110100", "111101"], "display beside the P9 extension table")
    add("D3", 4, ["011110", "101110", "110101", "111101"], "display beside the P9 extension table")
    base = ["01111", "10111", "11010", "11110"]
    for name, last in [("E1", "11000"), ("E2", "11011"), ("E3", "11001"), ("E4", "01001"),
                       ("E5", "10100"), ("E6", "00101"), ("E6*", "00111"), ("E7", "00011")]:
        add(name, 5, base + [last], "display beside the P9 coextension table")
    add("E5-lemma", 5, ["01111", "10110", "11011", "11110", "11000"], "representation used for the E5 lemma")
    add("A", 5, ["011110", "101100", "110111", "111100", "110001"], "E5 extension display")
    add("B", 5, ["011111", "101100", "110110", "111101", "110001"], "E5 extension display")
    add("C", 5, ["011111", "101101", "110110", "111100", "110001"], "E5 extension display")
    add("D", 5, ["0111100", "1011000", "1101111", "1111001", "1100010"], "rank-5 extension display")
    add("E", 5, ["0111100", "1011001", "1101110", "1111001", "1100011"], "rank-5 extension display")
    add("F", 5, ["0111101", "1011001", "1101110", "1111000", "1100011"], "rank-5 extension display")
    add("G", 5, ["0111101", "1011001", "1101111", "1111000", "1100011"], "rank-5 extension display")
    add("Z", 5, ["011111", "101110", "110100", "111101", "000111"], "coextension of D2 display")
    add("X1", 4, ["0111111", "1011100", "1101001", "1111010"], "extension of D2 display")
    add("X3", 4, ["0111110", "1011100", "1101001", "1111011"], "extension of D2 display")
    add("R17", 5, ["011110000111", "101100011011", "110111101001", "111100110100", "110001010111"],
        "17-element display (full 5x12 block)")
    add("R16", 5, ["01111100011", "10111001101", "11010010111", "11110111000", "00011111110"],
        "16-element display")
    return P


# The chain R16 \\ {16}, ..., R16 \\ {12..16} suggests R16 \\ {11..16} for R10, but that
# restriction has an F7-minor.  The regular one is below; see the catalog claim.
R10_NAIVE_DELETION = tuple(range(11, 17))
R10_DELETION = (1, 2, 3, 4, 5, 9)


@lru_cache(maxsize=None)
def _base_entries() -> tuple[CatalogEntry, ...]:
    # local import: generate depends on this module for class names
    from .generate import coextend_by, extend_by

    printed = _printed()
    out: list[CatalogEntry] = []

    def add(name, M, source, note):
        out.append(CatalogEntry(name, M.with_name(name), source, note))

    F7 = pg(3)
    add("F7", F7, "reconstructed", "all seven nonzero 3-vectors (F7 = PG(2,2))")
    add("F7*", dual(F7), "derived", "dual of F7")
    add("W4", make(4, 8, ["1001", "1100", "0110", "0011"]), "reconstructed",
        "4-wheel: spokes I4, rim columns 1100 0110 0011 1001")
    add("AG(3,2)", make(4, 8, ["0111", "1011", "1101", "1110"]), "reconstructed",
        "odd-weight vectors of GF(2)^4, i.e. [I4 | J - I]")
    add("S8", make(4, 8, ["0111", "1011", "1101", "1111"]), "reconstructed",
        "[I4 | b1 b2 b3 c4]; equals Z4 minus b4")
    P9 = make(4, 9, ["01111", "10111", "11010", "11110"])
    add("P9", P9, "reconstructed", "D columns 0111 1011 1101 1111 1100, forced by D1 and E1")
    add("P9*", dual(P9), "derived", "dual of P9")
    for r in (4, 5, 6):
        Z = spike(r)
        add(f"Z{r}", Z, "reconstructed", "spike: zeros on the diagonal, ones elsewhere, plus all-ones c_r")
        add(f"Z{r}*", dual(Z), "derived", f"dual of Z{r}")
        add(f"Z{r}\\b{r}", delete(Z, [spike_b(r, r)]), "derived", f"Z{r} minus b{r}")
        add(f"Z{r}\\c{r}", delete(Z, [spike_c(r)]), "derived", f"Z{r} minus c{r}")
    for name in ("D1", "D2", "D3"):
        M, note = printed[name]
        add(name, M, "printed", note)
    for name in ("E1", "E2", "E3", "E4", "E5", "E6", "E6*", "E7", "E5-lemma"):
        M, note = printed[name]
        add(name, M, "printed", note)
    add("E4-coext", coextend_by(P9, "01001"), "derived", "P9 coextended by row 01001")
    for name in ("X1", "X3"):
        M, note = printed[name]
        add(name, M, "printed", note)
    D1 = printed["D1"][0]
    X1 = printed["X1"][0]
    add("X2", extend_by(D1, "0011"), "derived", "D1 extended by column 0011")
    add("Y1", extend_by(X1, "0011"), "derived", "X1 extended by column 0011")
    add("Y2", extend_by(X1, "1110"), "derived", "X1 extended by column 1110")
    for name in ("A", "B", "C", "D", "E", "F", "G", "Z"):
        M, note = printed[name]
        add(name, M, "printed", note)
    add("M12", coextend_by(printed["C"][0], "100111"), "reconstructed",
        "C coextended by row 100111 (the single row of C's class 12)")
    Z = printed["Z"][0]
    add("Y", extend_by(Z, _third_z_column(Z, printed)), "derived",
        "Z extended by the first listed column giving neither D nor F")
    for name in ("R17", "R16"):
        M, note = printed[name]
        add(name, M, "printed", note)
    add("R10", delete(printed["R16"][0], R10_DELETION), "derived",
        "R16 minus {1,2,3,4,5,9}: the 10-element regular restriction of R16")
    add("PG(3,2)", pg(4), "reconstructed", "all fifteen nonzero 4-vectors")
    return tuple(out)


def _third_z_column(Z: BinaryMatroid, printed) -> str:
    from .generate import extend_by
    from .isomorph import are_isomorphic

    D, F = printed["D"][0], printed["F"][0]
    for col in ("00111", "01011", "01101", "10101", "11100"):
        M = extend_by(Z, col)
        if are_isomorphic(M, D) is None and are_isomorphic(M, F) is None:
            return col
    raise RuntimeError("no third extension class of Z among the listed columns")


_OVERRIDES: dict[str, BinaryMatroid] = {}
_VERSION = [0]


@contextmanager
def overridden(replacements: dict[str, BinaryMatroid]):
    """Temporarily replace catalog matroids (negative-control fixtures)."""
    for name in replacements:
        if name not in {e.name for e in _base_entries()}:
            raise UnknownName(name)
    saved = dict(_OVERRIDES)
    _OVERRIDES.update(replacements)
    _VERSION[0] += 1
    try:
        yield
    finally:
        _OVERRIDES.clear()
        _OVERRIDES.update(saved)
        _VERSION[0] += 1


def entries() -> tuple[CatalogEntry, ...]:
    return _entries(_VERSION[0])


@lru_cache(maxsize=4)
def _entries(version: int) -> tuple[CatalogEntry, ...]:
    out = []
    for e in _base_entries():
        M = _OVERRIDES.get(e.name)
        out.append(e if M is None else replace(e, matroid=M.with_name(e.name), note=e.note + " (overridden)"))
    return tuple(out)


@lru_cache(maxsize=4)
def _index(version: int) -> dict[str, CatalogEntry]:
    return {e.name: e for e in _entries(version)}


def names() -> list[str]:
    return [e.name for e in entries()]


def entry(name: str) -> CatalogEntry:
    try:
        return _index(_VERSION[0])[name]
    except KeyError:
        raise UnknownName(name) from None


def get(name: str) -> BinaryMatroid:
    """Catalog matroid by name (values are immutable, so sharing is safe)."""
    return entry(name).matroid


# aliases never used as class names
_NOT_NAMES = {"E4-coext", "E5-lemma"}


@lru_cache(maxsize=4)
def _by_shape(version: int) -> dict[tuple, list[CatalogEntry]]:
    out: dict[tuple, list[CatalogEntry]] = {}
    for e in _entries(version):
        if e.name not in _NOT_NAMES:
            M = e.matroid
            out.setdefault((M.rank, M.size, invariant_key(M)), []).append(e)
    return out


def _lookup(M: BinaryMatroid) -> str | None:
    for e in _by_shape(_VERSION[0]).get((M.rank, M.size, invariant_key(M)), []):
        if canonical_form(e.matroid) == canonical_form(M):
            return e.name
    return None


def name_of(M: BinaryMatroid) -> str | None:
    """Name of the first catalog entry isomorphic to M, or to M's dual (suffix '*')."""
    name = _lookup(M)
    if name is not None:
        return name
    name = _lookup(dual(M))
    if name is None:
        return None
    return name[:-1] if name.endswith("*") else name + "*"

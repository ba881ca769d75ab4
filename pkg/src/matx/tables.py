"""Printed candidate groupings, transcribed as data.

Each table maps a base matroid to a list of ``(members, name)`` pairs, where
``members`` are the printed bit strings of one class and ``name`` is the
printed class name (``None`` where the table leaves it blank).  Strings are
kept exactly as printed, including the duplicated entries of the D2 table.
"""

from __future__ import annotations

Group = tuple[tuple[str, ...], str | None]


def _g(members: str, name: str | None = None) -> Group:
    return tuple(members.split()), name


P9_EXTENSION_CHAIN: dict[str, list[Group]] = {
    "P9": [_g("1110", "D1"), _g("1001 0101 0110 1010", "D2"), _g("0011", "D3")],
    "D1": [_g("0101 0110 1001 1010", "X1"), _g("0011", "X2")],
    "D2": [_g("1010 1110", "X1"), _g("0011 0101 0110", "X3")],
    "D3": [_g("1110", "X2"), _g("0101 0110 1001 1010", "X3")],
    "X1": [_g("0011 0101 0110", "Y1"), _g("1110", "Y2")],
    "X2": [_g("0101 0110 1001 1010", "Y1")],
    "X3": [_g("0101 0110 1010 1110", "Y1")],
}

P9_COEXTENSIONS: list[Group] = [
    _g("11000 11111", "E1"),
    _g("11011 11100", "E2"),
    _g("11001 11101", "E3"),
    _g("01001 01010 01101 01110 10001 10010 10101 10110", "E4"),
    _g("01011 01100 10011 10100", "E5"),
    _g("00101 00110", "E6"),
    _g("00111", "E6*"),
    _g("00011", "E7"),
]

# (members, name, printed E4-minor flag)
E5_EXTENSIONS: list[tuple[tuple[str, ...], str | None, bool]] = [
    (("00101", "00110", "01011", "01100"), "A", False),
    (("10011",), "B", False),
    (("11001", "11101"), "C", False),
    (("00011", "00111", "01001", "01101"), None, True),
    (("01010", "01110"), None, True),
    (("10001", "10010", "11011", "11100"), None, True),
    (("10101", "10110", "11000", "11111"), None, True),
]

E5_COEXTENSIONS: list[Group] = [
    _g("00111 01001 01010 01100", "A*"),
    _g("10011", "B*"),
    _g("10101 11101", "C*"),
    _g("00011 00101 01011 01101"),
    _g("00110 01110"),
    _g("10001 10010 10111 11100"),
    _g("10100 11001 11010 11111"),
]

ABC_COEXTENSIONS: dict[str, list[Group]] = {
    "A": [
        _g("000011 000101 001010 011010 101111 111001", "coext 1"),
        _g("000110 110011 110101", "coext 2"),
        _g("000111 101011 111011", "coext 3"),
        _g("001001 010110 011111", "coext 4"),
        _g("001011 011011 100111", "coext 5"),
        _g("001100 011100 110000", "coext 6"),
        _g("001101 010010 010100 011101 101110 111000", "coext 7"),
        _g("001110 011000 101101 110010 110100 111101", "coext 8"),
        _g("001111 011001 100011 100101 101010 111010", "coext 9"),
        _g("010001 100010 100100", "coext 10"),
        _g("010011 010101 100110", "coext 11"),
        _g("010111", "coext 12"),
        _g("100001 101000 111110", "coext 13"),
        _g("101001 110110 111111", "coext 14"),
    ],
    "B": [
        _g("000011 000101 000110 001001 001010 001111 010010 010100 010111 011000 011011 011110",
           "coext 1"),
        _g("000111 001011 010110 011010", "coext 2"),
        _g("001100 010001 011101", "coext 3"),
        _g("001101 001110 010011 010101 011001 011100", "coext 4"),
        _g("100001 100010 100100 101000 101101 101110 110000 110011 110101 111001 111100 111111",
           "coext 5"),
        _g("100011 100101 101010 101111 111000 111011", "coext 6"),
        _g("100110 101001 110010 110100 110111 111110", "coext 7"),
        _g("100111 101011 111010", "coext 8"),
    ],
    "C": [
        _g("000011 000101 001001 001111 010010 010100 011000 011110 "
           "100010 100100 101000 101110 110011 110101 111001 111111", "coext 1"),
        _g("000110 010111", "coext 2"),
        _g("000111 010110 100110 110111", "coext 3"),
        _g("001010 011011", "coext 4"),
        _g("001011 011010 101010 111011", "coext 5"),
        _g("001100 011101", "coext 6"),
        _g("001101 011100 101100 111101", "coext 7"),
        _g("001110 010011 010101 011001", "coext 8"),
        _g("010001", "coext 9"),
        _g("100001 110000", "coext 10"),
        _g("100011 100101 101111 111000", "coext 11"),
        _g("100111", "coext 12"),
        _g("101001 110010 110100 111110", "coext 13"),
        _g("101011 111010", "coext 14"),
    ],
}

# (members, census label, name, relevant minors)
D2_COEXTENSIONS: list[tuple[tuple[str, ...], str, str | None, tuple[str, ...]]] = [
    (("000011", "000101", "000110", "001111", "100111", "101000"), "A26", "A", ("E5", "E6*", "E7")),
    (("000111",), "A31", "Z", ("E7", "R10")),
    (("001001", "010100", "011101"), "A23", None, ("E4", "E5")),
    (("001010", "001100", "010001", "010010", "011011", "011110"), "A20", None, ("E4", "E6")),
    (("001011", "001101", "010101", "010110", "011001", "011100"), "A21", None, ("E4", "E5")),
    (("001110", "010011", "011010"), "A24", None, ("E4",)),
    (("100001", "101000", "101011", "101101", "110110", "111001"), "A15", None, ("E2", "E5")),
    (("100010", "100100", "110000", "110101", "111100", "111111"), "A6", None, ("E1", "E4")),
    (("100011", "100101", "110010", "110111", "111000", "111011"), "A16", None, ("E2", "E3", "E4", "E6*")),
    (("100110", "101010", "101100", "101111", "110001", "111110"), "A7", None, ("E4", "E5")),
    (("100111", "110011", "111010"), "A18", "C", ("E3", "E5", "E6*", "E7")),
    (("101001",), "A27", "B", ("E5",)),
]

# columns of E5 (the lemma representation) avoiding an E4-minor, and the class each gives on A
E5_FREE_COLUMNS = ("00101", "00110", "01011", "01100", "10011", "11001", "11101")
A_COLUMN_CLASSES = {"00110": "D", "01100": "D", "10011": "D", "01011": "E", "11001": "F", "11101": "G"}
B_EXTENDS_TO = ("D", "F")
C_EXTENDS_TO = ("F", "G")

# (base, coextension class index, contract, delete) giving E4
ABC_E4_WITNESSES = [
    ("A", 11, (11,), (3,)),
    ("C", 8, (12,), (2,)),
    ("C", 9, (12,), (1,)),
    ("C", 10, (12,), (10,)),
    ("C", 14, (12,), (6,)),
]

# triad coextensions of D, E, F, G by row 0000011 and their E4 witnesses
TRIAD_E4_WITNESSES = [
    ("D", (1,), (3, 11)),
    ("E", (1,), (7, 11)),
    ("F", (1,), (3, 11)),
    ("G", (1,), (7, 11)),
]

Z_COLUMNS = ("00111", "01011", "01101", "10101", "11100")

R16_CHAIN = [(16,), (15, 16), (14, 15, 16), (13, 14, 15, 16), (12, 13, 14, 15, 16)]

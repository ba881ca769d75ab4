"""Binary matroids over GF(2): minors, isomorphism, extensions and a claims verifier."""

from .errors import MatroidError
from .gf2 import BitMatrix, BitVec, rref
from .matroid import (
    BinaryMatroid, connectivity, contract, delete, dual, is_3connected, is_internally_4connected,
    make, minor,
)
from .isomorph import are_isomorphic, canonical_form, has_minor, is_selfdual
from .generate import census, classify, coextend_by, extend_by, is_splitter
from .catalog import get

__all__ = [
    "BinaryMatroid", "BitMatrix", "BitVec", "MatroidError", "are_isomorphic", "canonical_form",
    "census", "classify", "coextend_by", "connectivity", "contract", "delete", "dual", "extend_by",
    "get", "has_minor", "is_3connected", "is_internally_4connected", "is_selfdual", "is_splitter",
    "make", "minor", "rref",
]

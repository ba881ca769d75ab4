"""``matx`` command line and the ``.bm`` text format.

A ``.bm`` file is::

    # optional comment lines anywhere
    rank 4
    size 9
    name P9          (optional)
    D
    01111
    10111
    11010
    11110

The parsed matroid is ``[I_rank | D]`` with labels ``1..size``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import catalog
from .errors import MatroidError, ParseError, UnknownClaim, UnknownName
from .generate import classify, coextend_by, coextension_candidates, census, extend_by, extension_candidates
from .isomorph import are_isomorphic, has_minor
from .matroid import (
    BinaryMatroid, dual, exact_3separations, is_3connected, is_internally_4connected, make, standardize,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


# -- file format -------------------------------------------------------------

def parse_matroid(text: str) -> BinaryMatroid:
    lines = [(i, raw.strip()) for i, raw in enumerate(text.splitlines(), 1)]
    lines = [(i, s) for i, s in lines if s and not s.startswith("#")]
    it = iter(lines)

    def expect(keyword: str) -> tuple[int, str]:
        try:
            i, s = next(it)
        except StopIteration:
            raise ParseError(f"expected '{keyword}', got end of input") from None
        head, _, rest = s.partition(" ")
        if head != keyword:
            raise ParseError(f"expected '{keyword}', got '{head}'", i, 1)
        return i, rest.strip()

    def integer(i: int, value: str, what: str) -> int:
        if not value.isdigit():
            raise ParseError(f"{what} must be a non-negative integer, got '{value}'", i, len(what) + 2)
        return int(value)

    i, v = expect("rank")
    r = integer(i, v, "rank")
    i, v = expect("size")
    n = integer(i, v, "size")
    if n < r:
        raise ParseError(f"size {n} is smaller than rank {r}", i, 6)
    name = None
    try:
        i, s = next(it)
    except StopIteration:
        raise ParseError("expected 'D', got end of input") from None
    if s.split(" ", 1)[0] == "name":
        name = s[4:].strip() or None
        try:
            i, s = next(it)
        except StopIteration:
            raise ParseError("expected 'D', got end of input") from None
    if s != "D":
        raise ParseError(f"expected 'D', got '{s}'", i, 1)
    rows = []
    for _ in range(r if n > r else 0):  # an empty D has no row lines
        try:
            i, s = next(it)
        except StopIteration:
            raise ParseError(f"expected {r} rows of D, got {len(rows)} before end of input") from None
        if len(s) != n - r:
            raise ParseError(f"row width {len(s)} differs from size - rank = {n - r}", i, 1)
        for col, ch in enumerate(s, 1):
            if ch not in "01":
                raise ParseError(f"invalid character '{ch}'", i, col)
        rows.append(s)
    extra = next(it, None)
    if extra is not None:
        raise ParseError(f"unexpected content '{extra[1]}'", extra[0], 1)
    if r == 0 or n == r:
        return make(r, n, [0] * r, name=name)
    return make(r, n, rows, name=name)


def emit_matroid(M: BinaryMatroid) -> str:
    """Canonical text: standard form over ascending labels, then D rows in order."""
    S = standardize(M, sorted(M.labels))
    out = [f"rank {S.rank}", f"size {S.size}"]
    if M.name:
        out.append(f"name {M.name}")
    if list(S.labels) != list(range(1, S.size + 1)):
        out.append("# labels " + " ".join(map(str, S.labels)))
    out.append("D")
    if S.corank:
        out.extend(S.row_strings())
    return "\n".join(out) + "\n"


def matroid_json(M: BinaryMatroid) -> dict:
    S = standardize(M, sorted(M.labels))
    return {"name": M.name, "rank": S.rank, "size": S.size, "labels": list(S.labels), "D": S.row_strings()}


def load(ref: str) -> BinaryMatroid:
    """Catalog name first, then a path to a ``.bm`` file."""
    try:
        return catalog.get(ref)
    except UnknownName:
        pass
    if not os.path.exists(ref):
        raise UnknownName(f"'{ref}' is neither a catalog name nor a file")
    with open(ref, encoding="utf-8") as fh:
        M = parse_matroid(fh.read())
    return M if M.name else M.with_name(os.path.splitext(os.path.basename(ref))[0])


# -- commands ----------------------------------------------------------------

def _out(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _names(value: str | None) -> list[BinaryMatroid]:
    return [load(x) for x in value.split(",") if x] if value else []


def cmd_catalog(args) -> int:
    entries = catalog.entries()
    _out(args, "\n".join(e.line() for e in entries),
         [{"name": e.name, "rank": e.matroid.rank, "size": e.matroid.size, "source": e.source,
           "note": e.note} for e in entries])
    return EXIT_OK


def cmd_show(args) -> int:
    M = load(args.matroid)
    _out(args, emit_matroid(M), matroid_json(M))
    return EXIT_OK


def cmd_dual(args) -> int:
    M = dual(load(args.matroid))
    _out(args, emit_matroid(M), matroid_json(M))
    return EXIT_OK


def _cmd_grow(args, mode: str) -> int:
    M = load(args.matroid)
    excluded = _names(args.exclude)
    if args.classes:
        P = classify(M, mode, excluded=excluded)
        rows, data = [], []
        for c in P.classes:
            flags = " ".join(f"{k}-minor={'yes' if v else 'no'}" for k, v in c.has_excluded.items())
            rows.append("\t".join(x for x in (c.label, " ".join(c.member_strings), flags) if x))
            data.append({"name": c.label, "members": c.member_strings, "excluded": c.has_excluded})
        _out(args, "\n".join(rows), data)
        return EXIT_OK
    cands = extension_candidates(M) if mode == "extend" else coextension_candidates(M)
    apply = extend_by if mode == "extend" else coextend_by
    keep = [str(v) for v in cands
            if all(has_minor(apply(M, v), X) is None for X in excluded)]
    _out(args, "\n".join(keep), keep)
    return EXIT_OK


def cmd_iso(args) -> int:
    a, b = load(args.a), load(args.b)
    bij = are_isomorphic(a, b)
    if bij is None:
        _out(args, "not isomorphic", {"isomorphic": False})
        return EXIT_NEGATIVE
    pairs = sorted(bij.items())
    _out(args, " ".join(f"{x}->{y}" for x, y in pairs),
         {"isomorphic": True, "bijection": [[x, y] for x, y in pairs]})
    return EXIT_OK


def cmd_minor(args) -> int:
    M, N = load(args.M), load(args.N)
    w = has_minor(M, N)
    if w is None:
        _out(args, "no minor", {"minor": False})
        return EXIT_NEGATIVE
    text = "minor" + (f" {w.describe()}" if args.witness else "")
    data = {"minor": True}
    if args.witness:
        data.update(contract=sorted(w.contract_set), delete=sorted(w.delete_set),
                    bijection=[[x, y] for x, y in sorted(w.bijection.items())])
    _out(args, text, data)
    return EXIT_OK


def cmd_conn(args) -> int:
    M = load(args.matroid)
    c3 = is_3connected(M)
    i4 = c3 and is_internally_4connected(M)
    seps = exact_3separations(M, 4)
    lines = [f"3-connected: {'yes' if c3 else 'no'}",
             f"internally 4-connected: {'yes' if i4 else 'no'}",
             f"exact 3-separations with both sides >= 4: {len(seps)}"]
    lines += ["  {" + ",".join(map(str, sorted(s.side_a))) + "}" for s in seps]
    _out(args, "\n".join(lines), {"threeConnected": c3, "internally4Connected": i4,
                                  "separations": [sorted(s.side_a) for s in seps]})
    return EXIT_OK


def cmd_census(args) -> int:
    seed = load(args.seed)
    excluded = _names(args.exclude)
    max_rank = args.max_rank if args.max_rank is not None else args.max_size
    nodes = census(seed, excluded, args.max_size, max_rank, prune=not args.no_prune, jobs=args.jobs)
    rows, data = [], []
    for nd in nodes:
        name = catalog.name_of(nd.matroid) or "-"
        rows.append(f"{nd.size}\t{nd.rank}\t{name}\t{nd.provenance()}")
        data.append({"size": nd.size, "rank": nd.rank, "name": name, "provenance": nd.provenance()})
    _out(args, "\n".join(rows), data)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_all, verify_claim

    if args.claim:
        results = [verify_claim(args.claim)]
        from .verify import Report
        report = Report(tuple(results))
    else:
        report = run_all(jobs=args.jobs)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    if args.json:
        print(report.to_json(), end="")
    else:
        for c in report.claims:
            print(f"{c.id}\t{c.status}")
            if c.status != "pass" or args.claim:
                for line in c.detail.splitlines():
                    print(f"    {line}")
        s = report.summary
        print(f"pass={s['pass']} fail={s['fail']} discrepancy={s['discrepancy']}")
    return EXIT_OK if report.summary["fail"] == 0 else EXIT_NEGATIVE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="matx", description="Binary matroid extensions, minors and claim checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("catalog", cmd_catalog, "named matroids")
    sp.add_argument("action", choices=["list"])
    add("show", cmd_show, "print a matroid").add_argument("matroid")
    add("dual", cmd_dual, "print the dual").add_argument("matroid")
    for name, mode in (("ext", "extend"), ("coext", "coextend")):
        sp = add(name, lambda a, m=mode: _cmd_grow(a, m), f"single-element {mode}ions")
        sp.add_argument("matroid")
        sp.add_argument("--classes", action="store_true", help="group by isomorphism class")
        sp.add_argument("--exclude", help="comma-separated excluded minors")
    sp = add("iso", cmd_iso, "isomorphism test")
    sp.add_argument("a")
    sp.add_argument("b")
    sp = add("minor", cmd_minor, "minor test")
    sp.add_argument("M")
    sp.add_argument("N")
    sp.add_argument("--witness", action="store_true")
    add("conn", cmd_conn, "connectivity report").add_argument("matroid")
    sp = add("census", cmd_census, "closure under extensions and coextensions")
    sp.add_argument("--seed", required=True)
    sp.add_argument("--exclude", default="")
    sp.add_argument("--max-size", type=int, required=True)
    sp.add_argument("--max-rank", type=int)
    sp.add_argument("--no-prune", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp = add("verify", cmd_verify, "run registered claims")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--claim")
    g.add_argument("--all", action="store_true")
    sp.add_argument("--report")
    sp.add_argument("--jobs", type=int, default=1)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UnknownClaim as exc:
        print(f"matx: unknown claim {exc.args[0] if exc.args else ''}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, UnknownName, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"matx: {msg}", file=sys.stderr)
        return EXIT_IO
    except (MatroidError, ValueError) as exc:
        print(f"matx: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

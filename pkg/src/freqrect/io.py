"""Text and JSON serialization of design objects.

Text formats are line-oriented, UTF-8, LF-terminated, with one canonical
byte sequence per object:

    FR <m> <n> <q>      then m rows of n space-separated symbols
    OA <N> <k> <q> <t>  then N rows of k space-separated symbols
    HAD <n>             then n rows of n tokens from {+, -}
    VS <q> <L> <count>  then one vector per line as L contiguous digits

A set of frequency rectangles is a sequence of FR blocks separated by a
single blank line.  ``parse`` dispatches on the header keyword.
"""

from __future__ import annotations

import json

from .designs import (
    FrequencyRectangle,
    HadamardMatrix,
    OrthogonalArray,
    VectorSet,
    validate_fr,
    validate_hadamard,
    validate_oa,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1, expected: str = ""):
        loc = f"line {line}, column {col}"
        super().__init__(f"{loc}: {message}" + (f" (expected {expected})" if expected else ""))
        self.line = line
        self.col = col
        self.expected = expected


def _ints(text: str, lineno: int, expected_count: int) -> list[int]:
    parts = text.split()
    if len(parts) != expected_count:
        raise ParseError(f"found {len(parts)} fields, need {expected_count}",
                         lineno, expected=f"{expected_count} integers")
    out = []
    for i, p in enumerate(parts):
        try:
            out.append(int(p))
        except ValueError:
            raise ParseError(f"not an integer: {p!r}", lineno, col=i + 1,
                             expected="integer") from None
    return out


def _header(line: str, lineno: int, keyword: str, nargs: int) -> list[int]:
    parts = line.split()
    if not parts or parts[0] != keyword:
        raise ParseError(f"bad header {line!r}", lineno, expected=f"{keyword} header")
    if len(parts) != nargs + 1:
        raise ParseError(f"header has {len(parts) - 1} arguments, need {nargs}",
                         lineno, expected=f"{keyword} with {nargs} integers")
    return _ints(" ".join(parts[1:]), lineno, nargs)


# -- frequency rectangles ---------------------------------------------------

def serialize_fr(f: FrequencyRectangle) -> str:
    lines = [f"FR {f.m} {f.n} {f.q}"]
    lines += [" ".join(str(x) for x in row) for row in f.cells]
    return "\n".join(lines) + "\n"


def _parse_fr_block(lines: list[str], start: int) -> tuple[FrequencyRectangle, int]:
    m, n, q = _header(lines[start], start + 1, "FR", 3)
    rows = []
    for i in range(m):
        idx = start + 1 + i
        if idx >= len(lines):
            raise ParseError("unexpected end of input", len(lines) + 1,
                             expected=f"{m} rows")
        rows.append(_ints(lines[idx], idx + 1, n))
    return validate_fr(rows, q), start + 1 + m


def parse_fr(text: str) -> FrequencyRectangle:
    lines = text.splitlines()
    f, end = _parse_fr_block(lines, 0)
    _expect_blank_tail(lines, end)
    return f


def serialize_fr_set(fs) -> str:
    return "\n".join(serialize_fr(f) for f in fs)


def parse_fr_set(text: str) -> list[FrequencyRectangle]:
    lines = text.splitlines()
    out = []
    pos = 0
    while pos < len(lines):
        if not lines[pos].strip():
            pos += 1
            continue
        f, pos = _parse_fr_block(lines, pos)
        out.append(f)
    if not out:
        raise ParseError("empty input", 1, expected="FR header")
    return out


# -- orthogonal arrays ------------------------------------------------------

def serialize_oa(oa: OrthogonalArray) -> str:
    lines = [f"OA {oa.runs} {oa.factors} {oa.q} {oa.strength}"]
    lines += [" ".join(str(x) for x in row) for row in oa.rows]
    return "\n".join(lines) + "\n"


def parse_oa(text: str) -> OrthogonalArray:
    lines = text.splitlines()
    runs, k, q, t = _header(lines[0], 1, "OA", 4)
    rows = []
    for i in range(runs):
        if 1 + i >= len(lines):
            raise ParseError("unexpected end of input", len(lines) + 1,
                             expected=f"{runs} rows")
        rows.append(_ints(lines[1 + i], 2 + i, k))
    _expect_blank_tail(lines, 1 + runs)
    return validate_oa(rows, q, t)


# -- Hadamard matrices ------------------------------------------------------

def serialize_hadamard(h: HadamardMatrix) -> str:
    lines = [f"HAD {h.order}"]
    lines += [" ".join("+" if x == 1 else "-" for x in row) for row in h.entries]
    return "\n".join(lines) + "\n"


def parse_hadamard(text: str) -> HadamardMatrix:
    lines = text.splitlines()
    (n,) = _header(lines[0], 1, "HAD", 1)
    rows = []
    for i in range(n):
        if 1 + i >= len(lines):
            raise ParseError("unexpected end of input", len(lines) + 1,
                             expected=f"{n} rows")
        toks = lines[1 + i].split()
        if len(toks) != n:
            raise ParseError(f"found {len(toks)} tokens, need {n}", 2 + i,
                             expected=f"{n} +/- tokens")
        row = []
        for j, tok in enumerate(toks):
            if tok == "+":
                row.append(1)
            elif tok == "-":
                row.append(-1)
            else:
                raise ParseError(f"bad token {tok!r}", 2 + i, col=j + 1,
                                 expected="+ or -")
        rows.append(row)
    _expect_blank_tail(lines, 1 + n)
    return validate_hadamard(rows)


# -- vector sets ------------------------------------------------------------

def serialize_vs(vs: VectorSet) -> str:
    if vs.q > 10:
        raise ValueError("contiguous-digit format requires q <= 10")
    lines = [f"VS {vs.q} {vs.length} {len(vs)}"]
    lines += ["".join(str(x) for x in v) for v in vs]
    return "\n".join(lines) + "\n"


def parse_vs(text: str) -> VectorSet:
    lines = text.splitlines()
    q, length, count = _header(lines[0], 1, "VS", 3)
    vecs = []
    for i in range(count):
        if 1 + i >= len(lines):
            raise ParseError("unexpected end of input", len(lines) + 1,
                             expected=f"{count} vectors")
        s = lines[1 + i].strip()
        if len(s) != length or not s.isdigit():
            raise ParseError(f"bad vector {s!r}", 2 + i,
                             expected=f"{length} contiguous digits")
        vecs.append(tuple(int(c) for c in s))
    _expect_blank_tail(lines, 1 + count)
    return VectorSet(q=q, length=length, vectors=tuple(vecs))


def _expect_blank_tail(lines: list[str], pos: int) -> None:
    for i in range(pos, len(lines)):
        if lines[i].strip():
            raise ParseError(f"trailing content {lines[i]!r}", i + 1,
                             expected="end of input")


# -- dispatch and JSON mirror ----------------------------------------------

def parse(text: str):
    """Parse any supported text format, dispatching on the header keyword."""
    head = text.lstrip().split(None, 1)[0] if text.strip() else ""
    if head == "FR":
        members = parse_fr_set(text)
        return members[0] if len(members) == 1 else members
    if head == "OA":
        return parse_oa(text)
    if head == "HAD":
        return parse_hadamard(text)
    if head == "VS":
        return parse_vs(text)
    raise ParseError(f"unknown header {head!r}", 1, expected="FR/OA/HAD/VS")


def serialize(obj) -> str:
    if isinstance(obj, FrequencyRectangle):
        return serialize_fr(obj)
    if isinstance(obj, OrthogonalArray):
        return serialize_oa(obj)
    if isinstance(obj, HadamardMatrix):
        return serialize_hadamard(obj)
    if isinstance(obj, VectorSet):
        return serialize_vs(obj)
    if isinstance(obj, (list, tuple)) and all(
            isinstance(x, FrequencyRectangle) for x in obj):
        return serialize_fr_set(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(obj) -> dict:
    if isinstance(obj, FrequencyRectangle):
        return {"type": "FR", "m": obj.m, "n": obj.n, "q": obj.q,
                "cells": obj.cells.tolist()}
    if isinstance(obj, OrthogonalArray):
        return {"type": "OA", "runs": obj.runs, "factors": obj.factors,
                "q": obj.q, "strength": obj.strength, "rows": obj.rows.tolist()}
    if isinstance(obj, HadamardMatrix):
        return {"type": "HAD", "order": obj.order, "entries": obj.entries.tolist()}
    if isinstance(obj, VectorSet):
        return {"type": "VS", "q": obj.q, "length": obj.length,
                "vectors": [list(v) for v in obj.vectors]}
    if isinstance(obj, (list, tuple)) and all(
            isinstance(x, FrequencyRectangle) for x in obj):
        return {"type": "FRSet", "members": [to_json(x) for x in obj]}
    raise TypeError(f"cannot convert {type(obj).__name__} to JSON")


def from_json(d: dict):
    kind = d.get("type")
    if kind == "FR":
        return validate_fr(d["cells"], d["q"])
    if kind == "OA":
        return validate_oa(d["rows"], d["q"], d["strength"])
    if kind == "HAD":
        return validate_hadamard(d["entries"])
    if kind == "VS":
        return VectorSet(q=d["q"], length=d["length"],
                         vectors=tuple(tuple(v) for v in d["vectors"]))
    if kind == "FRSet":
        return [from_json(x) for x in d["members"]]
    raise ValueError(f"unknown JSON type {kind!r}")


def dumps_json(obj) -> str:
    return json.dumps(to_json(obj), indent=2) + "\n"

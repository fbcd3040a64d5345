"""Readers and writers for the ``lieconst 1``, ``sl2act 1`` and ``linmap 1`` text formats.

Indices are 1-based in files and 0-based in memory.  Rationals are written
``p/q`` in lowest terms with ``q > 0``; integers may be written bare on input
and are written bare on output when ``q == 1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .lie import LieAlgebra
from .linalg import Matrix

__all__ = [
    "MalformedInput",
    "parse_rational",
    "format_rational",
    "loads_lieconst",
    "dumps_lieconst",
    "read_lieconst",
    "write_lieconst",
    "loads_sl2act",
    "dumps_sl2act",
    "read_sl2act",
    "write_sl2act",
    "loads_linmap",
    "dumps_linmap",
    "read_linmap",
    "write_linmap",
]

_RAT = re.compile(r"^[+-]?\d+(/\d+)?$")


class MalformedInput(ValueError):
    """Raised on any syntactic or range problem in an input file."""


def parse_rational(tok: str, where: str = "") -> Fraction:
    if not _RAT.match(tok):
        raise MalformedInput(f"{where}not a rational: {tok!r}")
    if "/" in tok and int(tok.split("/")[1]) == 0:
        raise MalformedInput(f"{where}zero denominator: {tok!r}")
    return Fraction(tok)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok: str, where: str) -> int:
    if not re.match(r"^\d+$", tok):
        raise MalformedInput(f"{where}not a non-negative integer: {tok!r}")
    return int(tok)


def _header(lines, magic: str):
    try:
        no, toks = next(lines)
    except StopIteration:
        raise MalformedInput("empty file") from None
    if toks != magic.split():
        raise MalformedInput(f"line {no}: expected header {magic!r}")
    try:
        no, toks = next(lines)
    except StopIteration:
        raise MalformedInput("missing dim line") from None
    if len(toks) != 2 or toks[0] != "dim":
        raise MalformedInput(f"line {no}: expected 'dim n'")
    return _int(toks[1], f"line {no}: ")


def _index(tok: str, n: int, where: str) -> int:
    i = _int(tok, where)
    if not 1 <= i <= n:
        raise MalformedInput(f"{where}index {i} out of range 1..{n}")
    return i - 1


def loads_lieconst(text: str) -> LieAlgebra:
    lines = _lines(text)
    n = _header(lines, "lieconst 1")
    name = None
    grade = None
    labels = None
    consts: dict = {}
    for no, toks in lines:
        where = f"line {no}: "
        key = toks[0]
        if key == "name":
            if name is not None or len(toks) < 2:
                raise MalformedInput(f"{where}bad or repeated name line")
            name = " ".join(toks[1:])
        elif key == "grade":
            if grade is not None or len(toks) != n + 1:
                raise MalformedInput(f"{where}grade line needs exactly {n} entries")
            grade = [_int(t, where) for t in toks[1:]]
            if any(g < 1 for g in grade):
                raise MalformedInput(f"{where}grades must be positive")
        elif key == "labels":
            if labels is not None or len(toks) != n + 1:
                raise MalformedInput(f"{where}labels line needs exactly {n} entries")
            labels = toks[1:]
        elif key == "c":
            if len(toks) != 5:
                raise MalformedInput(f"{where}expected 'c i j k p/q'")
            i, j, k = (_index(t, n, where) for t in toks[1:4])
            if i >= j:
                raise MalformedInput(f"{where}need i < j")
            if (i, j, k) in consts:
                raise MalformedInput(f"{where}duplicate constant ({i + 1}, {j + 1}, {k + 1})")
            consts[(i, j, k)] = parse_rational(toks[4], where)
        else:
            raise MalformedInput(f"{where}unknown record {key!r}")
    return LieAlgebra(n, consts, labels=labels, grade=grade, name=name)


def dumps_lieconst(L: LieAlgebra, labels: bool | None = None) -> str:
    """Canonical text; the labels record is written only when labels differ from ``b1..bn``."""
    if labels is None:
        labels = L.labels != tuple(f"b{i + 1}" for i in range(L.dim))
    out = ["lieconst 1", f"dim {L.dim}"]
    if L.name:
        out.append(f"name {L.name}")
    if L.grade is not None:
        out.append("grade " + " ".join(map(str, L.grade)))
    if labels:
        out.append("labels " + " ".join(L.labels))
    for i, j, k, c in L.constants():
        out.append(f"c {i + 1} {j + 1} {k + 1} {format_rational(c)}")
    return "\n".join(out) + "\n"


def _loads_triplets(text: str, magic: str, tags: tuple) -> tuple:
    lines = _lines(text)
    n = _header(lines, magic)
    ents = {t: {} for t in tags}
    for no, toks in lines:
        where = f"line {no}: "
        if toks[0] not in ents or len(toks) != 4:
            raise MalformedInput(f"{where}expected '<{'|'.join(tags)}> i j p/q'")
        i, j = _index(toks[1], n, where), _index(toks[2], n, where)
        tab = ents[toks[0]]
        if (i, j) in tab:
            raise MalformedInput(f"{where}duplicate entry")
        tab[(i, j)] = parse_rational(toks[3], where)
    return n, [Matrix.from_entries(n, n, ents[t]) for t in tags]


def _dump_triplets(magic: str, n: int, named: list) -> str:
    out = [magic, f"dim {n}"]
    for tag, M in named:
        for i, j, c in M.entries():
            out.append(f"{tag} {i + 1} {j + 1} {format_rational(c)}")
    return "\n".join(out) + "\n"


def loads_sl2act(text: str):
    from .sl2 import Sl2Action

    _, (H, E, F) = _loads_triplets(text, "sl2act 1", ("H", "E", "F"))
    try:
        return Sl2Action(H, E, F)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def dumps_sl2act(A) -> str:
    return _dump_triplets("sl2act 1", A.dim, [("H", A.H), ("E", A.E), ("F", A.F)])


def loads_linmap(text: str) -> Matrix:
    return _loads_triplets(text, "linmap 1", ("M",))[1][0]


def dumps_linmap(M: Matrix) -> str:
    if M.nrows != M.ncols:
        raise ValueError("linmap files hold square maps")
    return _dump_triplets("linmap 1", M.nrows, [("M", M)])


def _reader(loads):
    def read(path):
        try:
            text = Path(path).read_text()
        except UnicodeDecodeError as exc:
            raise MalformedInput(f"not a text file: {exc}") from None
        return loads(text)

    return read


def _writer(dumps):
    def write(obj, path):
        Path(path).write_text(dumps(obj))

    return write


read_lieconst = _reader(loads_lieconst)
read_sl2act = _reader(loads_sl2act)
read_linmap = _reader(loads_linmap)
write_lieconst = _writer(dumps_lieconst)
write_sl2act = _writer(dumps_sl2act)
write_linmap = _writer(dumps_linmap)

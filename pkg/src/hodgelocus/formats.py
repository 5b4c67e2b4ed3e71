"""Polynomial text grammar and the line/section file formats built on it.

Grammar (whitespace ignored)::

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := coeff | coeff '*' mono | mono
    coeff  := INT | INT '/' INT
    mono   := factor ('*' factor)*
    factor := 'x' INT ['^' INT]

Files hold one polynomial per line; lines starting with ``#`` are comments.
Sectioned files group lines under ``[NAME]`` headers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .field import FieldSpec
from .poly import HomoPoly

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x(?P<idx>\d+))|(?P<op>[-+*/^]))")


def _tokens(text: str, line: int | None):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        col = m.start() + 1 + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group("num") is not None:
            out.append(("num", int(m.group("num")), col))
        elif m.group("var") is not None:
            out.append(("var", int(m.group("idx")), col))
        else:
            out.append((m.group("op"), None, col))
        pos = m.end()
    out.append(("end", None, len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str, line: int | None):
        self.toks = _tokens(text, line)
        self.i = 0
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = {"num": "an integer", "var": "a variable x<i>"}.get(kind, repr(kind))
            got = "end of input" if tok[0] == "end" else repr(tok[0] if tok[1] is None else tok[1])
            raise ParseError(f"expected {want}, found {got}", self.line, tok[2])
        self.i += 1
        return tok

    def poly(self):
        terms = []
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        terms.append(self.term(sign))
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            terms.append(self.term(sign))
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[0] if tok[1] is None else tok[1]!r}", self.line, tok[2])
        return terms

    def term(self, sign):
        coeff = Fraction(1)
        exps: dict[int, int] = {}
        if self.peek()[0] == "num":
            num = self.take()[1]
            den = 1
            if self.peek()[0] == "/":
                self.take()
                tok = self.take("num")
                den = tok[1]
                if den == 0:
                    raise ParseError("zero denominator", self.line, tok[2])
            coeff = Fraction(num, den)
            if self.peek()[0] != "*":
                return sign * coeff, exps
            self.take("*")
        self.factor(exps)
        while self.peek()[0] == "*":
            self.take()
            self.factor(exps)
        return sign * coeff, exps

    def factor(self, exps):
        idx = self.take("var")[1]
        e = 1
        if self.peek()[0] == "^":
            self.take()
            e = self.take("num")[1]
        exps[idx] = exps.get(idx, 0) + e


def parse_terms(text: str, line: int | None = None):
    """Parse into ``[(Fraction coefficient, {var: exponent}), ...]``."""
    return _Parser(text, line).poly()


def _n_for(max_index: int) -> int:
    # smallest n >= 1 with 2n+2 > max_index
    return max(1, max_index // 2)


def _build(raw, n: int, field: FieldSpec, line: int | None) -> HomoPoly:
    v = 2 * n + 2
    degree = None
    terms = {}
    for coeff, exps in raw:
        if exps and max(exps) >= v:
            raise ParseError(f"variable x{max(exps)} outside the {v} coordinates", line)
        mono = tuple(exps.get(i, 0) for i in range(v))
        deg = sum(mono)
        if coeff == 0:
            continue
        if degree is None:
            degree = deg
        elif deg != degree:
            raise ParseError(f"polynomial is not homogeneous (degrees {degree} and {deg})", line)
        terms[mono] = terms.get(mono, 0) + coeff
    if degree is None:
        degree = 0
    try:
        return HomoPoly(n, degree, terms, field)
    except ZeroDivisionError as exc:
        raise ParseError(str(exc), line) from None


def _max_index(raws) -> int:
    return max((max(exps) for raw in raws for _, exps in raw if exps), default=0)


def parse_poly(text: str, n: int | None = None, field: FieldSpec | None = None) -> HomoPoly:
    """Parse one homogeneous polynomial.

    ``n`` defaults to the smallest value ``>= 1`` whose ``2n+2`` coordinates
    cover every variable that appears.
    """
    field = field or FieldSpec.prime()
    raw = parse_terms(text)
    if n is None:
        n = _n_for(_max_index([raw]))
    return _build(raw, n, field, None)


def _content_lines(text: str, first_line: int = 1):
    for offset, line in enumerate(text.splitlines()):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield first_line + offset, line


def parse_polys(text: str, n: int | None = None, field: FieldSpec | None = None) -> list[HomoPoly]:
    """Parse one polynomial per non-comment line, sharing a common ``n``."""
    return _parse_lines(list(_content_lines(text)), n, field or FieldSpec.prime())


def _parse_lines(lines, n, field):
    raws = [(lineno, parse_terms(body, lineno)) for lineno, body in lines]
    if n is None:
        n = _n_for(_max_index([raw for _, raw in raws]))
    return [_build(raw, n, field, lineno) for lineno, raw in raws]


_HEADER = re.compile(r"^\s*\[\s*([A-Za-z_]+)\s*\]\s*$")


def parse_sections(text: str, n: int | None = None, field: FieldSpec | None = None,
                   ) -> dict[str, list[HomoPoly]]:
    """Parse a sectioned file (``[P]``, ``[Q]``, ``[F]``, ``[CURVE]``, ``[LINK]``).

    All polynomials in the file share one ``n``.
    """
    field = field or FieldSpec.prime()
    sections: dict[str, list] = {}
    current = None
    for lineno, line in _content_lines(text):
        m = _HEADER.match(line)
        if m:
            current = m.group(1).upper()
            if current in sections:
                raise ParseError(f"duplicate section [{current}]", lineno, 1)
            sections[current] = []
            continue
        if current is None:
            raise ParseError("polynomial outside of any [SECTION]", lineno, 1)
        sections[current].append((lineno, line))
    raws = {name: [(ln, parse_terms(body, ln)) for ln, body in lines]
            for name, lines in sections.items()}
    if n is None:
        n = _n_for(_max_index([raw for lines in raws.values() for _, raw in lines]))
    return {name: [_build(raw, n, field, ln) for ln, raw in lines] for name, lines in raws.items()}


def read_polys(path, n=None, field=None) -> list[HomoPoly]:
    return parse_polys(Path(path).read_text(encoding="utf-8"), n, field)


def read_poly(path, n=None, field=None) -> HomoPoly:
    polys = read_polys(path, n, field)
    if len(polys) != 1:
        raise ParseError(f"{path}: expected exactly one polynomial, found {len(polys)}")
    return polys[0]


def read_sections(path, n=None, field=None) -> dict[str, list[HomoPoly]]:
    return parse_sections(Path(path).read_text(encoding="utf-8"), n, field)


def format_polys(polys, header: str | None = None) -> str:
    lines = [f"# {header}"] if header else []
    lines += [str(p) for p in polys]
    return "\n".join(lines) + "\n"

"""Line-oriented N-Triples reading and writing.

Supported statement forms::

    <s> <p> <o> .
    <s> <p> "literal" .
    <s> <p> "literal"@tag .
    <s> <p> "literal"^^<datatype> .

Lines starting with ``#`` are comments, blank lines are ignored. Blank nodes
are rejected. Parsing stops at the first malformed line.
"""

from __future__ import annotations

from pathlib import Path
from typing import IO, Iterable, Iterator, Union

from .errors import MalformedLine, TermError
from .terms import IRI, Literal, Origin, Term, Triple

_ECHAR_DECODE = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}

_ECHAR_ENCODE = {
    "\\": "\\\\",
    '"': '\\"',
    "\n": "\\n",
    "\r": "\\r",
    "\t": "\\t",
    "\b": "\\b",
    "\f": "\\f",
}

# characters Python's splitlines treats as line breaks, beyond \n and \r
_LINE_BREAKERS = "\x0b\x0c\x1c\x1d\x1e\x85  "


def _encode_char(c: str) -> str:
    if c in _ECHAR_ENCODE:
        return _ECHAR_ENCODE[c]
    cp = ord(c)
    if cp < 0x20 or cp == 0x7F or c in _LINE_BREAKERS:
        return f"\\u{cp:04X}"
    return c

Source = Union[str, bytes, Path, IO]


class _Cursor:
    """Single-line scanner; raises ValueError with a human reason."""

    def __init__(self, line: str):
        self.line = line
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.line) and self.line[self.pos] in " \t":
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.line)

    def peek(self) -> str:
        return self.line[self.pos] if self.pos < len(self.line) else ""

    def expect(self, char: str, what: str) -> None:
        if self.peek() != char:
            raise ValueError(f"expected {what} at column {self.pos + 1}")
        self.pos += 1

    def read_iri(self) -> IRI:
        if self.peek() == "_":
            raise ValueError("blank nodes are not supported")
        self.expect("<", "'<'")
        end = self.line.find(">", self.pos)
        if end < 0:
            raise ValueError("unterminated IRI (missing '>')")
        raw = self.line[self.pos : end]
        self.pos = end + 1
        try:
            return IRI(raw)
        except TermError as exc:
            raise ValueError(str(exc)) from None

    def read_literal(self) -> Literal:
        self.expect('"', "'\"'")
        out: list[str] = []
        while True:
            if self.at_end():
                raise ValueError("unterminated literal")
            ch = self.line[self.pos]
            self.pos += 1
            if ch == '"':
                break
            if ch != "\\":
                out.append(ch)
                continue
            if self.at_end():
                raise ValueError("dangling escape at end of literal")
            esc = self.line[self.pos]
            self.pos += 1
            if esc in _ECHAR_DECODE:
                out.append(_ECHAR_DECODE[esc])
            elif esc in ("u", "U"):
                width = 4 if esc == "u" else 8
                hexdigits = self.line[self.pos : self.pos + width]
                if len(hexdigits) < width:
                    raise ValueError(f"truncated \\{esc} escape")
                try:
                    out.append(chr(int(hexdigits, 16)))
                except ValueError:
                    raise ValueError(f"invalid \\{esc} escape: {hexdigits!r}") from None
                self.pos += width
            else:
                raise ValueError(f"unknown escape \\{esc}")
        lexical = "".join(out)
        if self.peek() == "@":
            self.pos += 1
            start = self.pos
            while not self.at_end() and (self.line[self.pos].isalnum() or self.line[self.pos] == "-"):
                self.pos += 1
            tag = self.line[start : self.pos]
            if not tag:
                raise ValueError("empty language tag")
            try:
                return Literal(lexical, language=tag)
            except TermError as exc:
                raise ValueError(str(exc)) from None
        if self.line.startswith("^^", self.pos):
            self.pos += 2
            return Literal(lexical, datatype=self.read_iri())
        return Literal(lexical)


def _iter_lines(source: Source) -> Iterator[str]:
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    elif isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:  # file-like
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    yield from text.splitlines()


def iter_triples(source: Source, *, origin: Origin = Origin.LOCAL) -> Iterator[Triple]:
    """Parse statements one by one; raises MalformedLine on the first bad line."""
    for number, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cur = _Cursor(line)
        try:
            subject = cur.read_iri()
            cur.skip_ws()
            predicate = cur.read_iri()
            cur.skip_ws()
            if cur.peek() == "<":
                obj: Term = cur.read_iri()
            elif cur.peek() == '"':
                obj = cur.read_literal()
            elif cur.peek() == "_":
                raise ValueError("blank nodes are not supported")
            else:
                raise ValueError("expected IRI or literal object")
            cur.skip_ws()
            cur.expect(".", "terminating '.'")
            cur.skip_ws()
            if not cur.at_end():
                raise ValueError("trailing characters after '.'")
        except ValueError as exc:
            raise MalformedLine(number, str(exc)) from None
        yield Triple(subject, predicate, obj, origin=origin)


def render_term(term: Term) -> str:
    if isinstance(term, IRI):
        return f"<{term.value}>"
    body = "".join(_encode_char(c) for c in term.lexical)
    if term.language:
        return f'"{body}"@{term.language}'
    if term.datatype:
        return f'"{body}"^^<{term.datatype.value}>'
    return f'"{body}"'


def render_triple(triple: Triple) -> str:
    """Canonical single-line form, also used for provenance hashing."""
    return (
        f"<{triple.subject.value}> <{triple.predicate.value}> "
        f"{render_term(triple.object)} ."
    )


def serialize_triples(triples: Iterable[Triple]) -> str:
    """Deterministic serialization: statements sorted by (s, p, o)."""
    lines = sorted(render_triple(t) for t in triples)
    return "\n".join(lines) + ("\n" if lines else "")

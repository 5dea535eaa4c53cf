"""RDF terms: IRIs, literals, triples, and prefix expansion.

Triples compare and hash on (subject, predicate, object) only; the origin
marker is carried along as metadata so repositories keep set semantics while
still remembering where each statement came from.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Union

from .errors import PrefixError, TermError

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_LANGTAG_RE = re.compile(r"^[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*$")


class Origin(Enum):
    """Where a triple was asserted."""

    LOCAL = "local"
    TARGET = "target"
    ENHANCED = "enhanced"


@dataclass(frozen=True, slots=True)
class IRI:
    """An absolute IRI. Equality is byte equality of the full form."""

    value: str

    def __post_init__(self):
        if not self.value:
            raise TermError("IRI must be non-empty")
        if not _SCHEME_RE.match(self.value):
            raise TermError(f"not an absolute IRI (missing scheme): {self.value!r}")
        if any(c.isspace() for c in self.value):
            raise TermError(f"IRI contains whitespace: {self.value!r}")

    def local_name(self) -> str:
        """Fragment after the last '#' or '/', or the part after the scheme."""
        for sep in ("#", "/"):
            idx = self.value.rfind(sep)
            if 0 <= idx < len(self.value) - 1:
                return self.value[idx + 1 :]
        return self.value.split(":", 1)[1]

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class Literal:
    """A literal value with an optional language tag or datatype IRI."""

    lexical: str
    language: str | None = None
    datatype: IRI | None = None

    def __post_init__(self):
        if self.language is not None and self.datatype is not None:
            raise TermError("literal cannot carry both a language tag and a datatype")
        if self.language is not None and not _LANGTAG_RE.match(self.language):
            raise TermError(f"invalid language tag: {self.language!r}")

    def __str__(self) -> str:
        return self.lexical


Term = Union[IRI, Literal]


@dataclass(frozen=True, slots=True)
class Triple:
    """One subject-predicate-object statement.

    ``origin`` and ``enhanced_from`` are excluded from equality so that a
    re-parsed triple deduplicates against its enhanced twin.
    """

    subject: IRI
    predicate: IRI
    object: Term
    origin: Origin = field(default=Origin.LOCAL, compare=False)
    enhanced_from: IRI | None = field(default=None, compare=False)

    def __post_init__(self):
        if (self.origin is Origin.ENHANCED) != (self.enhanced_from is not None):
            raise TermError("enhanced_from must be set exactly when origin is ENHANCED")

    def with_origin(self, origin: Origin, enhanced_from: IRI | None = None) -> "Triple":
        return Triple(self.subject, self.predicate, self.object, origin, enhanced_from)

    def key(self) -> tuple:
        """Deterministic sort key over (s, p, o)."""
        return (self.subject.value, self.predicate.value, _term_key(self.object))


def _term_key(term: Term) -> tuple:
    if isinstance(term, IRI):
        return (0, term.value, "", "")
    return (1, term.lexical, term.language or "", term.datatype.value if term.datatype else "")


#: Namespaces bound out of the box. Users extend these via a prefix file.
DEFAULT_PREFIXES: dict[str, str] = {
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "owl": "http://www.w3.org/2002/07/owl#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "skos": "http://www.w3.org/2004/02/skos/core#",
    "foaf": "http://xmlns.com/foaf/0.1/",
    "dcterms": "http://purl.org/dc/terms/",
    "dbo": "http://dbpedia.org/ontology/",
    "dbp": "http://dbpedia.org/property/",
    "dbr": "http://dbpedia.org/resource/",
}

RDF_TYPE = IRI(DEFAULT_PREFIXES["rdf"] + "type")
OWL_SAMEAS = IRI(DEFAULT_PREFIXES["owl"] + "sameAs")


class PrefixTable:
    """Maps prefixes to namespace IRIs and back.

    ``expand`` accepts either an absolute IRI or a compact ``prefix:local``
    form. A compact form whose prefix is unbound is accepted verbatim when it
    already parses as an absolute IRI (URN-style identifiers); otherwise it is
    rejected.
    """

    def __init__(self, mapping: dict[str, str] | None = None, *, include_defaults: bool = True):
        self._map: dict[str, str] = dict(DEFAULT_PREFIXES) if include_defaults else {}
        if mapping:
            self._map.update(mapping)

    def bind(self, prefix: str, namespace: str) -> None:
        if not prefix or not namespace:
            raise PrefixError("prefix and namespace must be non-empty")
        self._map[prefix] = namespace

    def namespaces(self) -> dict[str, str]:
        return dict(self._map)

    def expand(self, text: str) -> IRI:
        text = text.strip()
        if not text:
            raise PrefixError("empty IRI text")
        if "://" in text:
            return IRI(text)
        if ":" not in text:
            raise PrefixError(f"neither absolute nor compact IRI: {text!r}")
        prefix, local = text.split(":", 1)
        if prefix in self._map:
            return IRI(self._map[prefix] + local)
        if _SCHEME_RE.match(text):
            return IRI(text)
        raise PrefixError(f"unknown prefix {prefix!r} in {text!r}")

    def compact(self, iri: IRI) -> str | None:
        """Compact form under the longest matching namespace, or None."""
        best: tuple[int, str] | None = None
        for prefix, ns in self._map.items():
            if iri.value.startswith(ns) and len(iri.value) > len(ns):
                if best is None or len(ns) > best[0]:
                    best = (len(ns), f"{prefix}:{iri.value[len(ns):]}")
        return best[1] if best else None


def load_prefix_table(path: str | Path, *, include_defaults: bool = True) -> PrefixTable:
    """Read a ``prefix<TAB>namespace`` file; ``#`` lines are comments."""
    table = PrefixTable(include_defaults=include_defaults)
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise PrefixError(f"expected prefix<TAB>namespace, got {raw!r}")
        table.bind(parts[0].strip(), parts[1].strip())
    return table

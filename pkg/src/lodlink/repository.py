"""Indexed triple storage for local and target repositories.

A :class:`Repository` keeps one copy of every distinct (s, p, o) statement
plus subject / predicate / object / type indexes and an inverted text index
over label-property and abstract-property literals. Lookups through an index
return exactly what a linear scan returns; the test suite enforces this
equivalence on randomized repositories.

Snapshot discipline: readers treat a repository as immutable. Writers call
:meth:`Repository.clone`, mutate the clone, and publish it atomically (see
``engine``). ``add``/``remove`` exist for builders and for the single writer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import EmptyTerm, NoSearchTerms
from .terms import (
    IRI,
    Literal,
    Origin,
    PrefixTable,
    RDF_TYPE,
    Term,
    Triple,
)

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

#: Default label-property priority list: the most frequent labeling
#: properties on the open-data web, most common first.
DEFAULT_LABEL_PROPERTIES: tuple[IRI, ...] = (
    IRI("http://xmlns.com/foaf/0.1/name"),
    IRI("http://www.w3.org/2000/01/rdf-schema#label"),
    IRI("http://xmlns.com/foaf/0.1/givenname"),
    IRI("http://xmlns.com/foaf/0.1/accountName"),
    IRI("http://xmlns.com/foaf/0.1/family_name"),
    IRI("http://xmlns.com/foaf/0.1/firstName"),
    IRI("http://xmlns.com/foaf/0.1/surname"),
    IRI("http://www.w3.org/2004/02/skos/core#prefLabel"),
    IRI("http://xmlns.com/foaf/0.1/openid"),
    IRI("http://purl.org/dc/terms/identifier"),
)

DEFAULT_ABSTRACT_PROPERTY = IRI("http://dbpedia.org/property/abstract")


class TextField(Enum):
    """Which literal field a text search runs over."""

    LABEL = "label"
    ABSTRACT = "abstract"


def tokenize(text: str) -> tuple[str, ...]:
    """Lowercase and split on non-alphanumeric boundaries."""
    return tuple(_TOKEN_RE.findall(text.lower()))


def contains_tokens(haystack: tuple[str, ...], needle: tuple[str, ...]) -> bool:
    """True if ``needle`` occurs as a contiguous subsequence of ``haystack``."""
    if not needle:
        return False
    n = len(needle)
    return any(haystack[i : i + n] == needle for i in range(len(haystack) - n + 1))


@dataclass(frozen=True)
class Entity:
    """An IRI together with its asserted triples and types."""

    iri: IRI
    types: tuple[IRI, ...]
    assertions: tuple[Triple, ...]

    def __bool__(self) -> bool:
        return bool(self.assertions)


class Repository:
    """A set of triples with subject/predicate/object/type/text indexes."""

    def __init__(
        self,
        *,
        label_properties: Iterable[IRI] | None = None,
        abstract_property: IRI | None = None,
        prefixes: PrefixTable | None = None,
    ):
        self.label_properties: tuple[IRI, ...] = (
            tuple(label_properties) if label_properties is not None else DEFAULT_LABEL_PROPERTIES
        )
        self.abstract_property: IRI = abstract_property or DEFAULT_ABSTRACT_PROPERTY
        self.prefixes: PrefixTable = prefixes or PrefixTable()
        self._label_set = frozenset(self.label_properties)
        # dicts double as insertion-ordered sets
        self._triples: dict[Triple, Triple] = {}
        self._by_subject: dict[IRI, dict[Triple, None]] = {}
        self._by_predicate: dict[IRI, dict[Triple, None]] = {}
        self._by_object: dict[Term, dict[Triple, None]] = {}
        self._by_type: dict[IRI, dict[IRI, None]] = {}
        self._postings: dict[tuple[TextField, str], set[Triple]] = {}

    # -- construction ------------------------------------------------------

    def add(self, triple: Triple) -> bool:
        """Insert a triple; duplicate insertion is a silent no-op (False)."""
        if triple in self._triples:
            return False
        self._triples[triple] = triple
        self._by_subject.setdefault(triple.subject, {})[triple] = None
        self._by_predicate.setdefault(triple.predicate, {})[triple] = None
        self._by_object.setdefault(triple.object, {})[triple] = None
        if triple.predicate == RDF_TYPE and isinstance(triple.object, IRI):
            self._by_type.setdefault(triple.object, {})[triple.subject] = None
        for fld in self._text_fields(triple):
            lit = triple.object
            assert isinstance(lit, Literal)
            for token in set(tokenize(lit.lexical)):
                self._postings.setdefault((fld, token), set()).add(triple)
        return True

    def remove(self, triple: Triple) -> bool:
        """Remove a triple; returns False if it was not present."""
        stored = self._triples.pop(triple, None)
        if stored is None:
            return False
        self._discard(self._by_subject, stored.subject, stored)
        self._discard(self._by_predicate, stored.predicate, stored)
        self._discard(self._by_object, stored.object, stored)
        if stored.predicate == RDF_TYPE and isinstance(stored.object, IRI):
            subjects = self._by_type.get(stored.object)
            if subjects is not None:
                subjects.pop(stored.subject, None)
                if not subjects:
                    del self._by_type[stored.object]
        for fld in self._text_fields(stored):
            lit = stored.object
            assert isinstance(lit, Literal)
            for token in set(tokenize(lit.lexical)):
                key = (fld, token)
                postings = self._postings.get(key)
                if postings is not None:
                    postings.discard(stored)
                    if not postings:
                        del self._postings[key]
        return True

    @staticmethod
    def _discard(index: dict, key, triple: Triple) -> None:
        entries = index.get(key)
        if entries is not None:
            entries.pop(triple, None)
            if not entries:
                del index[key]

    def _text_fields(self, triple: Triple) -> list[TextField]:
        if not isinstance(triple.object, Literal):
            return []
        fields = []
        if triple.predicate in self._label_set:
            fields.append(TextField.LABEL)
        if triple.predicate == self.abstract_property:
            fields.append(TextField.ABSTRACT)
        return fields

    def clone(self) -> "Repository":
        """Independent copy sharing only immutable terms."""
        other = Repository(
            label_properties=self.label_properties,
            abstract_property=self.abstract_property,
            prefixes=self.prefixes,
        )
        other._triples = dict(self._triples)
        other._by_subject = {k: dict(v) for k, v in self._by_subject.items()}
        other._by_predicate = {k: dict(v) for k, v in self._by_predicate.items()}
        other._by_object = {k: dict(v) for k, v in self._by_object.items()}
        other._by_type = {k: dict(v) for k, v in self._by_type.items()}
        other._postings = {k: set(v) for k, v in self._postings.items()}
        return other

    # -- lookups -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def stored(self, triple: Triple) -> Triple | None:
        """The stored instance equal to ``triple`` (carrying its origin)."""
        return self._triples.get(triple)

    def subjects(self) -> list[IRI]:
        return list(self._by_subject)

    def has_subject(self, iri: IRI) -> bool:
        return iri in self._by_subject

    def triples_for_subject(self, iri: IRI) -> list[Triple]:
        return list(self._by_subject.get(iri, ()))

    def triples_for_predicate(self, predicate: IRI) -> list[Triple]:
        return list(self._by_predicate.get(predicate, ()))

    def triples_for_object(self, obj: Term) -> list[Triple]:
        return list(self._by_object.get(obj, ()))

    def subjects_of_type(self, type_iri: IRI) -> list[IRI]:
        return list(self._by_type.get(type_iri, ()))

    def types_of(self, iri: IRI) -> list[IRI]:
        seen: dict[IRI, None] = {}
        for t in self._by_subject.get(iri, ()):
            if t.predicate == RDF_TYPE and isinstance(t.object, IRI):
                seen[t.object] = None
        return list(seen)

    def get_entity(self, iri: IRI) -> Entity:
        """All assertions on ``iri``; empty entity if the IRI is unknown."""
        assertions = tuple(self._by_subject.get(iri, ()))
        types = tuple(
            dict.fromkeys(
                t.object for t in assertions if t.predicate == RDF_TYPE and isinstance(t.object, IRI)
            )
        )
        return Entity(iri=iri, types=types, assertions=assertions)

    def label_values(self, iri: IRI) -> list[str]:
        """Label literals on ``iri``, ordered by property priority then insertion."""
        values: list[str] = []
        seen: set[str] = set()
        triples = self._by_subject.get(iri, ())
        for prop in self.label_properties:
            for t in triples:
                if t.predicate == prop and isinstance(t.object, Literal):
                    v = t.object.lexical.strip()
                    if v and v not in seen:
                        seen.add(v)
                        values.append(v)
        return values

    def extract_search_terms(self, iri: IRI) -> list[str]:
        """Label values used as linking search terms; raises NoSearchTerms."""
        terms = self.label_values(iri)
        if not terms:
            raise NoSearchTerms(f"no label-property assertion on {iri.value}")
        return terms

    def text_search(self, term: str, field: TextField) -> set[IRI]:
        """Subjects whose ``field`` literal token-contains ``term``.

        Containment means: the literal, lowercased and tokenized, contains
        every token of the term as a contiguous token subsequence.
        """
        if not term.strip():
            raise EmptyTerm("search term is empty")
        needle = tokenize(term)
        if not needle:
            return set()
        candidate_sets = []
        for token in set(needle):
            postings = self._postings.get((field, token))
            if not postings:
                return set()
            candidate_sets.append(postings)
        candidate_sets.sort(key=len)
        candidates = set.intersection(*candidate_sets)
        result: set[IRI] = set()
        for triple in candidates:
            lit = triple.object
            assert isinstance(lit, Literal)
            if contains_tokens(tokenize(lit.lexical), needle):
                result.add(triple.subject)
        return result

    def all_label_literals(self) -> Iterator[tuple[IRI, str]]:
        """(subject, lexical) pairs over every label-property literal."""
        for prop in self.label_properties:
            for t in self._by_predicate.get(prop, ()):
                if isinstance(t.object, Literal):
                    yield t.subject, t.object.lexical


def parse_ntriples(
    source,
    *,
    origin: Origin = Origin.LOCAL,
    label_properties: Iterable[IRI] | None = None,
    abstract_property: IRI | None = None,
    prefixes: PrefixTable | None = None,
) -> Repository:
    """Build a fully indexed repository from N-Triples input."""
    from .ntriples import iter_triples

    repo = Repository(
        label_properties=label_properties,
        abstract_property=abstract_property,
        prefixes=prefixes,
    )
    for triple in iter_triples(source, origin=origin):
        repo.add(triple)
    return repo


def serialize_repository(repo: Repository) -> str:
    from .ntriples import serialize_triples

    return serialize_triples(repo)

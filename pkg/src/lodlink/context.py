"""Context selection for candidate review.

A candidate is presented with its k most frequent properties and types,
where frequency means the share of entities in the target repository that
carry at least one assertion for the property (indicator semantics, so an
entity with many values still counts once). Frequencies are precomputed when
the target repository loads and cached with the snapshot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .errors import EmptyRepository
from .repository import Entity, Repository
from .terms import IRI, RDF_TYPE, Term


@dataclass(frozen=True)
class PropertyFrequencyIndex:
    """Per-property and per-type entity frequencies, as exact rationals."""

    property_frequencies: Mapping[IRI, Fraction]
    type_frequencies: Mapping[IRI, Fraction]
    entity_count: int

    def property_frequency(self, predicate: IRI) -> Fraction:
        return self.property_frequencies.get(predicate, Fraction(0))

    def type_frequency(self, type_iri: IRI) -> Fraction:
        return self.type_frequencies.get(type_iri, Fraction(0))


def compute_frequencies(repo: Repository) -> PropertyFrequencyIndex:
    """Precompute f_p for every predicate and type in the repository."""
    entity_count = len(repo.subjects())
    if entity_count == 0:
        raise EmptyRepository("repository has no entities")
    property_frequencies: dict[IRI, Fraction] = {}
    seen_predicates = {t.predicate for t in repo}
    for predicate in seen_predicates:
        subjects = {t.subject for t in repo.triples_for_predicate(predicate)}
        property_frequencies[predicate] = Fraction(len(subjects), entity_count)
    type_frequencies: dict[IRI, Fraction] = {}
    for t in repo.triples_for_predicate(RDF_TYPE):
        if isinstance(t.object, IRI) and t.object not in type_frequencies:
            type_frequencies[t.object] = Fraction(
                len(repo.subjects_of_type(t.object)), entity_count
            )
    return PropertyFrequencyIndex(
        property_frequencies=MappingProxyType(property_frequencies),
        type_frequencies=MappingProxyType(type_frequencies),
        entity_count=entity_count,
    )


def ranked_predicates(entity: Entity, index: PropertyFrequencyIndex) -> list[IRI]:
    """The entity's distinct predicates, most frequent first, ties by IRI."""
    predicates = list(dict.fromkeys(t.predicate for t in entity.assertions))
    predicates.sort(key=lambda p: (-index.property_frequency(p), p.value))
    return predicates


def select_context(
    entity: Entity, index: PropertyFrequencyIndex, k: int
) -> list[tuple[IRI, Term]]:
    """(predicate, value) pairs for the k most frequent predicates.

    All values of a selected predicate are kept, in assertion order.
    """
    pairs: list[tuple[IRI, Term]] = []
    for predicate in ranked_predicates(entity, index)[: max(k, 0)]:
        for t in entity.assertions:
            if t.predicate == predicate:
                pairs.append((predicate, t.object))
    return pairs


def select_types(entity: Entity, index: PropertyFrequencyIndex, k: int) -> list[IRI]:
    """The k most frequent types of the entity."""
    types = sorted(entity.types, key=lambda t: (-index.type_frequency(t), t.value))
    return types[: max(k, 0)]

import random
from fractions import Fraction

import pytest

from lodlink.context import compute_frequencies, ranked_predicates, select_context, select_types
from lodlink.errors import EmptyRepository
from lodlink.repository import Repository, parse_ntriples
from lodlink.terms import IRI, Literal, Triple

from oracles import random_repository

RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"


def test_indicator_semantics_half():
    lines = []
    for i in range(4):
        lines.append(f"<urn:e{i}> <urn:base> <urn:x> .")
    lines.append('<urn:e0> <urn:p> "v" .')
    lines.append('<urn:e1> <urn:p> "v2" .')
    repo = parse_ntriples("\n".join(lines))
    index = compute_frequencies(repo)
    assert index.property_frequency(IRI("urn:p")) == Fraction(1, 2)


def test_many_assertions_count_once():
    lines = [f"<urn:e{i}> <urn:base> <urn:x> ." for i in range(7)]
    lines.extend(f'<urn:e0> <urn:p> "value {i}" .' for i in range(7))
    repo = parse_ntriples("\n".join(lines))
    index = compute_frequencies(repo)
    assert index.property_frequency(IRI("urn:p")) == Fraction(1, 7)


def test_empty_repository_raises():
    with pytest.raises(EmptyRepository):
        compute_frequencies(Repository())


def test_random_repositories_match_full_scan():
    rng = random.Random(59)
    for _ in range(10):
        repo = random_repository(rng, n_entities=25, n_triples=200)
        index = compute_frequencies(repo)
        entities = set(repo.subjects())
        predicates = {t.predicate for t in repo}
        for predicate in predicates:
            holders = {t.subject for t in repo if t.predicate == predicate}
            assert index.property_frequency(predicate) == Fraction(len(holders), len(entities))
        types = {t.object for t in repo if t.predicate.value == RDF_TYPE and isinstance(t.object, IRI)}
        for type_iri in types:
            holders = {
                t.subject for t in repo if t.predicate.value == RDF_TYPE and t.object == type_iri
            }
            assert index.type_frequency(type_iri) == Fraction(len(holders), len(entities))


def test_frequency_bounds_and_saturation():
    repo = parse_ntriples(
        '<urn:a> <urn:common> "x" .\n<urn:b> <urn:common> "y" .\n'
    )
    index = compute_frequencies(repo)
    assert index.property_frequency(IRI("urn:common")) == Fraction(1)
    for f in index.property_frequencies.values():
        assert Fraction(0) <= f <= Fraction(1)


class TestSelectContext:
    def _fixture(self):
        # synthetic frequencies: label on 9/10, birthPlace 4/10, motto 1/10
        lines = []
        for i in range(10):
            lines.append(f"<urn:e{i}> <urn:anchorprop> <urn:x> .")
        for i in range(9):
            lines.append(f'<urn:e{i}> <urn:label> "L{i}" .')
        for i in range(4):
            lines.append(f"<urn:e{i}> <urn:birthPlace> <urn:place{i}> .")
        lines.append('<urn:e0> <urn:motto> "onward" .')
        return parse_ntriples("\n".join(lines))

    def test_orders_by_descending_frequency(self):
        repo = self._fixture()
        index = compute_frequencies(repo)
        entity = repo.get_entity(IRI("urn:e0"))
        pairs = select_context(entity, index, k=2)
        selected = list(dict.fromkeys(p for p, _ in pairs))
        assert selected == [IRI("urn:anchorprop"), IRI("urn:label")]

    def test_k_larger_than_predicates_keeps_all(self):
        repo = self._fixture()
        index = compute_frequencies(repo)
        entity = repo.get_entity(IRI("urn:e0"))
        pairs = select_context(entity, index, k=99)
        assert {p for p, _ in pairs} == {t.predicate for t in entity.assertions}

    def test_entity_without_assertions_is_empty(self):
        repo = self._fixture()
        index = compute_frequencies(repo)
        assert select_context(repo.get_entity(IRI("urn:ghost")), index, 5) == []

    def test_prefix_property_across_k(self):
        rng = random.Random(61)
        repo = random_repository(rng, n_entities=20, n_triples=220)
        index = compute_frequencies(repo)
        for subject in repo.subjects()[:10]:
            entity = repo.get_entity(subject)
            full = ranked_predicates(entity, index)
            for k in range(len(full) + 1):
                pairs = select_context(entity, index, k)
                selected = list(dict.fromkeys(p for p, _ in pairs))
                assert selected == full[:k]

    def test_all_values_of_selected_predicate_included(self):
        repo = self._fixture()
        extra = Triple(IRI("urn:e0"), IRI("urn:label"), Literal("second label"))
        repo.add(extra)
        index = compute_frequencies(repo)
        pairs = select_context(repo.get_entity(IRI("urn:e0")), index, k=2)
        label_values = [v for p, v in pairs if p == IRI("urn:label")]
        assert len(label_values) == 2


class TestSelectTypes:
    def test_types_ranked_by_frequency(self):
        lines = []
        for i in range(6):
            lines.append(f"<urn:e{i}> <{RDF_TYPE}> <urn:Common> .")
        lines.append(f"<urn:e0> <{RDF_TYPE}> <urn:Rare> .")
        repo = parse_ntriples("\n".join(lines))
        index = compute_frequencies(repo)
        entity = repo.get_entity(IRI("urn:e0"))
        assert select_types(entity, index, 1) == [IRI("urn:Common")]
        assert select_types(entity, index, 5) == [IRI("urn:Common"), IRI("urn:Rare")]

import random

import pytest

from lodlink.context import compute_frequencies
from lodlink.enhancer import (
    EnhancementKind,
    EnhancementOp,
    apply_enhancement,
    enhancement_candidates,
    load_provenance,
    save_provenance,
    triple_fingerprint,
)
from lodlink.errors import (
    LodlinkError,
    NoLinkEstablished,
    PropertyAlreadyExists,
    TripleNotFound,
    UnknownSubject,
)
from lodlink.linking import LinkAssertion, load_link_catalog
from lodlink.repository import parse_ntriples
from lodlink.terms import IRI, Literal, Origin, RDF_TYPE, Triple

from oracles import random_repository

RDFS_LABEL = IRI("http://www.w3.org/2000/01/rdf-schema#label")
SOURCE = IRI("http://kb.example.org/resource/Ludwig_Wittgenstein")


def local_repo():
    return parse_ntriples(
        "<urn:t4132> <http://xmlns.com/foaf/0.1/name> \"Ludwig Wittgenstein\" .\n"
        "<urn:t4132> <urn:era> \"20th century\" .\n"
    )


def add_value_op(value=None):
    return EnhancementOp(
        kind=EnhancementKind.ADD_VALUE,
        subject=IRI("urn:t4132"),
        predicate=RDFS_LABEL,
        value=value or Literal("Ludwig Wittgenstein", language="en"),
        source_entity=SOURCE,
    )


class TestApplyEnhancement:
    def test_worked_example_adds_tagged_label(self):
        repo = local_repo()
        updated = apply_enhancement(repo, add_value_op())
        expected = Triple(IRI("urn:t4132"), RDFS_LABEL, Literal("Ludwig Wittgenstein", language="en"))
        assert expected in updated
        assert expected not in repo  # original snapshot untouched
        stored = updated.stored(expected)
        assert stored.origin is Origin.ENHANCED
        assert stored.enhanced_from == SOURCE
        assert len(updated) == len(repo) + 1

    def test_duplicate_add_is_silent_noop(self):
        repo = apply_enhancement(local_repo(), add_value_op())
        again = apply_enhancement(repo, add_value_op())
        assert len(again) == len(repo)
        assert set(again) == set(repo)

    def test_delete_then_readd_restores_up_to_origin(self):
        repo = apply_enhancement(local_repo(), add_value_op())
        triple = Triple(IRI("urn:t4132"), RDFS_LABEL, Literal("Ludwig Wittgenstein", language="en"))
        deleted = apply_enhancement(
            repo,
            EnhancementOp(
                kind=EnhancementKind.DELETE,
                subject=triple.subject,
                predicate=triple.predicate,
                value=triple.object,
            ),
        )
        assert triple not in deleted
        restored = apply_enhancement(deleted, add_value_op())
        assert set(restored) == set(repo)

    def test_add_to_new_property_requires_unused_predicate(self):
        repo = local_repo()
        op = EnhancementOp(
            kind=EnhancementKind.ADD_TO_NEW_PROPERTY,
            subject=IRI("urn:t4132"),
            predicate=IRI("urn:era"),
            value=Literal("Vienna circle era"),
            source_entity=SOURCE,
        )
        with pytest.raises(PropertyAlreadyExists):
            apply_enhancement(repo, op)
        fresh = EnhancementOp(
            kind=EnhancementKind.ADD_TO_NEW_PROPERTY,
            subject=IRI("urn:t4132"),
            predicate=IRI("urn:birthPlace"),
            value=IRI("http://kb.example.org/resource/Vienna"),
            source_entity=SOURCE,
        )
        updated = apply_enhancement(repo, fresh)
        assert Triple(IRI("urn:t4132"), IRI("urn:birthPlace"), IRI("http://kb.example.org/resource/Vienna")) in updated

    def test_add_type(self):
        repo = local_repo()
        op = EnhancementOp(
            kind=EnhancementKind.ADD_TYPE,
            subject=IRI("urn:t4132"),
            predicate=RDF_TYPE,
            value=IRI("http://kb.example.org/ontology/Person"),
            source_entity=SOURCE,
        )
        updated = apply_enhancement(repo, op)
        assert IRI("http://kb.example.org/ontology/Person") in updated.get_entity(IRI("urn:t4132")).types

    def test_add_type_must_use_rdf_type(self):
        with pytest.raises(LodlinkError):
            EnhancementOp(
                kind=EnhancementKind.ADD_TYPE,
                subject=IRI("urn:t4132"),
                predicate=RDFS_LABEL,
                value=IRI("urn:SomeClass"),
                source_entity=SOURCE,
            )

    def test_unknown_subject(self):
        op = EnhancementOp(
            kind=EnhancementKind.ADD_VALUE,
            subject=IRI("urn:ghost"),
            predicate=RDFS_LABEL,
            value=Literal("x"),
            source_entity=SOURCE,
        )
        with pytest.raises(UnknownSubject):
            apply_enhancement(local_repo(), op)

    def test_delete_missing_triple(self):
        op = EnhancementOp(
            kind=EnhancementKind.DELETE,
            subject=IRI("urn:t4132"),
            predicate=RDFS_LABEL,
            value=Literal("never added"),
        )
        with pytest.raises(TripleNotFound):
            apply_enhancement(local_repo(), op)

    def test_add_kinds_require_provenance(self):
        with pytest.raises(LodlinkError):
            EnhancementOp(
                kind=EnhancementKind.ADD_VALUE,
                subject=IRI("urn:t4132"),
                predicate=RDFS_LABEL,
                value=Literal("x"),
            )

    def test_copied_object_iri_is_verbatim(self):
        repo = local_repo()
        value = IRI("http://kb.example.org/resource/Vienna")
        op = EnhancementOp(
            kind=EnhancementKind.ADD_VALUE,
            subject=IRI("urn:t4132"),
            predicate=IRI("urn:birthPlace"),
            value=value,
            source_entity=SOURCE,
        )
        updated = apply_enhancement(repo, op)
        stored = updated.stored(Triple(IRI("urn:t4132"), IRI("urn:birthPlace"), value))
        assert stored.object is value

    def test_random_sequences_change_size_by_one(self):
        rng = random.Random(67)
        repo = random_repository(rng, n_entities=12, n_triples=80)
        predicates = [IRI(f"urn:np{i}") for i in range(30)]
        for step in range(100):
            subjects = repo.subjects()
            size = len(repo)
            if rng.random() < 0.6 or size < 10:
                op = EnhancementOp(
                    kind=EnhancementKind.ADD_VALUE,
                    subject=rng.choice(subjects),
                    predicate=rng.choice(predicates),
                    value=Literal(f"value {rng.randint(0, 40)}"),
                    source_entity=IRI(f"urn:src{step}"),
                )
                updated = apply_enhancement(repo, op)
                probe = Triple(op.subject, op.predicate, op.value)
                assert len(updated) == size + (0 if probe in repo else 1)
            else:
                victim = rng.choice(list(repo))
                op = EnhancementOp(
                    kind=EnhancementKind.DELETE,
                    subject=victim.subject,
                    predicate=victim.predicate,
                    value=victim.object,
                )
                updated = apply_enhancement(repo, op)
                assert len(updated) == size - 1
            repo = updated


class TestEnhancementCandidates:
    def _links(self, engine, local, target):
        return [
            LinkAssertion(
                source=local,
                link_type=engine.catalog.get("owl:sameAs"),
                target=target,
                timestamp=0,
            )
        ]

    def test_groups_are_frequency_ordered(self, session_engine):
        local = IRI("http://philo.example.org/thinker/t4132")
        target = IRI("http://kb.example.org/resource/Ludwig_Wittgenstein")
        groups = enhancement_candidates(
            local,
            session_engine.target,
            self._links(session_engine, local, target),
            session_engine.frequency_index,
            k=5,
        )
        predicates = [p for p, _ in groups]
        freqs = [session_engine.frequency_index.property_frequency(p) for p in predicates]
        assert freqs == sorted(freqs, reverse=True)
        assert all(values for _, values in groups)

    def test_no_link_raises(self, session_engine):
        with pytest.raises(NoLinkEstablished):
            enhancement_candidates(
                IRI("http://philo.example.org/thinker/t4132"),
                session_engine.target,
                [],
                session_engine.frequency_index,
                k=5,
            )

    def test_k_zero_gives_empty(self, session_engine):
        local = IRI("http://philo.example.org/thinker/t4132")
        target = IRI("http://kb.example.org/resource/Ludwig_Wittgenstein")
        assert (
            enhancement_candidates(
                local,
                session_engine.target,
                self._links(session_engine, local, target),
                session_engine.frequency_index,
                k=0,
            )
            == []
        )

    def test_multi_valued_predicates_keep_all_values(self):
        target = parse_ntriples(
            "\n".join(
                [
                    '<urn:tgt> <urn:label> "main" .',
                    '<urn:tgt> <urn:label> "alias" .',
                    "<urn:tgt> <urn:base> <urn:x> .",
                    "<urn:other> <urn:base> <urn:x> .",
                ]
            )
        )
        index = compute_frequencies(target)
        catalog = load_link_catalog()
        links = [
            LinkAssertion(IRI("urn:me"), catalog.get("owl:sameAs"), IRI("urn:tgt"), timestamp=0)
        ]
        groups = enhancement_candidates(IRI("urn:me"), target, links, index, k=5)
        by_pred = dict(groups)
        assert by_pred[IRI("urn:label")] == [Literal("main"), Literal("alias")]


class TestProvenanceSidecar:
    def test_round_trip_preserves_markers(self, tmp_path):
        from lodlink.ntriples import serialize_triples
        from lodlink.repository import parse_ntriples as reparse

        repo = apply_enhancement(local_repo(), add_value_op())
        nt = tmp_path / "local.nt"
        prov = tmp_path / "local.prov"
        nt.write_text(serialize_triples(repo), encoding="utf-8")
        save_provenance(repo, prov)

        loaded = load_provenance(reparse(nt), prov)
        assert set(loaded) == set(repo)
        enhanced = [t for t in loaded if t.origin is Origin.ENHANCED]
        assert len(enhanced) == 1
        assert enhanced[0].enhanced_from == SOURCE

    def test_fingerprint_ignores_origin(self):
        plain = Triple(IRI("urn:s"), IRI("urn:p"), Literal("v"))
        tagged = plain.with_origin(Origin.ENHANCED, SOURCE)
        assert triple_fingerprint(plain) == triple_fingerprint(tagged)

    def test_deleting_enhanced_triple_retracts_provenance(self, tmp_path):
        repo = apply_enhancement(local_repo(), add_value_op())
        triple = Triple(IRI("urn:t4132"), RDFS_LABEL, Literal("Ludwig Wittgenstein", language="en"))
        deleted = apply_enhancement(
            repo,
            EnhancementOp(
                kind=EnhancementKind.DELETE,
                subject=triple.subject,
                predicate=triple.predicate,
                value=triple.object,
            ),
        )
        prov = tmp_path / "x.prov"
        save_provenance(deleted, prov)
        assert prov.read_text(encoding="utf-8") == ""

    def test_provenance_resolves_into_target(self, session_engine):
        # every enhanced triple must point at an entity of the target snapshot
        repo = session_engine.local.clone()
        target_entity = IRI("http://kb.example.org/resource/Ludwig_Wittgenstein")
        op = EnhancementOp(
            kind=EnhancementKind.ADD_VALUE,
            subject=IRI("http://philo.example.org/thinker/t4132"),
            predicate=RDFS_LABEL,
            value=Literal("Ludwig Wittgenstein", language="en"),
            source_entity=target_entity,
        )
        updated = apply_enhancement(repo, op)
        for t in updated:
            if t.origin is Origin.ENHANCED:
                assert session_engine.target.has_subject(t.enhanced_from)

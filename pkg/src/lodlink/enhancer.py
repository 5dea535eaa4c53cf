"""Curator-approved enhancement of the local repository.

Enhancements copy facts from a linked target entity into the local
repository as new triples, each tagged with the target entity it came from.
The object IRI of a copied fact is kept verbatim, never rewritten, so the
provenance of an enhancement stays identifiable. Provenance survives
serialization through a sidecar file mapping a hash of each enhanced
statement to its source entity.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable

from .context import PropertyFrequencyIndex, ranked_predicates
from .errors import (
    LodlinkError,
    NoLinkEstablished,
    PropertyAlreadyExists,
    TripleNotFound,
    UnknownSubject,
)
from .linking import LinkAssertion
from .ntriples import render_triple
from .repository import Repository
from .terms import IRI, Origin, RDF_TYPE, Term, Triple

EQUIVALENCE_RELATIONS = frozenset({"sameAs", "equivalentClass", "equivalentProperty"})


class EnhancementKind(Enum):
    ADD_VALUE = "add_value"
    ADD_TO_NEW_PROPERTY = "add_to_new_property"
    ADD_TYPE = "add_type"
    DELETE = "delete"


_ADD_KINDS = frozenset(
    {EnhancementKind.ADD_VALUE, EnhancementKind.ADD_TO_NEW_PROPERTY, EnhancementKind.ADD_TYPE}
)


@dataclass(frozen=True)
class EnhancementOp:
    kind: EnhancementKind
    subject: IRI
    predicate: IRI
    value: Term
    source_entity: IRI | None = None

    def __post_init__(self):
        if self.kind in _ADD_KINDS and self.source_entity is None:
            raise LodlinkError(f"{self.kind.value} requires a source entity for provenance")
        if self.kind is EnhancementKind.ADD_TYPE and self.predicate != RDF_TYPE:
            raise LodlinkError("add_type must use the rdf:type predicate")


def apply_enhancement(repo: Repository, op: EnhancementOp) -> Repository:
    """Apply one operation and return the new snapshot.

    Exactly one triple is added or removed; adding an already present triple
    is a silent no-op that returns the repository unchanged.
    """
    if not repo.has_subject(op.subject):
        raise UnknownSubject(f"{op.subject.value} is not in the local repository")

    if op.kind is EnhancementKind.DELETE:
        probe = Triple(op.subject, op.predicate, op.value)
        if probe not in repo:
            raise TripleNotFound(render_triple(probe))
        updated = repo.clone()
        updated.remove(probe)
        return updated

    if op.kind is EnhancementKind.ADD_TO_NEW_PROPERTY:
        already = any(
            t.predicate == op.predicate for t in repo.triples_for_subject(op.subject)
        )
        if already:
            raise PropertyAlreadyExists(
                f"{op.subject.value} already has assertions on {op.predicate.value}"
            )

    triple = Triple(
        op.subject,
        op.predicate,
        op.value,
        origin=Origin.ENHANCED,
        enhanced_from=op.source_entity,
    )
    if triple in repo:
        return repo
    updated = repo.clone()
    updated.add(triple)
    return updated


def enhancement_candidates(
    local_iri: IRI,
    target: Repository,
    links: Iterable[LinkAssertion],
    index: PropertyFrequencyIndex,
    k: int,
) -> list[tuple[IRI, list[Term]]]:
    """Frequency-ordered predicate groups from the linked target entity.

    Requires an established equivalence link from ``local_iri``; assertions
    of all linked target entities are merged, and every value of a selected
    predicate is kept so the curator can pick among them.
    """
    linked_targets = [
        a.target
        for a in links
        if a.source == local_iri and a.link_type.relation_name in EQUIVALENCE_RELATIONS
    ]
    if not linked_targets:
        raise NoLinkEstablished(f"{local_iri.value} has no equivalence link")

    assertions: list[Triple] = []
    for target_iri in dict.fromkeys(linked_targets):
        assertions.extend(target.get_entity(target_iri).assertions)
    merged = _MergedEntity(assertions)

    groups: list[tuple[IRI, list[Term]]] = []
    for predicate in ranked_predicates(merged, index)[: max(k, 0)]:
        values = list(
            dict.fromkeys(t.object for t in assertions if t.predicate == predicate)
        )
        groups.append((predicate, values))
    return groups


class _MergedEntity:
    """Just enough of the Entity surface for ranked_predicates."""

    def __init__(self, assertions: list[Triple]):
        self.assertions = tuple(assertions)


def triple_fingerprint(triple: Triple) -> str:
    """Stable hash of the canonical statement line, origin excluded."""
    return hashlib.sha256(render_triple(triple).encode("utf-8")).hexdigest()


def save_provenance(repo: Repository, path: str | Path) -> None:
    """Write the ``triple-hash<TAB>sourceIRI`` sidecar for enhanced triples."""
    rows = sorted(
        f"{triple_fingerprint(t)}\t{t.enhanced_from.value}"
        for t in repo
        if t.origin is Origin.ENHANCED and t.enhanced_from is not None
    )
    Path(path).write_text("".join(line + "\n" for line in rows), encoding="utf-8")


def load_provenance(repo: Repository, path: str | Path) -> Repository:
    """Re-tag parsed triples as enhanced per the sidecar; returns new snapshot."""
    mapping: dict[str, IRI] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fingerprint, source = line.split("\t")
        mapping[fingerprint] = IRI(source)
    if not mapping:
        return repo
    updated = repo.clone()
    for triple in list(updated):
        source = mapping.get(triple_fingerprint(triple))
        if source is not None:
            updated.remove(triple)
            updated.add(triple.with_origin(Origin.ENHANCED, source))
    return updated

"""Containment-search linking with Levenshtein ranking.

Pipeline: extract search terms from the local entity, run token-containment
searches over the target's labels and/or abstracts, resolve redirect and
disambiguation pages, drop candidates whose types are declared disjoint with
the local entity's types, then rank by the maximum Levenshtein similarity
between any search term and any candidate label.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Iterable, Protocol

from .errors import ConfigError, NoSearchTerms
from .repository import (
    DEFAULT_ABSTRACT_PROPERTY,
    DEFAULT_LABEL_PROPERTIES,
    Entity,
    Repository,
    TextField,
)
from .terms import IRI, Literal

if TYPE_CHECKING:  # pragma: no cover
    from .linking import Algorithm, DisjointnessSet, LinkCandidate

DEFAULT_REDIRECT_PROPERTY = IRI("http://dbpedia.org/ontology/wikiPageRedirects")
DEFAULT_DISAMBIGUATES_PROPERTY = IRI("http://dbpedia.org/ontology/wikiPageDisambiguates")


@dataclass(frozen=True)
class EndpointConfig:
    """Which fields the containment search covers and how pages resolve."""

    use_label: bool = True
    use_abstract: bool = False
    abstract_property: IRI = DEFAULT_ABSTRACT_PROPERTY
    redirect_property: IRI = DEFAULT_REDIRECT_PROPERTY
    disambiguates_property: IRI = DEFAULT_DISAMBIGUATES_PROPERTY
    max_redirect_depth: int = 5

    def __post_init__(self):
        if not (self.use_label or self.use_abstract):
            raise ConfigError("endpoint config must search at least one of label/abstract")
        if self.max_redirect_depth < 1:
            raise ConfigError("max_redirect_depth must be >= 1")

    def for_algorithm(self, algorithm: "Algorithm") -> "EndpointConfig":
        from .linking import Algorithm

        flags = {
            Algorithm.ENDPOINT_A: (False, True),
            Algorithm.ENDPOINT_L: (True, False),
            Algorithm.ENDPOINT_AL: (True, True),
        }
        use_label, use_abstract = flags[algorithm]
        return replace(self, use_label=use_label, use_abstract=use_abstract)


def levenshtein_distance(a: str, b: str) -> int:
    """Minimum number of single-character edits turning ``a`` into ``b``."""
    if a == b:
        return 0
    if len(a) > len(b):
        a, b = b, a
    if not a:
        return len(b)
    previous = list(range(len(a) + 1))
    for i, cb in enumerate(b, start=1):
        current = [i]
        for j, ca in enumerate(a, start=1):
            cost = 0 if ca == cb else 1
            current.append(min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost))
        previous = current
    return previous[-1]


def levenshtein_similarity(a: str, b: str) -> float:
    """1 - d/max(|a|,|b|) over case-folded strings; 1.0 when both are empty."""
    a = a.casefold()
    b = b.casefold()
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein_distance(a, b) / longest


class TargetSource(Protocol):
    """The containment-search contract every candidate source exposes.

    A local target repository and the optional remote endpoint client both
    implement this, so the ranking pipeline never cares which one it talks to.
    """

    def search_text(self, term: str, field: TextField) -> set[IRI]: ...

    def label_values(self, iri: IRI) -> list[str]: ...

    def types_of(self, iri: IRI) -> list[IRI]: ...

    def redirect_target(self, iri: IRI) -> IRI | None: ...

    def disambiguation_targets(self, iri: IRI) -> list[IRI]: ...


class RepositoryTarget:
    """Adapts an in-memory target repository to the TargetSource contract."""

    def __init__(self, repo: Repository, cfg: EndpointConfig | None = None):
        self.repo = repo
        self.cfg = cfg or EndpointConfig()

    def search_text(self, term: str, field: TextField) -> set[IRI]:
        return self.repo.text_search(term, field)

    def label_values(self, iri: IRI) -> list[str]:
        return self.repo.label_values(iri)

    def types_of(self, iri: IRI) -> list[IRI]:
        return self.repo.types_of(iri)

    def redirect_target(self, iri: IRI) -> IRI | None:
        targets = [
            t.object
            for t in self.repo.triples_for_subject(iri)
            if t.predicate == self.cfg.redirect_property and isinstance(t.object, IRI)
        ]
        return min(targets, key=lambda i: i.value) if targets else None

    def disambiguation_targets(self, iri: IRI) -> list[IRI]:
        return sorted(
            (
                t.object
                for t in self.repo.triples_for_subject(iri)
                if t.predicate == self.cfg.disambiguates_property and isinstance(t.object, IRI)
            ),
            key=lambda i: i.value,
        )


def search_candidates(terms: Iterable[str], source: TargetSource, cfg: EndpointConfig) -> set[IRI]:
    """Union of containment matches over every term and enabled field."""
    found: set[IRI] = set()
    for term in terms:
        if cfg.use_label:
            found |= source.search_text(term, TextField.LABEL)
        if cfg.use_abstract:
            found |= source.search_text(term, TextField.ABSTRACT)
    return found


def filter_disjoint(
    candidates: set[IRI],
    local_entity: Entity,
    declarations: "DisjointnessSet",
    source: TargetSource,
) -> set[IRI]:
    """Drop candidates with a type declared disjoint with a local type."""
    if not len(declarations):
        return set(candidates)
    local_types = local_entity.types
    kept = set()
    for candidate in candidates:
        candidate_types = source.types_of(candidate)
        if any(declarations.disjoint(lt, ct) for lt in local_types for ct in candidate_types):
            continue
        kept.add(candidate)
    return kept


def resolve_redirects(iri: IRI, source: TargetSource, cfg: EndpointConfig) -> set[IRI]:
    """Follow redirects to the terminal page; expand disambiguation pages.

    Redirect chains are followed up to ``max_redirect_depth`` hops; cycles
    stop at the last IRI seen before repetition. A terminal page that lists
    disambiguation targets is replaced by that target set.
    """
    current = iri
    visited = {iri}
    for _ in range(cfg.max_redirect_depth):
        nxt = source.redirect_target(current)
        if nxt is None or nxt in visited:
            break
        visited.add(nxt)
        current = nxt
    targets = source.disambiguation_targets(current)
    return set(targets) if targets else {current}


def score_candidate(terms: Iterable[str], labels: Iterable[str]) -> float:
    """Maximum Levenshtein similarity over all (term, label) pairs."""
    return max(
        (levenshtein_similarity(t, lab) for t in terms for lab in labels),
        default=0.0,
    )


def rank_endpoint(
    local_entity: Entity,
    source: TargetSource,
    cfg: EndpointConfig,
    declarations: "DisjointnessSet",
    k: int,
    *,
    label_properties: Iterable[IRI] | None = None,
) -> "list[LinkCandidate]":
    """Full containment-search ranking for one local entity."""
    from .linking import LinkCandidate

    terms = _entity_search_terms(local_entity, label_properties)
    found = search_candidates(terms, source, cfg)
    resolved: set[IRI] = set()
    for candidate in found:
        resolved |= resolve_redirects(candidate, source, cfg)
    kept = filter_disjoint(resolved, local_entity, declarations, source)

    scored = []
    for candidate in kept:
        labels = source.label_values(candidate)
        scored.append(
            (
                score_candidate(terms, labels),
                candidate,
                labels[0] if labels else candidate.local_name(),
            )
        )
    scored.sort(key=lambda row: (-row[0], row[1].value))
    return [
        LinkCandidate(target=candidate, score=score, rank=rank, display_label=label)
        for rank, (score, candidate, label) in enumerate(scored[:k], start=1)
    ]


def _entity_search_terms(entity: Entity, label_properties: Iterable[IRI] | None) -> list[str]:
    """Label literals of the entity ordered by property priority."""
    props = tuple(label_properties) if label_properties is not None else DEFAULT_LABEL_PROPERTIES
    terms: list[str] = []
    seen: set[str] = set()
    for prop in props:
        for t in entity.assertions:
            if t.predicate == prop and isinstance(t.object, Literal):
                v = t.object.lexical.strip()
                if v and v not in seen:
                    seen.add(v)
                    terms.append(v)
    if not terms:
        raise NoSearchTerms(f"no label-property assertion on {entity.iri.value}")
    return terms

"""Keyword search over the local repository.

Queries support a type-filter syntax borrowed from search engines
(``concept:human Wittgens``), match labels with search-as-you-type semantics
(each query token must be a prefix of the corresponding label token), and
cluster results by the symmetric-transitive closure of sameAs links so each
real-world entity shows up once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import EmptyQuery
from .repository import Repository, tokenize
from .terms import IRI, OWL_SAMEAS

DEFAULT_FILTER_KINDS: tuple[str, ...] = ("concept",)

_FILTER_RE = re.compile(r"^(\S+?):(\S+)(?:\s+(.*))?$", re.DOTALL)

# match quality tiers, best first
_EXACT = 3
_PREFIX = 2
_CONTAINS = 1


@dataclass(frozen=True)
class SearchQuery:
    raw_text: str
    keyword: str
    type_filter: tuple[str, str] | None = None


@dataclass(frozen=True)
class ResultCluster:
    """One sameAs-connected component of matching entities."""

    representative: IRI
    members: frozenset[IRI]
    display_label: str
    types: frozenset[IRI]
    quality: int = 0


def parse_query(raw_text: str, kinds: tuple[str, ...] = DEFAULT_FILTER_KINDS) -> SearchQuery:
    """Split ``kind:token keyword`` syntax; unknown kinds stay plain keywords."""
    text = raw_text.strip()
    if not text:
        raise EmptyQuery("query is blank")
    m = _FILTER_RE.match(text)
    if m and m.group(1).lower() in {k.lower() for k in kinds}:
        keyword = (m.group(3) or "").strip()
        return SearchQuery(raw_text=raw_text, keyword=keyword, type_filter=(m.group(1), m.group(2)))
    return SearchQuery(raw_text=raw_text, keyword=text)


def match_quality(label: str, keyword: str) -> int | None:
    """Exact > prefix > token containment; None when the label does not match.

    Token containment lets every query token match as a prefix of the
    corresponding label token, so partial words ("Wittgens") hit.
    An empty keyword matches every label at prefix level.
    """
    lab = label.lower()
    key = keyword.lower().strip()
    if not key:
        return _PREFIX
    if lab == key:
        return _EXACT
    if lab.startswith(key):
        return _PREFIX
    needle = tokenize(key)
    if not needle:
        return None
    hay = tokenize(lab)
    n = len(needle)
    for i in range(len(hay) - n + 1):
        if all(hay[i + j].startswith(needle[j]) for j in range(n)):
            return _CONTAINS
    return None


def _type_matches(repo: Repository, type_iri: IRI, token: str) -> bool:
    labels = repo.label_values(type_iri)
    if labels:
        return any(match_quality(lab, token) is not None for lab in labels)
    return match_quality(type_iri.local_name(), token) is not None


def _sameas_components(repo: Repository, matched: set[IRI]) -> list[set[IRI]]:
    """Connected components of the sameAs graph restricted to matched IRIs."""
    parent: dict[IRI, IRI] = {iri: iri for iri in matched}

    def find(x: IRI) -> IRI:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: IRI, b: IRI) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for triple in repo.triples_for_predicate(OWL_SAMEAS):
        if isinstance(triple.object, IRI) and triple.subject in parent and triple.object in parent:
            union(triple.subject, triple.object)

    groups: dict[IRI, set[IRI]] = {}
    for iri in matched:
        groups.setdefault(find(iri), set()).add(iri)
    return list(groups.values())


def search(repo: Repository, query: SearchQuery, limit: int) -> list[ResultCluster]:
    """Ranked result clusters for a parsed query.

    Ordering: descending match quality, ties broken lexicographically by
    representative IRI; truncated to ``limit`` clusters.
    """
    qualities: dict[IRI, int] = {}
    for subject, label in repo.all_label_literals():
        q = match_quality(label, query.keyword)
        if q is not None and q > qualities.get(subject, 0):
            qualities[subject] = q

    if query.type_filter is not None:
        _, token = query.type_filter
        qualities = {
            iri: q
            for iri, q in qualities.items()
            if any(_type_matches(repo, t, token) for t in repo.types_of(iri))
        }

    clusters = []
    for members in _sameas_components(repo, set(qualities)):
        representative = min(members, key=lambda i: i.value)
        labels = repo.label_values(representative)
        types: set[IRI] = set()
        for m in members:
            types.update(repo.types_of(m))
        clusters.append(
            ResultCluster(
                representative=representative,
                members=frozenset(members),
                display_label=labels[0] if labels else representative.local_name(),
                types=frozenset(types),
                quality=max(qualities[m] for m in members),
            )
        )
    clusters.sort(key=lambda c: (-c.quality, c.representative.value))
    return clusters[:limit]


def autocomplete(repo: Repository, prefix: str, limit: int) -> list[str]:
    """Distinct label values with the given case-insensitive prefix, sorted."""
    if not prefix:
        return []
    low = prefix.lower()
    values = {label for _, label in repo.all_label_literals() if label.lower().startswith(low)}
    return sorted(values)[:limit]


def facet_counts(clusters: list[ResultCluster]) -> dict[IRI, int]:
    """How many result clusters carry each type; powers the type facets."""
    counts: dict[IRI, int] = {}
    for cluster in clusters:
        for t in cluster.types:
            counts[t] = counts.get(t, 0) + 1
    return counts

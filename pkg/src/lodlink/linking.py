"""Shared linking vocabulary and the candidate-ranking entry point.

The shipped link-type catalog covers the ten most frequent cross-repository
relation properties; users append their own rows but can never overwrite the
shipped ones. Candidate rankings are produced by one of two algorithms
(endpoint containment search with Levenshtein ranking, or anchor-statistics
ranking) behind a single dispatch function.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import TYPE_CHECKING, Iterable

from .errors import (
    DuplicateLinkType,
    UnknownAlgorithm,
    UnknownLinkType,
    UnknownLocalEntity,
)
from .repository import Entity, Repository
from .terms import IRI, PrefixTable, Term, Triple

if TYPE_CHECKING:  # pragma: no cover
    from .endpoint import EndpointConfig, TargetSource
    from .wikistat import AnchorTable


class Applicability(Enum):
    INDIVIDUAL = "I"
    CONCEPT = "C"
    PROPERTY = "P"


@dataclass(frozen=True)
class LinkType:
    vocabulary: str
    relation_name: str
    applies_to: frozenset[Applicability]

    @property
    def curie(self) -> str:
        return f"{self.vocabulary}:{self.relation_name}"

    def iri(self, prefixes: PrefixTable) -> IRI:
        return prefixes.expand(self.curie)


@dataclass
class LinkCandidate:
    """One ranked suggestion for linking a local entity to the target KB."""

    target: IRI
    score: float
    rank: int
    display_label: str
    context: list[tuple[IRI, Term]] = field(default_factory=list)


@dataclass(frozen=True)
class LinkAssertion:
    """A curator-approved link; the engine never asserts links on its own."""

    source: IRI
    link_type: LinkType
    target: IRI
    timestamp: int
    created_by: str = "curator"


@dataclass(frozen=True)
class DisjointnessDeclaration:
    local_type: IRI
    target_type: IRI


class DisjointnessSet:
    """Symmetric set of user-declared type incompatibilities."""

    def __init__(self, declarations: Iterable[DisjointnessDeclaration] = ()):
        self._pairs: set[frozenset[IRI]] = set()
        for d in declarations:
            self.declare(d.local_type, d.target_type)

    def declare(self, a: IRI, b: IRI) -> None:
        self._pairs.add(frozenset((a, b)))

    def disjoint(self, a: IRI, b: IRI) -> bool:
        return frozenset((a, b)) in self._pairs

    def __len__(self) -> int:
        return len(self._pairs)

    @classmethod
    def from_file(cls, path: str | Path) -> "DisjointnessSet":
        """Read ``localTypeIRI<TAB>targetTypeIRI`` rows; ``#`` comments."""
        out = cls()
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"expected two tab-separated IRIs, got {raw!r}")
            out.declare(IRI(parts[0].strip()), IRI(parts[1].strip()))
        return out


def _parse_applicability(text: str) -> frozenset[Applicability]:
    parts = [p.strip() for p in text.replace("\\", "/").split("/") if p.strip()]
    return frozenset(Applicability(p) for p in parts)


class LinkCatalog:
    """Ordered link-type registry addressed by curie (``owl:sameAs``)."""

    def __init__(self, rows: Iterable[LinkType] = ()):
        self._rows: list[LinkType] = []
        self._by_curie: dict[str, LinkType] = {}
        for row in rows:
            self.append(row)

    def append(self, row: LinkType) -> None:
        if row.curie in self._by_curie:
            raise DuplicateLinkType(f"link type {row.curie} already in catalog")
        self._rows.append(row)
        self._by_curie[row.curie] = row

    def get(self, name: str) -> LinkType:
        """Look up by curie, or by bare relation name when unambiguous."""
        if name in self._by_curie:
            return self._by_curie[name]
        bare = [r for r in self._rows if r.relation_name == name]
        if len(bare) == 1:
            return bare[0]
        raise UnknownLinkType(f"unknown link type {name!r}")

    def rows(self) -> list[LinkType]:
        return list(self._rows)

    def __len__(self) -> int:
        return len(self._rows)


def load_link_catalog(path: str | Path | None = None) -> LinkCatalog:
    """Load the shipped catalog, or a user file in the same format."""
    if path is None:
        text = resources.files("lodlink").joinpath("data/link_types.tsv").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    catalog = LinkCatalog()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"expected vocabulary<TAB>relation<TAB>applicability, got {raw!r}")
        catalog.append(
            LinkType(
                vocabulary=parts[0].strip(),
                relation_name=parts[1].strip(),
                applies_to=_parse_applicability(parts[2]),
            )
        )
    return catalog


class Algorithm(Enum):
    """The four shipped ranking configurations."""

    ENDPOINT_A = "endpoint-a"
    ENDPOINT_L = "endpoint-l"
    ENDPOINT_AL = "endpoint-al"
    WIKISTAT = "wikistat"

    @classmethod
    def parse(cls, name: str) -> "Algorithm":
        normalized = name.strip().lower().replace("_", "-")
        for alg in cls:
            if alg.value == normalized:
                return alg
        raise UnknownAlgorithm(f"unknown algorithm {name!r}")


def rank_candidates(
    entity: Entity,
    algorithm: Algorithm | str,
    k: int,
    *,
    target_source: "TargetSource | None" = None,
    endpoint_config: "EndpointConfig | None" = None,
    declarations: DisjointnessSet | None = None,
    anchor_table: "AnchorTable | None" = None,
    label_properties: Iterable[IRI] | None = None,
) -> list[LinkCandidate]:
    """Dispatch to the selected ranking algorithm; at most ``k`` candidates."""
    from .endpoint import EndpointConfig, rank_endpoint
    from .wikistat import rank_wikistat

    if isinstance(algorithm, str):
        algorithm = Algorithm.parse(algorithm)

    if algorithm is Algorithm.WIKISTAT:
        if anchor_table is None:
            raise UnknownAlgorithm("wikistat ranking requires an anchor table")
        return rank_wikistat(entity, anchor_table, k, label_properties=label_properties)

    if target_source is None:
        raise UnknownAlgorithm("endpoint ranking requires a target source")
    cfg = endpoint_config or EndpointConfig()
    cfg = cfg.for_algorithm(algorithm)
    return rank_endpoint(
        entity,
        target_source,
        cfg,
        declarations or DisjointnessSet(),
        k,
        label_properties=label_properties,
    )


def assert_link(
    repo: Repository,
    registry: "LinkRegistry",
    catalog: LinkCatalog,
    local: IRI,
    target: IRI,
    link_type_name: str,
    *,
    clock=time.time,
) -> tuple[Repository, LinkAssertion]:
    """Record a curator link: add the triple and return the assertion.

    Idempotent: re-asserting an existing link returns the original assertion
    and the repository unchanged.
    """
    link_type = catalog.get(link_type_name)
    if not repo.has_subject(local):
        raise UnknownLocalEntity(f"{local.value} is not in the local repository")
    existing = registry.get(local, link_type, target)
    if existing is not None:
        return repo, existing
    assertion = LinkAssertion(
        source=local, link_type=link_type, target=target, timestamp=int(clock())
    )
    triple = Triple(local, link_type.iri(repo.prefixes), target)
    if triple in repo:
        registry.put(assertion)
        return repo, assertion
    updated = repo.clone()
    updated.add(triple)
    registry.put(assertion)
    return updated, assertion


class LinkRegistry:
    """Curator link assertions keyed by (source, link type, target)."""

    def __init__(self):
        self._assertions: dict[tuple[IRI, str, IRI], LinkAssertion] = {}

    def put(self, assertion: LinkAssertion) -> None:
        key = (assertion.source, assertion.link_type.curie, assertion.target)
        self._assertions[key] = assertion

    def get(self, source: IRI, link_type: LinkType, target: IRI) -> LinkAssertion | None:
        return self._assertions.get((source, link_type.curie, target))

    def links_from(self, source: IRI) -> list[LinkAssertion]:
        return [a for a in self._assertions.values() if a.source == source]

    def all(self) -> list[LinkAssertion]:
        return list(self._assertions.values())

    def __len__(self) -> int:
        return len(self._assertions)

    def save(self, path: str | Path) -> None:
        lines = [
            f"{a.source.value}\t{a.link_type.curie}\t{a.target.value}\t{a.timestamp}"
            for a in sorted(
                self._assertions.values(),
                key=lambda a: (a.source.value, a.link_type.curie, a.target.value),
            )
        ]
        Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path, catalog: LinkCatalog) -> "LinkRegistry":
        registry = cls()
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            source, curie, target, timestamp = line.split("\t")
            registry.put(
                LinkAssertion(
                    source=IRI(source),
                    link_type=catalog.get(curie),
                    target=IRI(target),
                    timestamp=int(timestamp),
                )
            )
        return registry

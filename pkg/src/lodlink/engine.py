"""The stateful core behind the CLI and the HTTP API.

Holds the loaded local repository, target repository, anchor table, property
frequencies, link registry, and configuration. Reads operate on the current
immutable snapshot; every mutation runs under a single writer lock, builds a
new snapshot, persists the flat files, and publishes the snapshot atomically,
so no reader ever observes a partially applied change.
"""

from __future__ import annotations

import hashlib
import threading
import time
from pathlib import Path
from typing import Callable

from .config import ServiceConfig
from .context import PropertyFrequencyIndex, compute_frequencies, select_context, select_types
from .endpoint import EndpointConfig, RepositoryTarget
from .enhancer import (
    EnhancementKind,
    EnhancementOp,
    apply_enhancement,
    enhancement_candidates,
    load_provenance,
    save_provenance,
)
from .errors import ConfigError
from .linking import (
    Algorithm,
    DisjointnessSet,
    LinkAssertion,
    LinkCandidate,
    LinkCatalog,
    LinkRegistry,
    assert_link,
    load_link_catalog,
    rank_candidates,
)
from .ntriples import serialize_triples
from .repository import Entity, Repository, parse_ntriples
from .search import ResultCluster, SearchQuery, autocomplete, facet_counts, parse_query, search
from .terms import IRI, Origin, PrefixTable, Triple, load_prefix_table
from .wikistat import AnchorTable, load_anchor_table

LOCAL_FILE = "local.nt"
LOCAL_PROVENANCE_FILE = "local.prov"
TARGET_FILE = "target.nt"
ANCHORS_FILE = "anchors.tsv"
PREFIXES_FILE = "prefixes.tsv"
LINKS_FILE = "links.tsv"
DECLARATIONS_FILE = "declarations.tsv"


class Engine:
    """One loaded workspace: repositories, indexes, links, configuration."""

    def __init__(
        self,
        config: ServiceConfig,
        *,
        local: Repository,
        target: Repository | None = None,
        anchor_table: AnchorTable | None = None,
        prefixes: PrefixTable | None = None,
        catalog: LinkCatalog | None = None,
        declarations: DisjointnessSet | None = None,
        registry: LinkRegistry | None = None,
        clock: Callable[[], float] = time.time,
        persist_dir: Path | None = None,
    ):
        self.config = config
        self.prefixes = prefixes or PrefixTable()
        self.catalog = catalog or load_link_catalog(config.link_types_path)
        self.declarations = declarations or DisjointnessSet()
        self.registry = registry or LinkRegistry()
        self.clock = clock
        self.persist_dir = persist_dir

        self._local = local
        self.target = target
        self.anchor_table = anchor_table
        self.frequency_index: PropertyFrequencyIndex | None = (
            compute_frequencies(target) if target is not None and len(target) else None
        )
        self.target_source = (
            RepositoryTarget(target, self._endpoint_config()) if target is not None else None
        )
        self._write_lock = threading.Lock()

    # -- loading -------------------------------------------------------------

    @classmethod
    def from_config(cls, config: ServiceConfig, *, clock: Callable[[], float] = time.time) -> "Engine":
        """Load a workspace from the data directory populated by ``import``."""
        data_dir = Path(config.data_dir)
        paths = {
            "local": Path(config.local_repo_path) if config.local_repo_path else data_dir / LOCAL_FILE,
            "target": Path(config.target_repo_path) if config.target_repo_path else data_dir / TARGET_FILE,
            "anchors": Path(config.anchor_table_path) if config.anchor_table_path else data_dir / ANCHORS_FILE,
            "prefixes": Path(config.prefix_table_path) if config.prefix_table_path else data_dir / PREFIXES_FILE,
            "declarations": (
                Path(config.disjointness_declarations_path)
                if config.disjointness_declarations_path
                else data_dir / DECLARATIONS_FILE
            ),
        }
        if not paths["local"].is_file():
            raise ConfigError(f"no local repository at {paths['local']}; run import first")

        prefixes = load_prefix_table(paths["prefixes"]) if paths["prefixes"].is_file() else PrefixTable()
        label_props = (
            tuple(prefixes.expand(p) for p in config.label_properties)
            if config.label_properties
            else None
        )
        abstract = prefixes.expand(config.abstract_property)

        local = parse_ntriples(
            paths["local"],
            origin=Origin.LOCAL,
            label_properties=label_props,
            abstract_property=abstract,
            prefixes=prefixes,
        )
        prov_path = paths["local"].with_suffix(".prov")
        if prov_path.is_file():
            local = load_provenance(local, prov_path)

        target = None
        if paths["target"].is_file():
            target = parse_ntriples(
                paths["target"],
                origin=Origin.TARGET,
                label_properties=label_props,
                abstract_property=abstract,
                prefixes=prefixes,
            )
        anchor_table = load_anchor_table(paths["anchors"]) if paths["anchors"].is_file() else None
        declarations = (
            DisjointnessSet.from_file(paths["declarations"])
            if paths["declarations"].is_file()
            else DisjointnessSet()
        )
        catalog = load_link_catalog(config.link_types_path)
        links_path = data_dir / LINKS_FILE
        registry = LinkRegistry.load(links_path, catalog) if links_path.is_file() else LinkRegistry()

        return cls(
            config,
            local=local,
            target=target,
            anchor_table=anchor_table,
            prefixes=prefixes,
            catalog=catalog,
            declarations=declarations,
            registry=registry,
            clock=clock,
            persist_dir=data_dir,
        )

    def _endpoint_config(self) -> EndpointConfig:
        return EndpointConfig(
            abstract_property=self.prefixes.expand(self.config.abstract_property),
            redirect_property=self.prefixes.expand(self.config.redirect_property),
            disambiguates_property=self.prefixes.expand(self.config.disambiguates_property),
            max_redirect_depth=self.config.max_redirect_depth,
        )

    # -- snapshot access -------------------------------------------------------

    @property
    def local(self) -> Repository:
        return self._local

    def fingerprint(self) -> str:
        """Content hash of the mutable state; GETs must never change it."""
        digest = hashlib.sha256()
        digest.update(serialize_triples(self._local).encode("utf-8"))
        for a in sorted(
            self.registry.all(),
            key=lambda a: (a.source.value, a.link_type.curie, a.target.value),
        ):
            digest.update(f"{a.source.value}|{a.link_type.curie}|{a.target.value}\n".encode())
        return digest.hexdigest()

    # -- read operations --------------------------------------------------------

    def parse_query(self, raw: str) -> SearchQuery:
        return parse_query(raw, tuple(self.config.filter_kinds))

    def search(self, raw_query: str, limit: int) -> tuple[list[ResultCluster], dict[IRI, int]]:
        clusters = search(self._local, self.parse_query(raw_query), limit)
        return clusters, facet_counts(clusters)

    def autocomplete(self, prefix: str, limit: int) -> list[str]:
        return autocomplete(self._local, prefix, limit)

    def entity(self, iri: IRI) -> Entity:
        return self._local.get_entity(iri)

    def entity_links(self, iri: IRI) -> list[LinkAssertion]:
        return sorted(
            self.registry.links_from(iri),
            key=lambda a: (a.link_type.curie, a.target.value),
        )

    def candidates(
        self, iri: IRI, algorithm: str | Algorithm | None = None, k: int | None = None
    ) -> list[LinkCandidate]:
        """Ranked link candidates with review context attached."""
        algorithm = algorithm or self.config.default_algorithm
        k = k or self.config.k
        entity = self._local.get_entity(iri)
        ranked = rank_candidates(
            entity,
            algorithm,
            k,
            target_source=self.target_source,
            endpoint_config=self.target_source.cfg if self.target_source else None,
            declarations=self.declarations,
            anchor_table=self.anchor_table,
            label_properties=self._local.label_properties,
        )
        if self.target is not None and self.frequency_index is not None:
            for candidate in ranked:
                target_entity = self.target.get_entity(candidate.target)
                candidate.context = select_context(
                    target_entity, self.frequency_index, self.config.context_k
                )
                if not candidate.display_label or candidate.display_label == candidate.target.local_name():
                    labels = self.target.label_values(candidate.target)
                    if labels:
                        candidate.display_label = labels[0]
        return ranked

    def candidate_types(self, candidate: LinkCandidate) -> list[IRI]:
        if self.target is None or self.frequency_index is None:
            return []
        entity = self.target.get_entity(candidate.target)
        return select_types(entity, self.frequency_index, self.config.context_types_k)

    def enhancement_candidates(self, iri: IRI, k: int | None = None):
        if self.target is None or self.frequency_index is None:
            raise ConfigError("no target repository loaded")
        return enhancement_candidates(
            iri,
            self.target,
            self.registry.all(),
            self.frequency_index,
            self.config.context_k if k is None else k,
        )

    # -- write operations (single writer) ------------------------------------------

    def assert_link(self, local: IRI, target: IRI, link_type_name: str) -> LinkAssertion:
        with self._write_lock:
            updated, assertion = assert_link(
                self._local,
                self.registry,
                self.catalog,
                local,
                target,
                link_type_name,
                clock=self.clock,
            )
            self._publish(updated)
            return assertion

    def enhance(self, op: EnhancementOp) -> Triple | None:
        """Apply one enhancement; returns the stored triple (None for DELETE)."""
        with self._write_lock:
            updated = apply_enhancement(self._local, op)
            self._publish(updated)
            if op.kind is EnhancementKind.DELETE:
                return None
            return updated.stored(Triple(op.subject, op.predicate, op.value))

    def _publish(self, updated: Repository) -> None:
        self._local = updated
        if self.persist_dir is not None:
            self.persist_dir.mkdir(parents=True, exist_ok=True)
            (self.persist_dir / LOCAL_FILE).write_text(
                serialize_triples(updated), encoding="utf-8"
            )
            save_provenance(updated, self.persist_dir / LOCAL_PROVENANCE_FILE)
            self.registry.save(self.persist_dir / LINKS_FILE)

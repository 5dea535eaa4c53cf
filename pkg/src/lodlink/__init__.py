"""lodlink: interactive linking and enhancement for local RDF repositories.

The library loads a local repository and a target knowledge base, recommends
ranked link candidates (containment search with Levenshtein ranking, or
anchor-statistics ranking), selects discriminating context for human review,
applies curator-approved enhancements as new triples, and evaluates ranking
quality with mean reciprocal rank.
"""

from .terms import IRI, Literal, Origin, PrefixTable, Triple
from .repository import Entity, Repository, TextField, parse_ntriples
from .linking import (
    Algorithm,
    DisjointnessSet,
    LinkAssertion,
    LinkCandidate,
    LinkCatalog,
    LinkType,
    load_link_catalog,
    rank_candidates,
)
from .endpoint import (
    EndpointConfig,
    RepositoryTarget,
    levenshtein_distance,
    levenshtein_similarity,
)
from .wikistat import (
    AnchorCount,
    AnchorTable,
    build_anchor_table,
    load_anchor_table,
    save_anchor_table,
    wikistat_probability,
    wikistat_score,
)
from .context import PropertyFrequencyIndex, compute_frequencies, select_context, select_types
from .enhancer import EnhancementKind, EnhancementOp, apply_enhancement, enhancement_candidates
from .evaluation import (
    EvalReport,
    GoldStandardEntry,
    load_gold_standard,
    mean_reciprocal_rank,
    run_benchmark,
)
from .engine import Engine
from .config import ServiceConfig, load_config

__version__ = "0.1.0"

__all__ = [
    "IRI",
    "Literal",
    "Origin",
    "PrefixTable",
    "Triple",
    "Entity",
    "Repository",
    "TextField",
    "parse_ntriples",
    "Algorithm",
    "DisjointnessSet",
    "LinkAssertion",
    "LinkCandidate",
    "LinkCatalog",
    "LinkType",
    "load_link_catalog",
    "rank_candidates",
    "EndpointConfig",
    "RepositoryTarget",
    "levenshtein_distance",
    "levenshtein_similarity",
    "AnchorCount",
    "AnchorTable",
    "build_anchor_table",
    "load_anchor_table",
    "save_anchor_table",
    "wikistat_probability",
    "wikistat_score",
    "PropertyFrequencyIndex",
    "compute_frequencies",
    "select_context",
    "select_types",
    "EnhancementKind",
    "EnhancementOp",
    "apply_enhancement",
    "enhancement_candidates",
    "EvalReport",
    "GoldStandardEntry",
    "load_gold_standard",
    "mean_reciprocal_rank",
    "run_benchmark",
    "Engine",
    "ServiceConfig",
    "load_config",
]

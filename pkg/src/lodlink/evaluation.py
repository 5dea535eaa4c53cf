"""Ranking-quality evaluation: mean reciprocal rank, latency, positions.

For every gold entry the selected algorithm ranks k candidates; the 1-based
position of the correct target feeds the MRR (reciprocal 0 when the correct
entity is missing from the ranking), a per-rank position histogram, and
wall-clock latency statistics with a normal-approximation 95% interval.
"""

from __future__ import annotations

import json
import math
import statistics
import time
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Callable, Sequence

from .errors import EmptyInput, GoldStandardError, NoSearchTerms
from .linking import Algorithm, DisjointnessSet, rank_candidates
from .repository import Repository
from .terms import IRI, TermError

if TYPE_CHECKING:  # pragma: no cover
    from .endpoint import EndpointConfig, TargetSource
    from .wikistat import AnchorTable


@dataclass(frozen=True)
class GoldStandardEntry:
    local: IRI
    target: IRI


def load_gold_standard(path: str | Path) -> list[GoldStandardEntry]:
    """Read ``localIRI<TAB>targetIRI`` rows; local IRIs must be unique."""
    entries: list[GoldStandardEntry] = []
    seen: set[IRI] = set()
    for number, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise GoldStandardError(f"line {number}: expected localIRI<TAB>targetIRI")
        try:
            local, target = IRI(parts[0].strip()), IRI(parts[1].strip())
        except TermError as exc:
            raise GoldStandardError(f"line {number}: {exc}") from None
        if local in seen:
            raise GoldStandardError(f"line {number}: duplicate local IRI {local.value}")
        seen.add(local)
        entries.append(GoldStandardEntry(local=local, target=target))
    return entries


def mean_reciprocal_rank(ranks: Sequence[int | None]) -> float:
    """Mean of 1/rank, counting an absent correct entity as 0."""
    if not ranks:
        raise EmptyInput("no ranks given")
    total = 0.0
    for rank in ranks:
        if rank is None:
            continue
        if rank < 1:
            raise ValueError(f"ranks are 1-based, got {rank}")
        total += 1.0 / rank
    return total / len(ranks)


@dataclass
class EvalReport:
    algorithm: str
    mrr: float
    mean_latency_seconds: float
    latency_ci95: tuple[float, float]
    position_histogram: dict[int, int]
    missed_count: int
    k: int
    entry_count: int
    no_term_count: int = 0
    note: str = "latencies are local in-process timings, not endpoint round-trips"

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "mrr": self.mrr,
            "mean_latency_seconds": self.mean_latency_seconds,
            "latency_ci95": list(self.latency_ci95),
            "position_histogram": {str(k): v for k, v in sorted(self.position_histogram.items())},
            "missed_count": self.missed_count,
            "k": self.k,
            "entry_count": self.entry_count,
            "no_term_count": self.no_term_count,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _confidence_interval(latencies: Sequence[float]) -> tuple[float, float]:
    mean = statistics.fmean(latencies)
    if len(latencies) < 2:
        return (mean, mean)
    stderr = statistics.stdev(latencies) / math.sqrt(len(latencies))
    return (mean - 1.96 * stderr, mean + 1.96 * stderr)


def run_benchmark(
    gold: Sequence[GoldStandardEntry],
    algorithm: Algorithm | str,
    local_repo: Repository,
    *,
    k: int = 10,
    target_source: "TargetSource | None" = None,
    anchor_table: "AnchorTable | None" = None,
    endpoint_config: "EndpointConfig | None" = None,
    declarations: DisjointnessSet | None = None,
    clock: Callable[[], float] = time.perf_counter,
) -> EvalReport:
    """Rank every gold entry and aggregate quality and latency.

    Entries whose local entity has no extractable search terms count as
    misses and are tallied separately in ``no_term_count``.
    """
    if not gold:
        raise EmptyInput("gold standard is empty")
    if isinstance(algorithm, str):
        algorithm = Algorithm.parse(algorithm)

    reciprocal_ranks: list[int | None] = []
    histogram: dict[int, int] = {}
    missed = 0
    no_terms = 0
    latencies: list[float] = []

    for entry in gold:
        entity = local_repo.get_entity(entry.local)
        started = clock()
        try:
            candidates = rank_candidates(
                entity,
                algorithm,
                k,
                target_source=target_source,
                endpoint_config=endpoint_config,
                declarations=declarations,
                anchor_table=anchor_table,
                label_properties=local_repo.label_properties,
            )
        except NoSearchTerms:
            latencies.append(clock() - started)
            reciprocal_ranks.append(None)
            missed += 1
            no_terms += 1
            continue
        latencies.append(clock() - started)
        position = next((c.rank for c in candidates if c.target == entry.target), None)
        reciprocal_ranks.append(position)
        if position is None:
            missed += 1
        else:
            histogram[position] = histogram.get(position, 0) + 1

    return EvalReport(
        algorithm=algorithm.value,
        mrr=mean_reciprocal_rank(reciprocal_ranks),
        mean_latency_seconds=statistics.fmean(latencies),
        latency_ci95=_confidence_interval(latencies),
        position_histogram=histogram,
        missed_count=missed,
        k=k,
        entry_count=len(gold),
        no_term_count=no_terms,
    )


def format_report_table(reports: Sequence[EvalReport]) -> str:
    """Plain-text summary comparing algorithm configurations side by side."""
    header = f"{'algorithm':<14} {'MRR':>8} {'mean s':>10} {'95% CI':>23} {'missed':>7} {'rank1':>6}"
    lines = [header, "-" * len(header)]
    for r in reports:
        low, high = r.latency_ci95
        lines.append(
            f"{r.algorithm:<14} {r.mrr:>8.4f} {r.mean_latency_seconds:>10.6f} "
            f"[{low:>9.6f}, {high:>9.6f}] {r.missed_count:>7} {r.position_histogram.get(1, 0):>6}"
        )
    return "\n".join(lines) + "\n"

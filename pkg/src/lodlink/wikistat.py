"""Anchor-statistics candidate ranking.

Rank target URIs for a set of anchor strings a1..an by the conditional
probability P(u | a1 or ... or an). Because the denominator is constant for a
fixed anchor set, ordering by the plain count sum #(u,a1)+...+#(u,an) yields
the same ranking, so that sum is what candidates are scored with.

Anchor matching is exact and case-sensitive after whitespace normalization
("Plato" and "PLATO" are different anchors).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Iterator

from .errors import (
    EmptyAnchorSet,
    MalformedRecord,
    NoSearchTerms,
    ZeroDenominator,
)
from .repository import Entity
from .terms import IRI, TermError

if TYPE_CHECKING:  # pragma: no cover
    from .linking import LinkCandidate


def normalize_anchor(text: str) -> str:
    """Collapse whitespace runs and strip; anchor case is preserved."""
    return " ".join(text.split())


@dataclass(frozen=True)
class AnchorCount:
    """How many links point at ``target`` with this exact anchor text."""

    target: IRI
    anchor: str
    count: int


class AnchorTable:
    """Immutable anchor-count table with an anchor-keyed index."""

    def __init__(self, rows: Iterable[AnchorCount], total_links: int):
        self._by_anchor: dict[str, dict[IRI, int]] = {}
        n_rows = 0
        for row in rows:
            if row.count <= 0:
                raise ValueError(f"non-positive count for ({row.target.value}, {row.anchor!r})")
            per_anchor = self._by_anchor.setdefault(row.anchor, {})
            if row.target in per_anchor:
                raise ValueError(f"duplicate (target, anchor) pair: ({row.target.value}, {row.anchor!r})")
            per_anchor[row.target] = row.count
            n_rows += 1
        self._row_count = n_rows
        heaviest = max((sum(c.values()) for c in self._by_anchor.values()), default=0)
        if total_links < heaviest:
            raise ValueError(
                f"total_links={total_links} is below the largest anchor sum {heaviest}"
            )
        self.total_links = total_links

    def __len__(self) -> int:
        return self._row_count

    def counts_for(self, anchor: str) -> dict[IRI, int]:
        """Exact-anchor lookup (whitespace-normalized)."""
        return dict(self._by_anchor.get(normalize_anchor(anchor), {}))

    def anchor_total(self, anchor: str) -> int:
        """#(a): number of links carrying this anchor, over all targets."""
        return sum(self._by_anchor.get(normalize_anchor(anchor), {}).values())

    def rows(self) -> Iterator[AnchorCount]:
        """Rows sorted by anchor, then descending count, then target."""
        for anchor in sorted(self._by_anchor):
            per_anchor = self._by_anchor[anchor]
            for target in sorted(per_anchor, key=lambda i: (-per_anchor[i], i.value)):
                yield AnchorCount(target=target, anchor=anchor, count=per_anchor[target])

    def targets(self) -> set[IRI]:
        out: set[IRI] = set()
        for per_anchor in self._by_anchor.values():
            out.update(per_anchor)
        return out


def build_anchor_table(records: Iterable[tuple[str, str, str]]) -> AnchorTable:
    """Aggregate (source, target, anchor) link records into an anchor table.

    ``total_links`` is the number of input records.
    """
    counts: dict[tuple[IRI, str], int] = {}
    total = 0
    for position, record in enumerate(records, start=1):
        try:
            source, target, anchor = record
        except ValueError:
            raise MalformedRecord(position, "expected (source, target, anchor)") from None
        if not source.strip():
            raise MalformedRecord(position, "empty source URI")
        anchor = normalize_anchor(anchor)
        if not anchor:
            raise MalformedRecord(position, "empty anchor text")
        try:
            target_iri = IRI(target.strip())
        except TermError as exc:
            raise MalformedRecord(position, f"bad target URI: {exc}") from None
        counts[(target_iri, anchor)] = counts.get((target_iri, anchor), 0) + 1
        total += 1
    rows = [AnchorCount(target=t, anchor=a, count=c) for (t, a), c in counts.items()]
    return AnchorTable(rows, total_links=total)


def parse_link_dump(source: str | bytes | Path) -> Iterator[tuple[str, str, str]]:
    """Read tab-separated ``source<TAB>target<TAB>anchor`` records."""
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    elif isinstance(source, bytes):
        text = source.decode("utf-8")
    else:
        text = source
    position = 0
    for raw in text.splitlines():
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        position += 1
        parts = line.split("\t")
        if len(parts) != 3:
            raise MalformedRecord(position, f"expected 3 tab-separated fields, got {len(parts)}")
        yield parts[0], parts[1], parts[2]


def wikistat_score(table: AnchorTable, anchors: Iterable[str], target: IRI) -> int:
    """Sum of #(target, a) over the anchor set; absent pairs count zero."""
    anchor_set = {normalize_anchor(a) for a in anchors}
    anchor_set.discard("")
    if not anchor_set:
        raise EmptyAnchorSet("no anchors given")
    return sum(table.counts_for(a).get(target, 0) for a in anchor_set)


def wikistat_probability(table: AnchorTable, anchors: Iterable[str], target: IRI) -> float:
    """P(target | a1 or ... or an) = score / sum of anchor totals."""
    anchor_set = {normalize_anchor(a) for a in anchors}
    anchor_set.discard("")
    if not anchor_set:
        raise EmptyAnchorSet("no anchors given")
    denominator = sum(table.anchor_total(a) for a in anchor_set)
    if denominator == 0:
        raise ZeroDenominator("no anchor of the query occurs in the table")
    return wikistat_score(table, anchor_set, target) / denominator


def rank_wikistat(
    entity: Entity,
    table: AnchorTable,
    k: int,
    *,
    label_properties=None,
) -> "list[LinkCandidate]":
    """Rank every target with a nonzero count sum, descending.

    Search terms of the entity are used verbatim as anchors; an entity whose
    anchors are all absent from the table yields an empty ranking.
    """
    from .endpoint import _entity_search_terms
    from .linking import LinkCandidate

    terms = _entity_search_terms(entity, label_properties)
    anchors = {normalize_anchor(t) for t in terms}
    anchors.discard("")
    if not anchors:
        raise NoSearchTerms(f"search terms of {entity.iri.value} are all blank")

    scores: dict[IRI, int] = {}
    for anchor in anchors:
        for target, count in table.counts_for(anchor).items():
            scores[target] = scores.get(target, 0) + count
    ranked = sorted(scores.items(), key=lambda item: (-item[1], item[0].value))
    return [
        LinkCandidate(
            target=target,
            score=score,
            rank=rank,
            display_label=target.local_name().replace("_", " "),
        )
        for rank, (target, score) in enumerate(ranked[:k], start=1)
    ]


ANCHOR_TABLE_HEADER = "#total-links"


def save_anchor_table(table: AnchorTable, path: str | Path) -> None:
    """Write the sorted flat-file form: header line then anchor rows."""
    lines = [f"{ANCHOR_TABLE_HEADER}\t{table.total_links}"]
    lines.extend(f"{row.anchor}\t{row.target.value}\t{row.count}" for row in table.rows())
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def load_anchor_table(path: str | Path) -> AnchorTable:
    """Read the flat-file form written by :func:`save_anchor_table`."""
    rows: list[AnchorCount] = []
    total: int | None = None
    for number, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.rstrip()
        if not line:
            continue
        if line.startswith(ANCHOR_TABLE_HEADER + "\t"):
            total = int(line.split("\t", 1)[1])
            continue
        if line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise MalformedRecord(number, f"expected anchor<TAB>targetURI<TAB>count, got {raw!r}")
        try:
            rows.append(AnchorCount(target=IRI(parts[1]), anchor=parts[0], count=int(parts[2])))
        except (TermError, ValueError) as exc:
            raise MalformedRecord(number, str(exc)) from None
    if total is None:
        raise MalformedRecord(0, f"missing {ANCHOR_TABLE_HEADER} header line")
    return AnchorTable(rows, total_links=total)

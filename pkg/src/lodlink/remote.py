"""Optional client for a live query endpoint.

Implements the same containment-search contract as the local target adapter
by issuing SELECT queries over the standard query wire protocol
(``GET ?query=`` with JSON results), so the ranking pipeline can run against
a remote knowledge base unchanged. Not used by the test suite; network access
is entirely opt-in.
"""

from __future__ import annotations

from typing import Iterable

import httpx

from .endpoint import EndpointConfig
from .repository import DEFAULT_LABEL_PROPERTIES, TextField
from .terms import IRI, RDF_TYPE


def _quote_string(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


class RemoteEndpoint:
    """TargetSource backed by a remote query endpoint.

    ``containment`` picks how word containment is expressed: ``"bif"`` uses
    the Virtuoso full-text operator, ``"filter"`` a portable lowercase
    substring filter.
    """

    def __init__(
        self,
        endpoint_url: str,
        cfg: EndpointConfig | None = None,
        *,
        label_properties: Iterable[IRI] = DEFAULT_LABEL_PROPERTIES,
        containment: str = "filter",
        timeout: float = 30.0,
        client: httpx.Client | None = None,
    ):
        if containment not in ("bif", "filter"):
            raise ValueError(f"containment must be 'bif' or 'filter', got {containment!r}")
        self.endpoint_url = endpoint_url
        self.cfg = cfg or EndpointConfig()
        self.label_properties = tuple(label_properties)
        self.containment = containment
        self._client = client or httpx.Client(timeout=timeout)

    # -- query construction (unit-testable without a network) ---------------

    def containment_query(self, term: str, field: TextField) -> str:
        if field is TextField.ABSTRACT:
            patterns = [f"?instance <{self.cfg.abstract_property.value}> ?value ."]
        else:
            values = " ".join(f"<{p.value}>" for p in self.label_properties)
            patterns = [f"VALUES ?p {{ {values} }}", "?instance ?p ?value ."]
        if self.containment == "bif":
            patterns.append(f"?value <bif:contains> {_quote_string(term)} .")
        else:
            patterns.append(
                f"FILTER(CONTAINS(LCASE(STR(?value)), LCASE({_quote_string(term)})))"
            )
        body = "\n ".join(patterns)
        return f"SELECT DISTINCT ?instance\nWHERE {{\n {body}\n}}"

    def values_query(self, iri: IRI, predicates: Iterable[IRI]) -> str:
        values = " ".join(f"<{p.value}>" for p in predicates)
        return (
            "SELECT ?value\nWHERE {\n"
            f" VALUES ?p {{ {values} }}\n <{iri.value}> ?p ?value .\n}}"
        )

    # -- wire protocol -------------------------------------------------------

    def _select(self, query: str) -> list[dict]:
        response = self._client.get(
            self.endpoint_url,
            params={"query": query, "format": "json"},
            headers={"Accept": "application/sparql-results+json"},
        )
        response.raise_for_status()
        return response.json()["results"]["bindings"]

    # -- TargetSource contract ------------------------------------------------

    def search_text(self, term: str, field: TextField) -> set[IRI]:
        rows = self._select(self.containment_query(term, field))
        return {IRI(r["instance"]["value"]) for r in rows if r["instance"]["type"] == "uri"}

    def label_values(self, iri: IRI) -> list[str]:
        rows = self._select(self.values_query(iri, self.label_properties))
        return [r["value"]["value"] for r in rows if r["value"]["type"] == "literal"]

    def types_of(self, iri: IRI) -> list[IRI]:
        rows = self._select(self.values_query(iri, [RDF_TYPE]))
        return [IRI(r["value"]["value"]) for r in rows if r["value"]["type"] == "uri"]

    def redirect_target(self, iri: IRI) -> IRI | None:
        rows = self._select(self.values_query(iri, [self.cfg.redirect_property]))
        targets = sorted(
            (IRI(r["value"]["value"]) for r in rows if r["value"]["type"] == "uri"),
            key=lambda i: i.value,
        )
        return targets[0] if targets else None

    def disambiguation_targets(self, iri: IRI) -> list[IRI]:
        rows = self._select(self.values_query(iri, [self.cfg.disambiguates_property]))
        return sorted(
            (IRI(r["value"]["value"]) for r in rows if r["value"]["type"] == "uri"),
            key=lambda i: i.value,
        )

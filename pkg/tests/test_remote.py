"""Remote endpoint client: query construction and wire parsing, no network."""

import json
from urllib.parse import parse_qs, urlparse

import httpx
import pytest

from lodlink.endpoint import EndpointConfig
from lodlink.remote import RemoteEndpoint
from lodlink.repository import TextField
from lodlink.terms import IRI


class TestQueryConstruction:
    def test_abstract_containment_query_bif(self):
        client = RemoteEndpoint("http://endpoint.example/sparql", containment="bif")
        query = client.containment_query("Ludwig Wittgenstein", TextField.ABSTRACT)
        assert "SELECT DISTINCT ?instance" in query
        assert "<http://dbpedia.org/property/abstract>" in query
        assert '?value <bif:contains> "Ludwig Wittgenstein"' in query

    def test_label_containment_query_filter(self):
        client = RemoteEndpoint("http://endpoint.example/sparql", containment="filter")
        query = client.containment_query("Plato", TextField.LABEL)
        assert "VALUES ?p" in query
        assert "<http://www.w3.org/2000/01/rdf-schema#label>" in query
        assert 'FILTER(CONTAINS(LCASE(STR(?value)), LCASE("Plato")))' in query

    def test_quotes_are_escaped(self):
        client = RemoteEndpoint("http://endpoint.example/sparql")
        query = client.containment_query('say "hi"', TextField.LABEL)
        assert '\\"hi\\"' in query

    def test_rejects_unknown_containment(self):
        with pytest.raises(ValueError):
            RemoteEndpoint("http://endpoint.example/sparql", containment="regex")


def _mock_endpoint(handler):
    transport = httpx.MockTransport(handler)
    http = httpx.Client(transport=transport)
    return RemoteEndpoint("http://endpoint.example/sparql", client=http)


def _bindings_response(rows):
    return httpx.Response(
        200,
        json={"results": {"bindings": rows}},
        headers={"content-type": "application/sparql-results+json"},
    )


class TestWireParsing:
    def test_search_text_maps_uris(self):
        def handler(request: httpx.Request) -> httpx.Response:
            params = parse_qs(urlparse(str(request.url)).query)
            assert "SELECT DISTINCT ?instance" in params["query"][0]
            return _bindings_response(
                [
                    {"instance": {"type": "uri", "value": "http://kb.example.org/resource/Plato"}},
                    {"instance": {"type": "literal", "value": "noise"}},
                ]
            )

        client = _mock_endpoint(handler)
        assert client.search_text("Plato", TextField.LABEL) == {
            IRI("http://kb.example.org/resource/Plato")
        }

    def test_label_values_keeps_literals_only(self):
        def handler(request):
            return _bindings_response(
                [
                    {"value": {"type": "literal", "value": "Plato"}},
                    {"value": {"type": "uri", "value": "urn:skipme"}},
                ]
            )

        client = _mock_endpoint(handler)
        assert client.label_values(IRI("urn:x")) == ["Plato"]

    def test_redirect_target_picks_deterministic_minimum(self):
        def handler(request):
            return _bindings_response(
                [
                    {"value": {"type": "uri", "value": "urn:b"}},
                    {"value": {"type": "uri", "value": "urn:a"}},
                ]
            )

        client = _mock_endpoint(handler)
        assert client.redirect_target(IRI("urn:x")) == IRI("urn:a")

    def test_http_error_propagates(self):
        def handler(request):
            return httpx.Response(503, text="overloaded")

        client = _mock_endpoint(handler)
        with pytest.raises(httpx.HTTPStatusError):
            client.types_of(IRI("urn:x"))

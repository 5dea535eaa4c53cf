"""HTTP JSON API powering the curator UI.

Every endpoint is a thin, stateless mapping onto a library operation; bodies
carry fully expanded IRIs plus a compact form resolved against the prefix
table. Library errors map to 400 (validation), 404 (unknown IRI or triple)
and 409 (conflicts).
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, Field

from . import errors
from .enhancer import EnhancementKind, EnhancementOp
from .engine import Engine
from .linking import LinkAssertion, LinkCandidate
from .search import ResultCluster
from .terms import IRI, Literal, Term, TermError, Triple

_BAD_REQUEST = (
    errors.EmptyQuery,
    errors.EmptyTerm,
    errors.UnknownAlgorithm,
    errors.NoSearchTerms,
    errors.NoLinkEstablished,
    errors.ConfigError,
    errors.PrefixError,
    TermError,
)
_NOT_FOUND = (
    errors.UnknownSubject,
    errors.UnknownLocalEntity,
    errors.TripleNotFound,
)
_CONFLICT = (
    errors.PropertyAlreadyExists,
    errors.DuplicateLinkType,
)


class LinkRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    local: str
    target: str
    link_type: str = Field(alias="linkType")


class ValuePayload(BaseModel):
    type: str  # "iri" | "literal"
    value: str
    language: Optional[str] = None
    datatype: Optional[str] = None


class EnhanceRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    kind: str
    subject: str
    predicate: str
    value: ValuePayload
    source_entity: Optional[str] = Field(default=None, alias="sourceEntity")


class DeleteTripleRequest(BaseModel):
    subject: str
    predicate: str
    object: ValuePayload


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="lodlink", version="0.1.0")

    def iri_json(iri: IRI) -> dict:
        return {"iri": iri.value, "compact": engine.prefixes.compact(iri)}

    def term_json(term: Term) -> dict:
        if isinstance(term, IRI):
            return {"type": "iri", **iri_json(term)}
        return {
            "type": "literal",
            "value": term.lexical,
            "language": term.language,
            "datatype": term.datatype.value if term.datatype else None,
        }

    def triple_json(triple: Triple) -> dict:
        return {
            "subject": iri_json(triple.subject),
            "predicate": iri_json(triple.predicate),
            "object": term_json(triple.object),
            "origin": triple.origin.value,
            "enhanced_from": triple.enhanced_from.value if triple.enhanced_from else None,
        }

    def parse_term(payload: ValuePayload) -> Term:
        if payload.type == "iri":
            return engine.prefixes.expand(payload.value)
        if payload.type == "literal":
            return Literal(
                payload.value,
                language=payload.language,
                datatype=engine.prefixes.expand(payload.datatype) if payload.datatype else None,
            )
        raise TermError(f"value type must be 'iri' or 'literal', got {payload.type!r}")

    def cluster_json(cluster: ResultCluster) -> dict:
        return {
            "representative": iri_json(cluster.representative),
            "members": [iri_json(m) for m in sorted(cluster.members, key=lambda i: i.value)],
            "display_label": cluster.display_label,
            "types": [iri_json(t) for t in sorted(cluster.types, key=lambda i: i.value)],
        }

    def candidate_json(candidate: LinkCandidate) -> dict:
        return {
            "target": iri_json(candidate.target),
            "score": candidate.score,
            "rank": candidate.rank,
            "display_label": candidate.display_label,
            "context": [
                {"predicate": iri_json(p), "value": term_json(v)} for p, v in candidate.context
            ],
            "types": [iri_json(t) for t in engine.candidate_types(candidate)],
        }

    def assertion_json(assertion: LinkAssertion) -> dict:
        return {
            "source": iri_json(assertion.source),
            "link_type": assertion.link_type.curie,
            "target": iri_json(assertion.target),
            "created_by": assertion.created_by,
            "timestamp": assertion.timestamp,
        }

    @app.exception_handler(errors.LodlinkError)
    async def _lodlink_error(_request: Request, exc: errors.LodlinkError):
        if isinstance(exc, _CONFLICT):
            status = 409
        elif isinstance(exc, _NOT_FOUND):
            status = 404
        elif isinstance(exc, _BAD_REQUEST):
            status = 400
        else:
            status = 400
        return JSONResponse(
            status_code=status,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/api/search")
    def api_search(q: str, limit: int = Query(default=20, ge=1)):
        clusters, facets = engine.search(q, limit)
        return {
            "clusters": [cluster_json(c) for c in clusters],
            "facets": [
                {**iri_json(t), "count": count}
                for t, count in sorted(facets.items(), key=lambda kv: (-kv[1], kv[0].value))
            ],
        }

    @app.get("/api/autocomplete")
    def api_autocomplete(prefix: str, limit: int = Query(default=10, ge=1)):
        return engine.autocomplete(prefix, limit)

    @app.get("/api/entity/{iri:path}")
    def api_entity(iri: str):
        subject = engine.prefixes.expand(iri)
        entity = engine.entity(subject)
        if not entity.assertions:
            raise errors.UnknownSubject(f"{subject.value} is not in the local repository")
        return {
            **iri_json(subject),
            "types": [iri_json(t) for t in entity.types],
            "assertions": [triple_json(t) for t in entity.assertions],
            "links": [assertion_json(a) for a in engine.entity_links(subject)],
        }

    @app.get("/api/link/candidates/{iri:path}")
    def api_candidates(
        iri: str,
        algorithm: str | None = None,
        k: int | None = Query(default=None, ge=1),
    ):
        subject = engine.prefixes.expand(iri)
        if not engine.local.has_subject(subject):
            raise errors.UnknownSubject(f"{subject.value} is not in the local repository")
        candidates = engine.candidates(subject, algorithm, k)
        return {
            "entity": iri_json(subject),
            "algorithm": algorithm or engine.config.default_algorithm,
            "k": k or engine.config.k,
            "candidates": [candidate_json(c) for c in candidates],
        }

    @app.post("/api/link")
    def api_link(body: LinkRequest):
        assertion = engine.assert_link(
            engine.prefixes.expand(body.local),
            engine.prefixes.expand(body.target),
            body.link_type,
        )
        return assertion_json(assertion)

    @app.get("/api/enhance/candidates/{iri:path}")
    def api_enhance_candidates(iri: str, k: int | None = Query(default=None, ge=0)):
        subject = engine.prefixes.expand(iri)
        if not engine.local.has_subject(subject):
            raise errors.UnknownSubject(f"{subject.value} is not in the local repository")
        groups = engine.enhancement_candidates(subject, k)
        return {
            "entity": iri_json(subject),
            "groups": [
                {"predicate": iri_json(p), "values": [term_json(v) for v in values]}
                for p, values in groups
            ],
        }

    @app.post("/api/enhance")
    def api_enhance(body: EnhanceRequest):
        try:
            kind = EnhancementKind(body.kind)
        except ValueError:
            raise TermError(f"unknown enhancement kind {body.kind!r}") from None
        op = EnhancementOp(
            kind=kind,
            subject=engine.prefixes.expand(body.subject),
            predicate=engine.prefixes.expand(body.predicate),
            value=parse_term(body.value),
            source_entity=engine.prefixes.expand(body.source_entity)
            if body.source_entity
            else None,
        )
        applied = engine.enhance(op)
        return {"applied": triple_json(applied) if applied else None}

    @app.delete("/api/triple")
    def api_delete_triple(body: DeleteTripleRequest):
        op = EnhancementOp(
            kind=EnhancementKind.DELETE,
            subject=engine.prefixes.expand(body.subject),
            predicate=engine.prefixes.expand(body.predicate),
            value=parse_term(body.object),
        )
        engine.enhance(op)
        return {"status": "deleted"}

    @app.get("/api/linktypes")
    def api_linktypes():
        return [
            {
                "vocabulary": row.vocabulary,
                "relation": row.relation_name,
                "applies_to": sorted(a.value for a in row.applies_to),
                "iri": row.iri(engine.prefixes).value,
            }
            for row in engine.catalog.rows()
        ]

    return app

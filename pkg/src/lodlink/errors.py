"""Exception hierarchy shared by all lodlink modules.

Every error raised by the library derives from :class:`LodlinkError` so the
service layer can map them onto HTTP status codes in one place.
"""

from __future__ import annotations


class LodlinkError(Exception):
    """Base class for all lodlink errors."""


class TermError(LodlinkError):
    """Invalid IRI or literal construction."""


class PrefixError(LodlinkError):
    """Compact IRI whose prefix is not in the prefix table."""


class MalformedLine(LodlinkError):
    """N-Triples parse failure; parsing aborts at the first bad line."""

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class MalformedRecord(LodlinkError):
    """Bad record in a link-dump stream."""

    def __init__(self, position: int, reason: str):
        super().__init__(f"record {position}: {reason}")
        self.position = position
        self.reason = reason


class NoSearchTerms(LodlinkError):
    """Entity has no assertion on any configured label property."""


class EmptyTerm(LodlinkError):
    """Text search called with a term that is empty after trimming."""


class EmptyQuery(LodlinkError):
    """Keyword search called with blank query text."""


class UnknownAlgorithm(LodlinkError):
    """Candidate ranking requested with an unrecognised algorithm name."""


class UnknownLinkType(LodlinkError):
    """Link type not present in the catalog."""


class DuplicateLinkType(LodlinkError):
    """Attempt to register a link type that already exists in the catalog."""


class UnknownLocalEntity(LodlinkError):
    """Link source IRI does not exist in the local repository."""


class UnknownSubject(LodlinkError):
    """Enhancement subject IRI does not exist in the local repository."""


class PropertyAlreadyExists(LodlinkError):
    """ADD_TO_NEW_PROPERTY on a predicate already used on the subject."""


class TripleNotFound(LodlinkError):
    """DELETE of a triple that is not in the repository."""


class EmptyAnchorSet(LodlinkError):
    """Anchor-statistics scoring called with no anchors."""


class ZeroDenominator(LodlinkError):
    """No anchor of the query occurs in the anchor table."""


class EmptyRepository(LodlinkError):
    """Frequency computation over a repository with no entities."""


class EmptyInput(LodlinkError):
    """Aggregate computation over an empty input sequence."""


class NoLinkEstablished(LodlinkError):
    """Enhancement candidates requested for an entity with no link."""


class GoldStandardError(LodlinkError):
    """Malformed or inconsistent gold standard file."""


class ConfigError(LodlinkError):
    """Invalid service configuration."""

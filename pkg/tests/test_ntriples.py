import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lodlink.errors import MalformedLine
from lodlink.ntriples import iter_triples, render_triple, serialize_triples
from lodlink.repository import parse_ntriples, serialize_repository
from lodlink.terms import IRI, Literal, Origin, Triple

from oracles import random_repository


def test_single_statement():
    repo = parse_ntriples("<urn:a> <urn:p> <urn:b> .")
    assert len(repo) == 1
    (triple,) = list(repo)
    assert triple.subject == IRI("urn:a")
    assert triple.object == IRI("urn:b")


def test_language_tagged_literal():
    line = '<urn:t4132> <http://www.w3.org/2000/01/rdf-schema#label> "Ludwig Wittgenstein"@en .'
    (triple,) = list(iter_triples(line))
    assert triple.object == Literal("Ludwig Wittgenstein", language="en")


def test_datatyped_literal():
    (triple,) = list(iter_triples('<urn:a> <urn:p> "42"^^<urn:int> .'))
    assert triple.object == Literal("42", datatype=IRI("urn:int"))


def test_empty_input_gives_empty_repository():
    repo = parse_ntriples("")
    assert len(repo) == 0


def test_comments_and_blank_lines_skipped():
    repo = parse_ntriples("# header\n\n<urn:a> <urn:p> <urn:b> .\n")
    assert len(repo) == 1


def test_escape_sequences_round_trip():
    lexical = 'tab\there "quoted" back\\slash\nnewline'
    triple = Triple(IRI("urn:a"), IRI("urn:p"), Literal(lexical))
    (reparsed,) = list(iter_triples(render_triple(triple)))
    assert reparsed.object == Literal(lexical)


def test_unicode_escape():
    (triple,) = list(iter_triples('<urn:a> <urn:p> "snow\\u2603man" .'))
    assert triple.object.lexical == "snow☃man"


@pytest.mark.parametrize(
    "line, fragment",
    [
        ("<urn:a> <urn:p> <urn:b>", "terminating"),
        ("<urn:a> <urn:p> .", "object"),
        ("_:b1 <urn:p> <urn:b> .", "blank nodes"),
        ("<urn:a> <urn:p> _:b2 .", "blank nodes"),
        ('<urn:a> <urn:p> "open .', "unterminated literal"),
        ("<urn:a> <urn:p <urn:b> .", "IRI"),
        ('<urn:a> <urn:p> "x"@ .', "language tag"),
        ('<urn:a> <urn:p> "x" . extra', "trailing"),
        ('<urn:a> <urn:p> "bad\\q" .', "escape"),
    ],
)
def test_malformed_lines_abort_with_position(line, fragment):
    good = "<urn:ok> <urn:p> <urn:o> ."
    with pytest.raises(MalformedLine) as excinfo:
        list(iter_triples(f"{good}\n{line}\n{good}"))
    assert excinfo.value.line_number == 2
    assert fragment in excinfo.value.reason


def test_origin_flag_applies_to_all_triples():
    repo = parse_ntriples("<urn:a> <urn:p> <urn:b> .", origin=Origin.TARGET)
    (triple,) = list(repo)
    assert triple.origin is Origin.TARGET


def test_round_trip_random_repositories():
    rng = random.Random(4)
    for _ in range(10):
        repo = random_repository(rng, n_entities=25, n_triples=120)
        reparsed = parse_ntriples(serialize_repository(repo))
        assert set(reparsed) == set(repo)
        assert len(reparsed) == len(repo)


@settings(max_examples=60, deadline=None)
@given(
    st.text(
        alphabet=st.characters(blacklist_categories=("Cs",)),
        max_size=40,
    ),
    st.sampled_from([None, "en", "en-US", "de"]),
)
def test_any_literal_survives_round_trip(lexical, language):
    triple = Triple(IRI("urn:s"), IRI("urn:p"), Literal(lexical, language=language))
    (reparsed,) = list(iter_triples(render_triple(triple)))
    assert reparsed.object.lexical == lexical
    assert reparsed.object.language == language


def test_serialize_is_sorted_and_deterministic():
    triples = [
        Triple(IRI("urn:b"), IRI("urn:p"), IRI("urn:x")),
        Triple(IRI("urn:a"), IRI("urn:p"), IRI("urn:x")),
    ]
    text = serialize_triples(triples)
    assert text.splitlines() == sorted(text.splitlines())
    assert serialize_triples(reversed(triples)) == text

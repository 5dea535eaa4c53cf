"""Ranking link candidates with both algorithms and inspecting context.

Run from the repo root: python3 demos/02_link_candidates.py
"""

from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from lodlink.config import ServiceConfig
from lodlink.engine import Engine
from lodlink.linking import Algorithm
from lodlink.terms import IRI

TOY = Path(__file__).resolve().parent.parent / "data" / "toy"

engine = Engine.from_config(
    ServiceConfig(
        data_dir="/tmp/lodlink-demo",
        local_repo_path=str(TOY / "local.nt"),
        target_repo_path=str(TOY / "target.nt"),
        anchor_table_path=str(TOY / "anchors.tsv"),
        prefix_table_path=str(TOY / "prefixes.tsv"),
        disjointness_declarations_path=str(TOY / "declarations.tsv"),
    )
)

wittgenstein = engine.prefixes.expand("thinker:t4132")
print("search terms:", engine.local.extract_search_terms(wittgenstein), "\n")

for algorithm in (Algorithm.ENDPOINT_AL, Algorithm.WIKISTAT):
    print(f"-- {algorithm.value} --")
    for c in engine.candidates(wittgenstein, algorithm, k=5):
        print(f"  #{c.rank} {c.display_label:<36} score={c.score:0.3f}" if isinstance(c.score, float)
              else f"  #{c.rank} {c.display_label:<36} score={c.score}")
        for predicate, value in c.context[:3]:
            compact = engine.prefixes.compact(predicate) or predicate.value
            print(f"       {compact}: {str(value)[:60]}")
    print()

# the anchor-ambiguous homonym: containment search and anchor statistics disagree
moore = engine.prefixes.expand("thinker:t2001")
print("terms for the homonym case:", engine.local.extract_search_terms(moore))
for algorithm in (Algorithm.ENDPOINT_AL, Algorithm.WIKISTAT):
    top = engine.candidates(moore, algorithm, k=3)
    heads = [f"#{c.rank} {c.display_label}" for c in top]
    print(f"  {algorithm.value:<12} -> {heads}")

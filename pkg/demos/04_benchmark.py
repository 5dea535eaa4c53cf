"""Evaluating ranking quality: mean reciprocal rank across configurations.

Run from the repo root: python3 demos/04_benchmark.py
"""

from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from lodlink.config import ServiceConfig
from lodlink.engine import Engine
from lodlink.evaluation import format_report_table, load_gold_standard, run_benchmark

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

for name in ("gold_persons", "gold_concepts"):
    gold = load_gold_standard(TOY / f"{name}.tsv")
    reports = [
        run_benchmark(
            gold,
            algorithm,
            engine.local,
            target_source=engine.target_source,
            endpoint_config=engine.target_source.cfg,
            declarations=engine.declarations,
            anchor_table=engine.anchor_table,
        )
        for algorithm in ("endpoint-a", "endpoint-l", "endpoint-al", "wikistat")
    ]
    print(f"== {name} ({len(gold)} entries) ==")
    print(format_report_table(reports))

print("position histogram, wikistat on persons (rank -> count):")
gold = load_gold_standard(TOY / "gold_persons.tsv")
report = run_benchmark(gold, "wikistat", engine.local, anchor_table=engine.anchor_table)
for rank, count in sorted(report.position_histogram.items()):
    print(f"  {rank}: {'#' * count} {count}")
print(f"  missed: {report.missed_count}")

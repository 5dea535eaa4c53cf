"""The curation loop: accept a link, review enhancement candidates, enhance.

Run from the repo root: python3 demos/03_link_and_enhance.py
"""

from pathlib import Path
import sys
import tempfile

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from lodlink.config import ServiceConfig
from lodlink.engine import Engine
from lodlink.enhancer import EnhancementKind, EnhancementOp
from lodlink.terms import Literal, Origin

TOY = Path(__file__).resolve().parent.parent / "data" / "toy"

workdir = Path(tempfile.mkdtemp(prefix="lodlink-demo-"))
engine = Engine.from_config(
    ServiceConfig(
        data_dir=str(workdir),
        local_repo_path=str(TOY / "local.nt"),
        target_repo_path=str(TOY / "target.nt"),
        anchor_table_path=str(TOY / "anchors.tsv"),
        prefix_table_path=str(TOY / "prefixes.tsv"),
    )
)

local = engine.prefixes.expand("thinker:t4132")
target = engine.prefixes.expand("kbr:Ludwig_Wittgenstein")

assertion = engine.assert_link(local, target, "owl:sameAs")
print(f"linked {engine.prefixes.compact(local)} -> {engine.prefixes.compact(target)}"
      f" via {assertion.link_type.curie}\n")

print("enhancement candidates (most frequent target assertions first):")
for predicate, values in engine.enhancement_candidates(local, k=4):
    compact = engine.prefixes.compact(predicate) or predicate.value
    print(f"  {compact}: {[str(v)[:48] for v in values]}")

before = len(engine.local)
stored = engine.enhance(
    EnhancementOp(
        kind=EnhancementKind.ADD_VALUE,
        subject=local,
        predicate=engine.prefixes.expand("rdfs:label"),
        value=Literal("Ludwig Wittgenstein", language="en"),
        source_entity=target,
    )
)
print(f"\nadded: {stored.subject.value} rdfs:label \"{stored.object}\"@{stored.object.language}")
print(f"origin={stored.origin.value}, copied from {stored.enhanced_from.value}")
print(f"repository grew {before} -> {len(engine.local)} triples")

enhanced = [t for t in engine.local if t.origin is Origin.ENHANCED]
print(f"\npersisted snapshot in {workdir}: local.nt + local.prov ({len(enhanced)} provenance rows)")

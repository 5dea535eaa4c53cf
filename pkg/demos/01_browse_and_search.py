"""Browsing a local repository: keyword search, type filters, clustering.

Run from the repo root: python3 demos/01_browse_and_search.py
"""

from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from lodlink.repository import parse_ntriples
from lodlink.search import autocomplete, facet_counts, parse_query, search
from lodlink.terms import Origin, load_prefix_table

TOY = Path(__file__).resolve().parent.parent / "data" / "toy"

prefixes = load_prefix_table(TOY / "prefixes.tsv")
local = parse_ntriples(TOY / "local.nt", origin=Origin.LOCAL, prefixes=prefixes)
print(f"loaded local repository: {len(local)} triples, {len(local.subjects())} entities\n")

# partial keywords match, search-engine style
query = parse_query("Wittgens")
for cluster in search(local, query, limit=5):
    types = ", ".join(prefixes.compact(t) or t.value for t in sorted(cluster.types, key=str))
    print(f"  {cluster.display_label:<28} [{types}]  members={len(cluster.members)}")

# the type-filter syntax narrows results to one concept
print("\nfiltered to thinkers matching 'Pla':")
for cluster in search(local, parse_query("concept:thinker Pla"), limit=5):
    print(f"  {cluster.display_label}  ({prefixes.compact(cluster.representative)})")

# facet counts drive the type sidebar of a browse UI
clusters = search(local, parse_query("Review"), limit=50)
print("\ntype facets for keyword 'Review':")
for type_iri, count in sorted(facet_counts(clusters).items(), key=lambda kv: -kv[1]):
    print(f"  {prefixes.compact(type_iri) or type_iri.value}: {count}")

# auto-completion over label values
print("\ncompletions for 'Witt':", autocomplete(local, "Witt", limit=5))

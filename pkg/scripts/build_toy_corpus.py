#!/usr/bin/env python3
"""Regenerate the bundled toy corpus under data/toy/.

Deterministic (fixed seed). The corpus pairs a local humanities-style
repository (~500 entities: thinkers, ideas, journals, users) with a
DBpedia-flavoured target knowledge base (~2,000 entities) and an anchor-count
table (~5,000 rows), plus gold standards split into a person-like subset
(unambiguous names) and a concept-like subset (multi-alias entries).

Corpus design notes:
- every gold person's local name equals the correct target label exactly,
  while homonym decoys carry parenthetical suffixes, so similarity ranking
  puts the correct person first;
- a slice of gold persons is anchor-ambiguous: a more famous homonym owns the
  larger anchor count, so anchor-statistics ranking puts the correct person
  second (and two gold persons have no anchor rows at all);
- alias-style gold concepts are labeled under a canonical name that shares no
  tokens with the local aliases; the correct entity is only reachable through
  its abstract and is outscored by a "(book)" decoy on label similarity,
  while all aliases point at the correct entity in the anchor table.
"""

from __future__ import annotations

import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "toy"
SEED = 74125

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
SKOS = "http://www.w3.org/2004/02/skos/core#"
FOAF = "http://xmlns.com/foaf/0.1/"
DBO = "http://dbpedia.org/ontology/"
DBP = "http://dbpedia.org/property/"

PHILO = "http://philo.example.org/vocab/"
THINKER = "http://philo.example.org/thinker/"
IDEA = "http://philo.example.org/idea/"
JOURNAL = "http://philo.example.org/journal/"
USER = "http://philo.example.org/user/"
KBR = "http://kb.example.org/resource/"
KBO = "http://kb.example.org/ontology/"

TYPE = RDF + "type"
LABEL = RDFS + "label"
NAME = FOAF + "name"
PREFLABEL = SKOS + "prefLabel"
SAMEAS = OWL + "sameAs"
ABSTRACT = DBP + "abstract"
REDIRECTS = DBO + "wikiPageRedirects"
DISAMBIGUATES = DBO + "wikiPageDisambiguates"

FIRST_NAMES = [
    "Adela", "Albrecht", "Anselm", "Arvid", "Beatrix", "Bernhard", "Carsten",
    "Cecilia", "Clemens", "Cordula", "Dagmar", "Dietrich", "Edmund", "Eleanor",
    "Emil", "Ernestine", "Ferdinand", "Frieda", "Gerhard", "Gisela", "Gregor",
    "Hedwig", "Heinrich", "Helena", "Hubert", "Ingrid", "Isidor", "Johanna",
    "Jonas", "Katharina", "Konrad", "Leopold", "Lorenz", "Magdalena", "Marcus",
    "Mathilde", "Nikolaus", "Norbert", "Ottilie", "Pauline", "Quirin", "Raimund",
    "Regina", "Rosalind", "Rudolf", "Sebastian", "Sigrid", "Theodor", "Ulrike",
    "Valentin", "Verena", "Waldemar", "Wilhelmina", "Yvonne", "Zacharias",
]
LAST_NAMES = [
    "Abendroth", "Achterberg", "Bachmeier", "Berglund", "Bonhoeffer", "Brandvik",
    "Carstensen", "Dahlgren", "Eichwald", "Ekelund", "Falkner", "Fenstad",
    "Gersdorf", "Grunewald", "Haldorsen", "Hartmann", "Heggelund", "Hellwig",
    "Isaksen", "Jernberg", "Kalden", "Kellerman", "Kirchner", "Krogstad",
    "Lagerfeld", "Lindqvist", "Lohmann", "Malmstrom", "Mehlhorn", "Morgenstern",
    "Nordvik", "Oberholzer", "Ostergaard", "Pettersen", "Quandt", "Ravensberg",
    "Reinholt", "Rosenkranz", "Sandelin", "Schattner", "Seeberg", "Solheim",
    "Steinbrecher", "Tellefsen", "Thorvald", "Ulfstand", "Vanderhoek", "Vogelsang",
    "Wahlgren", "Westergren", "Widmark", "Wolfram", "Ysenburg", "Zollinger",
]
ADJECTIVES = [
    "Radical", "Structural", "Critical", "Transcendental", "Analytic",
    "Dialectical", "Pragmatic", "Phenomenal", "Speculative", "Formal",
    "Reflexive", "Normative", "Perspectival", "Constructive", "Generative",
    "Embodied", "Procedural", "Recursive", "Contextual", "Minimal",
    "Layered", "Temporal", "Modal", "Plural", "Situated", "Dynamic",
    "Synthetic", "Relational", "Holistic", "Generic", "Emergent", "Latent",
    "Composite", "Iterative", "Expressive", "Adaptive", "Canonical", "Liminal",
    "Axiomatic", "Heuristic",
]
ISMS = [
    "Empiricism", "Idealism", "Realism", "Rationalism", "Skepticism",
    "Holism", "Monism", "Dualism", "Naturalism", "Relativism",
    "Nominalism", "Vitalism", "Finitism", "Organicism", "Conventionalism",
    "Instrumentalism", "Emergentism", "Perspectivism", "Gradualism",
    "Externalism", "Internalism", "Functionalism", "Operationalism",
    "Descriptivism", "Expressivism", "Contextualism", "Coherentism",
    "Foundationalism", "Fallibilism", "Verificationism",
]
SYLLABLES = [
    "vel", "tha", "ron", "mik", "sal", "dor", "quin", "fen", "bra", "lus",
    "mor", "tev", "gal", "nis", "pol", "rud", "ser", "tol", "urm", "vos",
]
TOWNS = [
    "Ashfield", "Briarwood", "Cloverdale", "Dunmore", "Eastvale", "Fernley",
    "Glenrock", "Harmony", "Ironwood", "Juniper", "Kingsford", "Larkspur",
    "Maple Hill", "Northgate", "Oakhurst", "Pinecrest", "Quarry Bend",
    "Ridgeway", "Stonebrook", "Thornton", "Umber Falls", "Vantage",
    "Westbrook", "Yarrow", "Alderpoint", "Birchwood", "Coalton", "Duskvale",
    "Elmsworth", "Foxglove",
]
STATES = [
    "Alaria", "Benton", "Caldera", "Dorset", "Ellsworth", "Fairmont",
    "Granville", "Holston", "Ives", "Jasper", "Kenmore", "Loudon",
    "Missouri", "Newland", "Ontaria",
]
NATIONALITIES = [
    "Austrian", "Danish", "Swedish", "Norwegian", "German", "Dutch",
    "Swiss", "Flemish", "Icelandic", "Estonian", "Finnish", "Bohemian",
]
OCCUPATIONS = ["philosopher", "logician", "historian", "essayist", "theologian", "mathematician"]
ERAS = ["ancient", "medieval", "early modern", "19th century", "20th century"]
DECOY_ROLES = ["novelist", "cricketer", "politician", "painter", "composer", "architect", "botanist"]


def esc(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def slug(label: str) -> str:
    return label.replace(" ", "_")


class Corpus:
    def __init__(self):
        self.rng = random.Random(SEED)
        self.local: list[str] = []
        self.target: list[str] = []
        self.anchors: list[tuple[str, str, int]] = []  # (anchor, target_iri, count)
        self.gold_persons: list[tuple[str, str]] = []
        self.gold_concepts: list[tuple[str, str]] = []
        self.used_labels: set[str] = set()
        self.reserved_anchors: set[str] = set()
        self.filler_topics: list[str] = []
        self.filler_person_names: list[str] = []

    # -- primitives ----------------------------------------------------------

    def lt(self, s: str, p: str, o_iri: str) -> None:
        self.local.append(f"<{s}> <{p}> <{o_iri}> .")

    def ll(self, s: str, p: str, text: str, lang: str | None = None) -> None:
        tag = f"@{lang}" if lang else ""
        self.local.append(f'<{s}> <{p}> "{esc(text)}"{tag} .')

    def tt(self, s: str, p: str, o_iri: str) -> None:
        self.target.append(f"<{s}> <{p}> <{o_iri}> .")

    def tl(self, s: str, p: str, text: str, lang: str | None = "en") -> None:
        tag = f"@{lang}" if lang else ""
        self.target.append(f'<{s}> <{p}> "{esc(text)}"{tag} .')

    def claim_label(self, label: str) -> str:
        key = label.casefold()
        if key in self.used_labels:
            raise ValueError(f"label collision: {label}")
        self.used_labels.add(key)
        return label

    def fresh_person_name(self) -> str:
        while True:
            name = f"{self.rng.choice(FIRST_NAMES)} {self.rng.choice(LAST_NAMES)}"
            if name.casefold() not in self.used_labels:
                return self.claim_label(name)

    def fresh_concept_pair(self) -> str:
        while True:
            label = f"{self.rng.choice(ADJECTIVES)} {self.rng.choice(ISMS)}"
            if label.casefold() not in self.used_labels:
                return self.claim_label(label)

    def invented_word(self) -> str:
        while True:
            word = "".join(self.rng.choice(SYLLABLES) for _ in range(3)).capitalize()
            if word.casefold() not in self.used_labels:
                self.used_labels.add(word.casefold())
                return word

    def anchor(self, text: str, target_iri: str, count: int, *, reserve: bool = False) -> None:
        if reserve:
            self.reserved_anchors.add(text.casefold())
        self.anchors.append((text, target_iri, count))

    # -- target entity builders ------------------------------------------------

    def person(self, label: str, *, abstract: str | None = None, iri: str | None = None) -> str:
        iri = iri or KBR + slug(label)
        self.tl(iri, LABEL, label)
        self.tl(iri, ABSTRACT, abstract or self.person_abstract(label))
        self.tt(iri, TYPE, KBO + "Person")
        if self.rng.random() < 0.7:
            self.tt(iri, KBO + "birthPlace", KBR + slug(self.rng.choice(TOWNS)))
        if self.rng.random() < 0.5:
            self.tl(iri, KBO + "era", self.rng.choice(ERAS), None)
        return iri

    def person_abstract(self, name: str, mention: str | None = None) -> str:
        era = self.rng.choice(ERAS)
        nat = self.rng.choice(NATIONALITIES)
        occ = self.rng.choice(OCCUPATIONS)
        text = f"{name} was a {era} {nat} {occ}"
        if self.filler_topics and self.rng.random() < 0.6:
            text += f" known for work on {self.rng.choice(self.filler_topics)}"
        if mention:
            text += f", often compared with {mention}"
        return text + "."

    def concept(self, label: str, *, abstract: str, tradition: bool = False) -> str:
        iri = KBR + slug(label)
        self.tl(iri, LABEL, label)
        self.tl(iri, ABSTRACT, abstract)
        self.tt(iri, TYPE, KBO + ("PhilosophicalTradition" if tradition else "Concept"))
        if self.rng.random() < 0.4:
            self.tl(iri, KBO + "era", self.rng.choice(ERAS), None)
        return iri

    # -- corpus sections ----------------------------------------------------------

    def build(self) -> None:
        # topic pool first so abstracts can reference filler concepts
        topic_pairs = [self.fresh_concept_pair() for _ in range(120)]
        self.filler_topics = topic_pairs[:60]

        self.build_special_targets()
        self.build_gold_persons()
        self.build_gold_concepts()
        self.build_filler_targets(topic_pairs[60:])
        self.build_local_filler()
        self.build_filler_anchors()

    # special, hand-placed entities exercised by unit tests and demos
    def build_special_targets(self) -> None:
        # Wittgenstein
        lw = KBR + "Ludwig_Wittgenstein"
        self.claim_label("Ludwig Wittgenstein")
        self.tl(lw, LABEL, "Ludwig Wittgenstein")
        self.tl(lw, ABSTRACT, "Ludwig Wittgenstein was an Austrian philosopher who worked on logic and the philosophy of language.")
        self.tt(lw, TYPE, KBO + "Person")
        self.tt(lw, KBO + "birthPlace", KBR + "Vienna")
        self.tl(KBR + "Vienna", LABEL, self.claim_label("Vienna"))
        self.tl(KBR + "Vienna", ABSTRACT, "Vienna is a city on the Danube.")
        self.tt(KBR + "Vienna", TYPE, KBO + "Place")
        self.anchor("Ludwig Wittgenstein", lw, 2890, reserve=True)
        self.anchor("Wittgenstein", lw, 1403, reserve=True)

        tractatus = KBR + "Tractatus_Logico-Philosophicus"
        self.tl(tractatus, LABEL, self.claim_label("Tractatus Logico-Philosophicus"))
        self.tl(tractatus, ABSTRACT, "Tractatus Logico-Philosophicus is a treatise written by the philosopher Ludwig Wittgenstein and published in 1921.")
        self.tt(tractatus, TYPE, KBO + "Work")
        self.anchor("Tractatus Logico-Philosophicus", tractatus, 310)

        wittgensteinianism = KBR + "Wittgensteinianism"
        self.tl(wittgensteinianism, LABEL, self.claim_label("Wittgensteinianism"))
        self.tl(wittgensteinianism, ABSTRACT, "Wittgensteinianism is a school of thought inspired by Ludwig Wittgenstein.")
        self.tt(wittgensteinianism, TYPE, KBO + "PhilosophicalTradition")

        lw_local = THINKER + "t4132"
        self.ll(lw_local, NAME, "Ludwig Wittgenstein")
        self.lt(lw_local, TYPE, PHILO + "Thinker")
        self.ll(lw_local, PHILO + "era", "20th century")
        self.gold_persons.append((lw_local, lw))

        # George Moore: anchor-ambiguous homonym with disambiguation + redirect pages
        gm = KBR + "George_Moore"
        self.tl(gm, LABEL, self.claim_label("George Moore"))
        self.tl(gm, ABSTRACT, "George Moore was an English philosopher of the analytic tradition.")
        self.tt(gm, TYPE, KBO + "Person")
        gm_novelist = KBR + "George_Moore_(novelist)"
        self.tl(gm_novelist, LABEL, self.claim_label("George Moore (novelist)"))
        self.tl(gm_novelist, ABSTRACT, "George Moore (novelist) was an Irish writer of realist fiction.")
        self.tt(gm_novelist, TYPE, KBO + "Person")
        gm_disambig = KBR + "George_Moore_(disambiguation)"
        self.tl(gm_disambig, LABEL, self.claim_label("George Moore (disambiguation)"))
        self.tt(gm_disambig, DISAMBIGUATES, gm)
        self.tt(gm_disambig, DISAMBIGUATES, gm_novelist)
        gm_redirect = KBR + "George_Edward_Moore"
        self.tl(gm_redirect, LABEL, self.claim_label("George Edward Moore"))
        self.tt(gm_redirect, REDIRECTS, gm)
        self.anchor("George Moore", gm_novelist, 220, reserve=True)
        self.anchor("George Moore", gm, 90)
        self.anchor("G.E. Moore", gm, 40, reserve=True)

        moore_local = THINKER + "t2001"
        self.ll(moore_local, NAME, "G.E. Moore")
        self.ll(moore_local, LABEL, "George Moore")
        self.lt(moore_local, TYPE, PHILO + "Thinker")
        self.gold_persons.append((moore_local, gm))

        # Plato and friends (anchor table flavour with a famous ambiguity)
        plato = KBR + "Plato"
        self.tl(plato, LABEL, self.claim_label("Plato"))
        self.tl(plato, ABSTRACT, "Plato was an ancient Greek philosopher and founder of the Academy.")
        self.tt(plato, TYPE, KBO + "Person")
        plato_missouri = KBR + "Plato,_Missouri"
        self.tl(plato_missouri, LABEL, self.claim_label("Plato, Missouri"))
        self.tl(plato_missouri, ABSTRACT, "Plato, Missouri is a small town in Missouri.")
        self.tt(plato_missouri, TYPE, KBO + "Place")
        plato_crater = KBR + "Plato_(crater)"
        self.tl(plato_crater, LABEL, self.claim_label("Plato (crater)"))
        self.tl(plato_crater, ABSTRACT, "Plato (crater) is a lava-filled crater on the Moon.")
        self.tt(plato_crater, TYPE, KBO + "Place")
        plato_beer = KBR + "Plato_(beer_measurement)"
        self.tl(plato_beer, LABEL, self.claim_label("Plato (beer measurement)"))
        self.tl(plato_beer, ABSTRACT, "Plato (beer measurement) is a scale expressing the density of beer wort.")
        self.tt(plato_beer, TYPE, KBO + "Concept")
        plato_magdalena = KBR + "Plato,_Magdalena"
        self.tl(plato_magdalena, LABEL, self.claim_label("Plato, Magdalena"))
        self.tl(plato_magdalena, ABSTRACT, "Plato, Magdalena is a municipality on the river plain.")
        self.tt(plato_magdalena, TYPE, KBO + "Place")
        plato_computer = KBR + "PLATO_(computer_system)"
        self.tl(plato_computer, LABEL, self.claim_label("PLATO (computer system)"))
        self.tl(plato_computer, ABSTRACT, "PLATO (computer system) was an early computer-assisted instruction system.")
        self.tt(plato_computer, TYPE, KBO + "Work")
        self.anchor("Plato", plato, 3560, reserve=True)
        self.anchor("PLATO", plato_computer, 47, reserve=True)
        self.anchor("Plato", plato_missouri, 20)
        self.anchor("Plato", plato_crater, 15)
        self.anchor("Plato", plato_beer, 13)
        self.anchor("Plato", plato_magdalena, 9)
        self.anchor("Platon", plato, 6, reserve=True)

        plato_local = THINKER + "t1001"
        self.ll(plato_local, NAME, "Plato")
        self.lt(plato_local, TYPE, PHILO + "Thinker")
        self.ll(plato_local, PHILO + "era", "ancient")
        self.gold_persons.append((plato_local, plato))

        # Kierkegaard: gold path through a redirect page
        sk = KBR + "Soren_Kierkegaard"
        self.tl(sk, LABEL, self.claim_label("Soren Kierkegaard"))
        self.tl(sk, ABSTRACT, "Soren Kierkegaard was a Danish philosopher and religious author; Kierkegaard is widely read in existentialism.")
        self.tt(sk, TYPE, KBO + "Person")
        sk_redirect = KBR + "Kierkegaard"
        self.tl(sk_redirect, LABEL, self.claim_label("Kierkegaard"))
        self.tt(sk_redirect, REDIRECTS, sk)
        self.anchor("Kierkegaard", sk, 180, reserve=True)
        self.anchor("Soren Kierkegaard", sk, 120, reserve=True)

        sk_local = THINKER + "t3105"
        self.ll(sk_local, NAME, "Kierkegaard")
        self.lt(sk_local, TYPE, PHILO + "Thinker")
        self.gold_persons.append((sk_local, sk))

        # a redirect cycle, far away from any gold query
        za, zb = KBR + "Zyglar_Loop_A", KBR + "Zyglar_Loop_B"
        self.tl(za, LABEL, self.claim_label("Zyglar Loop A"))
        self.tl(zb, LABEL, self.claim_label("Zyglar Loop B"))
        self.tt(za, REDIRECTS, zb)
        self.tt(zb, REDIRECTS, za)

        # local journal used by autocomplete examples
        j1 = JOURNAL + "j0001"
        self.ll(j1, LABEL, "Wittgenstein Studies")
        self.lt(j1, TYPE, PHILO + "Journal")

    def build_gold_persons(self) -> None:
        # 4 specials already placed; 12 plain + 8 anchor-ambiguous + 2 without anchors
        idx = 5000
        for kind, n in (("plain", 12), ("ambiguous", 8), ("noanchor", 2)):
            for _ in range(n):
                name = self.fresh_person_name()
                target = self.person(name)
                local = THINKER + f"t{idx}"
                idx += 7
                self.ll(local, NAME, name)
                self.lt(local, TYPE, PHILO + "Thinker")
                if self.rng.random() < 0.5:
                    self.ll(local, PHILO + "era", self.rng.choice(ERAS))
                self.gold_persons.append((local, target))
                if kind == "plain":
                    self.anchor(name, target, self.rng.randint(50, 300), reserve=True)
                elif kind == "ambiguous":
                    role = self.rng.choice(DECOY_ROLES)
                    decoy_label = self.claim_label(f"{name} ({role})")
                    decoy = self.person(
                        decoy_label,
                        abstract=f"{decoy_label} was a celebrated {role}.",
                        iri=KBR + slug(decoy_label),
                    )
                    self.anchor(name, decoy, self.rng.randint(150, 400), reserve=True)
                    self.anchor(name, target, self.rng.randint(20, 80))
                else:
                    self.reserved_anchors.add(name.casefold())

    def build_gold_concepts(self) -> None:
        idx = 7000
        # 15 alias-style entries: canonical label reachable only via abstract
        for _ in range(15):
            alias1 = self.fresh_concept_pair()
            alias2 = self.fresh_concept_pair()
            canonical = self.claim_label(f"{self.invented_word()} principle")
            correct = self.concept(
                canonical,
                abstract=(
                    f"The {canonical} is a philosophical doctrine also known as "
                    f"{alias1} or {alias2}. It concerns the structure of explanation."
                ),
            )
            book_label = self.claim_label(f"{alias1} (book)")
            book = KBR + slug(book_label)
            self.tl(book, LABEL, book_label)
            self.tl(book, ABSTRACT, f"{book_label} is a monograph discussing {alias1}.")
            self.tt(book, TYPE, KBO + "Work")

            local = IDEA + f"i{idx}"
            idx += 3
            self.ll(local, LABEL, alias1)
            self.ll(local, PREFLABEL, alias2)
            self.lt(local, TYPE, PHILO + "Idea")
            self.gold_concepts.append((local, correct))

            self.anchor(alias1, correct, self.rng.randint(120, 300), reserve=True)
            self.anchor(alias2, correct, self.rng.randint(60, 150), reserve=True)
            self.anchor(alias1, book, self.rng.randint(5, 20))

        # 11 straightforward entries: exact label match everywhere
        for _ in range(11):
            label = self.fresh_concept_pair()
            correct = self.concept(
                label,
                abstract=f"{label} is a philosophical position concerning {self.rng.choice(self.filler_topics)}.",
            )
            local = IDEA + f"i{idx}"
            idx += 3
            self.ll(local, LABEL, label)
            self.lt(local, TYPE, PHILO + "Idea")
            self.gold_concepts.append((local, correct))
            self.anchor(label, correct, self.rng.randint(80, 250), reserve=True)

    def build_filler_targets(self, concept_pool: list[str]) -> None:
        # persons: up to 600 total
        placed_persons = sum("kb.example.org/ontology/Person" in line for line in self.target)
        for _ in range(600 - placed_persons):
            name = self.fresh_person_name()
            self.filler_person_names.append(name)
            mention = self.rng.choice(self.filler_person_names) if (
                len(self.filler_person_names) > 3 and self.rng.random() < 0.4
            ) else None
            self.person(name, abstract=self.person_abstract(name, mention))

        # concepts: consume the reserved filler pool, then synthesize more
        n_concepts = sum(
            line.endswith(f"<{KBO}Concept> .") or line.endswith(f"<{KBO}PhilosophicalTradition> .")
            for line in self.target
        )
        pool = list(concept_pool)
        while n_concepts < 500:
            label = pool.pop() if pool else self.fresh_concept_pair()
            tradition = self.rng.random() < 0.02
            mentor = self.rng.choice(self.filler_person_names)
            self.concept(
                label,
                abstract=(
                    f"{label} is a school of thought inspired by {mentor}."
                    if tradition
                    else f"{label} is a philosophical position examined in the literature on {self.rng.choice(self.filler_topics)}."
                ),
                tradition=tradition,
            )
            n_concepts += 1

        # places
        n_places = 0
        for town in TOWNS:
            if n_places >= 400:
                break
            for state in STATES:
                label = f"{town}, {state}"
                if label.casefold() in self.used_labels or n_places >= 400:
                    continue
                self.claim_label(label)
                iri = KBR + slug(label)
                self.tl(iri, LABEL, label)
                self.tl(iri, ABSTRACT, f"{label} is a small town in {state}.")
                self.tt(iri, TYPE, KBO + "Place")
                if self.rng.random() < 0.6:
                    self.tl(iri, KBO + "population", str(self.rng.randint(200, 90000)), None)
                n_places += 1

        # works and journals; invented stems keep them clear of gold aliases
        for i in range(300 - 2):  # two works already placed
            stem = "".join(self.rng.choice(SYLLABLES) for _ in range(2)).capitalize()
            if i % 2 == 0:
                label = f"Journal of {stem} Studies {i}"
            else:
                label = f"The {self.rng.choice(ADJECTIVES)} {stem}ia {i}"
            label = self.claim_label(label)
            iri = KBR + slug(label)
            self.tl(iri, LABEL, label)
            self.tl(iri, ABSTRACT, f"{label} is a periodical of {self.rng.choice(self.filler_topics)}.")
            self.tt(iri, TYPE, KBO + "Journal" if i % 2 == 0 else KBO + "Work")
            if self.rng.random() < 0.5:
                self.tl(iri, KBO + "foundedYear", str(self.rng.randint(1790, 1998)), None)

        # redirect pages pointing at filler persons
        for name in self.rng.sample(self.filler_person_names, 98):
            short = name.split()[1]
            label = f"{short} ({name.split()[0][0]}.)"
            if label.casefold() in self.used_labels:
                continue
            self.claim_label(label)
            iri = KBR + slug(label)
            self.tl(iri, LABEL, label)
            self.tt(iri, REDIRECTS, KBR + slug(name))

        # disambiguation pages grouping homonym-free filler persons by surname
        by_surname: dict[str, list[str]] = {}
        for name in self.filler_person_names:
            by_surname.setdefault(name.split()[1], []).append(name)
        placed = 0
        for surname, names in sorted(by_surname.items()):
            if placed >= 50:
                break
            if len(names) < 2:
                continue
            label = f"{surname} (disambiguation)"
            if label.casefold() in self.used_labels:
                continue
            self.claim_label(label)
            iri = KBR + slug(label)
            self.tl(iri, LABEL, label)
            for name in names[:4]:
                self.tt(iri, DISAMBIGUATES, KBR + slug(name))
            placed += 1

    def build_local_filler(self) -> None:
        # thinkers named after target filler persons (overlapping collections)
        idx = 1
        for name in self.rng.sample(self.filler_person_names, 164):
            local = THINKER + f"f{idx:04d}"
            idx += 1
            self.ll(local, NAME, name)
            self.lt(local, TYPE, PHILO + "Thinker")
            if self.rng.random() < 0.4:
                self.ll(local, PHILO + "era", self.rng.choice(ERAS))
            if self.rng.random() < 0.3:
                self.ll(local, PHILO + "nationality", self.rng.choice(NATIONALITIES))

        # duplicate thinker pairs joined by sameAs (legacy import artifacts)
        for i in range(10):
            name = self.fresh_person_name()
            a = THINKER + f"d{i:02d}a"
            b = THINKER + f"d{i:02d}b"
            self.ll(a, NAME, name)
            self.lt(a, TYPE, PHILO + "Thinker")
            self.ll(b, NAME, name)
            self.lt(b, TYPE, PHILO + "Thinker")
            self.lt(a, SAMEAS, b)

        # ideas
        for i in range(124):
            label = self.fresh_concept_pair()
            local = IDEA + f"f{i:04d}"
            self.ll(local, LABEL, label)
            self.lt(local, TYPE, PHILO + "Idea")

        # journals (one already placed)
        for i in range(99):
            stem = "".join(self.rng.choice(SYLLABLES) for _ in range(2)).capitalize()
            label = f"{stem} Review {i}"
            local = JOURNAL + f"f{i:04d}"
            self.ll(local, LABEL, label)
            self.lt(local, TYPE, PHILO + "Journal")

        # user accounts
        for i in range(50):
            local = USER + f"u{i:04d}"
            self.ll(local, NAME, f"curator{i:03d}")
            self.lt(local, TYPE, PHILO + "User")

    def build_filler_anchors(self) -> None:
        """Top the anchor table up to roughly 5,000 rows with filler labels."""
        seen_pairs = {(a, t) for a, t, _ in self.anchors}
        labeled: list[tuple[str, str]] = []
        for line in self.target:
            if f"<{LABEL}>" in line and '"' in line:
                iri = line.split(">", 1)[0][1:]
                label = line.split('"')[1]
                labeled.append((label, iri))
        self.rng.shuffle(labeled)

        def try_anchor(text: str, iri: str, lo: int, hi: int) -> None:
            if text.casefold() in self.reserved_anchors or (text, iri) in seen_pairs:
                return
            seen_pairs.add((text, iri))
            self.anchor(text, iri, self.rng.randint(lo, hi))

        for label, iri in labeled:
            if len(self.anchors) >= 5000:
                break
            try_anchor(label, iri, 3, 120)
            words = label.split()
            if len(words) > 1 and self.rng.random() < 0.55:
                try_anchor(words[0], iri, 1, 30)
            if len(words) > 1 and self.rng.random() < 0.45:
                try_anchor(words[-1].strip("()."), iri, 1, 25)
            if self.rng.random() < 0.4:
                try_anchor(label.lower(), iri, 1, 15)

    # -- output ----------------------------------------------------------------

    def write(self) -> None:
        OUT.mkdir(parents=True, exist_ok=True)
        (OUT / "local.nt").write_text("\n".join(self.local) + "\n", encoding="utf-8")
        (OUT / "target.nt").write_text("\n".join(self.target) + "\n", encoding="utf-8")

        total = sum(c for _, _, c in self.anchors)
        rows = sorted(self.anchors, key=lambda r: (r[0], -r[2], r[1]))
        with (OUT / "anchors.tsv").open("w", encoding="utf-8") as fh:
            fh.write(f"#total-links\t{total}\n")
            for anchor, target_iri, count in rows:
                fh.write(f"{anchor}\t{target_iri}\t{count}\n")

        def write_gold(path: Path, entries: list[tuple[str, str]]) -> None:
            with path.open("w", encoding="utf-8") as fh:
                fh.write("# localIRI<TAB>targetIRI\n")
                for local, target in entries:
                    fh.write(f"{local}\t{target}\n")

        write_gold(OUT / "gold_persons.tsv", self.gold_persons)
        write_gold(OUT / "gold_concepts.tsv", self.gold_concepts)
        write_gold(OUT / "gold_all.tsv", self.gold_persons + self.gold_concepts)

        (OUT / "prefixes.tsv").write_text(
            "\n".join(
                [
                    "# prefix<TAB>namespace",
                    f"philo\t{PHILO}",
                    f"thinker\t{THINKER}",
                    f"idea\t{IDEA}",
                    f"journal\t{JOURNAL}",
                    f"user\t{USER}",
                    f"kbr\t{KBR}",
                    f"kbo\t{KBO}",
                ]
            )
            + "\n",
            encoding="utf-8",
        )
        (OUT / "declarations.tsv").write_text(
            "# localTypeIRI<TAB>targetTypeIRI\n"
            f"{PHILO}Thinker\t{KBO}PhilosophicalTradition\n"
            f"{PHILO}Journal\t{KBO}Person\n",
            encoding="utf-8",
        )
        (OUT / "toy.cfg").write_text(
            "\n".join(
                [
                    "# toy workspace configuration (paths relative to the repo root)",
                    "data_dir=lodlink-data",
                    "local_repo_path=data/toy/local.nt",
                    "target_repo_path=data/toy/target.nt",
                    "anchor_table_path=data/toy/anchors.tsv",
                    "prefix_table_path=data/toy/prefixes.tsv",
                    "disjointness_declarations_path=data/toy/declarations.tsv",
                    "default_algorithm=endpoint-al",
                    "k=10",
                    "context_k=5",
                    "context_types_k=3",
                    "listen_address=127.0.0.1:8230",
                ]
            )
            + "\n",
            encoding="utf-8",
        )

    def stats(self) -> str:
        local_subjects = {line.split(">", 1)[0][1:] for line in self.local}
        target_subjects = {line.split(">", 1)[0][1:] for line in self.target}
        return (
            f"local: {len(self.local)} triples, {len(local_subjects)} entities\n"
            f"target: {len(self.target)} triples, {len(target_subjects)} entities\n"
            f"anchors: {len(self.anchors)} rows\n"
            f"gold: {len(self.gold_persons)} persons + {len(self.gold_concepts)} concepts"
        )


def main() -> None:
    corpus = Corpus()
    corpus.build()
    corpus.write()
    print(corpus.stats())


if __name__ == "__main__":
    main()

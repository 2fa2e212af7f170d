"""Synthetic WoS exports with a ground-truth ledger, for tests and benchmarks.

The ledger is built while writing the text, independently of the parser, so
comparing parse results against it checks the parser rather than itself.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

COUNTRIES = [
    "South Korea", "England", "Scotland", "Wales", "North Ireland", "Peoples R China",
    "Germany", "Netherlands", "Japan", "Canada", "Australia", "France", "Spain",
]
US_STATES = ["MA", "CA", "NY", "TX", "PA", "IL", "GA", "WA"]
DEPTS = ["Sch Technol Management", "Dept Informat Syst", "Business Sch", "Fac Econ",
         "Dept Comp Sci", "Inst Commun Res"]
CITIES = ["Ulsan", "Oxford", "Edinburgh", "Cardiff", "Belfast", "Beijing", "Munich",
          "Amsterdam", "Tokyo", "Toronto", "Sydney", "Paris", "Madrid"]


@dataclass
class Ledger:
    records: int = 0
    tag_values: Counter = field(default_factory=Counter)  # tag -> total value lines
    records_with_tag: Counter = field(default_factory=Counter)
    address_rows: int = 0
    per_record: list[dict[str, list[str]]] = field(default_factory=list)
    institutions: list[tuple[int, str]] = field(default_factory=list)  # (doc_id, institution)
    countries: list[tuple[int, str]] = field(default_factory=list)


def _address(rng: random.Random, inst: str) -> tuple[str, str]:
    if rng.random() < 0.3:
        state = rng.choice(US_STATES)
        zipc = rng.randint(10000, 99999)
        return f"{inst}, {rng.choice(DEPTS)}, Cambridge, {state} {zipc} USA", "USA"
    i = rng.randrange(len(COUNTRIES))
    country = COUNTRIES[i]
    return f"{inst}, {rng.choice(DEPTS)}, {CITIES[i]}, {country}", country


def _emit(lines: list[str], tag: str, values: list[str]) -> None:
    lines.append(f"{tag} {values[0]}")
    lines.extend("   " + v for v in values[1:])


def generate_corpus(n_records: int, seed: int = 0, n_institutions: int = 200,
                    mixed_case: bool = False) -> tuple[str, Ledger]:
    """Tagged export text for ``n_records`` records plus its ledger."""
    rng = random.Random(seed)
    led = Ledger()
    insts = [f"Univ {i:05d}" for i in range(n_institutions)]
    lines = ["FN Clarivate Analytics Web of Science", "VR 1.0"]
    for d in range(1, n_records + 1):
        rec: dict[str, list[str]] = {"PT": ["J"]}
        n_au = rng.randint(1, 5)
        rec["AU"] = [f"Author{rng.randrange(10_000)}, {chr(65 + rng.randrange(26))}" for _ in range(n_au)]
        title = [f"Title words {d} part {k}" for k in range(rng.randint(1, 2))]
        rec["TI"] = title
        rec["SO"] = [rng.choice(["MIS QUARTERLY", "INFORMATION SYSTEMS RESEARCH",
                                 "JOURNAL OF INFORMATION TECHNOLOGY"])]
        c1 = []
        for _ in range(rng.choice([0, 1, 1, 2, 3])):
            inst = rng.choice(insts)
            if mixed_case and rng.random() < 0.5:
                inst = inst.upper()
            addr, country = _address(rng, inst)
            scope = f"[{rec['AU'][0]}] " if rng.random() < 0.5 else ""
            c1.append(scope + addr)
            led.institutions.append((d, inst))
            led.countries.append((d, country))
            if rng.random() < 0.1:  # same address listed twice
                c1.append(scope + addr)
                led.institutions.append((d, inst))
                led.countries.append((d, country))
        if c1:
            rec["C1"] = c1
        n_cr = rng.randint(0, 6)
        if n_cr:
            rec["CR"] = [f"Ref{rng.randrange(500)}, {rng.randint(1980, 2014)}, J REF, V{rng.randint(1, 40)}"
                         for _ in range(n_cr)]
        rec["PY"] = [str(rng.randint(1995, 2014))]
        if rng.random() < 0.05:
            rec["ZZ"] = ["unknown tag kept"]
        for tag, values in rec.items():
            _emit(lines, tag, values)
            led.tag_values[tag] += len(values)
            led.records_with_tag[tag] += 1
        led.address_rows += len(c1)
        led.per_record.append(rec)
        lines.append("ER")
        lines.append("")
    lines.append("EF")
    led.records = n_records
    return "\n".join(lines) + "\n", led


@dataclass
class PlantedStructure:
    giant: int
    triads: int
    dyads: int
    isolates: int

    def census(self) -> list[tuple[int, int]]:
        out = [(self.giant, 1)]
        out += [(s, c) for s, c in ((3, self.triads), (2, self.dyads), (1, self.isolates)) if c]
        return out


def planted_collaboration(plan: PlantedStructure, seed: int = 0, extra_docs: int = 0) -> str:
    """Export whose institution network has exactly the planted components.

    The giant component is grown as a random tree (one document per tree
    edge) plus ``extra_docs`` documents among random giant institutions.
    """
    rng = random.Random(seed)
    docs: list[list[str]] = []
    giant = [f"GIANT INST {i:05d}" for i in range(plan.giant)]
    for i in range(1, plan.giant):
        docs.append([giant[i], giant[rng.randrange(i)]])
    for _ in range(extra_docs):
        docs.append(rng.sample(giant, min(len(giant), rng.randint(1, 4))))
    for t in range(plan.triads):
        a, b, c = (f"TRIAD {t:04d} {x}" for x in "ABC")
        docs.append([a, b, c] if rng.random() < 0.5 else [a, b])
        if len(docs[-1]) == 2:
            docs.append([b, c])
    for k in range(plan.dyads):
        docs.append([f"DYAD {k:04d} A", f"DYAD {k:04d} B"])
    for k in range(plan.isolates):
        inst = f"ISOLATE {k:04d}"
        docs.append([inst, inst] if rng.random() < 0.3 else [inst])
    rng.shuffle(docs)

    lines = ["FN Clarivate Analytics Web of Science", "VR 1.0"]
    for d, insts in enumerate(docs, start=1):
        lines.append("PT J")
        lines.append(f"AU Author{d}, A")
        lines.append(f"TI Planted document {d}")
        addrs = [_address(rng, inst)[0] for inst in insts]
        _emit(lines, "C1", addrs)
        lines.append("ER")
        lines.append("")
    lines.append("EF")
    return "\n".join(lines) + "\n"


def ceiling_corpus(n_attributes: int = 100_000, n_pairs: int = 1_000_000,
                   per_doc: int = 5, seed: int = 0) -> str:
    """Large export: ``n_pairs`` C1 lines over exactly ``n_attributes`` institutions."""
    rng = random.Random(seed)
    ids = list(range(n_attributes)) + [rng.randrange(n_attributes) for _ in range(n_pairs - n_attributes)]
    rng.shuffle(ids)
    out = ["FN Clarivate Analytics Web of Science", "VR 1.0"]
    for start in range(0, n_pairs, per_doc):
        chunk = ids[start:start + per_doc]
        out.append("PT J")
        first = True
        for k in chunk:
            out.append(f"{'C1' if first else '  '} INST{k:06d}, Dept, City, Country")
            first = False
        out.append("ER")
    out.append("EF")
    return "\n".join(out) + "\n"

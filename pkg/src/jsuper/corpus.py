"""Loading of the shipped data corpus: one catalog per variety type plus the
matching degeneration-certificate and non-degeneration tables, the battery
identity list, and the imported even-part edges for type (4,1)."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .catalog import (
    Catalog,
    parse_catalog,
    parse_certificates,
    parse_identity_list,
    parse_imported_edges,
    parse_nondeg_table,
)

TYPE_KEYS = ((4, 1), (1, 4), (3, 2), (2, 3), (0, 5))

#: types that carry degeneration/non-degeneration tables, with the table ids
DEG_TABLE_ID = {(1, 4): 7, (3, 2): 10, (2, 3): 12}
NONDEG_TABLE_ID = {(1, 4): 8, (3, 2): 11, (2, 3): 13}
TABLE_TO_TYPE = {7: (1, 4), 10: (3, 2), 12: (2, 3), 8: (1, 4), 11: (3, 2), 13: (2, 3)}

#: generators of the irreducible components established for each variety
EXPECTED_MAXIMAL = {
    (1, 4): ("(1,4)_3", "(1,4)_6", "(1,4)_7", "(1,4)_9"),
    (3, 2): ("(3,2)_18", "(3,2)_19", "(3,2)_23", "(3,2)_25", "(3,2)_27", "(3,2)_29"),
    (2, 3): ("(2,3)_15", "(2,3)_33", "(2,3)_41", "(2,3)_31^lambda", "(2,3)_44^phi"),
}


def _slug(type_key) -> str:
    return f"{type_key[0]}_{type_key[1]}"


def default_data_dir() -> Path:
    return Path(resources.files("jsuper") / "data")


@dataclass
class Corpus:
    data_dir: Path
    catalogs: dict
    degenerations: dict  # type_key -> list of certificates
    nondegenerations: dict  # type_key -> list of rows
    identities: tuple
    imported: dict = field(default_factory=dict)  # type_key -> imported edges

    def catalog(self, type_key) -> Catalog:
        return self.catalogs[tuple(type_key)]


def load_corpus(data_dir: Path | None = None) -> Corpus:
    base = Path(data_dir) if data_dir is not None else default_data_dir()
    catalogs = {}
    for key in TYPE_KEYS:
        path = base / f"catalog_{_slug(key)}.txt"
        catalogs[key] = parse_catalog(path.read_text())
    degenerations = {}
    for key in list(DEG_TABLE_ID) + [(4, 1)]:
        path = base / f"degenerations_{_slug(key)}.txt"
        if path.exists():
            degenerations[key] = parse_certificates(path.read_text(), catalogs[key])
    nondegenerations = {}
    for key in NONDEG_TABLE_ID:
        path = base / f"nondegenerations_{_slug(key)}.txt"
        nondegenerations[key] = parse_nondeg_table(path.read_text(), catalogs[key])
    identities = tuple(parse_identity_list((base / "identities.txt").read_text()))
    imported = {}
    imp_path = base / "imported_4_1.txt"
    if imp_path.exists():
        imported[(4, 1)] = parse_imported_edges(imp_path.read_text(), catalogs[(4, 1)])
    return Corpus(
        data_dir=base,
        catalogs=catalogs,
        degenerations=degenerations,
        nondegenerations=nondegenerations,
        identities=identities,
        imported=imported,
    )


def parse_type(text: str):
    """Accept (m,n), m,n or m_n."""
    cleaned = text.strip().strip("()").replace("_", ",")
    parts = [p for p in cleaned.split(",") if p != ""]
    if len(parts) != 2:
        raise ValueError(f"bad type {text!r}")
    key = (int(parts[0]), int(parts[1]))
    if key not in TYPE_KEYS:
        raise ValueError(f"unknown type {text!r}; known: " + ", ".join(f"({a},{b})" for a, b in TYPE_KEYS))
    return key


def verified_edges(corpus: Corpus, type_key):
    """(source, target) pairs of all certificates of one type that verify."""
    from .degeneration import verify_degeneration

    cat = corpus.catalog(type_key)
    edges = []
    failures = []
    for cert in corpus.degenerations.get(tuple(type_key), ()):
        result = verify_degeneration(cert, cat)
        if result.ok:
            edges.append((cert.source, cert.target))
        else:
            failures.append((cert, result))
    return edges, failures


def reachability_pairs(edges):
    """Strict transitive closure of an edge list as a set of pairs."""
    adj = {}
    for s, t in edges:
        adj.setdefault(s, set()).add(t)
    reach = {}

    def visit(u):
        if u in reach:
            return reach[u]
        reach[u] = set()
        acc = set()
        for v in adj.get(u, ()):
            acc.add(v)
            acc |= visit(v)
        reach[u] = acc
        return acc

    for u in list(adj):
        visit(u)
    return {(u, v) for u, vs in reach.items() for v in vs}

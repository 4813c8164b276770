"""Degeneration order of a catalog: reachability, transitive reduction,
maximal nodes (irreducible components), and DOT/CSV export.

Families are single nodes.  The universal degeneration to the trivial
algebra is added implicitly and survives the reduction only where it is the
sole path, mirroring the usual diagram conventions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import Catalog
from . import invariants as inv
from .identities import check_associativity


class CycleError(ValueError):
    """A cycle in the degeneration order; fatal data inconsistency."""


@dataclass
class HasseGraph:
    type_key: tuple
    nodes: tuple  # catalog order
    edges: tuple  # (source, target, status) with status verified|imported
    reduced_edges: tuple
    maximal_nodes: tuple
    reach: dict  # node -> frozenset of reachable nodes (strict)


def _reachability(nodes, adj):
    reach = {}

    def visit(u, stack):
        if u in reach:
            return reach[u]
        if u in stack:
            raise CycleError(f"degeneration cycle through {u}")
        stack.add(u)
        acc = set()
        for v in adj.get(u, ()):
            acc.add(v)
            acc |= visit(v, stack)
        stack.discard(u)
        reach[u] = frozenset(acc)
        return reach[u]

    for node in nodes:
        visit(node, set())
    for node in nodes:
        if node in reach[node]:
            raise CycleError(f"degeneration cycle through {node}")
    return reach


def build_hasse(cat: Catalog, verified_edges, imported_edges=(), trivial: str | None = None) -> HasseGraph:
    """Assemble the order from verified (and optionally imported) edges.

    ``trivial`` names the zero algebra; every node acquires the implicit
    universal edge onto it before the reduction is taken.
    """
    nodes = tuple(e.name for e in cat.entries)
    node_set = set(nodes)
    statuses = {}
    for s, t in verified_edges:
        if s not in node_set or t not in node_set:
            raise KeyError(f"edge endpoint not in catalog: {s} -> {t}")
        statuses[(s, t)] = "verified"
    for s, t in imported_edges:
        if (s, t) not in statuses:
            statuses[(s, t)] = "imported"
    if trivial is None:
        zero = [e.name for e in cat.entries if e.algebra.is_zero_algebra()]
        trivial = zero[0] if zero else None
    if trivial is not None:
        for node in nodes:
            if node != trivial and (node, trivial) not in statuses:
                statuses[(node, trivial)] = "verified"  # universal scaling edge

    adj = {}
    for (s, t) in statuses:
        adj.setdefault(s, set()).add(t)
    reach = _reachability(nodes, adj)

    reduced = []
    for (s, t) in statuses:
        through = any(t in reach[v] for v in adj[s] if v != t)
        if not through:
            reduced.append((s, t))

    maximal = tuple(n for n in nodes if not any(n in reach[m] for m in nodes if m != n))
    edge_order = {name: i for i, name in enumerate(nodes)}
    ordered = sorted(statuses, key=lambda e: (edge_order[e[0]], edge_order[e[1]]))
    return HasseGraph(
        type_key=cat.type_key,
        nodes=nodes,
        edges=tuple((s, t, statuses[(s, t)]) for s, t in ordered),
        reduced_edges=tuple((s, t) for s, t in ordered if (s, t) in set(reduced)),
        maximal_nodes=maximal,
        reach=reach,
    )


@dataclass
class ComponentReport:
    maximal: tuple
    components: tuple  # (generator, closure member tuple)
    covered: bool  # every node lies in some component
    separation: tuple  # battery verdict summaries between maximal pairs
    unseparated: tuple


def components(cat: Catalog, graph: HasseGraph, ctx=None):
    """One component per maximal node; pairwise separation via the battery."""
    comps = []
    for g in graph.maximal_nodes:
        closure = (g,) + tuple(n for n in graph.nodes if n in graph.reach[g])
        comps.append((g, closure))
    covered_nodes = set()
    for _, closure in comps:
        covered_nodes.update(closure)
    covered = covered_nodes == set(graph.nodes)
    separation = []
    unseparated = []
    if ctx is not None:
        from .degeneration import battery

        for a in graph.maximal_nodes:
            for b in graph.maximal_nodes:
                if a == b:
                    continue
                verdict = battery(ctx, cat[a].algebra, cat[b].algebra)
                separation.append((a, b, verdict.klass, verdict.detail))
                if not verdict.conclusive:
                    unseparated.append((a, b))
    return ComponentReport(
        maximal=graph.maximal_nodes,
        components=tuple(comps),
        covered=covered,
        separation=tuple(separation),
        unseparated=tuple(unseparated),
    )


def _short(name: str, type_key) -> str:
    prefix = f"({type_key[0]},{type_key[1]})_"
    return name[len(prefix):] if name.startswith(prefix) else name


def export_dot(graph: HasseGraph, cat: Catalog) -> str:
    """Deterministic DOT text: maximal nodes gray-filled, associative ones
    drawn as circles, every node annotated with dim Aut."""
    lines = [f'digraph "NJS({graph.type_key[0]},{graph.type_key[1]})" {{']
    lines.append("  rankdir=BT;")
    lines.append("  node [fontsize=11];")
    maximal = set(graph.maximal_nodes)
    for name in graph.nodes:
        alg = cat[name].algebra
        label = _short(name, graph.type_key)
        aut = inv.even_derivation_dim(alg)
        shape = "circle" if check_associativity(alg) else "box"
        attrs = [f'label="{label}\\nAut {aut}"', f"shape={shape}"]
        if name in maximal:
            attrs.append("style=filled")
            attrs.append("fillcolor=gray80")
        lines.append(f'  "{label}" [{", ".join(attrs)}];')
    reduced = set(graph.reduced_edges)
    for s, t, status in graph.edges:
        if (s, t) not in reduced:
            continue
        attrs = " [style=dashed]" if status == "imported" else ""
        lines.append(f'  "{_short(s, graph.type_key)}" -> "{_short(t, graph.type_key)}"{attrs};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_edge_csv(graph: HasseGraph) -> str:
    lines = ["source,target,status"]
    for s, t, status in graph.edges:
        lines.append(f"{s},{t},{status}")
    return "\n".join(lines) + "\n"

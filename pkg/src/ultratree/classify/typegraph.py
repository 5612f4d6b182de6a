"""
The type graph of a schema: one node per type, one edge per nonempty child spec
"""
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx

from ultratree.lazygen.schema import ChildSpec, SpecRef, TreeSchema

EdgeFilter = Callable[[ChildSpec], bool]


def type_graph(schema: TreeSchema) -> nx.MultiDiGraph:
    """Edges are keyed by the spec's index in its parent's declaration"""
    g = nx.MultiDiGraph(name=schema.name)
    g.add_nodes_from(schema.type_names)
    for name in schema.type_names:
        for ref in schema.specs(name):
            if not ref.spec.is_empty:
                g.add_edge(name, ref.child, key=ref.index, spec=ref.spec)
    return g


def reachable_types(schema: TreeSchema, g: Optional[nx.MultiDiGraph] = None) -> Tuple[str, ...]:
    g = type_graph(schema) if g is None else g
    reached = nx.descendants(g, schema.root_type) | {schema.root_type}
    return tuple(name for name in schema.type_names if name in reached)


def min_positions(schema: TreeSchema, g: Optional[nx.MultiDiGraph] = None) -> Dict[str, int]:
    """Smallest position index (depth + 1) at which each reachable type occurs"""
    g = type_graph(schema) if g is None else g
    depths = nx.single_source_shortest_path_length(g, schema.root_type)
    return {name: depth + 1 for name, depth in depths.items()}


def find_type_cycle(schema: TreeSchema, keep: Optional[EdgeFilter] = None) -> Optional[List[SpecRef]]:
    """A reachable cycle through kept specs, or None

    The cycle starts at its earliest-declared type.
    """
    g = type_graph(schema)
    reached = set(reachable_types(schema, g))
    view = nx.subgraph_view(
        g,
        filter_node=lambda n: n in reached,
        filter_edge=lambda u, v, k: keep is None or keep(g.edges[u, v, k]["spec"]),
    )
    sources = [name for name in schema.type_names if name in reached]
    try:
        edges = nx.find_cycle(view, source=sources)
    except nx.NetworkXNoCycle:
        return None

    refs = [SpecRef(u, k, g.edges[u, v, k]["spec"]) for u, v, k in edges]
    order = {name: i for i, name in enumerate(schema.type_names)}
    start = min(range(len(refs)), key=lambda i: order[refs[i].parent])
    return refs[start:] + refs[:start]

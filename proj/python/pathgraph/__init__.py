"""Path graph recognition and certification."""

import json

from ._core import (
    Error,
    GenerationError,
    Graph,
    GuardRefusal,
    InputError,
    InvariantError,
    PreconditionError,
    RealizationError,
    clique_separators,
    family_dot,
    gen_chordal,
    gen_path_graph,
    graph_plus,
    hole,
    host_paths,
    is_chordal,
    is_directed_path_graph,
    is_path_graph,
    k4_hub_graph,
    lettered_graph,
    maximal_cliques,
    oracle_clique_path_tree,
    parse_graph,
    realize,
    to_edgelist,
    to_graph6,
    verdict_json,
)


def certify(graph, gplus=False, realization=False, detail=True):
    """Verdict document as a dict."""
    return json.loads(verdict_json(graph, gplus=gplus, realization=realization, detail=detail))


__all__ = [name for name in dir() if not name.startswith("_")]

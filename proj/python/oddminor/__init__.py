"""Odd clique minors, parity-breaking paths and colorings (C++ core)."""

import json

from ._oddminor import (
    Error,
    Graph,
    HypothesisUnmet,
    InputError,
    InternalError,
    SizeLimitExceeded,
    bound_M,
    bound_N,
    color,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    detect_odd_clique,
    graph_hash,
    has_odd_s_path,
    is_bipartite,
    odd_s_paths,
    parse_graph,
    path_graph,
    random_graph,
    verify_certificate,
    write_graph,
)

SCHEMA = "odd-minor-kit/1"


def load_certificate(text):
    """Parsed certificate as a dict; raises ValueError on a foreign schema."""
    data = json.loads(text)
    if data.get("schema") != SCHEMA:
        raise ValueError("not an %s certificate" % SCHEMA)
    return data


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]

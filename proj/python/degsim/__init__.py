"""Exact mu-polynomials, Smith forms and degree-similarity of graphs."""

import json as _json

from . import _core
from ._core import (
    Graph,
    ParseError,
    certificate,
    complement,
    enumerate_unicyclic,
    isomorphic,
    mckay_pair,
    named_graph,
    read_graphs,
    srg_params,
)

__all__ = [
    "Graph",
    "ParseError",
    "alpha_polynomial",
    "certificate",
    "complement",
    "cospectral",
    "degree_similar",
    "enumerate_unicyclic",
    "invariants",
    "isomorphic",
    "mckay_pair",
    "mu_polynomial",
    "mu_snf",
    "named_graph",
    "read_graphs",
    "srg_params",
]


def mu_polynomial(g):
    return _json.loads(_core.mu_polynomial(g))


def alpha_polynomial(g):
    return _json.loads(_core.alpha_polynomial(g))


def mu_snf(g):
    return _json.loads(_core.mu_snf(g))


def invariants(g, walks=6):
    return _json.loads(_core.invariants(g, walks))


def cospectral(g1, g2, mode="mu"):
    return _core.cospectral(g1, g2, mode)


def degree_similar(g1, g2, seed=0):
    return _json.loads(_core.degree_similar(g1, g2, seed))

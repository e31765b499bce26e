"""Orthogonal colourings of clique grids and random geometric graphs."""

import json as _json

from ._core import (
    ColouringPair,
    Graph,
    VerificationReport,
    brute_force_ochi,
    build_H,
    build_L,
    classify_case,
    colour_H,
    colour_L,
    colours_used,
    compose_orthogonal,
    dense_params,
    is_orthogonal,
    ochi_H,
    ochi_L_upper,
    sample_rgg,
    strong_product,
    verify,
)
from . import _core


def colour_rgg_dense(n, alpha, seed):
    return _json.loads(_core.colour_rgg_dense(n, alpha, seed))


def colour_rgg_optimal(m, t, r, seed, d=None):
    return _json.loads(_core.colour_rgg_optimal(m, t, r, seed, d))


def theorem_one_suite(max_m, max_d, max_t, oracle_max_vertices=12):
    return _json.loads(_core.theorem_one_suite(max_m, max_d, max_t, oracle_max_vertices, "json"))


def dense_campaign(n_values, alpha=0.25, trials=10, seed=1, format="json"):
    text = _core.dense_campaign(list(n_values), alpha, trials, seed, format)
    return _json.loads(text) if format == "json" else text


def optimal_campaign(instances, trials=10, seed=1, format="json"):
    text = _core.optimal_campaign(list(instances), trials, seed, format)
    return _json.loads(text) if format == "json" else text


__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact ECH index, capacity and embedding-obstruction computations.

Rationals are returned as fractions.Fraction. Structured results are plain
dicts in which every rational is a Fraction.
"""

import json
from fractions import Fraction

from ._ech import action, capacities, index, normalize, profile
from ._ech import _obstruct_json, _ratio_json, _witness_json

__all__ = ["action", "capacities", "index", "normalize", "profile", "ratio", "obstruct", "witness"]


def _decode(obj):
    if isinstance(obj, dict):
        if obj.keys() == {"num", "den"}:
            return Fraction(int(obj["num"]), int(obj["den"]))
        return {k: _decode(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_decode(v) for v in obj]
    return obj


def ratio(num, den, k_max):
    """Maximum of c_k(num)/c_k(den) over k = 1..k_max."""
    return _decode(json.loads(_ratio_json(num, den, k_max)))


def obstruct(a, p, d0, q=2, c=None, prune=True, node_limit=100_000_000, n_min=1, n_max=None):
    """Run the criterion for P(a,1) into E(pc/q, c) against e(p,q)^d0.

    With c=None every c below the inclusion threshold is covered at once.
    """
    return _decode(json.loads(_obstruct_json(a, p, d0, q, c, prune, node_limit, n_min, n_max)))


def witness(variant, d0, p=None, q=None, epsilon=None, c=None):
    """Build and check a no-obstruction witness for variant "A", "B" or "C"."""
    return _decode(json.loads(_witness_json(variant, d0, p, q, epsilon, c)))

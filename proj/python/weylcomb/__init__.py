"""Dynkin diagram, affine root system, and Weyl group combinatorics engine.

The heavy lifting lives in the compiled ``weylcomb._core`` extension; this
package adds thin dict-returning wrappers around the JSON report producers.
"""

import json as _json

from ._core import (  # noqa: F401
    DynkinDiagram,
    Subdiagram,
    WeylElement,
    WeylGroup,
    __version__,
    affinize_twisted,
    affinize_untwisted,
    build_finite,
    cominuscule_nodes,
    coweight_pairing,
    cross_check,
    delete_node,
    diagram_isomorphism,
    highest_root,
    highest_short_root,
    is_real_root,
    minuscule_nodes,
    nilradical_roots,
    parabolic_roots,
    positive_roots,
    to_dot,
)
from ._core import classify_case_json as _classify_case_json
from ._core import sweep_json as _sweep_json
from ._core import verify_case_json as _verify_case_json


def classify_case(family, rank, node):
    """Classify one (family, rank, node) case; returns a dict."""
    return _json.loads(_classify_case_json(family, rank, node))


def verify_case(family, rank, node, lemma="all"):
    """Run the lemma checks on one case; returns the report as a dict."""
    return _json.loads(_verify_case_json(family, rank, node, lemma))


def sweep(max_rank):
    """Verify every case up to ``max_rank``; returns the report as a dict."""
    return _json.loads(_sweep_json(max_rank))

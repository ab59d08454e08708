"""Approximation operators, topologies and closure theory on finite posets."""

import json

from ._orderlab import (
    AuxRelation,
    OrderlabError,
    Poset,
    __version__,
    antichain,
    boolean,
    bottom_relation,
    chain,
    classify,
    cli,
    diamond,
    enumerate_aux,
    enumerate_posets,
    lap,
    mu_topology,
    one_step,
    order_relation,
    poset_from_json,
    property_names,
    random_poset,
    relation_from_json,
    scott_topology,
    uap,
    validate_aux,
    way_below,
)
from ._orderlab import _replay, _run_exhaustive, _search


def run_suite(max_n, suites=("all",), jobs=1):
    """Run theorem suites over every labeled poset with 1..max_n elements."""
    return json.loads(_run_exhaustive(max_n, list(suites), jobs))


def search_counterexample(prop, max_n):
    """First counterexample to `prop` among posets with 1..max_n elements, or None."""
    found = _search(prop, max_n)
    return None if found is None else json.loads(found)


def replay(suite, fingerprint):
    """Re-run one suite on a fingerprinted instance."""
    return json.loads(_replay(suite, fingerprint))


__all__ = [name for name in dir() if not name.startswith("_")]

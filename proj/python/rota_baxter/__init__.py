"""Rota-Baxter operators on finite groups.

Elements are integer indices into a group's Cayley table; operators are
lists of images, one per element.
"""

import json

from ._rbg import (
    Group,
    RbgError,
    central_conjugation,
    corpus_group,
    corpus_names,
    enumerate,
    is_splitting,
    power_map,
    tilde,
    verify,
)
from . import _rbg


def census(group, method="graph", classify=False):
    return json.loads(_rbg.census_json(group, method, classify))


def derived(group, images):
    return json.loads(_rbg.derived_json(group, images))


def extend(group, gens, images):
    return json.loads(_rbg.extend_json(group, gens, images))


def lie_ring(group, images=None):
    return json.loads(_rbg.lie_ring_json(group, images))


def cli(*args):
    """Run the rbg command line in-process: (exit code, stdout, stderr)."""
    return _rbg.cli([str(a) for a in args])


__all__ = [
    "Group",
    "RbgError",
    "census",
    "central_conjugation",
    "cli",
    "corpus_group",
    "corpus_names",
    "derived",
    "enumerate",
    "extend",
    "is_splitting",
    "lie_ring",
    "power_map",
    "tilde",
    "verify",
]

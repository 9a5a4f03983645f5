"""Fixture catalog: diagram definitions, frozen expected values, anchors.

Checkpoint anchors have the form "<file>:<path>" where <file> is one of the
JSON fixtures in the package data directory and <path> walks its keys with
slashes.  Every anchor used in a report must resolve here.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .coxeter import CoxeterDiagram

_FILES = ("diagrams", "expectations", "ab_pairs")


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    if name not in _FILES:
        raise KeyError(f"unknown fixture file {name!r}")
    ref = resources.files("reptile_lab") / "fixtures" / f"{name}.json"
    with ref.open("r") as f:
        return json.load(f)


@lru_cache(maxsize=None)
def diagram(key: str) -> CoxeterDiagram:
    return CoxeterDiagram.from_fixture(load("diagrams")[key])


def resolve_anchor(anchor: str) -> bool:
    """True iff the anchor points at an existing fixture entry.

    The path after the colon walks keys separated by slashes; since some
    keys are fractions and contain a slash themselves, adjacent parts are
    joined greedily until one matches.
    """
    try:
        name, path = anchor.split(":", 1)
    except ValueError:
        return False

    def walk(node, parts) -> bool:
        if not parts:
            return True
        if isinstance(node, list):
            try:
                idx = int(parts[0])
                return 0 <= idx < len(node) and walk(node[idx], parts[1:])
            except ValueError:
                return False
        if not isinstance(node, dict):
            return False
        for i in range(1, len(parts) + 1):
            key = "/".join(parts[:i])
            if key in node and walk(node[key], parts[i:]):
                return True
        return False

    try:
        return walk(load(name), path.split("/"))
    except KeyError:
        return False

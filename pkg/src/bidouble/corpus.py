"""Bundled example algebras used by tests, the CLI suite and benchmarks."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .algebra import Algebra, commutator_lie, dendriform_to_prelie
from .fileio import algebra_from_obj


@lru_cache(maxsize=None)
def _load() -> tuple:
    text = resources.files("bidouble").joinpath("data/corpus.json").read_text(encoding="utf-8")
    raw = json.loads(text)["algebras"]
    return tuple((obj["name"], algebra_from_obj(obj)) for obj in raw)


def raw_entries() -> list:
    """The corpus file's algebra objects, as stored."""
    text = resources.files("bidouble").joinpath("data/corpus.json").read_text(encoding="utf-8")
    return json.loads(text)["algebras"]


def algebras(kind: str) -> dict:
    """Corpus algebras of one kind, keyed by name (file order).

    ``prelie`` and ``lie`` entries are derived from the dendriform and
    associative entries through the standard functors.
    """
    if kind in ("associative", "dendriform"):
        return {name: a for name, a in _load() if a.kind == kind}
    if kind == "prelie":
        return {name: dendriform_to_prelie(d) for name, d in algebras("dendriform").items()}
    if kind == "lie":
        return {name: commutator_lie(a) for name, a in algebras("associative").items()}
    raise ValueError(f"unknown kind {kind!r}")


def get(name: str, kind: str = "associative") -> Algebra:
    return algebras(kind)[name]

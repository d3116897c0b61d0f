"""Named complexes shipped with the package, and the expected classification lists.

Set ``SRPOWERS_FIXTURES`` to point the loader at another directory with the
same layout (``index.json`` plus one ``<name>.json`` complex per entry).
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from pathlib import Path

from .complex import SimplicialComplex, load_complex

ENV_VAR = "SRPOWERS_FIXTURES"


def fixture_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    return Path(override) if override else Path(__file__).with_name("fixtures")


@lru_cache(maxsize=None)
def _index(directory: str) -> dict:
    return json.loads((Path(directory) / "index.json").read_text())


def index() -> dict:
    return _index(str(fixture_dir()))


def fixture_names() -> list[str]:
    return sorted(p.stem for p in fixture_dir().glob("*.json") if p.stem != "index")


def load_fixture(name: str) -> SimplicialComplex:
    path = fixture_dir() / f"{name}.json"
    if not path.exists():
        raise KeyError(f"no fixture named {name!r} in {fixture_dir()}")
    return load_complex(path)


def expected_list(theorem: str, n: int) -> list[str] | None:
    """Fixture names expected for a classification at ``n``, or None if not listed."""
    table = index()["classifications"].get(theorem)
    if table is None:
        raise KeyError(f"no classification list for {theorem!r}")
    names = table.get(str(n))
    return None if names is None else list(names)


def expected_complexes(theorem: str, n: int) -> list[SimplicialComplex] | None:
    names = expected_list(theorem, n)
    return None if names is None else [load_fixture(x) for x in names]

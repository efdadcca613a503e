"""Built-in data sets and the loader that finds them.

A fixture is a JSON document with a ``kind`` field. Names are looked up first
in the directories listed in ``ZARISKI_FIXTURE_PATH`` and then among the
files shipped with the package; anything containing a path separator or
ending in ``.json`` is read as a file path.
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path

ENV_VAR = "ZARISKI_FIXTURE_PATH"


class FixtureError(LookupError):
    pass


def _candidates(name: str):
    if name.endswith(".json") or os.sep in name or "/" in name:
        yield Path(name)
        return
    for d in filter(None, os.environ.get(ENV_VAR, "").split(os.pathsep)):
        yield Path(d) / f"{name}.json"


def load_fixture(name: str) -> dict:
    for path in _candidates(name):
        if path.is_file():
            with open(path, encoding="utf-8") as fh:
                return json.load(fh)
    if not (name.endswith(".json") or "/" in name or os.sep in name):
        res = resources.files(__name__).joinpath(f"{name}.json")
        if res.is_file():
            return json.loads(res.read_text(encoding="utf-8"))
    raise FixtureError(f"fixture {name!r} not found")


def builtin_names() -> list:
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))

"""Reading matroids and subdivisions from JSON files with positioned errors."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .matroid import Matroid, matroid_from_bases
from .subdivision import Subdivision


def _load_json(path) -> object:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.lineno, exc.colno) from None


def _matroid(data, where: str) -> Matroid:
    if not isinstance(data, dict) or "n" not in data or "bases" not in data:
        raise ParseError(f"{where}: expected an object with 'n' and 'bases'")
    n, bases = data["n"], data["bases"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError(f"{where}: 'n' must be an integer")
    if not isinstance(bases, list) or not all(
            isinstance(b, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in b)
            for b in bases):
        raise ParseError(f"{where}: 'bases' must be a list of integer lists")
    return matroid_from_bases(n, bases)


def parse_matroid(data) -> Matroid:
    return _matroid(data, "matroid")


def parse_subdivision(data) -> Subdivision:
    if not isinstance(data, dict) or "ambient" not in data or "cells" not in data:
        raise ParseError("subdivision: expected an object with 'ambient' and 'cells'")
    if not isinstance(data["cells"], list) or not data["cells"]:
        raise ParseError("subdivision: 'cells' must be a nonempty list")
    ambient = _matroid(data["ambient"], "ambient")
    cells = tuple(_matroid(c, f"cell {k}") for k, c in enumerate(data["cells"], 1))
    return Subdivision(ambient, cells)


def load_matroid(path) -> Matroid:
    return parse_matroid(_load_json(path))


def load_subdivision(path) -> Subdivision:
    return parse_subdivision(_load_json(path))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)

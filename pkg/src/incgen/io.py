"""Reading and writing the on-disk formats: poset files and JSON tuple files."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import IncGenError, PosetSyntaxError
from .incidence import IncMatrix
from .poset import Poset, format_poset, from_pairs, parse_poset, standard_poset
from .rings import BaseRing, parse_ring


def load_poset(source: str) -> Poset:
    """Read a poset file; ``chain:N`` and ``antichain:N`` are accepted as shorthands."""
    kind, _, num = source.partition(":")
    if kind in ("chain", "antichain") and num.isdigit():
        return standard_poset(kind, int(num))
    return parse_poset(Path(source).read_text(encoding="utf-8"))


def _poset_from_json(obj) -> Poset:
    if isinstance(obj, str):
        return parse_poset(obj)
    if isinstance(obj, dict) and "n" in obj:
        return from_pairs(int(obj["n"]), [tuple(p) for p in obj.get("rel", [])])
    raise PosetSyntaxError(0, "poset must be poset-file text or {'n': .., 'rel': [[i, j], ..]}")


def tuple_from_json(data: dict) -> tuple[Poset, BaseRing, list[IncMatrix]]:
    try:
        poset = _poset_from_json(data["poset"])
        ring = parse_ring(data["ring"])
        raw = data["matrices"]
    except KeyError as exc:
        raise IncGenError(f"tuple file is missing the {exc.args[0]!r} field") from None
    mats = []
    for A in raw:
        if len(A) != poset.n or any(len(row) != poset.n for row in A):
            raise IncGenError(f"each matrix must be {poset.n}x{poset.n}")
        rows = [[ring.deserialize(x) for x in row] for row in A]
        mats.append(IncMatrix.from_dense(poset, ring, rows))
    return poset, ring, mats


def load_tuple(path) -> tuple[Poset, BaseRing, list[IncMatrix]]:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise IncGenError(f"{path}: invalid JSON ({exc})") from None
    return tuple_from_json(data)


def tuple_to_json(poset: Poset, ring: BaseRing, mats) -> dict:
    return {
        "poset": format_poset(poset),
        "ring": ring.spec,
        "matrices": [[[ring.serialize(x) for x in row] for row in A.to_dense()] for A in mats],
    }


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"

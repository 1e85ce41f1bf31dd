"""Canonical JSON forms for towers, classes, witnesses, and reports.

Every emitter sorts terms and keys, so serialization is a bijection on
canonical forms and round-trips are byte identical; golden tests depend
on that.
"""

from __future__ import annotations

import json

from .isolift import FilteredIsoWitness, RingHomMatrix
from .ring import BottTower, CohClass, subset_key


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def tower_to_json(tower: BottTower) -> dict:
    return {"n": tower.n, "coeffs": [list(row) for row in tower.coeffs]}


def tower_from_json(data: dict) -> BottTower:
    return BottTower(int(data["n"]), data["coeffs"])


def class_to_json(u: CohClass) -> dict:
    return {
        "terms": [
            {"subset": sorted(s), "coeff": c} for s, c in u.sorted_terms()
        ]
    }


def class_from_json(tower: BottTower, data: dict) -> CohClass:
    terms = {}
    for item in data["terms"]:
        s = frozenset(int(i) for i in item["subset"])
        if s in terms:
            raise ValueError(f"duplicate subset {sorted(s)}")
        terms[s] = int(item["coeff"])
    return CohClass(tower, terms)


def witness_to_json(w: FilteredIsoWitness) -> dict:
    return {
        "signs": list(w.signs),
        "shifts": [class_to_json(t) for t in w.shifts],
    }


def witness_from_json(
    src: BottTower, dst: BottTower, data: dict
) -> FilteredIsoWitness:
    signs = tuple(int(s) for s in data["signs"])
    shifts = tuple(class_from_json(dst, item) for item in data["shifts"])
    return FilteredIsoWitness(src, dst, signs, shifts)


def matrix_to_json(m: RingHomMatrix) -> dict:
    return {"images": [list(row) for row in m.images]}


def load_tower(path: str) -> BottTower:
    with open(path) as fh:
        return tower_from_json(json.load(fh))


def parse_class(tower: BottTower, text: str) -> CohClass:
    """Parse a class from its JSON text form."""
    return class_from_json(tower, json.loads(text))

"""JSON interchange for group-ring elements and reports."""

from __future__ import annotations

import dataclasses
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping

from .groups import FiniteAbelianGroup
from .group_ring import GroupRingElement
from .rings import QQ, ZZ, CoeffRing, Zmod

INT_LIMIT = 2 ** 63


class FormatError(ValueError):
    pass


def ring_to_json(ring: CoeffRing):
    return {"Zmod": ring.modulus} if ring.kind == "Zmod" else ring.kind


def ring_from_json(data) -> CoeffRing:
    if data == "Z":
        return ZZ
    if data == "Q":
        return QQ
    if isinstance(data, Mapping) and set(data) == {"Zmod"}:
        m = data["Zmod"]
        if not isinstance(m, int) or isinstance(m, bool) or m < 2:
            raise FormatError(f"bad modulus {m!r}")
        return Zmod(m)
    raise FormatError(f"unknown ring {data!r}")


def element_to_json(x: GroupRingElement) -> dict:
    r = x.base.rank
    coeffs = []
    for g, c in x.sorted_terms():
        coeffs.append({"g": [list(g[i * r:(i + 1) * r]) for i in range(x.arity)], "c": str(c)})
    return {
        "ring": ring_to_json(x.ring),
        "group": list(x.base.cyclic_orders),
        "arity": x.arity,
        "coeffs": coeffs,
    }


def element_from_json(data: Any) -> GroupRingElement:
    if not isinstance(data, Mapping):
        raise FormatError("element must be a JSON object")
    missing = {"ring", "group", "arity", "coeffs"} - set(data)
    if missing:
        raise FormatError(f"missing fields: {sorted(missing)}")
    ring = ring_from_json(data["ring"])
    group = data["group"]
    if not isinstance(group, list) or not all(isinstance(n, int) and not isinstance(n, bool) and n >= 1 for n in group):
        raise FormatError("group must be a list of positive integers")
    base = FiniteAbelianGroup(tuple(group))
    arity = data["arity"]
    if not isinstance(arity, int) or isinstance(arity, bool) or arity < 0:
        raise FormatError("arity must be a non-negative integer")
    if not isinstance(data["coeffs"], list):
        raise FormatError("coeffs must be a list")
    terms = []
    for entry in data["coeffs"]:
        if not isinstance(entry, Mapping) or "g" not in entry or "c" not in entry:
            raise FormatError(f"bad coefficient entry {entry!r}")
        g = entry["g"]
        if (not isinstance(g, list) or len(g) != arity
                or not all(isinstance(t, list) and len(t) == base.rank for t in g)
                or not all(isinstance(v, int) and not isinstance(v, bool) for t in g for v in t)):
            raise FormatError(f"group element {g!r} is not {arity} tuples of length {base.rank}")
        c = entry["c"]
        if isinstance(c, bool) or not isinstance(c, (int, str)):
            raise FormatError(f"coefficient {c!r} must be an integer or a string")
        try:
            value = ring(Fraction(c) if isinstance(c, str) else c)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad coefficient {c!r}: {exc}") from None
        terms.append((tuple(tuple(t) for t in g), value))
    return GroupRingElement(ring, base, arity, terms)


def jsonable(obj: Any) -> Any:
    """Convert to plain JSON types; integers beyond 2^63 become strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= INT_LIMIT else obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, GroupRingElement):
        return element_to_json(obj)
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, Mapping):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (str, float)):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2)

from __future__ import annotations

import itertools

import pytest
from hypothesis import settings

from cubix.groups import FiniteAbelianGroup
from cubix.group_ring import GroupRingElement

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

Z2 = FiniteAbelianGroup((2,))
Z3 = FiniteAbelianGroup((3,))
Z2Z2 = FiniteAbelianGroup((2, 2))


def elem(ring, base, arity, terms):
    return GroupRingElement(ring, base, arity, terms)


def units_by_search(ring, base, arity=1):
    """Brute force: every x having some y with x*y = 1."""
    from cubix.group_ring import all_elements

    elems = list(all_elements(ring, base, arity))
    one = GroupRingElement.one(ring, base, arity)
    units = set()
    for x in elems:
        if any((x * y) == one for y in elems):
            units.add(x)
    return elems, units


@pytest.fixture
def z5_unit():
    from cubix.rings import Zmod

    return GroupRingElement(Zmod(5), Z2, 1, {(0,): 4, (1,): 2})


def write_cli_fixtures(root):
    """Element files for the CLI: trivial, theta, non-cubic, malformed, unit."""
    import json
    from pathlib import Path

    from cubix.cubic import theta_cocycle
    from cubix.rings import ZZ, Zmod
    from cubix.serialize import element_to_json

    root = Path(root)
    u = GroupRingElement(Zmod(5), Z2, 1, {(0,): 4, (1,): 2})
    files = {
        "trivial.json": element_to_json(GroupRingElement.one(ZZ, Z2, 3)),
        "unit.json": element_to_json(u),
        "theta3.json": element_to_json(theta_cocycle(u, 3)),
        "theta2.json": element_to_json(theta_cocycle(u, 2)),
        "noncubic.json": element_to_json(GroupRingElement(ZZ, Z2, 2, {((1,), (1,)): 1})),
    }
    for name, data in files.items():
        (root / name).write_text(json.dumps(data))
    (root / "malformed.json").write_text('{"ring": "Z", "group": [2], "arity": 2, "coeffs": [{"g": [[1]]}]')
    (root / "badshape.json").write_text(json.dumps({"ring": "Z", "group": [2], "arity": 2,
                                                     "coeffs": [{"g": [[1]], "c": "1"}]}))
    return {name: str(root / name) for name in list(files) + ["malformed.json", "badshape.json"]}


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)

"""n-cubic elements of R[G^n]: verification, constructions and audits.

Slots are 0-based throughout. The cocycle condition is checked as an
identity of group-ring elements in R[G^{n+1}]:

    push_{dup(0,1)}(c) * push_{ins(2)}(c) == push_{dup(1,2)}(c) * push_{ins(0)}(c)

where dup(i, i+1) duplicates one source slot into target slots i, i+1 and
ins(k) inserts the identity at target slot k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod
from typing import Iterator, Sequence

from .caps import check_work
from .groups import FiniteAbelianGroup
from .group_ring import (
    GroupRingElement,
    NotAUnit,
    augmentation,
    coordinate_embed,
    invert_unit,
    substitute,
)
from .linalg import solve_mod, solve_rational, SingularSystem
from .rings import CoeffRing


class NotCubic(ValueError):
    """Raised when an operation needs an n-cubic input and did not get one."""

    def __init__(self, message: str, report: "CubicReport | None" = None) -> None:
        super().__init__(message)
        self.report = report


@dataclass
class CubicReport:
    ok: bool
    failed_condition: str | None = None  # "c0", "c1", "unit", "c2"
    witness: object = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------- pushforwards

def transpose_slots(c: GroupRingElement, i: int, j: int) -> GroupRingElement:
    targets = list(range(c.arity))
    targets[i], targets[j] = j, i
    return coordinate_embed(c, targets, c.arity)


def _dup(c: GroupRingElement, i: int) -> GroupRingElement:
    # slot i goes to i and i+1, later slots shift right
    targets = [k if k < i else k + 1 for k in range(c.arity)]
    targets[i] = (i, i + 1)
    return coordinate_embed(c, targets, c.arity + 1)


def _ins(c: GroupRingElement, k: int) -> GroupRingElement:
    return coordinate_embed(c, [s if s < k else s + 1 for s in range(c.arity)], c.arity + 1)


def cocycle_sides(c: GroupRingElement) -> tuple[GroupRingElement, GroupRingElement]:
    lhs = _dup(c, 0) * _ins(c, 2)
    rhs = _dup(c, 1) * _ins(c, 0)
    return lhs, rhs


def is_cubic(c: GroupRingElement, n: int | None = None) -> CubicReport:
    """Check normalization, symmetry, invertibility and the cocycle identity."""
    if n is None:
        n = c.arity
    if n < 2:
        raise ValueError(f"arity must be >= 2, got {n}")
    if c.arity != n:
        raise ValueError(f"element has arity {c.arity}, expected {n}")
    aug = augmentation(c)
    if aug != c.ring(1):
        return CubicReport(False, "c0", None, f"augmentation is {aug}, not 1")
    for i, j in itertools.combinations(range(n), 2):
        swapped = transpose_slots(c, i, j)
        if swapped != c:
            return CubicReport(False, "c1", swapped, f"not invariant under swapping slots {i} and {j}")
    try:
        invert_unit(c)
    except NotAUnit as exc:
        return CubicReport(False, "unit", None, f"not a unit: {exc}")
    lhs, rhs = cocycle_sides(c)
    if lhs != rhs:
        return CubicReport(False, "c2", lhs - rhs, "cocycle identity fails (witness = lhs - rhs)")
    return CubicReport(True)


@dataclass(frozen=True)
class CubicElement:
    """A group-ring element certified n-cubic at construction."""

    c: GroupRingElement
    arity: int = field(init=False)

    def __post_init__(self) -> None:
        rep = is_cubic(self.c)
        if not rep.ok:
            raise NotCubic(f"not {self.c.arity}-cubic: {rep.failed_condition}: {rep.detail}", rep)
        object.__setattr__(self, "arity", self.c.arity)

    @property
    def group(self) -> FiniteAbelianGroup:
        return self.c.base


def require_cubic(c: GroupRingElement, n: int) -> None:
    rep = is_cubic(c, n)
    if not rep.ok:
        raise NotCubic(f"input is not {n}-cubic ({rep.failed_condition}: {rep.detail})", rep)


# ---------------------------------------------------------------- constructions

def _slot_form(arity: int, slots: Sequence[int]) -> list[list[int]]:
    return [[1 if v in slots else 0 for v in range(arity)]]


def theta_cocycle(u: GroupRingElement, n: int) -> GroupRingElement:
    """prod over nonempty I of u(sum_{i in I} h_i)^{(-1)^{n-|I|}} in R[G^n]."""
    if n < 2:
        raise ValueError("theta_cocycle needs n >= 2")
    if u.arity != 1:
        raise ValueError("u must live in R[G]")
    if augmentation(u) != u.ring(1):
        raise ValueError(f"u must have augmentation 1, got {augmentation(u)}")
    u_inv = invert_unit(u)
    out = GroupRingElement.one(u.ring, u.base, n)
    for size in range(1, n + 1):
        src = u if (n - size) % 2 == 0 else u_inv
        for I in itertools.combinations(range(n), size):
            out = out * substitute(src, _slot_form(n, I), n)
    return out


def induce(c1: GroupRingElement, check: bool = True) -> GroupRingElement:
    """c(h0, h1, h2, ...) = c'(h0 + h1, h2, ...) c'(h0, h2, ...)^-1 c'(h1, h2, ...)^-1."""
    a = c1.arity
    if a < 2:
        raise ValueError("induce needs an input of arity >= 2 (output arity >= 3)")
    if check:
        require_cubic(c1, a)
    inv = invert_unit(c1)
    n = a + 1

    def forms(first: Sequence[int]) -> list[list[int]]:
        rows = [[1 if v in first else 0 for v in range(n)]]
        rows += [[1 if v == k + 1 else 0 for v in range(n)] for k in range(1, a)]
        return rows

    return substitute(c1, forms((0, 1)), n) * substitute(inv, forms((0,)), n) * substitute(inv, forms((1,)), n)


# ---------------------------------------------------------------- law audit

def _eval(c: GroupRingElement, point: Sequence[dict[int, int]], nvars: int) -> GroupRingElement:
    forms = [[p.get(v, 0) for v in range(nvars)] for p in point]
    return substitute(c, forms, nvars)


def _var(v: int) -> dict[int, int]:
    return {v: 1}


def _plus(*vs: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for v in vs:
        out[v] = out.get(v, 0) + 1
    return out


def _law_point(base: list[dict], i: int, x: dict, y: dict) -> list[dict]:
    # base lives in H^{n-1}; the composition law in direction i combines x, y in slot i
    return base[:i] + [x, y] + base[i + 1:]


@dataclass
class LawsReport:
    ok: bool
    laws: dict[str, bool]
    failures: list[str]


def multiextension_laws_check(c: GroupRingElement, n: int | None = None) -> LawsReport:
    """Audit the partial composition laws defined by multiplication by c.

    Each law is an identity of group-ring elements obtained by substituting
    linear forms into c. This never raises on a non-cubic input; it reports.
    """
    if n is None:
        n = c.arity
    if n < 2 or c.arity != n:
        raise ValueError(f"need an element of arity n >= 2, got arity {c.arity} and n={n}")
    laws: dict[str, bool] = {}
    one_aug = augmentation(c) == c.ring(1)
    laws["normalized"] = one_aug

    # unit section: l_i(0, a) = 1, i.e. the slice with one trivial slot is 1
    for k in range(n):
        point = [_var(v if v < k else v - 1) if v != k else {} for v in range(n)]
        laws[f"unit_section[{k}]"] = _eval(c, point, n - 1).is_one()

    for i in range(n - 1):
        # base point variables: slot j of H^{n-1} -> var j; extra vars appended
        base = [_var(j) for j in range(n - 1)]
        a, a2 = i, n - 1
        lhs = _eval(c, _law_point(base, i, _var(a), _var(a2)), n)
        rhs = _eval(c, _law_point(base, i, _var(a2), _var(a)), n)
        laws[f"commutative[{i}]"] = lhs == rhs

        a3 = n
        m = n + 1
        l1 = _eval(c, _law_point(base, i, _var(a), _var(a2)), m)
        l2 = _eval(c, _law_point(base, i, _plus(a, a2), _var(a3)), m)
        r1 = _eval(c, _law_point(base, i, _var(a2), _var(a3)), m)
        r2 = _eval(c, _law_point(base, i, _var(a), _plus(a2, a3)), m)
        laws[f"associative[{i}]"] = l1 * l2 == r1 * r2

    for i, j in itertools.combinations(range(n - 1), 2):
        # vars: base slot k -> k (slot i holds a_i, slot j holds a_j), then a'_i, a'_j
        ai, aj, bi, bj = i, j, n - 1, n
        m = n + 1
        base = [_var(k) for k in range(n - 1)]

        def at(slot_i: dict, slot_j: dict) -> list[dict]:
            b = list(base)
            b[i], b[j] = slot_i, slot_j
            return b

        def law_i(x, y, jv):
            return _eval(c, _law_point(at({}, jv), i, x, y), m)

        def law_j(x, y, iv):
            b = at(iv, {})
            return _eval(c, b[:j] + [x, y] + b[j + 1:], m)

        lhs = (law_i(_var(ai), _var(bi), _var(aj)) * law_i(_var(ai), _var(bi), _var(bj))
               * law_j(_var(aj), _var(bj), _plus(ai, bi)))
        rhs = (law_j(_var(aj), _var(bj), _var(ai)) * law_j(_var(aj), _var(bj), _var(bi))
               * law_i(_var(ai), _var(bi), _plus(aj, bj)))
        laws[f"compatible[{i},{j}]"] = lhs == rhs

    for i, j in itertools.combinations(range(n), 2):
        laws[f"symmetric[{i},{j}]"] = transpose_slots(c, i, j) == c

    failures = sorted(k for k, v in laws.items() if not v)
    return LawsReport(not failures, laws, failures)


# ---------------------------------------------------------------- character oracle

def _cyc_mul(a: tuple, b: tuple, N: int, mod: int) -> tuple:
    out = [0] * N
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[(i + j) % N] += x * y
    if mod:
        return tuple(v % mod for v in out)
    return tuple(out)


def character_oracle(c: GroupRingElement) -> dict[tuple, tuple]:
    """Values of all n-tuples of characters on c, in R[x]/(x^N - 1).

    A character of G is indexed by b in G (dual coordinates); chi_b(g) is
    x^(sum_i b_i g_i N/n_i) with N the exponent of G. Keys are flat tuples
    of character indices, values are length-N coefficient tuples.
    """
    ring = c.ring
    if ring.kind == "Q":
        raise ValueError("character oracle works over Z or Z/m")
    base = c.base
    N = base.exponent
    n = c.arity
    group = base.power(n)
    check_work(group.order * max(len(c), 1) * max(N, 1), "character_oracle")
    orders = group.cyclic_orders
    scales = [N // k for k in orders]
    mod = ring.modulus if ring.kind == "Zmod" else 0
    terms = c.sorted_terms()
    table: dict[tuple, tuple] = {}
    for b in group.elements():
        w = [bi * s for bi, s in zip(b, scales)]
        vals = [0] * N
        for g, coef in terms:
            e = sum(x * y for x, y in zip(w, g) if x and y) % N
            vals[e] += coef
        table[b] = tuple(v % mod for v in vals) if mod else tuple(vals)
    return table


def _cyc_is_unit(v: tuple, N: int, ring: CoeffRing) -> bool:
    # multiplication-by-v matrix on R[x]/(x^N-1) must be invertible over R
    M = [[v[(i - j) % N] for j in range(N)] for i in range(N)]
    rhs = [1] + [0] * (N - 1)
    try:
        if ring.kind == "Zmod":
            solve_mod(M, rhs, ring.modulus)
            return True
        sol = solve_rational(M, rhs)
    except SingularSystem:
        return False
    return all(s.denominator == 1 for s in sol)


def oracle_verdict(c: GroupRingElement, n: int | None = None) -> CubicReport:
    """is_cubic decided from character values instead of group-ring identities."""
    if n is None:
        n = c.arity
    if n < 2 or c.arity != n:
        raise ValueError(f"need an element of arity n >= 2, got arity {c.arity} and n={n}")
    base = c.base
    N = base.exponent
    r = base.rank
    mod = c.ring.modulus if c.ring.kind == "Zmod" else 0
    table = character_oracle(c)
    one = tuple([1 % mod if mod else 1] + [0] * (N - 1))
    chars = list(base.elements())
    if table[(0,) * (n * r)] != one:
        return CubicReport(False, "c0", None, "trivial characters do not give 1")

    def key(bs):
        return tuple(itertools.chain.from_iterable(bs))

    for i, j in itertools.combinations(range(n), 2):
        for bs in itertools.product(chars, repeat=n):
            sw = list(bs)
            sw[i], sw[j] = sw[j], sw[i]
            if table[key(bs)] != table[key(sw)]:
                return CubicReport(False, "c1", key(bs), f"character values differ under swapping {i},{j}")
    for b, v in table.items():
        if not _cyc_is_unit(v, N, c.ring):
            return CubicReport(False, "unit", b, "character value is not a unit")
    check_work(len(chars) ** (n + 1), "oracle cocycle sweep")
    add = base.add
    for bs in itertools.product(chars, repeat=n + 1):
        b0, b1, b2, rest = bs[0], bs[1], bs[2], list(bs[3:])
        lhs = _cyc_mul(table[key([add(b0, b1), b2] + rest)], table[key([b0, b1] + rest)], N, mod)
        rhs = _cyc_mul(table[key([b0, add(b1, b2)] + rest)], table[key([b1, b2] + rest)], N, mod)
        if lhs != rhs:
            return CubicReport(False, "c2", key(bs), "cocycle identity fails on characters")
    return CubicReport(True)


# ---------------------------------------------------------------- enumeration

def symmetric_orbits(base: FiniteAbelianGroup, n: int) -> list[list[tuple]]:
    """Orbits of S_n permuting the slots of G^n, each as a list of flat keys."""
    r = base.rank
    seen: dict[tuple, int] = {}
    orbits: list[list[tuple]] = []
    for pt in itertools.product(list(base.elements()), repeat=n):
        canon = tuple(sorted(pt))
        if canon not in seen:
            seen[canon] = len(orbits)
            orbits.append([])
        orbits[seen[canon]].append(tuple(itertools.chain.from_iterable(pt)))
    return orbits


def symmetric_candidates(ring: CoeffRing, base: FiniteAbelianGroup, n: int) -> Iterator[GroupRingElement]:
    """Every S_n-invariant element of (Z/m)[G^n] with augmentation 1."""
    if not ring.is_finite:
        raise ValueError("enumeration needs a finite coefficient ring")
    orbits = symmetric_orbits(base, n)
    check_work(ring.modulus ** len(orbits), "symmetric enumeration")
    sizes = [len(o) for o in orbits]
    for coeffs in itertools.product(range(ring.modulus), repeat=len(orbits)):
        if sum(a * s for a, s in zip(coeffs, sizes)) % ring.modulus != 1 % ring.modulus:
            continue
        terms = {}
        for a, orbit in zip(coeffs, orbits):
            if a:
                for g in orbit:
                    terms[g] = a
        yield GroupRingElement._raw(ring, base, n, terms)


def enumerate_cubic(ring: CoeffRing, base: FiniteAbelianGroup, n: int) -> list[GroupRingElement]:
    """All n-cubic elements of (Z/m)[G^n] (c1 forces symmetry, so orbit sums suffice)."""
    return [c for c in symmetric_candidates(ring, base, n) if is_cubic(c, n).ok]


def ring_cardinality(ring: CoeffRing, base: FiniteAbelianGroup, n: int) -> int:
    return ring.modulus ** prod(base.cyclic_orders * n)

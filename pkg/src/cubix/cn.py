"""Presentations of C_n(A) = Sym^n over Z[A] of I[A], and the well-definedness
check of the character evaluation map attached to an element of R[G^n]."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .caps import check_work
from .cubic import _cyc_is_unit, _cyc_mul, character_oracle
from .groups import Element, FiniteAbelianGroup
from .group_ring import GroupRingElement
from .linalg import smith_invariants


@dataclass
class CnPresentation:
    group: FiniteAbelianGroup
    n: int
    generators: list[tuple[Element, ...]]
    relations: list[dict[int, int]]  # sparse rows: generator index -> coefficient

    def dense(self) -> list[list[int]]:
        rows = []
        for r in self.relations:
            row = [0] * len(self.generators)
            for i, c in r.items():
                row[i] = c
            rows.append(row)
        return rows

    def to_json(self) -> dict:
        return {
            "group": list(self.group.cyclic_orders),
            "n": self.n,
            "generators": [[list(a) for a in t] for t in self.generators],
            "relations": self.dense(),
        }


@dataclass
class CnStructure:
    group: FiniteAbelianGroup
    n: int
    free_rank: int
    invariant_factors: list[int]  # torsion part, each > 1, d_1 | d_2 | ...
    n_generators: int
    n_relations: int
    presentation: CnPresentation | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "group": list(self.group.cyclic_orders),
            "n": self.n,
            "free_rank": self.free_rank,
            "invariant_factors": self.invariant_factors,
            "generators": self.n_generators,
            "relations": self.n_relations,
        }


def cn_presentation(A: FiniteAbelianGroup, n: int, shuffle_seed: int | None = None) -> CnPresentation:
    """Generators [a_1, ..., a_n] with all a_i nonzero; symmetry and module relations.

    ``shuffle_seed`` permutes the enumeration order of generators and
    relations, which must not change the resulting structure.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    check_work(A.order ** (n + 1), "C_n presentation")
    nonzero = [a for a in A.elements() if any(a)]
    gens = list(itertools.product(nonzero, repeat=n))
    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    if rng:
        rng.shuffle(gens)
    index = {g: i for i, g in enumerate(gens)}
    rows: list[dict[int, int]] = []

    def add(row: dict[int, int], g: tuple, c: int) -> None:
        i = index.get(g)  # None for degenerate tuples, which are zero
        if i is not None:
            row[i] = row.get(i, 0) + c

    for g in gens:
        for i in range(n - 1):
            s = list(g)
            s[i], s[i + 1] = s[i + 1], s[i]
            s = tuple(s)
            if s != g:
                rows.append({index[g]: 1, index[s]: -1})

    if n >= 2:
        elems = list(A.elements())
        tuples = list(itertools.product(elems, repeat=n + 1))
        if rng:
            rng.shuffle(tuples)
        plus = A.add
        for a in tuples:
            a0, a1, a2, rest = a[0], a[1], a[2], a[3:]
            row: dict[int, int] = {}
            add(row, (a1, a2) + rest, 1)
            add(row, (a0, plus(a1, a2)) + rest, 1)
            add(row, (a0, a1) + rest, -1)
            add(row, (plus(a0, a1), a2) + rest, -1)
            row = {i: c for i, c in row.items() if c}
            if row:
                rows.append(row)
    return CnPresentation(A, n, gens, rows)


def cn_structure(A: FiniteAbelianGroup, n: int, shuffle_seed: int | None = None,
                 keep_presentation: bool = False) -> CnStructure:
    """Abelian group structure of C_n(A) via Smith normal form."""
    pres = cn_presentation(A, n, shuffle_seed)
    ngens = len(pres.generators)
    diag = smith_invariants(pres.dense(), ngens) if pres.relations else []
    return CnStructure(
        A, n,
        free_rank=ngens - len(diag),
        invariant_factors=[d for d in diag if d > 1],
        n_generators=ngens,
        n_relations=len(pres.relations),
        presentation=pres if keep_presentation else None,
    )


@dataclass
class AlphaReport:
    ok: bool
    failed_relation: str | None = None  # "unit", "degenerate", "symmetry", "module"
    witness: tuple | None = None
    detail: str = ""


def alpha_well_defined(c: GroupRingElement) -> AlphaReport:
    """Does b -> (chi_b1 x ... x chi_bn)(c) respect every defining relation of C_n(A)?

    A is the character index group of G. Values live in R[x]/(x^N - 1).
    """
    n = c.arity
    base = c.base
    N = base.exponent
    mod = c.ring.modulus if c.ring.kind == "Zmod" else 0
    table = character_oracle(c)
    one = tuple([1 % mod if mod else 1] + [0] * (N - 1))
    chars = list(base.elements())
    zero = base.identity

    def T(bs) -> tuple:
        return table[tuple(itertools.chain.from_iterable(bs))]

    for bs in itertools.product(chars, repeat=n):
        v = T(bs)
        if not _cyc_is_unit(v, N, c.ring):
            return AlphaReport(False, "unit", bs, "value is not a unit")
        if zero in bs and v != one:
            return AlphaReport(False, "degenerate", bs, "a generator with a trivial entry is not sent to 1")
        for i in range(n - 1):
            s = list(bs)
            s[i], s[i + 1] = s[i + 1], s[i]
            if T(s) != v:
                return AlphaReport(False, "symmetry", bs, f"values differ after swapping entries {i},{i + 1}")
    if n >= 2:
        check_work(len(chars) ** (n + 1), "alpha relation sweep")
        add = base.add
        for a in itertools.product(chars, repeat=n + 1):
            a0, a1, a2, rest = a[0], a[1], a[2], list(a[3:])
            lhs = _cyc_mul(T([a1, a2] + rest), T([a0, add(a1, a2)] + rest), N, mod)
            rhs = _cyc_mul(T([a0, a1] + rest), T([add(a0, a1), a2] + rest), N, mod)
            if lhs != rhs:
                return AlphaReport(False, "module", a, "module relation is not respected")
    return AlphaReport(True)

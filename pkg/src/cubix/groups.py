"""Finite abelian groups written as products of cyclic groups, and
homomorphisms between them given by integer matrices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import lcm, prod
from typing import Iterator, Sequence

Element = tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """The group Z/n_1 x ... x Z/n_r, elements stored as reduced coordinate tuples.

    >>> G = FiniteAbelianGroup((2, 4))
    >>> G.order, G.exponent
    (8, 4)
    >>> G.add((1, 3), (1, 2))
    (0, 1)
    """

    cyclic_orders: tuple[int, ...]

    def __post_init__(self) -> None:
        orders = tuple(int(n) for n in self.cyclic_orders)
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic orders must be >= 1, got {orders}")
        object.__setattr__(self, "cyclic_orders", orders)

    @classmethod
    def cyclic(cls, n: int) -> FiniteAbelianGroup:
        return cls((n,))

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    def power(self, a: int) -> FiniteAbelianGroup:
        """The direct power G^a (coordinates concatenated slot by slot)."""
        if a < 0:
            raise ValueError("power must be non-negative")
        return FiniteAbelianGroup(self.cyclic_orders * a)

    def reduce(self, g: Sequence[int]) -> Element:
        if len(g) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(g)}")
        return tuple(int(a) % n for a, n in zip(g, self.cyclic_orders))

    def add(self, g: Element, h: Element) -> Element:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.cyclic_orders))

    def neg(self, g: Element) -> Element:
        return tuple(-a % n for a, n in zip(g, self.cyclic_orders))

    def scale(self, k: int, g: Element) -> Element:
        return tuple(k * a % n for a, n in zip(g, self.cyclic_orders))

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic coordinate order."""
        return itertools.product(*(range(n) for n in self.cyclic_orders))

    def __str__(self) -> str:
        if not self.cyclic_orders:
            return "trivial"
        return " x ".join(f"Z/{n}" for n in self.cyclic_orders)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism g -> g.K between products of cyclic groups.

    ``matrix[j][c]`` is the image of the j-th domain generator in the c-th
    codomain factor. It is legal exactly when ``matrix[j][c] * n_j`` is
    divisible by ``m_c``; entries are stored reduced mod ``m_c``.

    When the hom is built with :meth:`block` it maps G^a -> G^b for a fixed
    base group G and remembers ``base`` so pushforwards keep the arity
    bookkeeping.
    """

    domain: FiniteAbelianGroup
    codomain: FiniteAbelianGroup
    matrix: tuple[tuple[int, ...], ...]
    base: FiniteAbelianGroup | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.matrix)
        if len(rows) != self.domain.rank or any(len(r) != self.codomain.rank for r in rows):
            raise ValueError(
                f"matrix shape must be {self.domain.rank}x{self.codomain.rank}"
            )
        reduced = []
        for n_j, row in zip(self.domain.cyclic_orders, rows):
            out = []
            for m_c, k in zip(self.codomain.cyclic_orders, row):
                if (k * n_j) % m_c:
                    raise ValueError(
                        f"entry {k} does not define a hom Z/{n_j} -> Z/{m_c}"
                    )
                out.append(k % m_c)
            reduced.append(tuple(out))
        object.__setattr__(self, "matrix", tuple(reduced))

    @classmethod
    def block(cls, base: FiniteAbelianGroup, K: Sequence[Sequence[int]], *,
              src: int | None = None, dst: int | None = None) -> GroupHom:
        """Hom G^a -> G^b sending (g_1..g_a) to (sum_j K[j][0] g_j, ..., sum_j K[j][b-1] g_j)."""
        a = len(K) if src is None else src
        if a != len(K):
            raise ValueError("block matrix row count does not match source arity")
        if dst is None:
            if not K:
                raise ValueError("cannot infer target arity from an empty matrix")
            dst = len(K[0])
        if any(len(row) != dst for row in K):
            raise ValueError("ragged block matrix")
        r = base.rank
        full = [[0] * (dst * r) for _ in range(a * r)]
        for j in range(a):
            for c in range(dst):
                k = K[j][c]
                if k:
                    for i in range(r):
                        full[j * r + i][c * r + i] = k
        return cls(base.power(a), base.power(dst), tuple(map(tuple, full)), base)

    @classmethod
    def identity(cls, group: FiniteAbelianGroup) -> GroupHom:
        r = group.rank
        return cls(group, group, tuple(tuple(int(i == j) for j in range(r)) for i in range(r)))

    @property
    def source_arity(self) -> int | None:
        if self.base is None:
            return None
        return self.domain.rank // self.base.rank if self.base.rank else 0

    @property
    def target_arity(self) -> int | None:
        if self.base is None:
            return None
        return self.codomain.rank // self.base.rank if self.base.rank else 0

    def __call__(self, g: Element) -> Element:
        out = []
        for c, m in enumerate(self.codomain.cyclic_orders):
            s = 0
            for j, a in enumerate(g):
                if a:
                    s += a * self.matrix[j][c]
            out.append(s % m)
        return tuple(out)

    def then(self, other: GroupHom) -> GroupHom:
        """Composite ``other o self`` (apply self first): matrix product K_self . K_other."""
        if self.codomain != other.domain:
            raise ValueError("homs are not composable")
        a, b, c = self.domain.rank, self.codomain.rank, other.codomain.rank
        K = [[sum(self.matrix[i][j] * other.matrix[j][k] for j in range(b)) for k in range(c)]
             for i in range(a)]
        base = self.base if self.base is not None and self.base == other.base else None
        return GroupHom(self.domain, other.codomain, tuple(map(tuple, K)), base)

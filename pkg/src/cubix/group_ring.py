"""Sparse group rings R[G^a] over Z, Z/m and Q.

An element lives over the power G^a of a base group G. Group elements of
G^a are flat coordinate tuples: the a slots concatenated, each slot carrying
``G.rank`` coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .groups import Element, FiniteAbelianGroup, GroupHom
from .linalg import SingularSystem, solve_mod, solve_rational
from .rings import Coeff, CoeffRing


class NotAUnit(ArithmeticError):
    """The element has no inverse in the group ring."""


class RingMismatch(ValueError):
    pass


def _flatten_key(key, base: FiniteAbelianGroup, arity: int) -> Element:
    flat: list[int] = []
    for part in key:
        if isinstance(part, (tuple, list)):
            flat.extend(part)
        else:
            flat.append(part)
    if len(flat) != base.rank * arity:
        raise ValueError(f"group element {key!r} does not live in ({base})^{arity}")
    return tuple(int(v) % n for v, n in zip(flat, base.cyclic_orders * arity))


class GroupRingElement:
    """Immutable sparse element sum_g c_g [g] of R[G^arity]."""

    __slots__ = ("ring", "base", "arity", "_coeffs", "_hash")

    def __init__(self, ring: CoeffRing, base: FiniteAbelianGroup, arity: int,
                 coeffs: Mapping | Iterable = ()) -> None:
        if arity < 0:
            raise ValueError("arity must be non-negative")
        self.ring = ring
        self.base = base
        self.arity = arity
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Element, Coeff] = {}
        for key, c in items:
            g = _flatten_key(key, base, arity)
            acc[g] = acc.get(g, 0) + ring(c)
        self._coeffs = {g: ring(c) for g, c in acc.items() if ring(c) != 0}
        self._hash = None

    @classmethod
    def _raw(cls, ring, base, arity, coeffs: dict) -> GroupRingElement:
        # trusted constructor: keys reduced, coefficients canonical and nonzero
        obj = cls.__new__(cls)
        obj.ring, obj.base, obj.arity, obj._coeffs, obj._hash = ring, base, arity, coeffs, None
        return obj

    @classmethod
    def one(cls, ring: CoeffRing, base: FiniteAbelianGroup, arity: int = 1) -> GroupRingElement:
        return cls._raw(ring, base, arity, {base.power(arity).identity: ring(1)})

    @classmethod
    def zero(cls, ring: CoeffRing, base: FiniteAbelianGroup, arity: int = 1) -> GroupRingElement:
        return cls._raw(ring, base, arity, {})

    @classmethod
    def basis(cls, ring: CoeffRing, base: FiniteAbelianGroup, g, arity: int = 1) -> GroupRingElement:
        """The group-like element [g]."""
        return cls(ring, base, arity, {tuple(g): 1})

    @property
    def group(self) -> FiniteAbelianGroup:
        return self.base.power(self.arity)

    @property
    def coeffs(self) -> Mapping[Element, Coeff]:
        return MappingProxyType(self._coeffs)

    def __getitem__(self, g) -> Coeff:
        return self._coeffs.get(_flatten_key(g, self.base, self.arity), self.ring(0))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def slots(self, g: Element) -> tuple[Element, ...]:
        """Split a flat key of G^a into its a coordinate tuples."""
        r = self.base.rank
        return tuple(g[i * r:(i + 1) * r] for i in range(self.arity))

    def same_space(self, other: GroupRingElement) -> bool:
        return self.ring == other.ring and self.group == other.group

    def _check(self, other: GroupRingElement) -> None:
        if not isinstance(other, GroupRingElement):
            raise TypeError(f"expected GroupRingElement, got {type(other).__name__}")
        if self.ring != other.ring:
            raise RingMismatch(f"coefficient rings differ: {self.ring} vs {other.ring}")
        if self.group != other.group:
            raise RingMismatch(f"groups differ: {self.group} vs {other.group}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return (self.ring == other.ring and self.base == other.base
                and self.arity == other.arity and self._coeffs == other._coeffs)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.base, self.arity, frozenset(self._coeffs.items())))
        return self._hash

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        self._check(other)
        out = dict(self._coeffs)
        ring = self.ring
        for g, c in other._coeffs.items():
            v = ring(out.get(g, 0) + c)
            if v:
                out[g] = v
            else:
                out.pop(g, None)
        return GroupRingElement._raw(ring, self.base, self.arity, out)

    def __neg__(self) -> GroupRingElement:
        ring = self.ring
        return GroupRingElement._raw(ring, self.base, self.arity,
                                     {g: ring(-c) for g, c in self._coeffs.items()})

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def scale(self, k) -> GroupRingElement:
        ring = self.ring
        out = {g: ring(k * c) for g, c in self._coeffs.items()}
        return GroupRingElement._raw(ring, self.base, self.arity, {g: c for g, c in out.items() if c})

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        return multiply(self, other)

    def __pow__(self, k: int) -> GroupRingElement:
        if k < 0:
            return invert_unit(self) ** (-k)
        result = GroupRingElement.one(self.ring, self.base, self.arity)
        sq = self
        while k:
            if k & 1:
                result = result * sq
            k >>= 1
            if k:
                sq = sq * sq
        return result

    def is_one(self) -> bool:
        return self._coeffs == {self.group.identity: self.ring(1)}

    def sorted_terms(self) -> list[tuple[Element, Coeff]]:
        return sorted(self._coeffs.items())

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"GroupRingElement({self.ring}, {self.base}, arity={self.arity}, 0)"
        terms = " + ".join(f"{c}[{','.join(map(str, g))}]" for g, c in self.sorted_terms())
        return f"GroupRingElement({self.ring}, {self.base}, arity={self.arity}, {terms})"


def multiply(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Convolution product in R[G^a]."""
    x._check(y)
    orders = x.group.cyclic_orders
    ring = x.ring
    out: dict[Element, Coeff] = {}
    get = out.get
    for g, a in x._coeffs.items():
        for h, b in y._coeffs.items():
            k = tuple([(s + t) % n for s, t, n in zip(g, h, orders)])
            out[k] = get(k, 0) + a * b
    if ring.kind == "Zmod":
        m = ring.modulus
        out = {g: c % m for g, c in out.items() if c % m}
    else:
        out = {g: c for g, c in out.items() if c}
    return GroupRingElement._raw(ring, x.base, x.arity, out)


def augmentation(x: GroupRingElement) -> Coeff:
    """Sum of coefficients (the ring map R[G] -> R sending every [g] to 1)."""
    return x.ring(sum(x._coeffs.values()))


def _regular_matrix(x: GroupRingElement) -> tuple[list[Element], list[list]]:
    group = x.group
    elems = list(group.elements())
    index = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    # column j holds the coefficients of x.[g_j]
    M = [[0] * n for _ in range(n)]
    for j, g in enumerate(elems):
        for h, c in x._coeffs.items():
            M[index[group.add(h, g)]][j] = c
    return elems, M


def invert_unit(x: GroupRingElement) -> GroupRingElement:
    """Inverse of a unit of R[G^a] via the regular representation.

    Over Z the system is solved over Q and the solution checked for
    integrality; over Z/m it is solved modulo each prime power of m.
    Raises :class:`NotAUnit` when no inverse exists in the coefficient ring.
    """
    ring = x.ring
    if len(x._coeffs) == 1:
        (g, c), = x._coeffs.items()
        try:
            ci = _invert_scalar(ring, c)
        except NotAUnit:
            pass
        else:
            return GroupRingElement._raw(ring, x.base, x.arity, {x.group.neg(g): ci})
    if not x._coeffs:
        raise NotAUnit("zero is not a unit")
    elems, M = _regular_matrix(x)
    rhs = [0] * len(elems)
    rhs[0] = 1  # elements() starts at the identity
    try:
        if ring.kind == "Zmod":
            sol = solve_mod(M, rhs, ring.modulus)
        else:
            sol = solve_rational(M, rhs)
    except SingularSystem as exc:
        raise NotAUnit(str(exc)) from None
    if ring.kind == "Z":
        if any(v.denominator != 1 for v in sol):
            raise NotAUnit("inverse over Q is not integral")
        sol = [int(v) for v in sol]
    return GroupRingElement._raw(ring, x.base, x.arity,
                                 {g: ring(v) for g, v in zip(elems, sol) if ring(v)})


def _invert_scalar(ring: CoeffRing, c: Coeff) -> Coeff:
    if ring.kind == "Q":
        return 1 / Fraction(c)
    if ring.kind == "Z":
        if c in (1, -1):
            return c
        raise NotAUnit(f"{c} is not a unit of Z")
    try:
        return pow(int(c), -1, ring.modulus)
    except ValueError:
        raise NotAUnit(f"{c} is not a unit of {ring}") from None


def is_unit(x: GroupRingElement) -> bool:
    try:
        invert_unit(x)
    except NotAUnit:
        return False
    return True


def pushforward(phi: GroupHom, x: GroupRingElement) -> GroupRingElement:
    """Linear extension of [g] -> [phi(g)]; a ring homomorphism."""
    if phi.domain != x.group:
        raise RingMismatch(f"hom domain {phi.domain} does not match element group {x.group}")
    if phi.base is not None and phi.base == x.base:
        base, arity = x.base, phi.target_arity
    else:
        base, arity = phi.codomain, 1
    ring = x.ring
    # per-coordinate linear forms, skipping zero entries
    forms = []
    for c, m in enumerate(phi.codomain.cyclic_orders):
        forms.append(([(j, row[c]) for j, row in enumerate(phi.matrix) if row[c]], m))
    out: dict[Element, Coeff] = {}
    for g, coef in x._coeffs.items():
        h = tuple([sum(g[j] * k for j, k in form) % m for form, m in forms])
        out[h] = out.get(h, 0) + coef
    out = {g: ring(c) for g, c in out.items()}
    return GroupRingElement._raw(ring, base, arity, {g: c for g, c in out.items() if c})


def substitute(x: GroupRingElement, forms: Sequence[Sequence[int]], arity: int) -> GroupRingElement:
    """Evaluate x at integer linear combinations of ``arity`` new slots.

    ``forms[k][v]`` is the multiplicity of new slot v in the k-th argument,
    so the result corresponds to x(L_1(h), ..., L_a(h)) written on points:
    the pushforward along g -> (sum_k forms[k][v] g_k)_v.
    """
    if len(forms) != x.arity:
        raise ValueError(f"need {x.arity} linear forms, got {len(forms)}")
    return pushforward(GroupHom.block(x.base, forms, src=x.arity, dst=arity), x)


def coordinate_embed(x: GroupRingElement, targets: Sequence, target_arity: int) -> GroupRingElement:
    """Pushforward along a coordinate map G^n -> G^m.

    ``targets[i]`` names the target slot(s) of source slot i (0-based): an int
    moves the coordinate, a tuple of ints duplicates it (co-diagonal). Target
    slots not named receive the identity. No target slot may be hit twice.
    """
    if len(targets) != x.arity:
        raise ValueError(f"need a target for each of the {x.arity} source slots")
    K = [[0] * target_arity for _ in range(x.arity)]
    seen: set[int] = set()
    for i, t in enumerate(targets):
        slots = (t,) if isinstance(t, int) else tuple(t)
        if not slots:
            raise ValueError(f"source slot {i} has no target")
        for s in slots:
            if not isinstance(s, int) or not 0 <= s < target_arity:
                raise ValueError(f"target slot {s!r} out of range")
            if s in seen:
                raise ValueError(f"target slot {s} used twice")
            seen.add(s)
            K[i][s] = 1
    return pushforward(GroupHom.block(x.base, K, src=x.arity, dst=target_arity), x)


def all_elements(ring: CoeffRing, base: FiniteAbelianGroup, arity: int):
    """Every element of the finite ring (Z/m)[G^arity], in a fixed order."""
    import itertools

    if not ring.is_finite:
        raise ValueError("exhaustive enumeration needs a finite coefficient ring")
    elems = list(base.power(arity).elements())
    for coeffs in itertools.product(range(ring.modulus), repeat=len(elems)):
        yield GroupRingElement._raw(ring, base, arity,
                                    {g: c for g, c in zip(elems, coeffs) if c})


def ring_size(ring: CoeffRing, base: FiniteAbelianGroup, arity: int) -> int:
    return ring.modulus ** prod(base.cyclic_orders * arity)

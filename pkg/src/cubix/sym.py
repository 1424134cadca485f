"""Symmetric tensors of augmentation-ideal generators and the flat operator.

A pure tensor (w_1, ..., w_k) of monomials stands for
([w_1] - [1]) x ... x ([w_k] - [1]). Its Laurent image is the product
prod_j (w_j - 1); equality of symmetric elements is decided there.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .cubic import NotCubic, is_cubic, require_cubic
from .group_ring import GroupRingElement, invert_unit, substitute
from .invariants import superfactorial
from .laurent import LaurentPoly, Monomial, mono_exponent, mono_mul, mono_prod, monomial, var

PureTensor = tuple[Monomial, ...]


class SymElement:
    """Integer combination of ordered pure tensors, all of one degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[PureTensor, int] | None = None) -> None:
        self.degree = degree
        clean: dict[PureTensor, int] = {}
        for t, c in (terms or {}).items():
            t = tuple(t)
            if len(t) != degree:
                raise ValueError(f"pure tensor of length {len(t)} in a degree-{degree} element")
            if c and all(t):
                clean[t] = clean.get(t, 0) + int(c)
        self.terms = {t: c for t, c in clean.items() if c}

    @classmethod
    def generator(cls, *factors: Monomial) -> SymElement:
        """[w_1, ..., w_k]; zero if some w_j is trivial."""
        return cls(len(factors), {tuple(factors): 1})

    @classmethod
    def zero(cls, degree: int) -> SymElement:
        return cls(degree)

    def __add__(self, other: SymElement) -> SymElement:
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return SymElement(self.degree, out)

    def scale(self, k: int) -> SymElement:
        return SymElement(self.degree, {t: k * c for t, c in self.terms.items()})

    def __neg__(self) -> SymElement:
        return self.scale(-1)

    def __sub__(self, other: SymElement) -> SymElement:
        return self + (-other)

    def tensor(self, other: SymElement) -> SymElement:
        out: dict[PureTensor, int] = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                t = t1 + t2
                out[t] = out.get(t, 0) + c1 * c2
        return SymElement(self.degree + other.degree, out)

    def tensor_power(self, k: int) -> SymElement:
        out = SymElement(0, {(): 1})
        for _ in range(k):
            out = out.tensor(self)
        return out

    def symmetrized(self) -> dict[PureTensor, int]:
        """Terms merged up to reordering of factors (valid on symmetric targets)."""
        out: dict[PureTensor, int] = {}
        for t, c in self.terms.items():
            key = tuple(sorted(t))
            out[key] = out.get(key, 0) + c
        return {t: c for t, c in out.items() if c}

    def __len__(self) -> int:
        return len(self.terms)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"factors": [{str(v): e for v, e in m} for m in t], "c": str(c)}
                      for t, c in sorted(self.terms.items())],
        }

    def __repr__(self) -> str:
        return f"SymElement(degree={self.degree}, {len(self.terms)} terms)"


def sym_to_laurent(e: SymElement) -> LaurentPoly:
    """sum_t c_t prod_j (w_j - 1), computed over a prefix trie of sorted tensors."""
    merged = e.symmetrized()
    memo: dict[frozenset, LaurentPoly] = {}

    def expand(terms: frozenset) -> LaurentPoly:
        hit = memo.get(terms)
        if hit is not None:
            return hit
        groups: dict[Monomial, list] = {}
        total = LaurentPoly()
        for t, c in terms:
            if not t:
                total = total + LaurentPoly.const(c)
            else:
                groups.setdefault(t[0], []).append((t[1:], c))
        for w, rest in groups.items():
            inner = expand(frozenset(rest))
            total = total + inner * LaurentPoly({w: 1, (): -1})
        memo[terms] = total
        return total

    return expand(frozenset(merged.items()))


# ---------------------------------------------------------------- Psi and Phi

def _gen(m: Monomial) -> SymElement:
    return SymElement.generator(m)


def build_A_B_P(S: Sequence[int], n: int | None = None) -> tuple[SymElement, SymElement, SymElement]:
    """A_S (degree 1), B_S (degree 2) and P_S (degree 1) for the ordered subset S."""
    S = sorted(S)
    if n is not None and any(not 1 <= i <= n for i in S):
        raise ValueError(f"subset {S} not inside 1..{n}")
    A = SymElement(1)
    for i in S:
        A = A + _gen(var(i))
    B = SymElement(2)
    for p in range(len(S) - 1):
        tail = mono_prod(var(i) for i in S[p + 1:])
        B = B + SymElement.generator(var(S[p]), tail)
    P = _gen(mono_prod(var(i) for i in S)) if S else SymElement(1)
    return A, B, P


def build_psi(S: Sequence[int], n: int) -> SymElement:
    """sum_{j<n} A_S^j x B_S x P_S^(n-j-1), degree n+1; zero for S empty."""
    if not S:
        return SymElement(n + 1)
    A, B, P = build_A_B_P(S, n)
    out = SymElement(n + 1)
    apow = SymElement(0, {(): 1})
    for j in range(n):
        out = out + apow.tensor(B).tensor(P.tensor_power(n - j - 1))
        apow = apow.tensor(A)
    return out


def _subsets(n: int) -> Iterable[tuple[int, ...]]:
    for k in range(n + 1):
        yield from itertools.combinations(range(1, n + 1), k)


@lru_cache(maxsize=None)
def build_phi(n: int) -> SymElement:
    """Signed sum of build_psi over all subsets of 1..n."""
    if n < 2:
        raise ValueError("Phi needs n >= 2")
    out = SymElement(n + 1)
    for S in _subsets(n):
        if S:
            psi = build_psi(S, n)
            out = out + (psi if (n - len(S)) % 2 == 0 else -psi)
    return out


def phi_closed_form(n: int) -> LaurentPoly:
    """sum_S (-1)^(n-|S|) ((prod_S y - 1)^n - (sum_S y - |S|)^n)."""
    if n < 2:
        raise ValueError("Phi needs n >= 2")
    out = LaurentPoly()
    for S in _subsets(n):
        if not S:
            continue
        P = LaurentPoly.mono(mono_prod(var(i) for i in S)) - 1
        A = LaurentPoly({var(i): 1 for i in S}) - len(S)
        term = P ** n - A ** n
        out = out + (term if (n - len(S)) % 2 == 0 else -term)
    return out


# ---------------------------------------------------------------- identities

@dataclass
class IdentityReport:
    n: int
    results: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.results.values())


def verify_identities(n: int) -> IdentityReport:
    """Symmetry, the cocycle identity, the multinomial identity and the product identity for Phi."""
    if n < 2:
        raise ValueError("identities need n >= 2")
    phi = phi_closed_form(n)
    res: dict[str, bool] = {}

    for i, j in itertools.combinations(range(1, n + 1), 2):
        res[f"g1[{i},{j}]"] = phi.substitute({i: var(j), j: var(i)}) == phi

    # Phi(x0 x1, x2, ..., xn) + Phi(x0, x1, x3, ..., xn) = Phi(x0, x1 x2, x3, ...) + Phi(x1, ..., xn)
    x0x1 = monomial({0: 1, 1: 1})
    x1x2 = monomial({1: 1, 2: 1})
    t1 = phi.substitute({1: x0x1})
    t2 = phi.substitute({1: var(0), 2: var(1)})
    t3 = phi.substitute({1: var(0), 2: x1x2})
    res["g2"] = t1 + t2 == t3 + phi

    lhs = LaurentPoly()
    for S in _subsets(n):
        term = LaurentPoly({var(i): 1 for i in S}) ** n
        lhs = lhs + (term if (n - len(S)) % 2 == 0 else -term)
    res["multinomial"] = lhs == LaurentPoly.mono(mono_prod(var(i) for i in range(1, n + 1)), factorial(n))

    def d(m: Monomial) -> LaurentPoly:
        return LaurentPoly.mono(m) - 1

    tail = LaurentPoly.const(1)
    for i in range(3, n + 1):
        tail = tail * d(var(i))
    left = (d(x0x1) * d(var(2)) + d(var(0)) * d(var(1))) * tail
    right = (d(var(0)) * d(x1x2) + d(var(1)) * d(var(2))) * tail
    res["product"] = left == right

    res["augmentation_power"] = all(phi.set_one(i) == 0 for i in range(1, n + 1))
    return IdentityReport(n, res)


# ---------------------------------------------------------------- evaluation at cubic elements

def _matrix(t: PureTensor, variables: Sequence[int]) -> list[list[int]]:
    return [[mono_exponent(w, v) for v in variables] for w in t]


def _tensor_vars(e: SymElement) -> list[int]:
    return sorted({v for t in e.terms for w in t for v, _ in w})


def evaluate_sym_at(e: SymElement, c: GroupRingElement, variables: Sequence[int] | None = None,
                    *, check: bool = True, expand: bool = False) -> GroupRingElement:
    """Value of e at c, living over G^len(variables).

    The pure tensor with monomials w_j = prod_v x_v^K[j][v] evaluates to the
    pushforward of c along K. This collapse needs c to be cubic; with
    ``expand=True`` the full inclusion-exclusion over slot subsets is used
    instead, which only needs the trivial-slice property.
    """
    k = c.arity
    if e.degree != k:
        raise ValueError(f"degree {e.degree} element cannot be evaluated at an arity-{k} element")
    if variables is None:
        variables = _tensor_vars(e)
    variables = list(variables)
    a = len(variables)
    known = set(variables)
    for t in e.terms:
        for w in t:
            for v, _ in w:
                if v not in known:
                    raise ValueError(f"variable x{v} not assigned to an output slot")
    if check and not expand:
        require_cubic(c, k)
    # the collapse is only valid for cubic (hence symmetric) c, so reordered tensors merge
    terms = e.terms if expand else e.symmetrized()
    pos = GroupRingElement.one(c.ring, c.base, a)
    neg = GroupRingElement.one(c.ring, c.base, a)
    cache: dict = {}

    def value(K: list[list[int]]) -> GroupRingElement:
        key = tuple(map(tuple, K))
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = substitute(c, K, a)
        return hit

    for t, coef in sorted(terms.items()):
        K = _matrix(t, variables)
        if expand:
            num = GroupRingElement.one(c.ring, c.base, a)
            den = GroupRingElement.one(c.ring, c.base, a)
            for size in range(k + 1):
                for T in itertools.combinations(range(k), size):
                    KT = [K[j] if j in T else [0] * a for j in range(k)]
                    if (k - size) % 2 == 0:
                        num = num * value(KT)
                    else:
                        den = den * value(KT)
            v = num * invert_unit(den)
        else:
            v = value(K)
        if coef > 0:
            pos = pos * v ** coef
        else:
            neg = neg * v ** (-coef)
    return pos * invert_unit(neg)


def relation_element(a: Sequence[Monomial]) -> SymElement:
    """[a1, a2, ...] + [a0, a1 a2, ...] - [a0, a1, a3, ...] - [a0 a1, a2, ...], degree len(a)-1."""
    if len(a) < 3:
        raise ValueError("the module relation needs at least three entries")
    a0, a1, a2, rest = a[0], a[1], a[2], list(a[3:])
    g = SymElement.generator
    return (g(a1, a2, *rest) + g(a0, mono_mul(a1, a2), *rest)
            - g(a0, a1, *rest) - g(mono_mul(a0, a1), a2, *rest))


# ---------------------------------------------------------------- flat and Taylor chains

class FlatFailure(RuntimeError):
    pass


def flat(c: GroupRingElement, check: bool = True) -> GroupRingElement:
    """The derived n-cubic element of an (n+1)-cubic c: Phi evaluated at c."""
    n = c.arity - 1
    if n < 2:
        raise ValueError("flat needs an input of arity >= 3")
    if check:
        require_cubic(c, n + 1)
    d = evaluate_sym_at(build_phi(n), c, list(range(1, n + 1)), check=False)
    rep = is_cubic(d, n)
    if not rep.ok:
        raise FlatFailure(f"flat produced a non-cubic element ({rep.failed_condition})")
    return d


@dataclass
class TaylorChain:
    elements: list[GroupRingElement]
    exponents: list[int]
    superfactorial: int


def taylor_chain(c: GroupRingElement, check: bool = True) -> TaylorChain:
    """[c, flat(c), flat(flat(c)), ...] down to arity 2, with the (-1)^i (n-i-1)!! ledger."""
    n = c.arity - 1
    if n < 1:
        raise ValueError("taylor_chain needs arity >= 2")
    if check:
        require_cubic(c, n + 1)
    chain = [c]
    while chain[-1].arity >= 3:
        chain.append(flat(chain[-1], check=False))
    exps = [(-1) ** i * superfactorial(n - i - 1) for i in range(n)]
    return TaylorChain(chain, exps, superfactorial(n))


__all__ = [
    "NotCubic", "PureTensor", "SymElement", "sym_to_laurent", "build_A_B_P", "build_psi",
    "build_phi", "phi_closed_form", "verify_identities", "IdentityReport", "evaluate_sym_at",
    "relation_element", "flat", "FlatFailure", "superfactorial", "taylor_chain", "TaylorChain",
]

"""Sparse Laurent polynomials with integer coefficients.

A monomial is a sorted tuple of (variable, exponent) pairs with nonzero
exponents; () is the monomial 1.
"""

from __future__ import annotations

from typing import Iterable, Mapping

Monomial = tuple[tuple[int, int], ...]

ONE: Monomial = ()


def monomial(exps: Mapping[int, int] | Iterable[tuple[int, int]]) -> Monomial:
    items = exps.items() if isinstance(exps, Mapping) else exps
    acc: dict[int, int] = {}
    for v, e in items:
        acc[int(v)] = acc.get(int(v), 0) + int(e)
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def var(i: int, e: int = 1) -> Monomial:
    return ((i, e),) if e else ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for v, e in b:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def mono_pow(a: Monomial, k: int) -> Monomial:
    return tuple((v, e * k) for v, e in a) if k else ()


def mono_prod(ms: Iterable[Monomial]) -> Monomial:
    out: Monomial = ()
    for m in ms:
        out = mono_mul(out, m)
    return out


def mono_exponent(a: Monomial, v: int) -> int:
    for w, e in a:
        if w == v:
            return e
    return 0


def mono_str(a: Monomial) -> str:
    if not a:
        return "1"
    return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in a)


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None) -> None:
        self.terms: dict[Monomial, int] = {m: int(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({(): c})

    @classmethod
    def mono(cls, m: Monomial, c: int = 1) -> LaurentPoly:
        return cls({m: c})

    @classmethod
    def x(cls, i: int) -> LaurentPoly:
        return cls({var(i): 1})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def _lift(self, other) -> LaurentPoly:
        return LaurentPoly.const(other) if isinstance(other, int) else other

    def __add__(self, other) -> LaurentPoly:
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> LaurentPoly:
        return self._lift(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = self._lift(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (m, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPoly({mono_pow(m, k): c ** (-k) if c == 1 else (-1) ** k})
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def substitute(self, images: Mapping[int, Monomial]) -> LaurentPoly:
        """Ring map sending x_v to the monomial images[v] (unlisted variables fixed)."""
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            new = mono_prod(mono_pow(images.get(v, var(v)), e) for v, e in m)
            out[new] = out.get(new, 0) + c
        return LaurentPoly(out)

    def set_one(self, v: int) -> LaurentPoly:
        return self.substitute({v: ()})

    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        return {"terms": [{"m": {str(v): e for v, e in m}, "c": str(c)} for m, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPoly:
        return cls({monomial((int(v), int(e)) for v, e in t["m"].items()): int(t["c"])
                    for t in data["terms"]})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{mono_str(m)}" for m, c in self.sorted_terms())

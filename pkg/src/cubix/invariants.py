"""The integers e(n), M_n(G), M'_n(G), C_{d+1}(G) and epsilon(G)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from math import factorial, gcd
from pathlib import Path
from typing import Mapping

from sympy import factorint

from .bernoulli import bernoulli
from .groups import FiniteAbelianGroup


class Undetermined(Exception):
    """The requested value depends on data this package cannot compute."""


class Mode(str, Enum):
    STRICT = "strict"
    VANDIVER = "vandiver"
    TABLE = "table"


@dataclass(frozen=True)
class KTable:
    """Data for odd e(n): orders of K_{2n-2}(Z) and the primes p with p | h+_p."""

    k_orders: Mapping[int, int] = field(default_factory=dict)
    hplus_primes: frozenset[int] = frozenset()

    @classmethod
    def from_json(cls, data: Mapping) -> KTable:
        return cls({int(n): int(v) for n, v in data.get("k_orders", {}).items()},
                   frozenset(int(p) for p in data.get("hplus_primes", [])))


@dataclass(frozen=True)
class VandiverData:
    verified_below: int
    extra: frozenset[int] = frozenset()

    @classmethod
    def load(cls, path: str | Path | None = None) -> VandiverData:
        if path is None:
            text = resources.files("cubix").joinpath("data/vandiver.json").read_text()
        else:
            text = Path(path).read_text()
        data = json.loads(text)
        return cls(int(data["verified_below"]), frozenset(int(p) for p in data.get("extra", [])))

    def verified(self, p: int) -> bool:
        return p < self.verified_below or p in self.extra


def p_part(m: int, p: int) -> int:
    """Largest power of p dividing m (the ord_p notation)."""
    if m == 0:
        raise ValueError("p-part of 0 is undefined")
    m = abs(m)
    out = 1
    while m % p == 0:
        m //= p
        out *= p
    return out


def superfactorial(n: int) -> int:
    """n!! = n! (n-1)! ... 2!; the empty product gives 1 for n <= 1."""
    if n < 0:
        raise ValueError("superfactorial needs n >= 0")
    out = 1
    for k in range(2, n + 1):
        out *= factorial(k)
    return out


def numerator_bn_over_n(n: int) -> int:
    """|numerator(B_n / n)| for even n >= 2."""
    if n < 2 or n % 2:
        raise ValueError("numerator_bn_over_n needs an even n >= 2")
    return abs((bernoulli(n) / n).numerator)


def e_value(n: int, mode: Mode | str = Mode.VANDIVER, table: KTable | None = None) -> int:
    mode = Mode(mode)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 0:
        return numerator_bn_over_n(n)
    if n in (1, 3):
        return 1  # K_4(Z) = 0
    if mode is Mode.VANDIVER:
        return 1
    if mode is Mode.TABLE:
        if table is None or n not in table.k_orders:
            raise Undetermined(f"no order of K_{2 * n - 2}(Z) supplied for e({n})")
        order = table.k_orders[n]
        out = 1
        for p in table.hplus_primes:
            out *= p_part(order, p)
        return out
    raise Undetermined(f"e({n}) for odd n needs Vandiver mode or K-group data")


def e_prime(n: int) -> int:
    return numerator_bn_over_n(n) if n % 2 == 0 else 1


def _order_factors(G: FiniteAbelianGroup | int) -> dict[int, int]:
    order = G.order if isinstance(G, FiniteAbelianGroup) else int(G)
    if order < 1:
        raise ValueError("group order must be positive")
    return {int(p): int(k) for p, k in factorint(order).items()}


def _contribution(e: int, factors: Mapping[int, int]) -> int:
    out = 1
    for p, k in factors.items():
        if e % p == 0:
            out *= p ** k
    return out


def M_n(G, n: int, mode: Mode | str = Mode.VANDIVER, table: KTable | None = None) -> int:
    """prod_{k=2}^n prod_{p | e(k)} ord_p(#G)."""
    f = _order_factors(G)
    out = 1
    for k in range(2, n + 1):
        out *= _contribution(e_value(k, mode, table), f)
    return out


def M_prime_n(G, n: int) -> int:
    """prod_{s=1}^{[n/2]} prod_{p | e(2s)} ord_p(#G)."""
    f = _order_factors(G)
    out = 1
    for s in range(1, n // 2 + 1):
        out *= _contribution(e_value(2 * s), f)
    return out


def C_bound(G, d: int) -> int:
    return gcd(M_prime_n(G, d + 1), 2 * superfactorial(d + 1))


def epsilon(G) -> int:
    order = G.order if isinstance(G, FiniteAbelianGroup) else int(G)
    return gcd(2, order)


def epsilon_Y(G, genus: int) -> int:
    return gcd(epsilon(G), genus)


@dataclass
class AnnihilatorReport:
    order: int
    order_factorization: dict[int, int]
    d: int
    mode: str
    e_values: list[tuple[int, int | None, str]]  # (k, e(k) or None if undetermined, kind)
    e_prime_values: list[tuple[int, int]]
    M: int | None
    Mprime: int
    Cbound: int
    epsilon: int
    epsilon_Y: int | None
    verdicts: dict[str, bool | None]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "order_factorization": {str(p): k for p, k in sorted(self.order_factorization.items())},
            "d": self.d,
            "mode": self.mode,
            "e_values": [{"k": k, "e": v, "kind": kind} for k, v, kind in self.e_values],
            "e_prime_values": [{"k": k, "e_prime": v} for k, v in self.e_prime_values],
            "M": self.M,
            "Mprime": self.Mprime,
            "Cbound": self.Cbound,
            "epsilon": self.epsilon,
            "epsilon_Y": self.epsilon_Y,
            "verdicts": self.verdicts,
        }


def annihilator_bounds(G, d: int, mode: Mode | str = Mode.VANDIVER, genus: int | None = None,
                       table: KTable | None = None, vandiver: VandiverData | None = None) -> AnnihilatorReport:
    if d < 0:
        raise ValueError("relative dimension must be >= 0")
    mode = Mode(mode)
    vandiver = vandiver or VandiverData.load()
    f = _order_factors(G)
    order = 1
    for p, k in f.items():
        order *= p ** k
    n = d + 1
    evals: list[tuple[int, int | None, str]] = []
    M: int | None = 1
    for k in range(2, n + 1):
        try:
            e = e_value(k, mode, table)
        except Undetermined:
            evals.append((k, None, "odd" if k % 2 else "even"))
            M = None
            continue
        evals.append((k, e, "odd" if k % 2 else "even"))
        if M is not None:
            M *= _contribution(e, f)
    Mp = M_prime_n(G, n)
    C = gcd(Mp, 2 * superfactorial(n))
    primes = sorted(f)
    all_vandiver = all(vandiver.verified(p) for p in primes)
    verdicts: dict[str, bool | None] = {
        "M_is_one": None if M is None else M == 1,
        "C_is_one": C == 1,
        "all_primes_vandiver_verified": all_vandiver,
        "all_primes_exceed_d_plus_1": all(p > n for p in primes),
        "trivial": all_vandiver and all(p > n for p in primes) and C == 1,
    }
    return AnnihilatorReport(
        order, f, d, mode.value, evals,
        [(k, e_prime(k)) for k in range(2, n + 1)],
        M, Mp, C, gcd(2, order), None if genus is None else gcd(2, order, genus), verdicts,
    )

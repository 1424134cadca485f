"""Bernoulli numbers: exact values and two independent mod-p algorithms."""

from __future__ import annotations

import csv
import io
import threading
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb

import numpy as np
from sympy import isprime, primerange

_memo: list[Fraction] = [Fraction(1)]
_lock = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """B_k with B_1 = -1/2, from sum_{j<=k} C(k+1, j) B_j = 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k < len(_memo):
        return _memo[k]
    with _lock:
        while len(_memo) <= k:
            m = len(_memo)
            if m > 1 and m % 2:
                _memo.append(Fraction(0))
                continue
            s = sum(comb(m + 1, j) * _memo[j] for j in range(m))
            _memo.append(-s / (m + 1))
    return _memo[k]


def _check_prime(p: int) -> None:
    if p < 3 or not isprime(p):
        raise ValueError(f"{p} is not an odd prime")


def bernoulli_mod_p_power_sums(p: int) -> dict[int, int]:
    """B_k mod p from S_k = 1^k + ... + (p-1)^k, using S_k = p B_k mod p^2."""
    _check_prime(p)
    q = p * p
    j = np.arange(1, p, dtype=np.int64)
    j2 = j * j % q
    pw = j2.copy()
    out = {}
    for k in range(2, p - 2, 2):
        s = int(pw.sum() % q)
        out[k] = (s // p) % p  # s is divisible by p for these k
        pw = pw * j2 % q
    return out


def bernoulli_mod_p_series(p: int) -> dict[int, int]:
    """B_k mod p by inverting sum_k t^k/(k+1)! as a power series over F_p."""
    _check_prime(p)
    L = p - 2  # coefficients t^0 .. t^(p-3)
    fact = [1] * (p + 1)
    for i in range(1, p + 1):
        fact[i] = fact[i - 1] * i % p
    a = np.array([pow(fact[k + 1], -1, p) for k in range(L)], dtype=np.int64)
    b = np.zeros(L, dtype=np.int64)
    b[0] = 1
    for k in range(1, L):
        b[k] = -int(np.dot(a[1:k + 1], b[k - 1::-1]) % p) % p
    return {k: int(b[k]) * fact[k] % p for k in range(2, p - 2, 2)}


def bernoulli_mod_p(p: int, method: str = "power_sums") -> dict[int, int]:
    """{even k <= p-3: B_k mod p}. ``method`` is "power_sums" or "series"."""
    if method == "power_sums":
        return bernoulli_mod_p_power_sums(p)
    if method == "series":
        return bernoulli_mod_p_series(p)
    raise ValueError(f"unknown method {method!r}")


class AlgorithmDisagreement(RuntimeError):
    pass


def _pairs_for(p: int) -> list[tuple[int, int]]:
    a = bernoulli_mod_p_power_sums(p)
    b = bernoulli_mod_p_series(p)
    za = sorted(k for k, v in a.items() if v == 0)
    zb = sorted(k for k, v in b.items() if v == 0)
    if za != zb or a != b:
        raise AlgorithmDisagreement(f"mod-{p} Bernoulli algorithms disagree: {za} vs {zb}")
    return [(p, k) for k in za]


def irregular_pairs(limit: int, jobs: int = 1) -> list[tuple[int, int]]:
    """All (p, k) with p <= limit, k even, 2 <= k <= p-3 and p | B_k.

    Both modular algorithms run on every prime and must agree.
    """
    if limit < 3:
        raise ValueError("limit must be >= 3")
    primes = list(primerange(5, limit + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_pairs_for, primes, chunksize=16))
    else:
        chunks = [_pairs_for(p) for p in primes]
    return [pair for chunk in chunks for pair in chunk]


def is_regular(p: int) -> bool:
    _check_prime(p)
    return all(v for v in bernoulli_mod_p_power_sums(p).values())


def pairs_to_csv(pairs) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", "k"])
    w.writerows(pairs)
    return buf.getvalue()

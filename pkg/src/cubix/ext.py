"""Vanishing of n-Ext^1(mu_p, G_m) via eigenspaces of the cyclotomic class
group, and a verifier for the level-compatible tuples (f_k)."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from sympy import isprime

from .bernoulli import bernoulli_mod_p_power_sums
from .groups import FiniteAbelianGroup, GroupHom
from .invariants import VandiverData


class Verdict(str, Enum):
    VANISHES = "VANISHES"
    NONVANISHING = "NONVANISHING"
    CONDITIONAL_VANISHES = "CONDITIONAL_VANISHES"
    UNKNOWN = "UNKNOWN"


@dataclass
class ExtVerdict:
    p: int
    n: int
    eigenspace: int  # j with the relevant piece (C(p)/p)^(j)
    verdict: Verdict
    provenance: str
    external_input: bool = False

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "eigenspace": self.eigenspace,
            "verdict": self.verdict.value,
            "provenance": self.provenance,
            "external_input": self.external_input,
        }


def vanishing_ext(p: int, n: int, vandiver: VandiverData | None = None) -> ExtVerdict:
    """Decide whether n-Ext^1(mu_p, G_m), the (1-n)-eigenspace of C(p)/p dualized, vanishes."""
    if p < 3 or not isprime(p):
        raise ValueError(f"{p} is not an odd prime")
    if n < 1:
        raise ValueError("n must be >= 1")
    vandiver = vandiver or VandiverData.load()
    j = (1 - n) % (p - 1)
    if n == 1 or j == 0:
        return ExtVerdict(p, n, j, Verdict.VANISHES, "eigenspace 0 of C(p)/p is trivial")
    residues = bernoulli_mod_p_power_sums(p)
    if j % 2 == 1:
        k = n % (p - 1)
        if k == 0:
            return ExtVerdict(p, n, j, Verdict.VANISHES,
                              "eigenspace 1 of C(p)/p is trivial (Stickelberger); n = 0 mod p-1")
        if residues[k] != 0:
            return ExtVerdict(p, n, j, Verdict.VANISHES,
                              f"Herbrand: p does not divide B_{k} (Kummer congruence reduces n to {k})")
        return ExtVerdict(p, n, j, Verdict.NONVANISHING,
                          f"Ribet: p divides B_{k}, so the eigenspace is nonzero (converse of Herbrand, external theorem)",
                          external_input=True)
    if all(residues.values()):
        return ExtVerdict(p, n, j, Verdict.VANISHES, "regular prime: p divides no B_k, so C(p)/p = 0")
    if vandiver.verified(p):
        return ExtVerdict(p, n, j, Verdict.CONDITIONAL_VANISHES,
                          "even eigenspace; vanishes because Vandiver's conjecture is verified for p")
    return ExtVerdict(p, n, j, Verdict.UNKNOWN, "even eigenspace and Vandiver status of p unknown")


# ---------------------------------------------------------------- C(n; p^m) tuples

class CnpmDataError(ValueError):
    pass


@dataclass
class CnpmReport:
    ok: bool
    violations: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": self.violations}


@dataclass
class _Level:
    k: int
    module: FiniteAbelianGroup
    galois: dict[int, GroupHom]
    f: tuple[int, ...]
    norm: GroupHom | None


def _parse_levels(p: int, data: Mapping) -> list[_Level]:
    if not isinstance(data, Mapping):
        raise CnpmDataError("data must be a JSON object")
    try:
        levels_raw = data["levels"]
        m = int(data.get("m", len(levels_raw)))
    except (KeyError, TypeError, ValueError) as exc:
        raise CnpmDataError(f"missing field: {exc}") from None
    if not isinstance(levels_raw, list) or not all(isinstance(r, Mapping) for r in levels_raw):
        raise CnpmDataError("levels must be a list of objects")
    if m != len(levels_raw) or m < 1:
        raise CnpmDataError(f"m = {m} but {len(levels_raw)} levels given")
    levels: list[_Level] = []
    prev: FiniteAbelianGroup | None = None
    for idx, raw in enumerate(levels_raw, 1):
        try:
            k = int(raw.get("k", idx))
            if k != idx:
                raise CnpmDataError(f"level {idx} is labelled k = {k}")
            module = FiniteAbelianGroup(tuple(int(d) for d in raw["orders"]))
            for d in module.cyclic_orders:
                if (p ** k) % d:
                    raise CnpmDataError(f"level {k}: cyclic order {d} does not divide p^{k}")
            galois = {}
            for g in raw.get("galois", []):
                a = int(g["a"])
                if a % p == 0:
                    raise CnpmDataError(f"level {k}: a = {a} is not a unit mod p^{k}")
                galois[a % p ** k] = GroupHom(module, module, tuple(tuple(map(int, r)) for r in g["matrix"]))
            f = module.reduce([int(v) for v in raw["f"]])
            norm = None
            if k > 1:
                if "norm" not in raw:
                    raise CnpmDataError(f"level {k}: missing norm map from level {k - 1}")
                norm = GroupHom(prev, module, tuple(tuple(map(int, r)) for r in raw["norm"]))
        except CnpmDataError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise CnpmDataError(f"level {idx}: {exc}") from None
        levels.append(_Level(k, module, galois, f, norm))
        prev = module
    return levels


def cnpm_check(p: int, n: int, data: Mapping) -> CnpmReport:
    """Check sigma_a(f_k) = a^(n-1) f_k and N_{k-1}(f_{k-1}) = p^(n-1) f_k.

    Each level k describes Hom(C(p^k), p^-k Z/Z) as a product of cyclic
    groups, the action of declared Galois elements a as integer matrices
    (row i is the image of generator i), the candidate f_k, and for k > 1
    the map from level k-1 induced by the norm.
    """
    if p < 3 or not isprime(p):
        raise ValueError(f"{p} is not an odd prime")
    if n < 1:
        raise ValueError("n must be >= 1")
    levels = _parse_levels(p, data)
    violations: list[dict] = []
    for lv in levels:
        M = lv.module
        for a, sigma in sorted(lv.galois.items()):
            lhs = sigma(lv.f)
            rhs = M.scale(pow(a, n - 1, p ** lv.k), lv.f)
            if lhs != rhs:
                violations.append({"condition": "galois", "level": lv.k, "a": a,
                                   "expected": list(rhs), "got": list(lhs)})
        if lv.norm is not None:
            prev = levels[lv.k - 2]
            lhs = lv.norm(prev.f)
            rhs = M.scale(p ** (n - 1), lv.f)
            if lhs != rhs:
                violations.append({"condition": "norm", "level": lv.k,
                                   "expected": list(rhs), "got": list(lhs)})
    return CnpmReport(not violations, violations)

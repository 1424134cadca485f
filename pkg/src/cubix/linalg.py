"""Exact linear algebra: rational and modular solves, Smith normal form."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import factorint
from sympy.ntheory.modular import crt


class SingularSystem(ArithmeticError):
    pass


def solve_rational(A: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve the square system A x = b over Q by Gauss-Jordan elimination."""
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise SingularSystem("matrix is singular over Q")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        pr = [v * inv for v in M[col]]
        M[col] = pr
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                row = M[r]
                M[r] = [x - f * y for x, y in zip(row, pr)]
    return [M[r][n] for r in range(n)]


def solve_prime_power(A: Sequence[Sequence[int]], b: Sequence[int], p: int, k: int) -> list[int]:
    """Solve A x = b over Z/p^k; A must be invertible mod p (unit pivots exist)."""
    q = p ** k
    n = len(A)
    M = [[v % q for v in row] + [bi % q] for row, bi in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] % p), None)
        if piv is None:
            raise SingularSystem(f"matrix is singular mod {p}")
        M[col], M[piv] = M[piv], M[col]
        inv = pow(M[col][col], -1, q)
        pr = [v * inv % q for v in M[col]]
        M[col] = pr
        for r in range(n):
            f = M[r][col]
            if r != col and f:
                M[r] = [(x - f * y) % q for x, y in zip(M[r], pr)]
    return [M[r][n] for r in range(n)]


def solve_mod(A: Sequence[Sequence[int]], b: Sequence[int], m: int) -> list[int]:
    """Solve A x = b over Z/m by solving modulo each prime power and recombining."""
    parts = [(p ** k, solve_prime_power(A, b, p, k)) for p, k in sorted(factorint(m).items())]
    if len(parts) == 1:
        return parts[0][1]
    moduli = [q for q, _ in parts]
    return [int(crt(moduli, [sol[i] for _, sol in parts])[0]) for i in range(len(b))]


def smith_invariants(rows: Sequence[Sequence[int]], ncols: int) -> list[int]:
    """Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form.

    Exact integer elimination with smallest-pivot selection. The cokernel of
    the row space is Z^(ncols - len(result)) + sum Z/d_i.
    """
    M = [list(map(int, r)) for r in rows if any(r)]
    diag: list[int] = []
    t = 0
    while True:
        M = [r for r in M if any(r)]
        if not M:
            break
        # pivot: smallest absolute nonzero entry
        best = None
        for i, r in enumerate(M):
            for j in range(t, ncols):
                v = r[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        _, pi, pj = best
        M[0], M[pi] = M[pi], M[0]
        for r in M:
            r[t], r[pj] = r[pj], r[t]
        while True:
            piv = M[0][t]
            done = True
            # clear column t below the pivot
            for r in M[1:]:
                if r[t]:
                    q = r[t] // piv
                    if q:
                        p0 = M[0]
                        for j in range(t, ncols):
                            if p0[j]:
                                r[j] -= q * p0[j]
                    if r[t]:
                        done = False
            # clear row t right of the pivot
            p0 = M[0]
            for j in range(t + 1, ncols):
                if p0[j]:
                    q = p0[j] // piv
                    if q:
                        for r in M:
                            if r[t]:
                                r[j] -= q * r[t]
                    if p0[j]:
                        done = False
            if done:
                # divisibility: every remaining entry must be a multiple of the pivot
                bad = None
                for i, r in enumerate(M[1:], 1):
                    if any(r[j] % piv for j in range(t + 1, ncols)):
                        bad = i
                        break
                if bad is None:
                    break
                M[0] = [a + b for a, b in zip(M[0], M[bad])]
                continue
            # a smaller remainder exists somewhere in row/column t: move it to the pivot
            best = (abs(piv), 0, t)
            for i, r in enumerate(M):
                if r[t] and abs(r[t]) < best[0]:
                    best = (abs(r[t]), i, t)
            for j in range(t + 1, ncols):
                v = M[0][j]
                if v and abs(v) < best[0]:
                    best = (abs(v), 0, j)
            _, bi, bj = best
            M[0], M[bi] = M[bi], M[0]
            for r in M:
                r[t], r[bj] = r[bj], r[t]
        diag.append(abs(M[0][t]))
        M = M[1:]
        t += 1
        if t == ncols:
            break
    return diag

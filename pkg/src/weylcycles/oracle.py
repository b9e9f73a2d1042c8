"""Brute-force h^0 of dH - sum m_i E_i on X^n_s.

Sections are degree-d forms vanishing to order m_i at s random points. We
build the matrix of Hasse derivatives of order < m_i at each point against
all degree-d monomials (affine chart x_0 = 1) over F_p and return its corank.
Random points are general with probability 1 - O(1/p), and a bad
specialisation can only lower the rank, so disagreeing runs are resolved by
taking the minimum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import PrimeTooSmallError, WeylError

DEFAULT_PRIMES = (2147483647, 2147483629)
DEFAULT_SEEDS = (7, 11)
_MAX_PRIME = 2**31


class OracleDisagreement(WeylError):
    def __init__(self, problem_desc: str, values: dict):
        super().__init__(f"oracle runs disagree for {problem_desc}: {values}")
        self.values = values


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17):  # deterministic below 3.4e14
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class InterpolationProblem:
    n: int
    d: int
    mults: tuple[int, ...]
    prime: int = DEFAULT_PRIMES[0]
    seed: int = DEFAULT_SEEDS[0]

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(max(0, int(x)) for x in self.mults))
        if not is_prime(self.prime) or self.prime >= _MAX_PRIME:
            raise PrimeTooSmallError(f"{self.prime} is not a prime below 2^31")
        if self.prime <= max(self.d, 1):
            raise PrimeTooSmallError(f"prime {self.prime} must exceed the degree {self.d}")


def conditions_count(n: int, m: int) -> int:
    """Linear conditions imposed by a point of multiplicity m in P^n."""
    if m < 0:
        raise ValueError("multiplicity must be nonnegative")
    return comb(n + m - 1, n) if m > 0 else 0


def affine_exponents(n: int, d: int) -> list[tuple[int, ...]]:
    """Exponents of x_1..x_n for the degree-d monomials of P^n.

    Ordered lexicographically (descending) in the homogeneous exponent
    (d - |b|, b_1, ..., b_n).
    """
    out = []
    for full in itertools.product(range(d, -1, -1), repeat=n + 1):
        if sum(full) == d:
            out.append(full[1:])
    return out


def derivative_orders(n: int, m: int) -> list[tuple[int, ...]]:
    """All multi-indices a in N^n with |a| < m, lexicographic."""
    return [a for a in itertools.product(range(m), repeat=n) if sum(a) < m]


def interpolation_matrix(P: InterpolationProblem) -> np.ndarray:
    n, d, p = P.n, P.d, P.prime
    if d < 0:
        return np.zeros((0, 0), dtype=np.int64)
    B = np.array(affine_exponents(n, d), dtype=np.int64).reshape(-1, n)
    rng = np.random.default_rng(P.seed)
    pts = rng.integers(0, p, size=(len(P.mults), n), dtype=np.int64)
    binom = np.array([[comb(a, b) % p for b in range(d + 1)] for a in range(d + 1)], dtype=np.int64)
    rows = []
    for pt, m in zip(pts, P.mults):
        if m == 0:
            continue
        powers = np.ones((n, d + 1), dtype=np.int64)
        for i in range(n):
            for e in range(1, d + 1):
                powers[i, e] = powers[i, e - 1] * int(pt[i]) % p
        for a in derivative_orders(n, m):
            row = np.ones(len(B), dtype=np.int64)
            ok = np.ones(len(B), dtype=bool)
            for i in range(n):
                ex = B[:, i] - a[i]
                ok &= ex >= 0
                exc = np.clip(ex, 0, d)
                factor = binom[B[:, i], min(a[i], d)] * powers[i, exc] % p
                row = row * factor % p
            row[~ok] = 0
            rows.append(row)
    if not rows:
        return np.zeros((0, len(B)), dtype=np.int64)
    return np.vstack(rows)


def rank_mod_p(M: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p by dense row reduction (p < 2^31)."""
    A = np.array(M, dtype=np.int64) % p
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = A[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(A[r + 1:, c])
        if below.size:
            A[below, c:] = (A[below, c:] - np.outer(A[below, c], A[r, c:])) % p
        r += 1
    return r


def interpolation_h0(P: InterpolationProblem) -> int:
    if P.d < 0:
        return 0
    ncols = comb(P.n + P.d, P.n)
    M = interpolation_matrix(P)
    if M.shape[0] == 0:
        return ncols
    return ncols - rank_mod_p(M, P.prime)


@dataclass(frozen=True)
class OracleResult:
    value: int
    runs: dict = field(default_factory=dict)  # (prime, seed) -> corank

    @property
    def agree(self) -> bool:
        return len(set(self.runs.values())) <= 1


def oracle_h0(n: int, d: int, mults: Sequence[int],
              primes: Iterable[int] = DEFAULT_PRIMES, seeds: Iterable[int] = DEFAULT_SEEDS,
              strict: bool = False) -> OracleResult:
    """Run the oracle for every (prime, seed) pair.

    ``value`` is the minimum corank over the runs. With ``strict`` a
    disagreement raises ``OracleDisagreement``.
    """
    runs = {}
    for p in primes:
        for sd in seeds:
            runs[(p, sd)] = interpolation_h0(InterpolationProblem(n, d, tuple(mults), p, sd))
    res = OracleResult(min(runs.values()), runs)
    if strict and not res.agree:
        raise OracleDisagreement(f"n={n} d={d} m={tuple(mults)}", runs)
    return res

"""Exact cone membership: is b a nonnegative rational combination of columns?

Phase-I revised simplex over the rationals. Pricing runs in integer
arithmetic on a scaled dual vector; every answer comes with a certificate
that is checked exactly before it is returned (weights for membership, a
separating functional y with y.A <= 0 < y.b otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class ConeResult:
    member: bool
    weights: dict[int, Fraction] | None = None  # column index -> weight
    certificate: tuple[Fraction, ...] | None = None
    iterations: int = 0


def _scaled(y: list[Fraction]) -> tuple[list[int], int]:
    L = lcm(*(f.denominator for f in y)) if y else 1
    return [int(f * L) for f in y], L


class ConeMembership:
    """Membership oracle for the cone spanned by the rows of ``generators``."""

    def __init__(self, generators: Sequence[Sequence[int]]):
        self.gens = [tuple(int(x) for x in g) for g in generators]
        self.dim = len(self.gens[0]) if self.gens else 0
        self._mat = np.array(self.gens, dtype=np.int64).reshape(len(self.gens), self.dim)
        self._amax = int(np.abs(self._mat).max()) if self.gens else 0

    def _price(self, y: list[Fraction]) -> list[int]:
        """Scaled y.A_j for every generator column."""
        yi, _ = _scaled(y)
        bound = max((abs(v) for v in yi), default=0) * self._amax * max(self.dim, 1)
        if bound < _INT64_SAFE:
            return (self._mat @ np.array(yi, dtype=np.int64)).tolist()
        return [sum(a * b for a, b in zip(g, yi)) for g in self.gens]

    def solve(self, target: Sequence[int], max_iter: int = 100_000) -> ConeResult:
        m, N = self.dim, len(self.gens)
        b = [int(x) for x in target]
        if len(b) != m:
            raise ValueError(f"target has length {len(b)}, expected {m}")
        sign = [1 if v >= 0 else -1 for v in b]
        bb = [Fraction(s * v) for s, v in zip(sign, b)]

        def column(j):
            if j < N:
                return [Fraction(sign[i] * self.gens[j][i]) for i in range(m)]
            return [Fraction(1 if i == j - N else 0) for i in range(m)]

        basis = [N + i for i in range(m)]
        binv = [[Fraction(1 if i == k else 0) for k in range(m)] for i in range(m)]
        xb = bb[:]
        it = 0
        stall = 0
        best_obj = None
        while it < max_iter:
            it += 1
            cb = [Fraction(1) if j >= N else Fraction(0) for j in basis]
            y = [sum(cb[i] * binv[i][k] for i in range(m)) for k in range(m)]
            # reduced cost of generator j is -(y . sign*A_j); artificials are never re-entered
            ys = [y[k] * sign[k] for k in range(m)]
            priced = self._price(ys)
            obj = sum(x for x, j in zip(xb, basis) if j >= N)
            if best_obj is None or obj < best_obj:
                best_obj, stall = obj, 0
            else:
                stall += 1
            in_basis = set(basis)
            if stall > 50:  # Bland's rule once progress stalls
                entering = next((j for j in range(N) if priced[j] > 0 and j not in in_basis), None)
            else:
                cand = [(v, -j) for j, v in enumerate(priced) if v > 0 and j not in in_basis]
                entering = -max(cand)[1] if cand else None
            if entering is None:
                return self._finish(b, basis, xb, ys, obj, it)
            col = column(entering)
            d = [sum(binv[i][k] * col[k] for k in range(m)) for i in range(m)]
            best = None
            for i in range(m):
                if d[i] > 0:
                    key = (xb[i] / d[i], basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:  # cannot happen in phase I; objective is bounded below
                raise RuntimeError("phase-I simplex reported an unbounded ray")
            r = best[1]
            piv = d[r]
            binv[r] = [v / piv for v in binv[r]]
            xb[r] = xb[r] / piv
            for i in range(m):
                if i != r and d[i] != 0:
                    f = d[i]
                    binv[i] = [a - f * c for a, c in zip(binv[i], binv[r])]
                    xb[i] = xb[i] - f * xb[r]
            basis[r] = entering
        raise RuntimeError(f"simplex did not terminate in {max_iter} iterations")

    def _finish(self, b, basis, xb, ys, obj, it) -> ConeResult:
        N = len(self.gens)
        if obj == 0:
            weights = {j: x for j, x in zip(basis, xb) if j < N and x != 0}
            total = [sum(w * self.gens[j][i] for j, w in weights.items()) for i in range(self.dim)]
            if total != [Fraction(v) for v in b] or any(w < 0 for w in weights.values()):
                raise AssertionError("membership certificate failed verification")
            return ConeResult(True, weights=weights, iterations=it)
        # y.A_j <= 0 for all generators and y.b = obj > 0
        cert = tuple(ys)
        if any(sum(c * g for c, g in zip(cert, gen)) > 0 for gen in self.gens) or \
                sum(c * v for c, v in zip(cert, b)) <= 0:
            raise AssertionError("separation certificate failed verification")
        return ConeResult(False, certificate=cert, iterations=it)

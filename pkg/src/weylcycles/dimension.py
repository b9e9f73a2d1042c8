"""Euler characteristic, Weyl expected dimension and h^0 on X^3_7."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .baselocus import MORI_DREAM, catalog_arrays, effective_cone_membership, multiplicities
from .errors import UnsupportedError, WdimUndefinedError
from .lattice import DivisorClass, cremona_reduce
from .oracle import DEFAULT_PRIMES, DEFAULT_SEEDS, OracleResult, oracle_h0


def binom(a: int, n: int) -> int:
    """C(a, n), zero whenever a < n."""
    return comb(a, n) if a >= n else 0


def euler_char(D: DivisorClass) -> int:
    n = D.n
    return binom(n + D.d, n) - sum(binom(n + m - 1, n) for m in D.m if m > 0)


def correction_term(n: int, r: int, k: int) -> int:
    """Signed contribution of an r-dimensional cycle contained k times."""
    return (-1) ** (r + 1) * binom(n + k - r - 1, n)


@dataclass
class WdimBreakdown:
    divisor: DivisorClass
    chi: int
    contributions: list = field(default_factory=list)  # (cycle, r, k, term)
    total: int = 0

    def to_json(self) -> dict:
        def name(A):
            return getattr(A, "name", None) or A.pretty()
        return {
            "divisor": self.divisor.to_json(),
            "chi": self.chi,
            "contributions": [{"cycle": name(A), "dim": r, "k": k, "term": t}
                              for A, r, k, t in self.contributions],
            "wdim": self.total,
        }


def wdim(D: DivisorClass, assume_effective: bool = False) -> WdimBreakdown:
    """Weyl expected dimension with its full breakdown.

    Negative multiplicities are clamped to zero before anything is evaluated.
    Pass ``assume_effective`` only for divisors known to be effective (e.g.
    built as nonnegative combinations of Weyl divisors); otherwise the exact
    cone test runs first.
    """
    n, s = D.n, D.s
    if (n, s) not in MORI_DREAM:
        raise UnsupportedError(f"wdim is defined on X^3_7 and X^4_8, not X^{n}_{s}")
    if not assume_effective and not effective_cone_membership(D):
        raise WdimUndefinedError(f"{D.pretty()} is not effective")
    Dc = D.clamped()
    arr = catalog_arrays(n, s)
    kc, ks, kd = multiplicities(Dc)
    out = WdimBreakdown(D, euler_char(Dc))
    for cycles, ks_, r in ((arr.curves, kc, 1), (arr.surfaces, ks, 2), (arr.divisors, kd, n - 1)):
        for A, k in zip(cycles, ks_):
            if k > 0:
                out.contributions.append((A, r, int(k), correction_term(n, r, int(k))))
    out.total = out.chi + sum(t for *_, t in out.contributions)
    return out


def wdim_value(D: DivisorClass, assume_effective: bool = False) -> int:
    return wdim(D, assume_effective).total


@dataclass(frozen=True)
class ProofPath:
    reduced: DivisorClass
    steps: tuple
    wdim_original: int
    wdim_reduced: int


def h0_p3_proof_path(D: DivisorClass) -> ProofPath:
    """Reduce D by Cremona maps and evaluate wdim at both ends."""
    red = cremona_reduce(D)
    return ProofPath(red.divisor, red.steps, wdim_value(D, True), wdim_value(red.divisor, True))


def h0_p3(D: DivisorClass) -> int:
    """h^0 of a divisor on X^3_7: 0 if not effective, wdim otherwise."""
    if (D.n, D.s) != (3, 7):
        raise UnsupportedError("h0_p3 is only for X^3_7")
    if not effective_cone_membership(D):
        return 0
    path = h0_p3_proof_path(D)
    if path.wdim_original != path.wdim_reduced:
        raise AssertionError(f"wdim changed under reduction for {D.pretty()}: {path}")
    return path.wdim_original


@dataclass
class ConjectureReport:
    divisor: DivisorClass
    effective: bool
    breakdown: WdimBreakdown | None
    oracle: OracleResult

    @property
    def wdim(self) -> int | None:
        return None if self.breakdown is None else self.breakdown.total

    @property
    def agree(self) -> bool:
        return self.breakdown is not None and self.oracle.agree and self.wdim == self.oracle.value

    def to_json(self) -> dict:
        return {
            "divisor": self.divisor.to_json(),
            "effective": self.effective,
            "wdim": self.wdim,
            "breakdown": None if self.breakdown is None else self.breakdown.to_json(),
            "oracle": self.oracle.value,
            "oracle_runs": [{"prime": p, "seed": s, "h0": v} for (p, s), v in self.oracle.runs.items()],
            "agree": self.agree,
        }


def check_conjecture(D: DivisorClass, primes: Iterable[int] = DEFAULT_PRIMES,
                     seed: int | Iterable[int] = DEFAULT_SEEDS,
                     assume_effective: bool = False) -> ConjectureReport:
    """Compare wdim(D) with the interpolation oracle on X^4_8. Evidence only."""
    if (D.n, D.s) != (4, 8):
        raise UnsupportedError("the conjecture harness is for X^4_8")
    seeds = (seed,) if isinstance(seed, int) else tuple(seed)
    eff = assume_effective or effective_cone_membership(D)
    bd = wdim(D, assume_effective=True) if eff else None
    orc = oracle_h0(D.n, D.d, D.m, tuple(primes), seeds)
    return ConjectureReport(D, eff, bd, orc)

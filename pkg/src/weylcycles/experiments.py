"""Batch experiments: wdim against the interpolation oracle.

Both runs are driven by small dataclass configs so that scripts and tests
share the exact same (seeded) inputs.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .baselocus import effective_cone_membership
from .dimension import wdim_value
from .lattice import DivisorClass
from .oracle import DEFAULT_PRIMES, DEFAULT_SEEDS, oracle_h0
from .weyl import DIVISOR_TYPES, type_representative


@dataclass(frozen=True)
class SweepConfig:
    """Grid of divisors dH - sum m_i E_i on X^3_7.

    Only representatives with m_1 >= ... >= m_7 are visited; wdim, h^0 and
    effectivity are all invariant under permuting the points.
    """
    d_max: int = 6
    m_max: int = 4
    primes: tuple[int, ...] = DEFAULT_PRIMES
    seeds: tuple[int, ...] = DEFAULT_SEEDS


@dataclass(frozen=True)
class SampleConfig:
    """Seeded random effective divisors on X^4_8 with degree <= d_max."""
    count: int = 100
    d_min: int = 1
    d_max: int = 5
    seed: int = 20240611
    primes: tuple[int, ...] = DEFAULT_PRIMES
    seeds: tuple[int, ...] = DEFAULT_SEEDS


@dataclass
class Comparison:
    divisor: DivisorClass
    wdim: int
    oracle: int
    runs_agree: bool

    @property
    def match(self) -> bool:
        return self.wdim == self.oracle


@dataclass
class ExperimentReport:
    rows: list[Comparison] = field(default_factory=list)
    visited: int = 0
    seconds: float = 0.0

    @property
    def matches(self) -> int:
        return sum(r.match for r in self.rows)

    @property
    def mismatches(self) -> list[Comparison]:
        return [r for r in self.rows if not r.match]

    @property
    def oracle_disagreements(self) -> int:
        return sum(not r.runs_agree for r in self.rows)

    def summary(self) -> str:
        return (f"{len(self.rows)} effective of {self.visited} visited, {self.matches} match, "
                f"{len(self.mismatches)} mismatch, {self.oracle_disagreements} oracle disagreements, "
                f"{self.seconds:.1f}s")


def _compare(D: DivisorClass, primes, seeds, assume_effective: bool = True) -> Comparison:
    w = wdim_value(D, assume_effective=assume_effective)
    orc = oracle_h0(D.n, D.d, D.m, primes, seeds)
    return Comparison(D, w, orc.value, orc.agree)


def sweep_p3(cfg: SweepConfig = SweepConfig()) -> ExperimentReport:
    rep = ExperimentReport()
    t = time.perf_counter()
    for d in range(cfg.d_max + 1):
        for m in itertools.combinations_with_replacement(range(cfg.m_max, -1, -1), 7):
            D = DivisorClass(3, 7, d, m)
            rep.visited += 1
            if effective_cone_membership(D):
                rep.rows.append(_compare(D, cfg.primes, cfg.seeds))
    rep.seconds = time.perf_counter() - t
    return rep


def random_effective_sample(cfg: SampleConfig = SampleConfig()) -> list[DivisorClass]:
    """Draw d uniformly, then m_i uniformly in [0, d]; keep effective classes."""
    rng = random.Random(cfg.seed)
    out: list[DivisorClass] = []
    seen = set()
    while len(out) < cfg.count:
        d = rng.randint(cfg.d_min, cfg.d_max)
        D = DivisorClass(4, 8, d, tuple(rng.randint(0, d) for _ in range(8)))
        if D not in seen and effective_cone_membership(D):
            seen.add(D)
            out.append(D)
    return out


def conjecture_sample(cfg: SampleConfig = SampleConfig()) -> ExperimentReport:
    rep = ExperimentReport()
    t = time.perf_counter()
    sample = random_effective_sample(cfg)
    rep.visited = len(sample)
    rep.rows = [_compare(D, cfg.primes, cfg.seeds) for D in sample]
    rep.seconds = time.perf_counter() - t
    return rep


def weyl_type_representatives(primes=DEFAULT_PRIMES, seeds=DEFAULT_SEEDS) -> ExperimentReport:
    """Oracle on one member of each of the 15 types of Weyl divisors of X^4_8."""
    rep = ExperimentReport()
    t = time.perf_counter()
    for label in DIVISOR_TYPES[(4, 8)]:
        D = type_representative(4, 8, label)
        rep.visited += 1
        rep.rows.append(_compare(D, primes, seeds))
    rep.seconds = time.perf_counter() - t
    return rep

"""Self-contained reproduction checks run by ``weylcycles verify``.

Each check returns a ``CheckResult``; nothing here touches the network or
the on-disk cache, and all randomness is seeded.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import weyl
from .baselocus import catalog_arrays, effectivity_families, mult_surface, pencil_bound
from .chow import decompose_two_cycle, intersect_strict_transforms
from .dimension import wdim_value
from .lattice import (DivisorClass, anticanonical, cremona_divisor, cremona_sets,
                      dm_pairing, intersect_div_curve)
from .worked import NET_TABLE, SURFACE_CHAIN


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name:<28} {self.detail}  ({self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


EXPECTED_ORBITS = {(3, 7): (126, 5, 28), (4, 8): (2160, 15, 36)}


def check_orbit_counts() -> tuple[bool, str]:
    parts, ok = [], True
    for (n, s), (nd, nt, nc) in EXPECTED_ORBITS.items():
        div = weyl.weyl_divisor_orbit(n, s)
        cur = weyl.weyl_curve_orbit(n, s)
        types = div.types()
        good = (len(div) == nd and sorted(types) == list(range(1, nt + 1)) and len(cur) == nc
                and set(cur.types()) == set(weyl.CURVE_TYPES[(n, s)]))
        ok &= good
        parts.append(f"X^{n}_{s}: {len(div)} divisors/{len(types)} types, {len(cur)} curves")
    return ok, "; ".join(parts)


def check_minus_one_law() -> tuple[bool, str]:
    bad = 0
    total = 0
    for n, s in EXPECTED_ORBITS:
        K = anticanonical(n, s)
        for D in weyl.weyl_divisor_orbit(n, s).classes:
            total += 1
            bad += dm_pairing(D, D) != -1 or dm_pairing(D, K) != n - 1
    return bad == 0, f"{total} classes, {bad} violations"


def surface_formula(D: DivisorClass, S: weyl.WeylSurface) -> int:
    """The closed formulas for k_S, written out per surface type."""
    d, m = D.d, D.m
    idx = [i - 1 for i in S.index]
    rest = [k for k in range(8) if k not in idx]
    if S.label == "S1":
        v = sum(m[k] for k in idx) - 2 * d
    elif S.label == "S3":
        i, j = idx
        v = 2 * m[i] + sum(m[k] for k in range(8) if k not in (i, j)) - 5 * d
    elif S.label == "S6":
        v = sum(m[k] for k in idx) + 2 * sum(m[k] for k in rest) - 8 * d
    elif S.label == "S10":
        v = 3 * sum(m[k] for k in idx) + 2 * sum(m[k] for k in rest) - 11 * d
    else:
        v = 2 * m[idx[0]] + 3 * sum(m[k] for k in rest) - 14 * d
    return max(0, v)


def check_surface_functionals() -> tuple[bool, str]:
    bad = 0
    surfaces = weyl.weyl_surface_catalog()
    divisors = weyl.weyl_divisor_orbit(4, 8).classes
    for S in surfaces:
        for D in divisors:
            k = mult_surface(D, S)
            bad += k != pencil_bound(D, S) or k != surface_formula(D, S)
    return bad == 0, f"{len(surfaces)} surfaces x {len(divisors)} divisors, {bad} mismatches"


def check_surface_chain() -> tuple[bool, str]:
    bad = []
    prev = None
    for name, D, F, J, expected in SURFACE_CHAIN:
        if prev is not None and (cremona_divisor(prev[0], J), cremona_divisor(prev[1], J)) != (D, F):
            bad.append(f"{name}: not the Cremona image of the previous pair")
        dec = decompose_two_cycle(intersect_strict_transforms(D, F), D, F)
        if not dec.unique or sorted(dec.names()) != sorted(expected):
            bad.append(f"{name}: got {dec.names()}")
        prev = (D, F)
    return not bad, "; ".join(bad) or f"{len(SURFACE_CHAIN)} pairs decompose as listed"


def check_net_table() -> tuple[bool, str]:
    bad = []
    for label, D, C in NET_TABLE:
        found = weyl.classify(D)
        if found is None or found[0] != label:
            bad.append(f"type {label}: divisor misclassified")
        if intersect_div_curve(D, C) != 0 or C not in weyl.orthogonal_moving_curves(D):
            bad.append(f"type {label}: curve not orthogonal/moving")
    return not bad, "; ".join(bad) or f"{len(NET_TABLE)} rows"


def random_effective(rng: random.Random, n: int, s: int, terms: int = 4, coeff: int = 3) -> DivisorClass:
    """Random nonnegative combination of Weyl divisors (effective by construction)."""
    gens = weyl.weyl_divisor_orbit(n, s).classes
    D = DivisorClass(n, s, 0, (0,) * s)
    for _ in range(rng.randint(1, terms)):
        D = D + rng.randint(1, coeff) * rng.choice(gens)
    return D


def check_wdim_invariance(trials: int = 1000, seed: int = 2024) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for t in range(trials):
        n, s = (3, 7) if t % 2 else (4, 8)
        D = random_effective(rng, n, s)
        I = rng.choice(cremona_sets(n, s))
        bad += wdim_value(D, True) != wdim_value(cremona_divisor(D, I), True)
    return bad == 0, f"{trials} trials, {bad} violations"


def check_weyl_divisors_wdim() -> tuple[bool, str]:
    bad = 0
    total = 0
    for n, s in EXPECTED_ORBITS:
        for D in weyl.weyl_divisor_orbit(n, s).classes:
            total += 1
            bad += wdim_value(D, True) != 1
    return bad == 0, f"{total} Weyl divisors, {bad} with wdim != 1"


def check_cone_duality() -> tuple[bool, str]:
    fams = effectivity_families(4, 8)
    arr = catalog_arrays(4, 8)
    gens = arr.divisor_mat
    flip = np.concatenate(([1], -np.ones(8, dtype=np.int64)))
    curves = np.array([C.vector() for _, _, C in fams], dtype=np.int64) * flip
    prod = curves @ gens.T          # D.C for every family member and generator
    negative = int((prod < 0).sum())
    fam_ids = np.array([f for f, _, _ in fams])
    tight = {f: bool((prod[fam_ids == f] == 0).any()) for f in range(1, 7)}
    ok = negative == 0 and all(tight.values())
    return ok, f"{len(fams)} curves, {negative} negative pairings, tight families {sorted(f for f, t in tight.items() if t)}"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("orbit counts", check_orbit_counts),
    ("(-1)-class law", check_minus_one_law),
    ("surface functionals", check_surface_functionals),
    ("strict-transform chain", check_surface_chain),
    ("divisors as nets", check_net_table),
    ("effective cone duality", check_cone_duality),
    ("Weyl divisors wdim = 1", check_weyl_divisors_wdim),
    ("wdim Cremona invariance", check_wdim_invariance),
]


def run_all() -> list[CheckResult]:
    out = []
    for name, fn in CHECKS:
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:   # a crash is a failed check, not a crashed run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, ok, detail, time.perf_counter() - t))
    return out


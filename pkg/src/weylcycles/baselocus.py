"""Containment multiplicities of Weyl cycles in the base locus of a divisor,
and effectivity tests."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import (CatalogUnavailableError, NotAWeylCurveError, NotAWeylDivisorError,
                     UnsupportedError)
from .exactlp import ConeMembership, ConeResult
from .lattice import CurveClass, DivisorClass, dm_pairing, intersect_div_curve
from .weyl import (WeylSurface, weyl_curve_orbit, weyl_divisor_orbit,
                   weyl_surface_catalog)

MORI_DREAM = {(3, 7), (4, 8)}


def mult_curve(D: DivisorClass, C: CurveClass) -> int:
    if C not in weyl_curve_orbit(C.n, C.s):
        raise NotAWeylCurveError(C.pretty())
    return max(0, -intersect_div_curve(D, C))


def mult_surface(D: DivisorClass, S: WeylSurface) -> int:
    """k_S(D) = max(0, -char_cycle . D); only meaningful for effective D."""
    return max(0, -intersect_div_curve(D, S.char_cycle))


def pencil_bound(D: DivisorClass, S: WeylSurface) -> int:
    """max(0, -pencil . D + k_base(D)), the bound from the sweeping pencil."""
    return max(0, -intersect_div_curve(D, S.pencil) + mult_curve(D, S.base_curve))


def mult_weyl_divisor(D: DivisorClass, A: DivisorClass) -> int:
    if A not in weyl_divisor_orbit(A.n, A.s):
        raise NotAWeylDivisorError(A.pretty())
    return max(0, -dm_pairing(D, A))


# -- vectorised catalogs ------------------------------------------------------

@dataclass(frozen=True)
class CatalogArrays:
    curves: tuple[CurveClass, ...]
    curve_mat: np.ndarray      # rows (delta, mu)
    surfaces: tuple[WeylSurface, ...]
    surface_mat: np.ndarray    # rows (delta, mu) of the characteristic 1-cycles
    divisors: tuple[DivisorClass, ...]
    divisor_mat: np.ndarray    # rows (d, m)


@lru_cache(maxsize=None)
def catalog_arrays(n: int, s: int) -> CatalogArrays:
    curves = weyl_curve_orbit(n, s).classes if n in (3, 4) else ()
    surfaces = weyl_surface_catalog() if (n, s) == (4, 8) else ()
    divisors = weyl_divisor_orbit(n, s).classes
    w = s + 1

    def mat(vecs):
        return np.array([v for v in vecs], dtype=np.int64).reshape(len(vecs), w)
    return CatalogArrays(curves, mat([C.vector() for C in curves]),
                         surfaces, mat([S.char_cycle.vector() for S in surfaces]),
                         divisors, mat([A.vector() for A in divisors]))


def multiplicities(D: DivisorClass) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """k for every Weyl curve, surface and divisor of the catalogs, in catalog order."""
    arr = catalog_arrays(D.n, D.s)
    v = np.array(D.vector(), dtype=np.int64)
    # D.C = d delta - m.mu, i.e. v . (delta, -mu)
    flip = np.concatenate(([1], -np.ones(D.s, dtype=np.int64)))
    kc = np.maximum(0, -(arr.curve_mat * flip) @ v)
    ks = np.maximum(0, -(arr.surface_mat * flip) @ v)
    pair = np.concatenate(([D.n - 1], -np.ones(D.s, dtype=np.int64)))
    kd = np.maximum(0, -(arr.divisor_mat * pair) @ v)
    return kc, ks, kd


# -- necessary conditions for effectivity -------------------------------------

@dataclass(frozen=True)
class Violation:
    family: int
    indices: tuple[int, ...]
    excess: int   # amount by which the inequality fails (> 0)

    def to_json(self) -> dict:
        return {"family": self.family, "indices": list(self.indices), "excess": self.excess}


def _family_curve(delta: int, s: int, mults: dict[int, int], default: int, n: int) -> CurveClass:
    return CurveClass(n, s, delta, tuple(mults.get(k, default) for k in range(1, s + 1)))


@lru_cache(maxsize=None)
def effectivity_families(n: int, s: int) -> tuple[tuple[int, tuple[int, ...], CurveClass], ...]:
    """(family, indices, moving curve) triples; D effective implies D.C >= 0.

    On X^4_8 these are the six families of moving curves of degree 1, 4, 7,
    10, 13, 16. Elsewhere only m_i <= d and, when s >= n+2, the rational normal
    curve bound sum_{|J|=n+2} m_j <= n d are used.
    """
    pts = range(1, s + 1)
    out = []
    for i in pts:
        out.append((1, (i,), _family_curve(1, s, {i: 1}, 0, n)))
    if s >= n + 2:
        for J in itertools.combinations(pts, n + 2):
            out.append((2, J, _family_curve(n, s, {j: 1 for j in J}, 0, n)))
    if (n, s) == (4, 8):
        for J in itertools.combinations(pts, 3):
            out.append((3, J, _family_curve(7, s, {j: 2 for j in J}, 1, n)))
        for i1, i2 in itertools.permutations(pts, 2):
            out.append((4, (i1, i2), _family_curve(10, s, {i1: 1, i2: 3}, 2, n)))
        for J in itertools.combinations(pts, 3):
            out.append((5, J, _family_curve(13, s, {j: 2 for j in J}, 3, n)))
        for J in itertools.combinations(pts, 2):
            out.append((6, J, _family_curve(16, s, {j: 4 for j in J}, 3, n)))
    return tuple(out)


def effectivity_necessary(D: DivisorClass) -> list[Violation]:
    out = []
    for fam, idx, C in effectivity_families(D.n, D.s):
        val = intersect_div_curve(D, C)
        if val < 0:
            out.append(Violation(fam, idx, -val))
    return out


# -- exact membership in the effective cone -----------------------------------

@lru_cache(maxsize=None)
def _cone(n: int, s: int) -> ConeMembership:
    if (n, s) not in MORI_DREAM:
        raise CatalogUnavailableError(f"no generator catalog for the effective cone of X^{n}_{s}")
    return ConeMembership([A.vector() for A in weyl_divisor_orbit(n, s).classes])


@lru_cache(maxsize=200_000)
def _membership(n: int, s: int, key: tuple[int, ...]) -> ConeResult:
    return _cone(n, s).solve(key)


def effective_cone_certificate(D: DivisorClass) -> ConeResult:
    """Exact LP answer for D, with certificate; weight keys index
    ``weyl_divisor_orbit(n, s).classes``."""
    return _membership(D.n, D.s, D.vector())


def effective_cone_membership(D: DivisorClass) -> bool:
    """True iff D is a nonnegative rational combination of Weyl divisors.

    The generator set is permutation invariant, so the LP is solved for the
    class with sorted multiplicities and the answer cached.
    """
    key = D.canonical()
    return _membership(D.n, D.s, key).member


# -- reports ------------------------------------------------------------------

@dataclass
class BaseLocusReport:
    divisor: DivisorClass
    curve_entries: list[tuple[CurveClass, int]] = field(default_factory=list)
    surface_entries: list[tuple[WeylSurface, int]] = field(default_factory=list)
    divisor_entries: list[tuple[DivisorClass, int]] = field(default_factory=list)
    effectivity: list[Violation] = field(default_factory=list)

    @property
    def reliable(self) -> bool:
        """Surface multiplicities are only proven for effective divisors."""
        return not self.effectivity

    def is_empty(self) -> bool:
        return not (self.curve_entries or self.surface_entries or self.divisor_entries)

    def to_json(self) -> dict:
        return {
            "divisor": self.divisor.to_json(),
            "curves": [{"class": C.to_json(), "k": k} for C, k in self.curve_entries],
            "surfaces": [{"surface": S.name, "k": k} for S, k in self.surface_entries],
            "divisors": [{"class": A.to_json(), "k": k} for A, k in self.divisor_entries],
            "effectivity": [v.to_json() for v in self.effectivity],
            "reliable": self.reliable,
        }

    def table(self) -> str:
        lines = [f"divisor  {self.divisor.pretty()}"]
        for C, k in self.curve_entries:
            lines.append(f"curve    {C.pretty():<40} k={k}")
        for S, k in self.surface_entries:
            lines.append(f"surface  {S.name:<40} k={k}")
        for A, k in self.divisor_entries:
            lines.append(f"divisor  {A.pretty():<40} k={k}")
        for v in self.effectivity:
            lines.append(f"violated family {v.family} at {v.indices} by {v.excess}")
        if not self.reliable:
            lines.append("note: divisor is not effective; surface multiplicities unreliable")
        return "\n".join(lines)


def base_locus_report(D: DivisorClass) -> BaseLocusReport:
    if D.n not in (3, 4):
        raise UnsupportedError("base locus reports need n = 3 or 4")
    arr = catalog_arrays(D.n, D.s)
    kc, ks, kd = multiplicities(D)
    rep = BaseLocusReport(D)
    rep.curve_entries = [(C, int(k)) for C, k in zip(arr.curves, kc) if k > 0]
    rep.surface_entries = [(S, int(k)) for S, k in zip(arr.surfaces, ks) if k > 0]
    rep.divisor_entries = [(A, int(k)) for A, k in zip(arr.divisors, kd) if k > 0]
    rep.effectivity = effectivity_necessary(D)
    return rep

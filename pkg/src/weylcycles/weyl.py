"""Weyl orbits on X^3_7 and X^4_8: divisors, curves and surfaces.

Orbits are computed by breadth-first closure under every standard Cremona
map. Divisor orbits of exceptional divisors consist of effective classes only.
Curve orbits do not: a line through two points of the base set I is flipped
by Cr_I to a class of negative degree, and on X^4_8 the orbit of the lines
also contains minus the surface functionals. Catalogs keep the full orbit
and expose the effective members (positive degree) as ``classes``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .chow import (TwoCycleClass, cubic_cone_class, decic_class, plane_class,
                   quindecic_class, sextic_class)
from .errors import NotAWeylDivisorError, OrbitUnboundedError, UnsupportedError
from .lattice import (CurveClass, DivisorClass, anticanonical, cremona_curve,
                      cremona_divisor, cremona_sets, dm_pairing, intersect_div_curve)

DEFAULT_CAP = 10**6

# Reference members of each type, numbered as in the classical lists.
DIVISOR_TYPES: dict[tuple[int, int], dict[int, tuple[int, ...]]] = {
    (3, 7): {
        1: (0, -1, 0, 0, 0, 0, 0, 0),
        2: (1, 1, 1, 1, 0, 0, 0, 0),
        3: (2, 2, 1, 1, 1, 1, 1, 0),
        4: (3, 2, 2, 2, 2, 1, 1, 1),
        5: (4, 3, 2, 2, 2, 2, 2, 2),
    },
    (4, 8): {
        1: (0, -1, 0, 0, 0, 0, 0, 0, 0),
        2: (1, 1, 1, 1, 1, 0, 0, 0, 0),
        3: (2, 2, 2, 1, 1, 1, 1, 1, 0),
        4: (3, 2, 2, 2, 2, 2, 2, 2, 0),
        5: (3, 3, 2, 2, 2, 2, 1, 1, 1),
        6: (4, 3, 3, 3, 3, 2, 2, 2, 1),
        7: (4, 4, 3, 2, 2, 2, 2, 2, 2),
        8: (5, 4, 4, 3, 3, 3, 3, 2, 2),
        9: (6, 5, 4, 4, 4, 3, 3, 3, 3),
        10: (6, 4, 4, 4, 4, 4, 4, 3, 2),
        11: (7, 5, 5, 5, 4, 4, 4, 4, 3),
        12: (7, 6, 4, 4, 4, 4, 4, 4, 4),
        13: (8, 6, 5, 5, 5, 5, 5, 4, 4),
        14: (9, 6, 6, 6, 6, 5, 5, 5, 5),
        15: (10, 7, 6, 6, 6, 6, 6, 6, 6),
    },
}

CURVE_TYPES: dict[tuple[int, int], dict[str, tuple[int, ...]]] = {
    (3, 7): {"line": (1, 1, 1, 0, 0, 0, 0, 0), "cubic": (3, 1, 1, 1, 1, 1, 1, 0)},
    (4, 8): {"line": (1, 1, 1, 0, 0, 0, 0, 0, 0), "quartic": (4, 1, 1, 1, 1, 1, 1, 1, 0)},
}


def matching_permutation(ref: tuple[int, ...], mults: tuple[int, ...]) -> tuple[int, ...] | None:
    """perm with mults[perm[k] - 1] == ref[k] for all k, or None.

    Equal values are matched in increasing index order, so the result is
    deterministic.
    """
    if sorted(ref) != sorted(mults):
        return None
    order_ref = sorted(range(len(ref)), key=lambda k: (-ref[k], k))
    order_act = sorted(range(len(mults)), key=lambda k: (-mults[k], k))
    perm = [0] * len(ref)
    for a, b in zip(order_ref, order_act):
        perm[a] = b + 1
    return tuple(perm)


def _bfs(seeds: Iterable, step: Callable, sets, cap: int) -> list:
    seen = dict.fromkeys(seeds)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for I in sets:
            y = step(x, I)
            if y not in seen:
                seen[y] = None
                if len(seen) > cap:
                    raise OrbitUnboundedError(f"orbit exceeded {cap} classes")
                queue.append(y)
    return list(seen)


def _type_table(table, key, vec):
    for label, ref in table.get(key, {}).items():
        if ref[0] == vec[0]:
            perm = matching_permutation(ref[1:], vec[1:])
            if perm is not None:
                return label, perm
    return None


@dataclass(frozen=True)
class WeylDivisorCatalog:
    n: int
    s: int
    classes: tuple[DivisorClass, ...]
    labels: dict = field(repr=False, compare=False)

    def __contains__(self, D: DivisorClass) -> bool:
        return D in self.labels

    def __len__(self) -> int:
        return len(self.classes)

    def types(self) -> dict:
        """Type label -> number of classes of that type."""
        out: dict = {}
        for lab, _ in self.labels.values():
            out[lab] = out.get(lab, 0) + 1
        return dict(sorted(out.items(), key=lambda kv: str(kv[0]).zfill(3)))


@dataclass(frozen=True)
class WeylCurveCatalog:
    n: int
    s: int
    classes: tuple[CurveClass, ...]
    orbit: tuple[CurveClass, ...] = field(repr=False)
    labels: dict = field(repr=False, compare=False)

    def __contains__(self, C: CurveClass) -> bool:
        return C in self.labels

    def __len__(self) -> int:
        return len(self.classes)

    def types(self) -> dict:
        out: dict = {}
        for lab, _ in self.labels.values():
            out[lab] = out.get(lab, 0) + 1
        return out


_DIVISOR_CATALOGS: dict[tuple[int, int], WeylDivisorCatalog] = {}


def catalog_from_classes(n: int, s: int, orbit: Iterable[DivisorClass]) -> WeylDivisorCatalog:
    classes = tuple(sorted(orbit, key=lambda D: (D.d, [-x for x in D.m])))
    labels = {}
    for D in classes:
        found = _type_table(DIVISOR_TYPES, (n, s), D.vector())
        if found is None:
            ref = tuple(sorted(D.m, reverse=True))
            found = (f"d{D.d}:{','.join(map(str, ref))}", matching_permutation(ref, D.m))
        labels[D] = found
    return WeylDivisorCatalog(n, s, classes, labels)


def install_divisor_catalog(cat: WeylDivisorCatalog) -> None:
    """Use ``cat`` for (cat.n, cat.s) from now on, e.g. after loading it from disk."""
    _DIVISOR_CATALOGS[(cat.n, cat.s)] = cat


def weyl_divisor_orbit(n: int, s: int, cap: int = DEFAULT_CAP) -> WeylDivisorCatalog:
    cat = _DIVISOR_CATALOGS.get((n, s))
    if cat is None:
        seeds = [DivisorClass.exceptional(n, s, i) for i in range(1, s + 1)]
        cat = catalog_from_classes(n, s, _bfs(seeds, cremona_divisor, cremona_sets(n, s), cap))
        install_divisor_catalog(cat)
    return cat


@lru_cache(maxsize=None)
def weyl_curve_orbit(n: int, s: int, cap: int = DEFAULT_CAP) -> WeylCurveCatalog:
    if n not in (3, 4):
        raise UnsupportedError("Weyl curves are only computed for n = 3, 4")
    seeds = [CurveClass.line(n, s, i, j) for i, j in itertools.combinations(range(1, s + 1), 2)]
    orbit = _bfs(seeds, cremona_curve, cremona_sets(n, s), cap)
    orbit.sort(key=lambda C: (C.delta, [-x for x in C.mu]))
    classes = tuple(C for C in orbit if C.delta > 0)
    labels = {}
    for C in classes:
        found = _type_table(CURVE_TYPES, (n, s), C.vector())
        if found is None:
            found = (f"deg{C.delta}", matching_permutation(tuple(sorted(C.mu, reverse=True)), C.mu))
        labels[C] = found
    return WeylCurveCatalog(n, s, classes, tuple(orbit), labels)


@lru_cache(maxsize=None)
def moving_curve_orbit(n: int, s: int, cap: int = DEFAULT_CAP) -> tuple[CurveClass, ...]:
    """Orbit of the moving class h - e_i (lines through one base point)."""
    seeds = [CurveClass.moving_line(n, s, i) for i in range(1, s + 1)]
    orbit = _bfs(seeds, cremona_curve, cremona_sets(n, s), cap)
    return tuple(sorted(orbit, key=lambda C: (C.delta, [-x for x in C.mu])))


def is_minus_one_class(D: DivisorClass) -> bool:
    return dm_pairing(D, D) == -1 and dm_pairing(D, anticanonical(D.n, D.s)) == D.n - 1


def classify(D: DivisorClass):
    """(type label, permutation) for a Weyl divisor, or None.

    ``permutation[k]`` is the index of D playing the role of point k+1 in the
    reference member of the type.
    """
    if not is_minus_one_class(D):
        return None
    return weyl_divisor_orbit(D.n, D.s).labels.get(D)


def type_representative(n: int, s: int, label) -> DivisorClass:
    ref = DIVISOR_TYPES[(n, s)][label]
    return DivisorClass(n, s, ref[0], ref[1:])


def orthogonal_moving_curves(D: DivisorClass) -> list[CurveClass]:
    """Moving curve classes (orbit of h - e_i) with D.C = 0."""
    if D not in weyl_divisor_orbit(D.n, D.s):
        raise NotAWeylDivisorError(D.pretty())
    return [C for C in moving_curve_orbit(D.n, D.s) if intersect_div_curve(D, C) == 0]


# -- Weyl surfaces of X^4_8 ---------------------------------------------------

@dataclass(frozen=True)
class WeylSurface:
    """A Weyl surface of X^4_8.

    ``char_cycle`` is base curve + pencil class; the surface lies in the base
    locus of D exactly max(0, -char_cycle . D) times.
    """
    label: str
    index: tuple
    char_cycle: CurveClass
    base_curve: CurveClass = field(compare=False)
    pencil: CurveClass = field(compare=False)
    chow_class: TwoCycleClass = field(compare=False, repr=False)

    @property
    def name(self) -> str:
        if self.label == "S3":
            i, j = self.index
            return f"S3_{{{i},{j}^}}"
        return f"{self.label}_{{{','.join(map(str, self.index))}}}"

    def to_json(self) -> dict:
        return {"label": self.label, "index": list(self.index), "name": self.name,
                "char_cycle": list(self.char_cycle.vector()),
                "chow_class": self.chow_class.to_json()}


def _curve(delta: int, mults: dict[int, int], default: int = 0) -> CurveClass:
    return CurveClass(4, 8, delta, tuple(mults.get(k, default) for k in range(1, 9)))


def _surface(label, index, char, base_pair, chow) -> WeylSurface:
    base = CurveClass.line(4, 8, *base_pair)
    return WeylSurface(label, tuple(index), char, base, char - base, chow)


@lru_cache(maxsize=None)
def weyl_surface_catalog() -> tuple[WeylSurface, ...]:
    """The 204 Weyl surfaces of X^4_8 (56 S1, 56 S3, 56 S6, 28 S10, 8 S15)."""
    pts = range(1, 9)
    out = []
    for a, b, c in itertools.combinations(pts, 3):
        out.append(_surface("S1", (a, b, c), _curve(2, {a: 1, b: 1, c: 1}), (a, b),
                            plane_class(a, b, c)))
    for i, j in itertools.permutations(pts, 2):
        k = min(t for t in pts if t not in (i, j))
        out.append(_surface("S3", (i, j), _curve(5, {i: 2, j: 0}, 1), (i, k),
                            cubic_cone_class(i, j)))
    for i, j, k in itertools.combinations(pts, 3):
        t1, t2 = [t for t in pts if t not in (i, j, k)][:2]
        out.append(_surface("S6", (i, j, k), _curve(8, {i: 1, j: 1, k: 1}, 2), (t1, t2),
                            sextic_class(i, j, k)))
    for i, j in itertools.combinations(pts, 2):
        k = min(t for t in pts if t not in (i, j))
        out.append(_surface("S10", (i, j), _curve(11, {i: 3, j: 3}, 2), (i, k),
                            decic_class(i, j)))
    for i in pts:
        a, b = [t for t in pts if t != i][:2]
        out.append(_surface("S15", (i,), _curve(14, {i: 2}, 3), (a, b), quindecic_class(i)))
    return tuple(out)


def surface_by_name(label: str, *index: int) -> WeylSurface:
    for S in weyl_surface_catalog():
        if S.label == label and S.index == tuple(index):
            return S
    raise KeyError(f"{label}{index}")


@lru_cache(maxsize=None)
def _surfaces_by_cycle() -> dict[CurveClass, WeylSurface]:
    return {S.char_cycle: S for S in weyl_surface_catalog()}


def surface_from_char_cycle(C: CurveClass) -> WeylSurface | None:
    return _surfaces_by_cycle().get(C)


def cremona_surface(S: WeylSurface, J: Iterable[int]) -> WeylSurface | CurveClass:
    """Image of a Weyl surface under Cr_J.

    Returns the image surface, or, when the surface is contracted onto a curve
    of the indeterminacy locus, the (negative degree) image 1-cycle.
    """
    img = cremona_curve(S.char_cycle, J)
    return surface_from_char_cycle(img) or img

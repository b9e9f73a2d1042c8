"""Intersection products on X^4_{8,(1)}, the blow-up of X^4_8 along the 28
lines L_ij and the 8 rational normal quartics C_i^ (through all points but p_i).

Pic is spanned by H, E_i, E_ij, E_Ci and A^2 is freely generated by
h, e_i, e_ij, f_ij, e_Ci, f_Ci.  Products of two divisors follow the table

    H^2 = h          E_i^2 = -e_i        H E_i = E_i E_j = 0
    H E_ij = E_i E_ij = f_ij             E_i E_jk = 0
    E_ij^2 = -e_ij - f_ij                E_ij E_kl = 0 for {k,l} != {i,j}
    H E_Ci = 4 f_Ci                      E_j E_Ci = f_Ci (j != i), E_i E_Ci = 0
    E_jk E_Ci = 0   E_Ci E_Cj = 0 (i != j)   E_Ci^2 = -e_Ci - f_Ci
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NoDecompositionError, UnsupportedError
from .lattice import CurveClass, DivisorClass

N_POINTS = 8
PAIRS: tuple[tuple[int, int], ...] = tuple(itertools.combinations(range(1, N_POINTS + 1), 2))
PAIR_INDEX = {p: k for k, p in enumerate(PAIRS)}
QUARTIC_DEGREE = 4


def pair_index(i: int, j: int) -> int:
    return PAIR_INDEX[(min(i, j), max(i, j))]


def line_curve(i: int, j: int) -> CurveClass:
    return CurveClass.line(4, 8, i, j)


def quartic_curve(i: int) -> CurveClass:
    """C_i^: the rational normal quartic through every base point except p_i."""
    return CurveClass(4, 8, QUARTIC_DEGREE, tuple(0 if k == i else 1 for k in range(1, 9)))


@dataclass(frozen=True)
class TwoCycleClass:
    h: int = 0
    e: tuple[int, ...] = (0,) * 8
    e_line: tuple[int, ...] = (0,) * 28
    f_line: tuple[int, ...] = (0,) * 28
    e_curve: tuple[int, ...] = (0,) * 8
    f_curve: tuple[int, ...] = (0,) * 8

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> TwoCycleClass:
        v = [int(x) for x in v]
        return cls(v[0], tuple(v[1:9]), tuple(v[9:37]), tuple(v[37:65]),
                   tuple(v[65:73]), tuple(v[73:81]))

    def vector(self) -> tuple[int, ...]:
        return (self.h, *self.e, *self.e_line, *self.f_line, *self.e_curve, *self.f_curve)

    def __add__(self, other: TwoCycleClass) -> TwoCycleClass:
        return TwoCycleClass.from_vector([a + b for a, b in zip(self.vector(), other.vector())])

    def __sub__(self, other: TwoCycleClass) -> TwoCycleClass:
        return self + (-1) * other

    def __rmul__(self, k: int) -> TwoCycleClass:
        return TwoCycleClass.from_vector([k * a for a in self.vector()])

    def is_zero(self) -> bool:
        return not any(self.vector())

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "e": list(self.e),
            "e_line": {f"{i}{j}": c for (i, j), c in zip(PAIRS, self.e_line)},
            "f_line": {f"{i}{j}": c for (i, j), c in zip(PAIRS, self.f_line)},
            "e_curve": list(self.e_curve),
            "f_curve": list(self.f_curve),
        }

    @classmethod
    def from_json(cls, obj: dict) -> TwoCycleClass:
        def lines(d):
            return tuple(int(d.get(f"{i}{j}", 0)) for i, j in PAIRS)
        return cls(int(obj["h"]), tuple(obj["e"]), lines(obj["e_line"]), lines(obj["f_line"]),
                   tuple(obj["e_curve"]), tuple(obj["f_curve"]))

    def pretty(self) -> str:
        parts = []

        def add(c, name):
            if c:
                parts.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{name}")
        add(self.h, "h")
        for i, c in enumerate(self.e, 1):
            add(c, f"e{i}")
        for (i, j), c in zip(PAIRS, self.e_line):
            add(c, f"e{i}{j}")
        for (i, j), c in zip(PAIRS, self.f_line):
            add(c, f"f{i}{j}")
        for i, c in enumerate(self.e_curve, 1):
            add(c, f"eC{i}^")
        for i, c in enumerate(self.f_curve, 1):
            add(c, f"fC{i}^")
        out = "".join(parts).lstrip("+")
        return out or "0"


def _builder():
    return {"h": 0, "e": [0] * 8, "el": [0] * 28, "fl": [0] * 28, "ec": [0] * 8, "fc": [0] * 8}


def _freeze(b) -> TwoCycleClass:
    return TwoCycleClass(b["h"], tuple(b["e"]), tuple(b["el"]), tuple(b["fl"]),
                         tuple(b["ec"]), tuple(b["fc"]))


def linear_two_cycle(h: int, e: dict[int, int] = {}, lines: dict[tuple[int, int], int] = {},
                     curves: dict[int, int] = {}) -> TwoCycleClass:
    """h*h - sum e_i - sum c_ij (e_ij - f_ij) - sum c_k (e_Ck - f_Ck).

    ``e``, ``lines`` and ``curves`` map indices to the (positive) coefficient
    being subtracted; this is the shape every Weyl surface class takes.
    """
    b = _builder()
    b["h"] = h
    for i, c in e.items():
        b["e"][i - 1] -= c
    for (i, j), c in lines.items():
        k = pair_index(i, j)
        b["el"][k] -= c
        b["fl"][k] += c
    for i, c in curves.items():
        b["ec"][i - 1] -= c
        b["fc"][i - 1] += c
    return _freeze(b)


# -- the classes of the five surface types, for arbitrary indices ------------

def plane_class(a: int, b: int, c: int) -> TwoCycleClass:
    pts = (a, b, c)
    return linear_two_cycle(1, {i: 1 for i in pts},
                            {p: 1 for p in itertools.combinations(sorted(pts), 2)})


def cubic_cone_class(i: int, j: int) -> TwoCycleClass:
    """S3_{i,j^}: triple point at p_i, missing p_j."""
    rest = [k for k in range(1, 9) if k not in (i, j)]
    return linear_two_cycle(3, {i: 3, **{k: 1 for k in rest}},
                            {(i, k): 1 for k in rest}, {j: 1})


def sextic_class(i: int, j: int, k: int) -> TwoCycleClass:
    """S6_{ijk}: simple at p_i, p_j, p_k and triple at the other five points."""
    simple = (i, j, k)
    triple = [t for t in range(1, 9) if t not in simple]
    return linear_two_cycle(6, {**{t: 3 for t in triple}, **{t: 1 for t in simple}},
                            {p: 1 for p in itertools.combinations(triple, 2)},
                            {t: 1 for t in simple})


def decic_class(i: int, j: int) -> TwoCycleClass:
    """S10_{ij}: sextuple at p_i, p_j and triple elsewhere."""
    rest = [k for k in range(1, 9) if k not in (i, j)]
    lines = {(i, j): 3}
    lines.update({(a, b): 1 for a in (i, j) for b in rest})
    return linear_two_cycle(10, {i: 6, j: 6, **{k: 3 for k in rest}}, lines,
                            {k: 1 for k in rest})


def quindecic_class(i: int) -> TwoCycleClass:
    """S15_i: triple point at p_i, sextuple at the other seven."""
    rest = [k for k in range(1, 9) if k != i]
    return linear_two_cycle(15, {i: 3, **{k: 6 for k in rest}},
                            {p: 1 for p in itertools.combinations(rest, 2)},
                            {**{k: 1 for k in rest}, i: 3})


# -- Picard group of the further blow-up -------------------------------------

@dataclass(frozen=True)
class ExtPicClass:
    """D - sum k_ij E_ij - sum k_Ci E_Ci on X^4_{8,(1)}."""
    base: DivisorClass
    k_line: tuple[int, ...] = field(default=(0,) * 28)
    k_curve: tuple[int, ...] = field(default=(0,) * 8)

    def __post_init__(self):
        if (self.base.n, self.base.s) != (4, 8):
            raise UnsupportedError("the further blow-up is only defined for X^4_8")

    def pretty(self) -> str:
        out = self.base.pretty()
        for (i, j), k in zip(PAIRS, self.k_line):
            if k:
                out += f"-{k if k != 1 else ''}E{i}{j}"
        for i, k in enumerate(self.k_curve, 1):
            if k:
                out += f"-{k if k != 1 else ''}EC{i}^"
        return out


def strict_transform(D: DivisorClass) -> ExtPicClass:
    from .baselocus import mult_curve
    if (D.n, D.s) != (4, 8):
        raise UnsupportedError("strict transforms are only defined on X^4_8")
    k_line = tuple(mult_curve(D, line_curve(i, j)) for i, j in PAIRS)
    k_curve = tuple(mult_curve(D, quartic_curve(i)) for i in range(1, 9))
    return ExtPicClass(D, k_line, k_curve)


def ext_product(A: ExtPicClass, B: ExtPicClass) -> TwoCycleClass:
    a, b = A.base.d, B.base.d
    # coefficients of -E_i, -E_ij, -E_Ci
    mA, mB = A.base.m, B.base.m
    kA, kB = A.k_line, B.k_line
    lA, lB = A.k_curve, B.k_curve
    out = _builder()
    out["h"] = a * b
    for i in range(8):
        out["e"][i] = -mA[i] * mB[i]
    for p, (i, j) in enumerate(PAIRS):
        f = -(a * kB[p] + kA[p] * b)
        for t in (i - 1, j - 1):
            f += mA[t] * kB[p] + kA[p] * mB[t]
        f -= kA[p] * kB[p]
        out["fl"][p] = f
        out["el"][p] = -kA[p] * kB[p]
    for i in range(8):
        f = -QUARTIC_DEGREE * (a * lB[i] + lA[i] * b)
        for j in range(8):
            if j != i:
                f += mA[j] * lB[i] + lA[i] * mB[j]
        f -= lA[i] * lB[i]
        out["fc"][i] = f
        out["ec"][i] = -lA[i] * lB[i]
    return _freeze(out)


def intersect_strict_transforms(D: DivisorClass, F: DivisorClass) -> TwoCycleClass:
    return ext_product(strict_transform(D), strict_transform(F))


# -- decomposition into Weyl surfaces -----------------------------------------

@dataclass(frozen=True)
class Decomposition:
    components: tuple  # of (WeylSurface, int)
    unique: bool

    def names(self) -> list[str]:
        out = []
        for S, c in self.components:
            out.extend([S.name] * c)
        return out


def _rref(rows: list[list[Fraction]], ncols: int):
    """Reduced row echelon form in place; returns pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve_nonnegative(target: Sequence[int], columns: Sequence[Sequence[int]],
                      bound: int | None = None) -> tuple[list[list[int]], bool]:
    """Nonnegative integer solutions x of sum_j x_j columns[j] = target.

    Returns (solutions, unique). When the columns are dependent the free
    variables are enumerated in 0..bound.
    """
    k = len(columns)
    if k == 0:
        return ([[]] if not any(target) else []), True
    m = len(target)
    rows = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(m)]
    pivots = _rref(rows, k)
    # inconsistent row
    for row in rows[len(pivots):]:
        if row[k] != 0:
            return [], True
    free = [j for j in range(k) if j not in pivots]
    if bound is None:
        bound = max((abs(t) for t in target), default=0)
    sols = []
    for vals in itertools.product(range(bound + 1), repeat=len(free)):
        x = [Fraction(0)] * k
        for j, v in zip(free, vals):
            x[j] = Fraction(v)
        ok = True
        for r, c in enumerate(pivots):
            val = rows[r][k] - sum(rows[r][j] * x[j] for j in free)
            if val < 0 or val.denominator != 1:
                ok = False
                break
            x[c] = val
        if ok:
            sols.append([int(v) for v in x])
    return sols, not free


def decompose_two_cycle(Z: TwoCycleClass, D: DivisorClass, F: DivisorClass) -> Decomposition:
    """Write Z as a nonnegative integer sum of Weyl surface classes.

    Candidates are the surfaces lying in the base locus of both D and F.
    """
    from .baselocus import mult_surface
    from .weyl import weyl_surface_catalog

    if Z.is_zero():
        return Decomposition((), True)
    cands = [S for S in weyl_surface_catalog()
             if mult_surface(D, S) >= 1 and mult_surface(F, S) >= 1]
    sols, unique = solve_nonnegative(Z.vector(), [S.chow_class.vector() for S in cands])
    if not sols:
        raise NoDecompositionError(f"no decomposition of {Z.pretty()} over {len(cands)} candidates")
    x = sols[0]
    comps = tuple((S, c) for S, c in zip(cands, x) if c)
    return Decomposition(comps, unique and len(sols) == 1)


def two_cycle_sum(classes: Iterable[TwoCycleClass]) -> TwoCycleClass:
    out = TwoCycleClass()
    for c in classes:
        out = out + c
    return out

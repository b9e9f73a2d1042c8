"""Divisor and curve classes on X^n_s and the standard Cremona action on them.

A divisor class ``dH - sum m_i E_i`` is stored as ``DivisorClass(n, s, d, m)``
and a curve class ``delta h - sum mu_i e_i`` as ``CurveClass(n, s, delta, mu)``.
Point indices are 1-based everywhere in the public API.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IncompatibleAmbientError, InvalidIndexSetError, UnsupportedError

IndexSet = tuple[int, ...]


def index_set(indices: Iterable[int], s: int) -> IndexSet:
    """Validate and normalise a set of 1-based point indices."""
    out = tuple(sorted(indices))
    if len(set(out)) != len(out):
        raise InvalidIndexSetError(f"duplicate indices in {out}")
    if out and (out[0] < 1 or out[-1] > s):
        raise InvalidIndexSetError(f"indices {out} out of range 1..{s}")
    return out


def cremona_sets(n: int, s: int) -> list[IndexSet]:
    """All index sets of size n+1, in lexicographic order."""
    return list(itertools.combinations(range(1, s + 1), n + 1))


def _check_ambient(n: int, s: int, mults: Sequence[int]) -> None:
    if n < 2 or s < 0:
        raise ValueError(f"invalid ambient n={n}, s={s}")
    if len(mults) != s:
        raise ValueError(f"expected {s} multiplicities, got {len(mults)}")


def _pretty(lead: int, h: str, mults: Sequence[int], e: str) -> str:
    """e.g. 3H-2E1-E5, with the exceptional part written with negated signs."""
    terms = [(lead, h)] + [(-x, f"{e}{i}") for i, x in enumerate(mults, 1)]
    out = ""
    for c, sym in terms:
        if c:
            sign = "-" if c < 0 else ("+" if out else "")
            out += f"{sign}{abs(c) if abs(c) != 1 else ''}{sym}"
    return out or "0"


@dataclass(frozen=True, order=True)
class DivisorClass:
    n: int
    s: int
    d: int
    m: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        _check_ambient(self.n, self.s, self.m)

    @classmethod
    def hyperplane(cls, n: int, s: int, d: int = 1) -> DivisorClass:
        return cls(n, s, d, (0,) * s)

    @classmethod
    def exceptional(cls, n: int, s: int, i: int) -> DivisorClass:
        """The class E_i (so m_i = -1)."""
        return cls(n, s, 0, tuple(-1 if j == i else 0 for j in range(1, s + 1)))

    @classmethod
    def linear(cls, n: int, s: int, points: Iterable[int]) -> DivisorClass:
        """H minus the exceptional divisors of ``points``."""
        pts = set(points)
        return cls(n, s, 1, tuple(1 if j in pts else 0 for j in range(1, s + 1)))

    def __add__(self, other: DivisorClass) -> DivisorClass:
        _same_ambient(self, other)
        return DivisorClass(self.n, self.s, self.d + other.d,
                            tuple(a + b for a, b in zip(self.m, other.m)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return self + (-1) * other

    def __rmul__(self, k: int) -> DivisorClass:
        return DivisorClass(self.n, self.s, k * self.d, tuple(k * x for x in self.m))

    def vector(self) -> tuple[int, ...]:
        return (self.d, *self.m)

    def canonical(self) -> tuple[int, ...]:
        """Degree followed by the multiplicities sorted descending."""
        return (self.d, *sorted(self.m, reverse=True))

    def clamped(self) -> DivisorClass:
        """Negative multiplicities replaced by zero."""
        return DivisorClass(self.n, self.s, self.d, tuple(max(0, x) for x in self.m))

    def __str__(self) -> str:
        return f"n={self.n} s={self.s} d={self.d} m={','.join(map(str, self.m))}"

    def pretty(self) -> str:
        return _pretty(self.d, "H", self.m, "E")

    def to_json(self) -> dict:
        return {"kind": "divisor", "n": self.n, "s": self.s, "d": self.d, "m": list(self.m)}


@dataclass(frozen=True, order=True)
class CurveClass:
    n: int
    s: int
    delta: int
    mu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(x) for x in self.mu))
        _check_ambient(self.n, self.s, self.mu)

    @classmethod
    def line(cls, n: int, s: int, i: int, j: int) -> CurveClass:
        """The line L_ij through two base points."""
        return cls(n, s, 1, tuple(1 if k in (i, j) else 0 for k in range(1, s + 1)))

    @classmethod
    def moving_line(cls, n: int, s: int, i: int) -> CurveClass:
        """h - e_i: lines through one base point."""
        return cls(n, s, 1, tuple(1 if k == i else 0 for k in range(1, s + 1)))

    def __add__(self, other: CurveClass) -> CurveClass:
        _same_ambient(self, other)
        return CurveClass(self.n, self.s, self.delta + other.delta,
                          tuple(a + b for a, b in zip(self.mu, other.mu)))

    def __sub__(self, other: CurveClass) -> CurveClass:
        return self + (-1) * other

    def __rmul__(self, k: int) -> CurveClass:
        return CurveClass(self.n, self.s, k * self.delta, tuple(k * x for x in self.mu))

    def __neg__(self) -> CurveClass:
        return (-1) * self

    def vector(self) -> tuple[int, ...]:
        return (self.delta, *self.mu)

    def canonical(self) -> tuple[int, ...]:
        return (self.delta, *sorted(self.mu, reverse=True))

    def __str__(self) -> str:
        return f"n={self.n} s={self.s} delta={self.delta} mu={','.join(map(str, self.mu))}"

    def pretty(self) -> str:
        return _pretty(self.delta, "h", self.mu, "e")

    def to_json(self) -> dict:
        return {"kind": "curve", "n": self.n, "s": self.s, "delta": self.delta, "mu": list(self.mu)}


def _same_ambient(a, b) -> None:
    if (a.n, a.s) != (b.n, b.s):
        raise IncompatibleAmbientError(f"({a.n},{a.s}) vs ({b.n},{b.s})")


def _check_cremona_set(n: int, s: int, indices: Iterable[int]) -> IndexSet:
    I = index_set(indices, s)
    if len(I) != n + 1:
        raise InvalidIndexSetError(f"Cremona index set must have {n + 1} elements, got {I}")
    return I


# -- pairings -----------------------------------------------------------------

def dm_pairing(D: DivisorClass, F: DivisorClass) -> int:
    """Dolgachev-Mukai pairing <D, F>."""
    _same_ambient(D, F)
    return (D.n - 1) * D.d * F.d - sum(a * b for a, b in zip(D.m, F.m))


def intersect_div_curve(D: DivisorClass, C: CurveClass) -> int:
    _same_ambient(D, C)
    return D.d * C.delta - sum(a * b for a, b in zip(D.m, C.mu))


def anticanonical(n: int, s: int) -> DivisorClass:
    return DivisorClass(n, s, n + 1, (n - 1,) * s)


# -- Cremona action -----------------------------------------------------------

def cremona_divisor(D: DivisorClass, I: Iterable[int]) -> DivisorClass:
    I = _check_cremona_set(D.n, D.s, I)
    c = sum(D.m[i - 1] for i in I) - (D.n - 1) * D.d
    m = list(D.m)
    for i in I:
        m[i - 1] -= c
    return DivisorClass(D.n, D.s, D.d - c, tuple(m))


def cremona_curve(C: CurveClass, J: Iterable[int]) -> CurveClass:
    """Cremona action on 1-cycles, for n = 3 and n = 4.

    delta' = n delta - (n-1) sum_J mu_j and mu'_j = delta - sum_{J - j} mu_i.
    """
    if C.n not in (3, 4):
        raise UnsupportedError(f"curve Cremona action only for n in (3, 4), got n={C.n}")
    J = _check_cremona_set(C.n, C.s, J)
    total = sum(C.mu[j - 1] for j in J)
    mu = list(C.mu)
    for j in J:
        mu[j - 1] = C.delta - (total - C.mu[j - 1])
    return CurveClass(C.n, C.s, C.n * C.delta - (C.n - 1) * total, tuple(mu))


def cremona_excess(D: DivisorClass, I: Iterable[int]) -> int:
    """c = sum_{i in I} m_i - (n-1) d."""
    I = _check_cremona_set(D.n, D.s, I)
    return sum(D.m[i - 1] for i in I) - (D.n - 1) * D.d


def is_cremona_reduced(D: DivisorClass) -> bool:
    return all(cremona_excess(D, I) <= 0 for I in cremona_sets(D.n, D.s))


@dataclass(frozen=True)
class Reduction:
    divisor: DivisorClass
    steps: tuple[IndexSet, ...]
    non_effective: bool


def cremona_reduce(D: DivisorClass) -> Reduction:
    """Apply Cremona maps with maximal positive excess until none is left.

    Ties go to the lexicographically smallest index set. The loop stops early,
    flagging ``non_effective``, once d < 0 or some m_i exceeds d.
    """
    steps = []
    sets = cremona_sets(D.n, D.s)
    while True:
        if D.d < 0 or any(x > D.d for x in D.m):
            return Reduction(D, tuple(steps), True)
        if not sets:
            return Reduction(D, tuple(steps), False)
        best_c, best_I = max(((cremona_excess(D, I), I) for I in sets),
                             key=lambda t: (t[0], [-i for i in t[1]]))
        if best_c <= 0:
            return Reduction(D, tuple(steps), False)
        D = cremona_divisor(D, best_I)
        steps.append(best_I)


def cremona_extra_components(D: DivisorClass, I: Iterable[int]) -> list[tuple[IndexSet, int]]:
    """Linear cycles L_{I1} picked up by Cr_I(D), with their multiplicity.

    Runs over every split I = I1 + I2 with |I1| = m+1, |I2| = n-m, 1 <= m <= n-1
    and reports (I1, a) when a = (n-m-1) d - sum_{I2} m_i is at least 1.
    """
    n = D.n
    I = _check_cremona_set(n, D.s, I)
    out = []
    for dim in range(1, n):
        for I1 in itertools.combinations(I, dim + 1):
            I2 = [i for i in I if i not in I1]
            a = (n - dim - 1) * D.d - sum(D.m[i - 1] for i in I2)
            if a >= 1:
                out.append((I1, a))
    return out


# -- text and JSON formats ----------------------------------------------------

_FIELD = re.compile(r"(\w+)\s*=\s*(\S+)")


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip() != "") if text.strip() else ()


def parse_class(text: str | dict) -> DivisorClass | CurveClass:
    """Parse either the ``n=.. s=.. d=.. m=..`` text form or the JSON object form."""
    if isinstance(text, str) and text.lstrip().startswith("{"):
        text = json.loads(text)
    if isinstance(text, dict):
        kind = text.get("kind", "divisor" if "d" in text else "curve")
        if kind == "divisor":
            return DivisorClass(int(text["n"]), int(text["s"]), int(text["d"]), tuple(text["m"]))
        return CurveClass(int(text["n"]), int(text["s"]), int(text["delta"]), tuple(text["mu"]))
    fields = dict(_FIELD.findall(text))
    try:
        n, s = int(fields["n"]), int(fields["s"])
        if "d" in fields:
            m = _ints(fields.get("m", ""))
            return DivisorClass(n, s, int(fields["d"]), m if m else (0,) * s)
        mu = _ints(fields.get("mu", ""))
        return CurveClass(n, s, int(fields["delta"]), mu if mu else (0,) * s)
    except KeyError as exc:
        raise ValueError(f"cannot parse class from {text!r}: missing {exc}") from None


def parse_divisor(text: str | dict) -> DivisorClass:
    out = parse_class(text)
    if not isinstance(out, DivisorClass):
        raise ValueError(f"expected a divisor class, got {text!r}")
    return out


def parse_curve(text: str | dict) -> CurveClass:
    out = parse_class(text)
    if not isinstance(out, CurveClass):
        raise ValueError(f"expected a curve class, got {text!r}")
    return out

"""Worked examples on X^4_8 used by ``verify`` and the test-suite.

The five pairs of orthogonal Weyl divisors form a chain: each pair is the
image of the previous one under the Cremona map listed with it, and the
intersection of their strict transforms splits into the listed surfaces.
"""

from __future__ import annotations

from .lattice import CurveClass, DivisorClass


def _D(d: int, *m: int) -> DivisorClass:
    return DivisorClass(4, 8, d, m)


def _C(delta: int, *mu: int) -> CurveClass:
    return CurveClass(4, 8, delta, mu)


# (name, D, F, Cremona set producing this pair from the previous one, components)
SURFACE_CHAIN = [
    ("S1", _D(1, 1, 0, 1, 1, 1, 0, 0, 0), _D(1, 1, 1, 0, 1, 1, 0, 0, 0), None,
     ["S1_{1,4,5}"]),
    ("S3", _D(2, 2, 1, 2, 1, 1, 1, 1, 0), _D(2, 2, 2, 1, 1, 1, 1, 1, 0), (1, 2, 3, 6, 7),
     ["S1_{1,2,3}", "S3_{1,8^}"]),
    ("S6", _D(3, 2, 2, 3, 2, 2, 1, 1, 1), _D(3, 2, 3, 2, 2, 2, 1, 1, 1), (2, 3, 4, 5, 8),
     ["S1_{1,2,3}", "S1_{2,3,4}", "S1_{2,3,5}", "S6_{6,7,8}"]),
    ("S10", _D(5, 4, 4, 3, 2, 2, 3, 3, 3), _D(4, 3, 4, 2, 2, 2, 2, 2, 2), (1, 2, 6, 7, 8),
     ["S1_{1,2,3}", "S1_{1,2,6}", "S1_{1,2,7}", "S1_{1,2,8}", "S3_{2,4^}", "S3_{2,5^}",
      "S10_{1,2}"]),
    ("S15", _D(7, 4, 4, 5, 4, 4, 5, 5, 3), _D(6, 3, 4, 4, 4, 4, 4, 4, 2), (3, 4, 5, 6, 7),
     ["S3_{3,8^}", "S3_{6,8^}", "S3_{7,8^}", "S6_{1,2,8}", "S6_{1,4,8}", "S6_{1,5,8}",
      "S15_{8}"]),
]

# Weyl divisors containing the plane L_123 and a moving class C with D.C = 0
# sweeping them out: (type, D, C).
NET_TABLE = [
    (11, _D(7, 5, 5, 5, 3, 4, 4, 4, 4), _C(19, 4, 4, 4, 3, 4, 4, 4, 4)),
    # printed with mu_5 = 2, which gives D.C = 8; mu_5 = 4 is the orthogonal class
    (9, _D(6, 5, 4, 4, 3, 4, 3, 3, 3), _C(16, 4, 3, 3, 3, 4, 3, 3, 3)),
    (8, _D(5, 4, 4, 3, 2, 3, 3, 3, 2), _C(13, 3, 3, 2, 2, 3, 3, 3, 2)),
    (7, _D(4, 4, 3, 2, 2, 2, 2, 2, 2), _C(10, 3, 2, 1, 2, 2, 2, 2, 2)),
    (5, _D(3, 3, 2, 2, 2, 2, 1, 1, 1), _C(7, 2, 1, 1, 2, 2, 1, 1, 1)),
    (3, _D(2, 2, 2, 1, 1, 1, 1, 1, 0), _C(4, 1, 1, 0, 1, 1, 1, 1, 0)),
    (2, _D(1, 1, 1, 1, 1, 0, 0, 0, 0), _C(1, 0, 0, 0, 1, 0, 0, 0, 0)),
]
NET_TABLE_PRINTED_ROW_9 = _C(16, 4, 3, 3, 3, 2, 3, 3, 3)

# The six moving-curve families on X^4_8, as (degree, reference multiplicities).
MOVING_FAMILIES = [
    (1, (1, 0, 0, 0, 0, 0, 0, 0)),
    (4, (1, 1, 1, 1, 1, 1, 0, 0)),
    (7, (2, 2, 2, 1, 1, 1, 1, 1)),
    (10, (1, 3, 2, 2, 2, 2, 2, 2)),
    (13, (2, 2, 2, 3, 3, 3, 3, 3)),
    (16, (4, 4, 3, 3, 3, 3, 3, 3)),
]

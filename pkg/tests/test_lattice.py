import json

import hypothesis.strategies as st
import pytest
from hypothesis import given

from conftest import ambient_and_set, curves, divisors
from weylcycles.errors import IncompatibleAmbientError, InvalidIndexSetError, UnsupportedError
from weylcycles.lattice import (CurveClass, DivisorClass, anticanonical, cremona_curve,
                                cremona_divisor, cremona_excess, cremona_extra_components,
                                cremona_reduce, cremona_sets, dm_pairing, intersect_div_curve,
                                is_cremona_reduced, parse_class, parse_curve, parse_divisor)


def D(n, s, d, *m):
    return DivisorClass(n, s, d, tuple(m))


def C(n, s, delta, *mu):
    return CurveClass(n, s, delta, tuple(mu))


def test_pairing_examples():
    assert dm_pairing(D(4, 8, 1, 1, 1, 1, 1, 0, 0, 0, 0), DivisorClass.exceptional(4, 8, 5)) == 0
    A = D(4, 8, 2, 2, 2, 1, 1, 1, 1, 1, 0)
    assert dm_pairing(A, A) == -1
    B = D(3, 7, 3, 2, 2, 2, 2, 1, 1, 1)
    assert dm_pairing(B, D(3, 7, 4, *[2] * 7)) == 2


def test_pairing_rejects_mixed_ambients():
    with pytest.raises(IncompatibleAmbientError):
        dm_pairing(DivisorClass.hyperplane(3, 7), DivisorClass.hyperplane(4, 8))
    with pytest.raises(IncompatibleAmbientError):
        intersect_div_curve(DivisorClass.hyperplane(3, 7), CurveClass.line(4, 8, 1, 2))


def test_anticanonical():
    assert anticanonical(3, 7) == D(3, 7, 4, *[2] * 7)
    assert anticanonical(4, 8) == D(4, 8, 5, *[3] * 8)
    assert anticanonical(2, 0) == DivisorClass(2, 0, 3, ())


def test_cremona_divisor_examples():
    assert cremona_divisor(D(3, 7, 1, 1, 1, 1, 0, 0, 0, 0), (1, 4, 5, 6)) == D(3, 7, 2, 2, 1, 1, 1, 1, 1, 0)
    got = cremona_divisor(D(4, 8, 2, 2, 1, 2, 1, 1, 1, 1, 0), (2, 3, 4, 5, 8))
    assert got == D(4, 8, 3, 2, 2, 3, 2, 2, 1, 1, 1)


@pytest.mark.parametrize("I", [(1, 2, 3), (1, 2, 3, 4, 5), (1, 1, 2, 3), (0, 1, 2, 3), (1, 2, 3, 9)])
def test_cremona_rejects_bad_sets(I):
    with pytest.raises(InvalidIndexSetError):
        cremona_divisor(DivisorClass.hyperplane(3, 7), I)


def test_cremona_curve_examples():
    J = (1, 2, 3, 6, 7)
    assert cremona_curve(CurveClass.moving_line(4, 8, 5), J) == C(4, 8, 4, 1, 1, 1, 0, 1, 1, 1, 0)
    L14 = CurveClass.line(4, 8, 1, 4)
    assert cremona_curve(L14, J) == L14
    assert cremona_curve(C(4, 8, 1, *[0] * 8), J) == C(4, 8, 4, 1, 1, 1, 0, 0, 1, 1, 0)


def test_cremona_curve_needs_n_3_or_4():
    with pytest.raises(UnsupportedError):
        cremona_curve(CurveClass(5, 7, 1, (0,) * 7), (1, 2, 3, 4, 5, 6))


def test_intersection_examples():
    D1 = D(4, 8, 2, 2, 1, 2, 1, 1, 1, 1, 0)
    assert intersect_div_curve(D1, CurveClass.line(4, 8, 1, 3)) == -2
    assert intersect_div_curve(DivisorClass.hyperplane(4, 8, 7), C(4, 8, 1, *[0] * 8)) == 7
    assert intersect_div_curve(D(4, 8, 3, 2, 2, 2, 2, 2, 2, 2, 0), C(4, 8, 4, *[1] * 7, 0)) == -2


@given(ambient_and_set(), st.data())
def test_pairing_invariant_and_involution(nsI, data):
    n, s, I = nsI
    A, B = data.draw(divisors(n, s)), data.draw(divisors(n, s))
    assert dm_pairing(cremona_divisor(A, I), cremona_divisor(B, I)) == dm_pairing(A, B)
    assert cremona_divisor(cremona_divisor(A, I), I) == A


@given(ambient_and_set(), st.data())
def test_curve_action_is_compatible(nsI, data):
    n, s, I = nsI
    A, Cv = data.draw(divisors(n, s)), data.draw(curves(n, s))
    assert intersect_div_curve(cremona_divisor(A, I), cremona_curve(Cv, I)) == intersect_div_curve(A, Cv)
    assert cremona_curve(cremona_curve(Cv, I), I) == Cv


@pytest.mark.parametrize("n,s", [(3, 7), (4, 8), (3, 5), (5, 9)])
def test_anticanonical_fixed(n, s):
    K = anticanonical(n, s)
    assert all(cremona_divisor(K, I) == K for I in cremona_sets(n, s))


def test_reduce_examples():
    Q = D(3, 7, 2, *[1] * 7)
    red = cremona_reduce(Q)
    assert red.divisor == Q and red.steps == () and not red.non_effective

    # lexicographic tie-breaking picks {1,5,6,7} at the second step
    red = cremona_reduce(D(3, 7, 3, 2, 2, 2, 2, 1, 1, 1))
    assert red.steps == ((1, 2, 3, 4), (1, 5, 6, 7))
    assert red.divisor == DivisorClass.exceptional(3, 7, 1)
    assert not red.non_effective

    red = cremona_reduce(D(3, 7, 3, *[2] * 7))
    assert red.non_effective
    assert red.divisor == D(3, 7, 1, 0, 0, 0, 0, 2, 2, 2)


@given(ambient_and_set(), st.data())
def test_reduce_output_is_reduced(nsI, data):
    n, s, _ = nsI
    A = data.draw(divisors(n, s, lo=0, hi=8))
    red = cremona_reduce(A)
    if not red.non_effective:
        assert is_cremona_reduced(red.divisor)
        assert all(cremona_excess(red.divisor, I) <= 0 for I in cremona_sets(n, s))
    B = A
    for I in red.steps:
        B = cremona_divisor(B, I)
    assert B == red.divisor


def test_extra_components_examples():
    got = cremona_extra_components(D(4, 8, 1, 1, 0, 1, 1, 1, 0, 0, 0), (1, 2, 3, 6, 7))
    assert ((1, 2, 3), 1) in got
    got = cremona_extra_components(D(4, 8, 3, 2, 2, 3, 2, 2, 1, 1, 1), (1, 2, 6, 7, 8))
    planes = {I1: a for I1, a in got if len(I1) == 3}
    assert planes == {(1, 2, 6): 1, (1, 2, 7): 1, (1, 2, 8): 1}
    assert cremona_extra_components(D(4, 8, 5, *[0] * 8), (1, 2, 3, 4, 5)) != []
    assert cremona_extra_components(D(3, 7, 0, *[0] * 7), (1, 2, 3, 4)) == []


def test_text_and_json_round_trip():
    A = D(4, 8, 3, 2, 2, 2, 2, 2, 2, 2, 0)
    assert parse_divisor(str(A)) == A
    assert parse_divisor(json.dumps(A.to_json())) == A
    Cv = C(4, 8, 4, 1, 1, 1, 1, 1, 1, 1, 0)
    assert parse_curve(str(Cv)) == Cv
    assert parse_class(Cv.to_json()) == Cv
    with pytest.raises(ValueError):
        parse_divisor(str(Cv))
    with pytest.raises(ValueError):
        parse_divisor("n=4 s=8 d=1 m=1,2")


def test_arithmetic_and_pretty():
    A = 2 * DivisorClass.hyperplane(3, 7) - DivisorClass.exceptional(3, 7, 1) - DivisorClass.exceptional(3, 7, 1)
    assert A == D(3, 7, 2, 2, 0, 0, 0, 0, 0, 0)
    assert A.pretty() == "2H-2E1"
    assert DivisorClass.linear(3, 7, (1, 2, 3)).pretty() == "H-E1-E2-E3"
    assert (-CurveClass.line(3, 7, 1, 2)).pretty() == "-h+e1+e2"
    assert D(3, 7, 0, *[0] * 7).pretty() == "0"
    assert D(4, 8, 1, 3, 1, 1, 1, 0, 0, 0, 0).canonical() == (1, 3, 1, 1, 1, 0, 0, 0, 0)
    assert D(3, 7, 1, -1, 2, 0, 0, 0, 0, 0).clamped().m == (0, 2, 0, 0, 0, 0, 0)

import random

import hypothesis.strategies as st
import pytest
from hypothesis import given

from weylcycles.dimension import (binom, check_conjecture, correction_term, euler_char,
                                  h0_p3, h0_p3_proof_path, wdim, wdim_value)
from weylcycles.errors import UnsupportedError, WdimUndefinedError
from weylcycles.lattice import DivisorClass, cremona_divisor, cremona_sets
from weylcycles.verification import random_effective
from weylcycles.weyl import weyl_divisor_orbit


def D(n, s, d, *m):
    return DivisorClass(n, s, d, tuple(m))


def test_binomial_convention():
    assert binom(2, 3) == 0
    assert binom(5, 3) == 10
    assert correction_term(3, 1, 1) == 0      # C(2,3)
    assert correction_term(3, 1, 2) == 1      # C(3,3)
    assert correction_term(4, 2, 3) == -1     # -C(4,4)


def test_euler_char():
    assert euler_char(DivisorClass.hyperplane(3, 0, 4)) == 35
    assert euler_char(D(3, 7, 2, 2, 1, 1, 1, 1, 1, 0)) == 1
    assert euler_char(D(3, 7, 3, *[2] * 7)) == -8
    assert euler_char(D(3, 7, 1, -1, 0, 0, 0, 0, 0, 0)) == 4


def test_wdim_examples():
    assert wdim_value(D(3, 7, 2, *[1] * 7)) == 3
    bd = wdim(D(3, 7, 2, 2, 1, 1, 1, 1, 1, 0))
    assert bd.chi == 1 and bd.total == 1
    assert wdim_value(D(4, 8, 2, *[1] * 8)) == 7
    assert wdim_value(D(4, 8, 0, *[0] * 8)) == 1


def test_wdim_refuses():
    with pytest.raises(WdimUndefinedError):
        wdim(D(3, 7, 3, *[2] * 7))
    with pytest.raises(UnsupportedError):
        wdim(D(3, 6, 2, *[1] * 6))


def test_wdim_clamps_negative_multiplicities():
    E1 = DivisorClass.exceptional(4, 8, 1)
    assert wdim_value(E1) == 1
    assert wdim(E1).chi == 1


def test_wdim_breakdown_json():
    obj = wdim(D(4, 8, 10, 7, *[6] * 7)).to_json()
    assert obj["wdim"] == 1
    assert {c["cycle"] for c in obj["contributions"]} >= {"S15_{8}"}


@pytest.mark.parametrize("n,s", [(3, 7), (4, 8)])
def test_weyl_divisors_have_wdim_one(n, s):
    assert all(wdim_value(A, True) == 1 for A in weyl_divisor_orbit(n, s).classes)


@pytest.mark.parametrize("n,s", [(3, 7), (4, 8)])
def test_wdim_cremona_invariant(n, s):
    rng = random.Random(n * 100 + s)
    sets = cremona_sets(n, s)
    for _ in range(300):
        A = random_effective(rng, n, s)
        w = wdim_value(A, True)
        assert w >= 1
        assert all(wdim_value(cremona_divisor(A, I), True) == w for I in rng.sample(sets, 5))


@given(st.integers(0, 10**9))
def test_wdim_equals_reduced(seed):
    A = random_effective(random.Random(seed), 3, 7)
    path = h0_p3_proof_path(A)
    assert path.wdim_original == path.wdim_reduced


def test_h0_p3():
    assert h0_p3(D(3, 7, 2, *[1] * 7)) == 3
    assert h0_p3(D(3, 7, 4, 3, *[2] * 6)) == 1
    assert h0_p3(D(3, 7, 3, *[2] * 7)) == 0
    with pytest.raises(UnsupportedError):
        h0_p3(D(4, 8, 1, *[0] * 8))


def test_conjecture_harness():
    rep = check_conjecture(D(4, 8, 2, *[1] * 8), seed=3)
    assert rep.wdim == 7 and rep.oracle.value == 7 and rep.agree
    rep = check_conjecture(D(4, 8, 3, *[2] * 7, 0), primes=[2147483647], seed=5)
    assert rep.wdim == 1 and rep.agree
    assert rep.to_json()["oracle_runs"] == [{"prime": 2147483647, "seed": 5, "h0": 1}]
    rep = check_conjecture(D(4, 8, 1, 1, 1, 1, 1, 1, 0, 0, 0), primes=[2147483647], seed=1)
    assert not rep.effective and rep.wdim is None and rep.oracle.value == 0

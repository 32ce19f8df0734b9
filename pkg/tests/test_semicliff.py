import itertools

import numpy as np
import pytest

from cliffordlab.gatealg import AlmostDiagClifford, ConjugateTuple, SymMat
from cliffordlab.modring import Modulus
from cliffordlab.semicliff import (
    DimensionTooLargeError,
    PreconditionPhi1NonzeroError,
    is_semiclifford_direct,
    kernel_matrix,
    minors_criterion,
)

MOD3 = Modulus(3)


def phi_tuple(e1, e2, e3, e4, mod=MOD3):
    zero2 = (0, 0)
    return ConjugateTuple(
        *[AlmostDiagClifford(0, SymMat(e, mod), zero2, zero2, mod)
          for e in (e1, e2, e3, e4)]
    )


def test_kernel_matrix_columns():
    t = phi_tuple((0, 0, 0), (1, 2, 0), (0, 1, 1), (2, 0, 2))
    M = kernel_matrix(t)
    assert M.rows == 3 and M.cols == 4
    assert [row[1] for row in M.entries] == [1, 2, 0]
    assert [row[3] for row in M.entries] == [2, 0, 2]


def test_all_zero_phis_is_semiclifford():
    t = phi_tuple((0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0))
    assert is_semiclifford_direct(t)
    assert minors_criterion(t)


def test_proportional_last_columns_is_semiclifford():
    t = phi_tuple((0, 0, 0), (1, 0, 0), (1, 2, 1), (2, 1, 2))
    assert minors_criterion(t)
    assert is_semiclifford_direct(t)


def test_independent_last_columns_not_semiclifford():
    t = phi_tuple((0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 1, 0))
    assert not minors_criterion(t)
    assert not is_semiclifford_direct(t)


def test_minors_precondition():
    t = phi_tuple((1, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0))
    with pytest.raises(PreconditionPhi1NonzeroError):
        minors_criterion(t)


def test_dimension_cap():
    t = phi_tuple((0, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0), mod=Modulus(17))
    with pytest.raises(DimensionTooLargeError):
        is_semiclifford_direct(t)


@pytest.mark.parametrize("seed", range(5))
def test_criteria_agree_on_random_quadruples(seed):
    rng = np.random.default_rng(seed)
    for _ in range(100):
        es = [tuple(int(rng.integers(3)) for _ in range(3)) for _ in range(3)]
        t = phi_tuple((0, 0, 0), *es)
        assert minors_criterion(t) == is_semiclifford_direct(t)


def test_criteria_agree_exhaustive_d5_slice():
    # a fixed two-parameter slice at d=5 as a cheap cross-dimension check
    mod = Modulus(5)
    for a, b in itertools.product(range(5), repeat=2):
        t = phi_tuple((0, 0, 0), (1, a, b), (a, b, 1), (b, 1, a), mod=mod)
        assert minors_criterion(t) == is_semiclifford_direct(t)

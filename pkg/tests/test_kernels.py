import itertools

import numpy as np
import pytest

from cliffordlab.kernels import HAVE_COMPILED, _pykernels

ckernels = pytest.importorskip(
    "cliffordlab.kernels._ckernels", reason="compiled extension not built"
)


def brute_force_consistent(A, b, d):
    """Ground truth by enumerating all candidate solutions (small systems)."""
    ncols = A.shape[1]
    for x in itertools.product(range(d), repeat=ncols):
        if all(
            sum(a * v for a, v in zip(row, x)) % d == bv % d
            for row, bv in zip(A, b)
        ):
            return True
    return False


@pytest.mark.parametrize("d", [3, 5])
def test_consistency_against_brute_force(d):
    rng = np.random.default_rng(d)
    A = rng.integers(d, size=(200, 3, 4))
    b = rng.integers(d, size=(200, 3))
    py = _pykernels.batch_consistency(A, b, d)
    cy = ckernels.batch_consistency(A, b, d)
    assert np.array_equal(py, cy)
    for k in range(200):
        assert py[k] == brute_force_consistent(A[k], b[k], d)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_implementations_agree_on_enumeration_shape(d):
    rng = np.random.default_rng(d + 100)
    A = rng.integers(d, size=(500, 6, 8))
    b = rng.integers(d, size=(500, 6))
    assert np.array_equal(
        _pykernels.batch_consistency(A, b, d),
        ckernels.batch_consistency(A, b, d),
    )


@pytest.mark.parametrize("d", [3, 7])
def test_rank_mod_agrees(d):
    rng = np.random.default_rng(d)
    for _ in range(100):
        m = rng.integers(d, size=(rng.integers(1, 7), rng.integers(1, 9)))
        assert _pykernels.rank_mod(m, d) == ckernels.rank_mod(m, d)


def test_rank_mod_known_values():
    assert _pykernels.rank_mod([[1, 2], [2, 4]], 5) == 1
    assert _pykernels.rank_mod([[1, 0], [0, 1]], 3) == 2
    assert _pykernels.rank_mod([[0, 0], [0, 0]], 3) == 0
    assert _pykernels.rank_mod([[3, 6], [1, 2]], 3) == 1


def test_negative_entries_handled():
    A = np.array([[[-1, 2], [2, -4]]])
    b = np.array([[1, -2]])
    assert np.array_equal(
        _pykernels.batch_consistency(A, b, 5),
        ckernels.batch_consistency(A, b, 5),
    )


def test_have_compiled_flag():
    assert HAVE_COMPILED is True

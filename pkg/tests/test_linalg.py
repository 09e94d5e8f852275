import numpy as np
import pytest

from dlstrata import linalg
from dlstrata.gf import field


@pytest.fixture(scope="module")
def f4():
    return field(2, 2)


def _random_matrix(ctx, rng, rows, cols):
    return rng.integers(0, ctx.q, size=(rows, cols)).astype(linalg.DTYPE)


def test_rref_is_idempotent_and_canonical(f4):
    rng = np.random.default_rng(0)
    for _ in range(40):
        m = _random_matrix(f4, rng, 3, 5)
        r, piv = linalg.rref(f4, m)
        r2, piv2 = linalg.rref(f4, r)
        assert np.array_equal(r, r2) and piv == piv2
        # scaling a row and permuting rows does not change the canonical form
        shuffled = m[rng.permutation(3)]
        assert np.array_equal(linalg.rref(f4, shuffled)[0], r)


def test_nullspace_annihilates(f4):
    rng = np.random.default_rng(1)
    for _ in range(40):
        m = _random_matrix(f4, rng, 3, 6)
        ns = linalg.nullspace(f4, m)
        assert ns.shape[0] == 6 - linalg.rank(f4, m)
        if ns.shape[0]:
            prod = linalg.matmul(f4, m, ns.T)
            assert not prod.any()


def test_matmul_against_scalar_arithmetic(f4):
    rng = np.random.default_rng(2)
    a = _random_matrix(f4, rng, 3, 4)
    b = _random_matrix(f4, rng, 4, 2)
    got = linalg.matmul(f4, a, b)
    for i in range(3):
        for j in range(2):
            acc = f4.zero
            for k in range(4):
                acc = acc + f4.elem(int(a[i, k])) * f4.elem(int(b[k, j]))
            assert acc.code == int(got[i, j])


def test_inverse(f4):
    rng = np.random.default_rng(3)
    eye = linalg.eye(f4, 4)
    found = 0
    while found < 10:
        m = _random_matrix(f4, rng, 4, 4)
        if linalg.rank(f4, m) < 4:
            continue
        inv = linalg.inverse(f4, m)
        assert np.array_equal(linalg.matmul(f4, m, inv), eye)
        found += 1
    with pytest.raises(ValueError):
        linalg.inverse(f4, linalg.zeros(2, 2))


def test_frob_map_is_bijective_entrywise(f4):
    rng = np.random.default_rng(4)
    m = _random_matrix(f4, rng, 3, 3)
    assert np.array_equal(linalg.frob_map(f4, linalg.frob_map(f4, m, 1), -1), m)
    assert np.array_equal(linalg.frob_map(f4, m, f4.k), m)


def test_in_row_space(f4):
    m = np.array([[1, 0, 2, 3], [0, 1, 1, 1]], dtype=linalg.DTYPE)
    r, _ = linalg.rref(f4, m)
    assert linalg.in_row_space(f4, r, np.array([1, 1, 3, 2]))  # row0 + row1
    assert not linalg.in_row_space(f4, r, np.array([0, 0, 1, 0]))

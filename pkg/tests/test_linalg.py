import numpy as np
import pytest
import sympy
from sympy import GF
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, settings, strategies as st

from syzfermat.linalg import det_mod_p, kernel_basis, kernel_vector, matvec, rank, rref

PRIMES = [2, 3, 5, 7, 31, 65537, (1 << 61) - 1]


@st.composite
def matrices(draw, max_dim=30):
    p = draw(st.sampled_from(PRIMES))
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    # bias toward low rank by sometimes zeroing entries
    density = draw(st.sampled_from([0.1, 0.5, 1.0]))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    vals = [[int(rng.integers(0, min(p, 2**62))) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]
    return p, vals


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vector_is_annihilated(case):
    p, vals = case
    a = np.array(vals, dtype=object)
    v = kernel_vector(a, p)
    r = rank(a, p)
    if v is None:
        assert r == a.shape[1]
    else:
        assert any(v)
        assert matvec(a, v, p) == [0] * a.shape[0]
        assert r < a.shape[1]
    assert len(kernel_basis(a, p)) == a.shape[1] - r


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=8))
def test_rank_against_sympy(case):
    p, vals = case
    dm = DomainMatrix([[GF(p)(x) for x in row] for row in vals], (len(vals), len(vals[0])), GF(p))
    assert rank(np.array(vals, dtype=object), p) == dm.rank()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 11, 101]), st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_det_against_integer_det(p, n, seed):
    rng = np.random.default_rng(seed)
    vals = rng.integers(-5, 6, size=(n, n)).tolist()
    assert det_mod_p(np.array(vals), p) == int(sympy.Matrix(vals).det()) % p


def test_rref_shape_and_pivots():
    m, piv = rref(np.array([[0, 2, 4], [0, 1, 2], [1, 0, 1]]), 7)
    assert piv == [0, 1]
    assert m.tolist() == [[1, 0, 1], [0, 1, 2], [0, 0, 0]]


def test_det_examples():
    assert det_mod_p(np.array([[6, 4, 1], [4, 6, 4], [1, 4, 6]]), 11) == 6
    assert det_mod_p(np.array([[1, 4, 6], [4, 6, 4], [6, 4, 1]]), 11) == (-50) % 11
    assert det_mod_p(np.array([[1]]), 5) == 1
    with pytest.raises(ValueError):
        det_mod_p(np.array([[1, 2]]), 5)

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtorus.lattice import (
    Sublattice,
    det,
    hnf,
    identity,
    intmat,
    is_alternating,
    kernel,
    primitive,
    rank,
    saturate,
    skew_rank,
    zeros,
)


def is_hermite(H):
    rows, cols = H.shape
    pivots = []
    last = -1
    for i in range(rows):
        nz = [j for j in range(cols) if H[i, j] != 0]
        if not nz:
            # zero rows must stay at the bottom
            assert all(
                all(H[r, j] == 0 for j in range(cols)) for r in range(i, rows)
            )
            break
        p = nz[0]
        assert p > last
        last = p
        assert H[i, p] > 0
        for r in range(i):
            assert 0 <= H[r, p] < H[i, p]
        pivots.append(p)
    return True


small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


def test_hnf_identity():
    H, U = hnf(identity(3))
    assert (H == identity(3)).all()
    assert (U == identity(3)).all()


def test_hnf_dependent_rows():
    M = intmat([[2, 4], [1, 2]])
    H, U = hnf(M)
    assert H.tolist() == [[1, 2], [0, 0]]
    assert (U @ M == H).all()
    assert abs(det(U)) == 1


def test_hnf_swap():
    M = intmat([[0, 1], [1, 0]])
    H, U = hnf(M)
    assert H.tolist() == [[1, 0], [0, 1]]
    assert (U @ M == H).all()
    assert abs(det(U)) == 1


@given(small_matrices)
@settings(max_examples=120, deadline=None)
def test_hnf_contract(rows):
    M = intmat(rows)
    H, U = hnf(M)
    assert (U @ M == H).all()
    assert abs(det(U)) == 1
    assert is_hermite(H)
    # idempotence
    H2, _ = hnf(H)
    assert (H2 == H).all()


@given(small_matrices)
@settings(max_examples=80, deadline=None)
def test_rank_transpose(rows):
    M = intmat(rows)
    assert rank(M) == rank(np.ascontiguousarray(M.T))


def test_rank_examples():
    assert rank(zeros(3, 3)) == 0
    assert rank(intmat([[2, 4], [1, 2]])) == 1
    assert rank(intmat([[0, 1], [-1, 0]])) == 2


def test_kernel_zero_matrix():
    k = kernel(zeros(2, 2))
    assert k.rank == 2
    assert k == Sublattice.full(2)


def test_kernel_examples():
    k = kernel(intmat([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]))
    assert k.rows == ((0, 0, 1),)
    k2 = kernel(intmat([[1, 1]]))
    assert k2.rows == ((1, -1),)


@given(small_matrices)
@settings(max_examples=80, deadline=None)
def test_kernel_contract(rows):
    M = intmat(rows)
    K = kernel(M)
    for row in K.rows:
        v = intmat([list(row)])
        assert all(x == 0 for x in (M @ v.T).flat)
    assert K.rank + rank(M) == M.shape[1]
    # saturation: the kernel basis extends to a basis of the ambient lattice
    assert saturate(K) == K


def test_saturate_examples():
    assert saturate(Sublattice.span(2, [[2, 0]])).rows == ((1, 0),)
    assert saturate(Sublattice.span(2, [[2, 4]])).rows == ((1, 2),)
    assert saturate(Sublattice.full(3)) == Sublattice.full(3)


def test_skew_rank_examples():
    assert skew_rank(zeros(3, 3)) == 0
    assert skew_rank(intmat([[0, 1], [-1, 0]])) == 1
    block = intmat(
        [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    )
    assert skew_rank(block) == 2


def test_skew_rank_rejects_non_alternating():
    with pytest.raises(ValueError):
        skew_rank(intmat([[1, 0], [0, 1]]))
    with pytest.raises(ValueError):
        skew_rank(intmat([[0, 1], [1, 0]]))


@given(
    st.integers(2, 5).flatmap(
        lambda n: st.lists(
            st.integers(-5, 5), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2
        ).map(lambda vals: (n, vals))
    )
)
@settings(max_examples=80, deadline=None)
def test_alternating_rank_even(args):
    n, vals = args
    M = zeros(n, n)
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            M[i, j] = vals[pos]
            M[j, i] = -vals[pos]
            pos += 1
    assert is_alternating(M)
    assert rank(M) == 2 * skew_rank(M)


def test_sublattice_membership():
    B = Sublattice.span(3, [[1, 0, 1], [0, 2, 0]])
    assert B.contains([1, 2, 1])
    assert not B.contains([1, 1, 1])
    assert not B.contains([0, 0, 1])


def test_primitive():
    assert primitive([2, -4, 6]) == (1, -2, 3)
    assert primitive([-1, 2]) == (1, -2)
    assert primitive([0, 0]) == (0, 0)

import pickle

import pytest
from hypothesis import given, settings, strategies as st

from gmdkit.gflinalg import (
    FieldMatrix,
    FieldSpec,
    SubspaceIterator,
    enumerate_subspaces,
    gaussian_binomial,
    kernel_basis,
    rank,
    rref,
    subspace_count,
)

from oracles import naive_rank, naive_rref

SMALL_PRIMES = st.sampled_from([2, 3, 5])


def matrices(max_rows=4, max_cols=5):
    return SMALL_PRIMES.flatmap(
        lambda p: st.integers(1, max_rows).flatmap(
            lambda r: st.integers(1, max_cols).flatmap(
                lambda c: st.lists(
                    st.lists(st.integers(0, p - 1), min_size=c, max_size=c),
                    min_size=r,
                    max_size=r,
                ).map(lambda rows: FieldMatrix(FieldSpec(p), rows))
            )
        )
    )


def test_field_spec_rejects_non_primes():
    for bad in (0, 1, 4, 6, 9, 253):
        with pytest.raises(ValueError):
            FieldSpec(bad)


def test_field_inverses():
    f = FieldSpec(7)
    for a in range(1, 7):
        assert (a * f.inv(a)) % 7 == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


@settings(max_examples=60, deadline=None, database=None, derandomize=True)
@given(matrices())
def test_rref_matches_naive(m):
    ours, rk, pivots = rref(m)
    theirs, naive_rk = naive_rref(m.to_lists(), m.field.p)
    assert rk == naive_rk == rank(m)
    assert len(pivots) == rk
    # the reduced echelon form of a matrix is unique; compare nonzero rows
    assert ours.to_lists()[:rk] == [row for row in theirs if any(row)]


@settings(max_examples=40, deadline=None, database=None, derandomize=True)
@given(matrices())
def test_rref_idempotent(m):
    once, rk, _ = rref(m)
    twice, rk2, _ = rref(once)
    assert rk == rk2
    assert once == twice


@settings(max_examples=40, deadline=None, database=None, derandomize=True)
@given(matrices())
def test_kernel_orthogonality_and_nullity(m):
    k = kernel_basis(m)
    assert k.rows == m.cols - rank(m)
    if k.rows:
        prod = m.matmul(k.transpose())
        assert all(all(x == 0 for x in row) for row in prod.to_lists())
        assert rank(k) == k.rows


def test_matrix_shapes_and_immutability():
    f = FieldSpec(3)
    m = FieldMatrix(f, [[1, 2], [0, 1]])
    assert (m.rows, m.cols) == (2, 2)
    with pytest.raises(AttributeError):
        m.data = None
    empty = FieldMatrix(f, [])
    assert (empty.rows, empty.cols) == (0, 0)


def test_matrix_pickle_round_trip():
    f = FieldSpec(5)
    m = FieldMatrix(f, [[1, 2, 3], [4, 0, 1]])
    again = pickle.loads(pickle.dumps(m))
    assert again == m
    assert again.field.p == 5


@pytest.mark.parametrize(
    "m,l,p,expected",
    [
        (3, 1, 2, 7),
        (3, 2, 2, 7),
        (4, 2, 2, 35),
        (3, 1, 3, 13),
        (2, 1, 5, 6),
        (3, 3, 2, 1),
        (3, 4, 2, 0),
    ],
)
def test_gaussian_binomial_known_values(m, l, p, expected):
    assert gaussian_binomial(m, l, p) == expected


@settings(max_examples=30, deadline=None, database=None, derandomize=True)
@given(
    st.sampled_from([2, 3]),
    st.integers(1, 4),
    st.integers(1, 3),
)
def test_subspace_enumeration_is_complete_and_canonical(p, m, l):
    f = FieldSpec(p)
    seen = set()
    for mat in enumerate_subspaces(m, l, f):
        assert mat.rows == l
        reduced, rk, _ = rref(mat)
        assert rk == l
        assert reduced == mat  # emitted in reduced echelon form
        seen.add(mat)
    assert len(seen) == gaussian_binomial(m, l, p) == subspace_count(m, l, f)


def test_subspace_iterator_indexing_and_split():
    f = FieldSpec(2)
    it = SubspaceIterator(4, 2, f)
    assert it.count == 35
    listed = list(enumerate_subspaces(4, 2, f))
    for i in (0, 1, 17, 34):
        assert it.matrix_at(i) == listed[i]
    parts = it.split(4)
    covered = []
    for part in parts:
        covered.extend(range(part.start, part.stop))
    assert covered == list(range(35))

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from siltlab.linalg import det, nullity, rank

small = st.integers(min_value=-4, max_value=4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_rank_examples():
    assert rank([]) == 0
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, -1, 0], [0, 1, -1]]) == 2


def test_det_examples():
    assert det([[2]]) == 2
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[0, 1], [1, 0]]) == -1


def test_nullity_counts_free_columns():
    assert nullity([], 3) == 3
    assert nullity([[1, -1, 0]], 3) == 2


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(lambda c: matrices(r, c))))
def test_rank_matches_numpy(m):
    assert rank(m) == np.linalg.matrix_rank(np.array(m, dtype=float))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: matrices(n, n)))
def test_det_matches_numpy(m):
    assert det(m) == round(np.linalg.det(np.array(m, dtype=float)))

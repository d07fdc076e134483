from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobi_moments.linalg import bareiss_det, det

int_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                       min_size=n, max_size=n))


@given(int_matrices)
def test_bareiss_matches_floating_det(mat):
    assert bareiss_det(mat) == round(np.linalg.det(np.array(mat, dtype=float)))


def test_zero_pivot_needs_a_swap():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[0, 0], [0, 1]]) == 0
    assert bareiss_det([]) == 1


def test_rational_det_is_exact():
    hilbert = [[Fraction(1, i + j + 1) for j in range(4)] for i in range(4)]
    assert det(hilbert) == Fraction(1, 6048000)


def test_float_entries_use_lu():
    assert det([[1.5, 0.0], [0.0, 2.0]]) == pytest.approx(3.0)

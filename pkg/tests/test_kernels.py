import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from strathom import _kernels
from strathom._kernels import _pykernels
from strathom.algebra import ZZ, ExactMatrix

needs_c = pytest.mark.skipif(_kernels._ckernels is None, reason="compiled kernels not built")


def sparse_rows(draw_rows):
    return [{c: v for c, v in enumerate(r) if v} for r in draw_rows]


def sparse_cols(draw_rows, ncols):
    cols = [dict() for _ in range(ncols)]
    for r, row in enumerate(draw_rows):
        for c, v in enumerate(row):
            if v:
                cols[c][r] = v
    return cols


int_rows = st.integers(1, 7).flatmap(lambda m: st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)))


@needs_c
@given(int_rows)
def test_invariant_factor_parity(rows):
    n = len(rows[0])
    c = _kernels.invariant_factors(ZZ, sparse_rows(rows), n, backend="cython")
    p = _kernels.invariant_factors(ZZ, sparse_rows(rows), n, backend="python")
    assert c == p


@needs_c
@given(int_rows)
def test_kernel_parity(rows):
    n = len(rows[0])
    cb, cl, cr = _kernels.column_echelon_kernel(ZZ, sparse_cols(rows, n), len(rows), backend="cython")
    pb, pl, pr = _kernels.column_echelon_kernel(ZZ, sparse_cols(rows, n), len(rows), backend="python")
    assert cr == pr
    assert cb == pb
    assert cl == pl


@given(int_rows)
def test_left_inverse_recovers_coordinates(rows):
    n = len(rows[0])
    basis, left, rank = _pykernels.column_echelon_kernel(ZZ, sparse_cols(rows, n), len(rows))
    assert rank + len(basis) == n
    for i, row in enumerate(left):
        for j, b in enumerate(basis):
            dot = sum(a * b.get(k, 0) for k, a in row.items())
            assert dot == (1 if i == j else 0)


@needs_c
def test_overflow_falls_back_to_python():
    big = 2 ** 62
    rows = [[big, big - 1], [big - 1, big - 3]]
    M = ExactMatrix.from_rows(ZZ, rows)
    expected = _pykernels.invariant_factors(ZZ, M.row_dicts(), 2)
    assert _kernels.invariant_factors(ZZ, M.row_dicts(), 2) == expected
    det = big * (big - 3) - (big - 1) ** 2
    assert expected[0] * expected[1] == abs(det)


def test_pure_python_switch():
    code = "import strathom._kernels as k; print(k.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"STRATHOM_PURE_PYTHON": "1", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"

"""Reference implementations of the elimination kernels.

These work over any ring object from :mod:`strathom.algebra.rings`.  The
compiled module only accelerates the integer cases and falls back here on
int64 overflow.
"""

from __future__ import annotations

from typing import Dict, List, Tuple


def snf_dense(ring, A, want_transforms=True):
    """Smith normal form of a dense list-of-lists matrix, in place.

    Returns ``(A, U, V)`` with ``U @ A_in @ V == A`` diagonal, each nonzero
    diagonal entry dividing the next and normalized by the ring's unit
    normalization.  ``U`` and ``V`` are ``None`` when not requested.

    Pivot rule: smallest Euclidean size in the trailing block, ties broken
    by ``(row, col)``.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    zero, one = ring.zero, ring.one
    size, dm = ring.size, ring.divmod
    U = [[one if i == j else zero for j in range(m)] for i in range(m)] if want_transforms else None
    V = [[one if i == j else zero for j in range(n)] for i in range(n)] if want_transforms else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def row_axpy(dst, src, q):
        # row_dst -= q * row_src
        rs, rd = A[src], A[dst]
        for k in range(n):
            if rs[k]:
                rd[k] = rd[k] - q * rs[k]
        if U is not None:
            us, ud = U[src], U[dst]
            for k in range(m):
                if us[k]:
                    ud[k] = ud[k] - q * us[k]

    def col_axpy(dst, src, q):
        for row in A:
            if row[src]:
                row[dst] = row[dst] - q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] = row[dst] - q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                a = row[j]
                if a:
                    s = size(a)
                    if best is None or s < best[0]:
                        best = (s, i, j)
                        if s == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                a = A[i][t]
                if a:
                    q, _ = dm(a, p)
                    if q:
                        row_axpy(i, t, q)
            for j in range(t + 1, n):
                a = A[t][j]
                if a:
                    q, _ = dm(a, p)
                    if q:
                        col_axpy(j, t, q)
            cand = None
            for i in range(t + 1, m):
                a = A[i][t]
                if a:
                    s = size(a)
                    if cand is None or s < cand[0]:
                        cand = (s, i, t)
            for j in range(t + 1, n):
                a = A[t][j]
                if a:
                    s = size(a)
                    if cand is None or s < cand[0]:
                        cand = (s, t, j)
            if cand is not None:
                _, ci, cj = cand
                if ci != t:
                    swap_rows(t, ci)
                else:
                    swap_cols(t, cj)
                continue
            bad = None
            for i in range(t + 1, m):
                row = A[i]
                for j in range(t + 1, n):
                    a = row[j]
                    if a and dm(a, p)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_axpy(t, bad, -one)
        t += 1

    for k in range(min(m, n)):
        a = A[k][k]
        if a:
            u = ring.normalizing_unit(a)
            if u != one:
                A[k] = [x * u if x else x for x in A[k]]
                if U is not None:
                    U[k] = [x * u if x else x for x in U[k]]
    return A, U, V


def invariant_factors(ring, rows: List[Dict[int, object]], ncols: int) -> list:
    """Nonzero invariant factors of a sparse matrix given by row dicts.

    Unit pivots are eliminated sparsely first (Markowitz-style choice of the
    cheapest unit); whatever is left goes through :func:`snf_dense`.
    """
    R: Dict[int, Dict[int, object]] = {i: dict(r) for i, r in enumerate(rows) if r}
    C: Dict[int, set] = {}
    for i, r in R.items():
        for j in r:
            C.setdefault(j, set()).add(i)
    n_units = 0
    is_unit = ring.is_unit
    while True:
        best = None
        for i, r in R.items():
            lr = len(r) - 1
            for j, a in r.items():
                if is_unit(a):
                    cost = lr * (len(C[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pi, pj = best
        prow = R.pop(pi)
        pinv = ring.inverse_unit(prow[pj])
        for j in prow:
            C[j].discard(pi)
        for i in list(C[pj]):
            r = R[i]
            f = r[pj] * pinv
            for j, a in prow.items():
                v = r.get(j, ring.zero) - f * a
                if v:
                    if j not in r:
                        C[j].add(i)
                    r[j] = v
                elif j in r:
                    del r[j]
                    C[j].discard(i)
            if not r:
                del R[i]
        del C[pj]
        n_units += 1
    rest = [i for i in R if R[i]]
    cols = sorted({j for i in rest for j in R[i]})
    factors = [ring.one] * n_units
    if rest and cols:
        cpos = {j: k for k, j in enumerate(cols)}
        dense = [[ring.zero] * len(cols) for _ in rest]
        for a, i in enumerate(rest):
            for j, v in R[i].items():
                dense[a][cpos[j]] = v
        D, _, _ = snf_dense(ring, dense, want_transforms=False)
        for k in range(min(len(rest), len(cols))):
            if D[k][k]:
                factors.append(D[k][k])
    return factors


def column_echelon(ring, cols: List[Dict[int, object]], nrows: int):
    """Unimodular column reduction of a sparse matrix to column echelon form.

    Tracks ``V`` (the accumulated column operations, stored by columns) and
    ``V^-1`` (stored by rows).  Returns ``(kernel, pivots, V, Vinv)`` where
    ``kernel`` lists the columns of ``V`` that end up mapping to zero (a
    saturated kernel basis) and ``pivots`` the remaining ones.
    """
    n = len(cols)
    A = [dict(c) for c in cols]
    one = ring.one
    Vc = [{j: one} for j in range(n)]
    Vi = [{j: one} for j in range(n)]
    size, dm = ring.size, ring.divmod

    by_row: Dict[int, set] = {}
    for j, c in enumerate(A):
        for r in c:
            by_row.setdefault(r, set()).add(j)

    def axpy(vec, src, q):
        for k, a in src.items():
            v = vec.get(k, ring.zero) - q * a
            if v:
                vec[k] = v
            else:
                vec.pop(k, None)

    def col_op(j, p, q):
        # col_j -= q col_p ; V^-1: row_p += q row_j
        for r, a in A[p].items():
            old = A[j].get(r)
            v = (old if old is not None else ring.zero) - q * a
            if v:
                if old is None:
                    by_row.setdefault(r, set()).add(j)
                A[j][r] = v
            elif old is not None:
                del A[j][r]
                by_row[r].discard(j)
        axpy(Vc[j], Vc[p], q)
        axpy(Vi[p], Vi[j], -q)

    active = set(range(n))
    pivots = []
    for r in sorted(by_row):
        while True:
            S = sorted(j for j in by_row.get(r, ()) if j in active)
            if not S:
                break
            p = min(S, key=lambda j: (size(A[j][r]), j))
            if len(S) == 1:
                active.discard(p)
                pivots.append(p)
                break
            pv = A[p][r]
            for j in S:
                if j != p:
                    q, _ = dm(A[j][r], pv)
                    if q:
                        col_op(j, p, q)
    kernel = [j for j in range(n) if j in active]
    return kernel, pivots, Vc, Vi


def column_echelon_kernel(ring, cols: List[Dict[int, object]], nrows: int) -> Tuple[List[Dict[int, object]], List[Dict[int, object]], int]:
    """Kernel basis of the matrix with the given sparse columns.

    The columns of ``V`` that end up zero form a saturated kernel basis, and
    the matching rows of ``V^-1`` give a left inverse of that basis.

    Returns ``(basis, left_inverse_rows, rank)`` with sparse dict vectors.
    """
    kernel, pivots, Vc, Vi = column_echelon(ring, cols, nrows)
    return [Vc[j] for j in kernel], [Vi[j] for j in kernel], len(pivots)

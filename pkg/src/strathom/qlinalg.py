"""Small dense linear algebra over QQ with ``Fraction`` entries.

Only used for the rational checks (exactness of long exact sequences),
so clarity wins over speed here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Vec = List[Fraction]
Mat = List[List[Fraction]]  # list of rows


def to_q(rows) -> Mat:
    return [[Fraction(x) if not isinstance(x, Fraction) else x for x in r] for r in rows]


def zeros(m: int, n: int) -> Mat:
    return [[Fraction(0)] * n for _ in range(m)]


def transpose(A: Mat, ncols: int | None = None) -> Mat:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*A)]


def matmul(A: Mat, B: Mat, inner: int | None = None) -> Mat:
    if not A:
        return []
    n = len(B[0]) if B else 0
    out = zeros(len(A), n)
    for i, row in enumerate(A):
        for k, a in enumerate(row):
            if a:
                bk = B[k]
                oi = out[i]
                for j in range(n):
                    if bk[j]:
                        oi[j] += a * bk[j]
    return out


def matvec(A: Mat, x: Sequence[Fraction], nrows: int | None = None) -> Vec:
    if not A:
        return [Fraction(0)] * (nrows or 0)
    return [sum((a * b for a, b in zip(row, x) if a and b), Fraction(0)) for row in A]


def rref(A: Mat) -> Tuple[Mat, List[int]]:
    R = [list(r) for r in A]
    m = len(R)
    n = len(R[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def rank(A: Mat) -> int:
    return len(rref(A)[1]) if A and A[0] else 0


def nullspace(A: Mat, ncols: int) -> List[Vec]:
    """Basis of ``{x : A x = 0}`` as a list of vectors."""
    if not A:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, piv = rref(A)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, c in enumerate(piv):
            x[c] = -R[r][f]
        out.append(x)
    return out


def solve(cols: List[Vec], b: Vec) -> Vec | None:
    """Coefficients ``x`` with ``sum x_k cols[k] == b``, or None."""
    dim = len(b)
    if not cols:
        return [] if not any(b) else None
    aug = [[cols[k][i] for k in range(len(cols))] + [b[i]] for i in range(dim)]
    R, piv = rref(aug)
    k = len(cols)
    if k in piv:
        return None
    x = [Fraction(0)] * k
    for r, c in enumerate(piv):
        x[c] = R[r][k]
    return x


class IncrementalSpan:
    """Running echelon basis; ``add`` reports whether a vector was new."""

    def __init__(self):
        self._rows: List[Tuple[int, Vec]] = []

    def reduce(self, v: Sequence[Fraction]) -> Vec:
        v = list(v)
        for c, r in self._rows:
            if v[c]:
                f = v[c]
                v = [a - f * b for a, b in zip(v, r)]
        return v

    def add(self, v: Sequence[Fraction]) -> bool:
        w = self.reduce(v)
        c = next((i for i, a in enumerate(w) if a), None)
        if c is None:
            return False
        inv = 1 / w[c]
        w = [a * inv for a in w]
        self._rows.append((c, w))
        return True

    def __len__(self):
        return len(self._rows)


def extend_basis(base: List[Vec], candidates: List[Vec]) -> List[Vec]:
    """Vectors from ``candidates`` completing ``base`` to a basis of their span."""
    span = IncrementalSpan()
    for v in base:
        span.add(v)
    return [v for v in candidates if span.add(v)]


def column_space_basis(cols: List[Vec]) -> List[Vec]:
    return extend_basis([], cols)

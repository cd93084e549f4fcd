"""Smith normal forms, kernels and preimages over ZZ and Q[t, t^-1]."""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .. import _kernels
from .matrix import ExactMatrix
from .rings import LAURENT, QQ, ZZ


class DimensionMismatch(ValueError):
    pass


def smith_normal_form(M: ExactMatrix) -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """``(D, U, V)`` with ``U @ M @ V == D`` and ``D`` in Smith form."""
    ring = M.ring
    A = M.to_dense()
    if M.rows == 0 or M.cols == 0:
        return (ExactMatrix(ring, M.rows, M.cols),
                ExactMatrix.identity(ring, M.rows),
                ExactMatrix.identity(ring, M.cols))
    D, U, V = _kernels.snf_dense(ring, A, want_transforms=True)
    return (ExactMatrix.from_rows(ring, D),
            ExactMatrix.from_rows(ring, U),
            ExactMatrix.from_rows(ring, V))


def snf_int(M: ExactMatrix):
    if M.ring is not ZZ:
        raise TypeError(f"snf_int needs an integer matrix, got {M.ring!r}")
    return smith_normal_form(M)


def snf_laurent(M: ExactMatrix):
    if M.ring is not LAURENT:
        raise TypeError(f"snf_laurent needs a Laurent matrix, got {M.ring!r}")
    return smith_normal_form(M)


def invariant_factors(M: ExactMatrix, backend: str | None = None) -> list:
    """Nonzero diagonal of the Smith form, normalized, in divisibility order."""
    return _kernels.invariant_factors(M.ring, M.row_dicts(), M.cols, backend=backend)


def rank_over_fractions(M: ExactMatrix) -> int:
    """Rank over QQ or Q(t); counts nonzero Smith diagonal entries."""
    return len(invariant_factors(M))


def kernel_with_left_inverse(M: ExactMatrix) -> Tuple[List[Dict[int, object]], List[Dict[int, object]]]:
    """Saturated kernel basis of ``M`` plus rows ``L`` with ``L @ basis == I``.

    The left inverse lets callers read off coordinates of any kernel element
    in the returned basis.
    """
    basis, left, _ = _kernels.column_echelon_kernel(M.ring, M.column_dicts(), M.rows)
    return basis, left


def _densify(ring, vecs: Sequence[Dict[int, object]], dim: int) -> List[List[object]]:
    out = []
    for v in vecs:
        row = [ring.zero] * dim
        for i, x in v.items():
            row[i] = x
        out.append(row)
    return out


def kernel_basis(M: ExactMatrix) -> List[List[object]]:
    basis, _ = kernel_with_left_inverse(M)
    return _densify(M.ring, basis, M.cols)


def integer_kernel(M: ExactMatrix) -> List[List[int]]:
    """Basis of the full integer kernel (a saturated sublattice of ZZ^cols)."""
    if M.ring is not ZZ:
        raise TypeError("integer_kernel needs an integer matrix")
    return kernel_basis(M)


def submodule_basis(ring, dim: int, generators: Sequence[Sequence[object]]) -> List[List[object]]:
    """Basis of the submodule of ``ring^dim`` spanned by ``generators``.

    Column echelon reduction of the generator matrix: the nonzero columns
    that remain are independent and span the same submodule.
    """
    cols = [{i: x for i, x in enumerate(g) if x} for g in generators]
    cols = [c for c in cols if c]
    if not cols:
        return []
    A = [dict(c) for c in cols]
    dm, size = ring.divmod, ring.size
    pivots = []
    active = list(range(len(A)))
    for r in range(dim):
        while True:
            S = [j for j in active if A[j].get(r)]
            if not S:
                break
            p = min(S, key=lambda j: (size(A[j][r]), j))
            if len(S) == 1:
                pivots.append(p)
                active.remove(p)
                break
            for j in S:
                if j != p:
                    q, _ = dm(A[j][r], A[p][r])
                    if q:
                        for k, a in A[p].items():
                            v = A[j].get(k, ring.zero) - q * a
                            if v:
                                A[j][k] = v
                            else:
                                A[j].pop(k, None)
    return _densify(ring, [A[j] for j in pivots], dim)


def preimage_basis(M: ExactMatrix, target_basis: Sequence[Sequence[object]]) -> List[List[object]]:
    """Basis of ``{x : M x in span(target_basis)}``.

    Solved as the kernel of ``[M | -T]`` projected onto the ``x`` block.
    Over ZZ the result is saturated whenever ``span(T)`` is; over Q[t, t^-1]
    it is a basis of the preimage submodule.
    """
    ring = M.ring
    for v in target_basis:
        if len(v) != M.rows:
            raise DimensionMismatch(f"target vector of length {len(v)} does not live in the codomain (dim {M.rows})")
    cols = M.column_dicts()
    for v in target_basis:
        cols.append({i: -ring.coerce(x) for i, x in enumerate(v) if x})
    basis, _, _ = _kernels.column_echelon_kernel(ring, cols, M.rows)
    n = M.cols
    projected = [[b.get(i, ring.zero) for i in range(n)] for b in basis]
    return submodule_basis(ring, n, projected)


def coordinate_preimage(M: ExactMatrix, allowed_rows: Sequence[int]):
    """Kernel data for ``{x : (M x)_r == 0 for r not in allowed_rows}``.

    This is :func:`preimage_basis` specialised to a target spanned by
    standard basis vectors, which is the shape every allowability
    condition takes.  Returns ``(basis, left_inverse)`` as sparse dicts.
    """
    keep = set(allowed_rows)
    bad = [r for r in range(M.rows) if r not in keep]
    N = M.submatrix(bad, list(range(M.cols)))
    return kernel_with_left_inverse(N)


def determinant(M: ExactMatrix):
    """Exact determinant: Bareiss elimination over ZZ/QQ, cofactor expansion
    over Q[t, t^-1] (meant for the small matrices used in checks)."""
    if M.rows != M.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return M.ring.one
    if M.ring is LAURENT:
        return _laurent_det(M.to_dense())
    A = [list(r) for r in M.to_dense()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return M.ring.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j])
                A[i][j] = A[i][j] // prev if M.ring is ZZ else A[i][j] / prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _laurent_det(A):
    n = len(A)
    if n == 1:
        return A[0][0]
    total = LAURENT.zero
    for j in range(n):
        if A[0][j]:
            minor = [row[:j] + row[j + 1:] for row in A[1:]]
            term = A[0][j] * _laurent_det(minor)
            total = total + term if j % 2 == 0 else total - term
    return total

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 elimination kernels.

Same contracts as the integer paths of ``_pykernels``.  Every arithmetic
step is overflow-checked; on overflow ``OverflowError`` is raised and the
caller re-runs the pure-Python kernel on arbitrary-precision integers.
"""

from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    """
    static inline int sh_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int sh_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int sh_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int sh_mul_ovf(long long a, long long b, long long *r) nogil
    int sh_sub_ovf(long long a, long long b, long long *r) nogil
    int sh_add_ovf(long long a, long long b, long long *r) nogil


cdef inline long long llabs_(long long a) nogil:
    return -a if a < 0 else a


cdef inline int axpy_ll(long long *dst, long long src, long long q) nogil:
    # dst -= q * src
    cdef long long prod
    if sh_mul_ovf(q, src, &prod):
        return 1
    if sh_sub_ovf(dst[0], prod, dst):
        return 1
    return 0


cdef inline long long sym_quot(long long a, long long b) nogil:
    # quotient with symmetric remainder, matching IntegerRing.divmod
    cdef long long q = a // b
    cdef long long r = a - q * b
    # C division truncates; move to floor semantics first
    if r != 0 and ((r < 0) != (b < 0)):
        q -= 1
        r += b
    if r != 0 and 2 * llabs_(r) > llabs_(b):
        q += 1
    return q


cdef inline object _to_ll(object v):
    if v > 9223372036854775807 or v < -9223372036854775807:
        raise OverflowError("entry exceeds int64")
    return v


def int_invariant_factors(list rows, Py_ssize_t ncols):
    """Nonzero invariant factors (positive, divisibility chain) of an integer matrix."""
    cdef list live_rows = [r for r in rows if r]
    cdef set colset = set()
    for r in live_rows:
        colset.update(r.keys())
    cdef list cols = sorted(colset)
    cdef Py_ssize_t m = len(live_rows), n = len(cols)
    if m == 0 or n == 0:
        return []
    cdef dict cpos = {c: k for k, c in enumerate(cols)}
    cdef long long *A = <long long *> calloc(m * n, sizeof(long long))
    if A == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, t, bi, bj, k, bad
    cdef long long a, p, q, best, tmp
    cdef int err = 0
    cdef list out = []
    try:
        for i in range(m):
            for c, v in (<dict> live_rows[i]).items():
                A[i * n + <Py_ssize_t> cpos[c]] = _to_ll(v)
        with nogil:
            t = 0
            while t < m and t < n:
                best = 0
                bi = -1
                bj = -1
                for i in range(t, m):
                    for j in range(t, n):
                        a = llabs_(A[i * n + j])
                        if a != 0 and (best == 0 or a < best):
                            best = a
                            bi = i
                            bj = j
                            if a == 1:
                                break
                    if best == 1:
                        break
                if bi < 0:
                    break
                if bi != t:
                    for k in range(n):
                        tmp = A[t * n + k]
                        A[t * n + k] = A[bi * n + k]
                        A[bi * n + k] = tmp
                if bj != t:
                    for k in range(m):
                        tmp = A[k * n + t]
                        A[k * n + t] = A[k * n + bj]
                        A[k * n + bj] = tmp
                while True:
                    p = A[t * n + t]
                    for i in range(t + 1, m):
                        a = A[i * n + t]
                        if a != 0:
                            q = sym_quot(a, p)
                            if q != 0:
                                for k in range(t, n):
                                    if A[t * n + k] != 0:
                                        if axpy_ll(&A[i * n + k], A[t * n + k], q):
                                            err = 1
                                            break
                                if err:
                                    break
                    if err:
                        break
                    for j in range(t + 1, n):
                        a = A[t * n + j]
                        if a != 0:
                            q = sym_quot(a, p)
                            if q != 0:
                                for k in range(t, m):
                                    if A[k * n + t] != 0:
                                        if axpy_ll(&A[k * n + j], A[k * n + t], q):
                                            err = 1
                                            break
                                if err:
                                    break
                    if err:
                        break
                    best = 0
                    bi = -1
                    bj = -1
                    for i in range(t + 1, m):
                        a = llabs_(A[i * n + t])
                        if a != 0 and (best == 0 or a < best):
                            best = a
                            bi = i
                            bj = t
                    for j in range(t + 1, n):
                        a = llabs_(A[t * n + j])
                        if a != 0 and (best == 0 or a < best):
                            best = a
                            bi = t
                            bj = j
                    if bi >= 0:
                        if bi != t:
                            for k in range(n):
                                tmp = A[t * n + k]
                                A[t * n + k] = A[bi * n + k]
                                A[bi * n + k] = tmp
                        else:
                            for k in range(m):
                                tmp = A[k * n + t]
                                A[k * n + t] = A[k * n + bj]
                                A[k * n + bj] = tmp
                        continue
                    if llabs_(p) == 1:
                        break
                    bad = -1
                    for i in range(t + 1, m):
                        for j in range(t + 1, n):
                            a = A[i * n + j]
                            if a != 0 and a % p != 0:
                                bad = i
                                break
                        if bad >= 0:
                            break
                    if bad < 0:
                        break
                    for k in range(t, n):
                        if sh_add_ovf(A[t * n + k], A[bad * n + k], &A[t * n + k]):
                            err = 1
                            break
                    if err:
                        break
                if err:
                    break
                t += 1
        if err:
            raise OverflowError("int64 overflow in invariant factor elimination")
        for k in range(min(m, n)):
            a = A[k * n + k]
            if a != 0:
                out.append(llabs_(a))
    finally:
        free(A)
    return out


def int_column_echelon_kernel(list cols, Py_ssize_t nrows):
    """Saturated kernel basis with left inverse; see ``_pykernels.column_echelon_kernel``."""
    cdef Py_ssize_t n = len(cols), m = nrows
    cdef Py_ssize_t i, j, k, r, p, rank = 0
    cdef long long a, pv, q, best
    cdef int err = 0
    if n == 0:
        return [], [], 0
    cdef long long *A = <long long *> calloc(max(m, 1) * n, sizeof(long long))
    cdef long long *V = <long long *> calloc(n * n, sizeof(long long))
    cdef long long *W = <long long *> calloc(n * n, sizeof(long long))
    cdef char *active = <char *> malloc(n)
    if A == NULL or V == NULL or W == NULL or active == NULL:
        free(A); free(V); free(W); free(active)
        raise MemoryError()
    cdef list basis = [], left = []
    try:
        # A column-major: A[j*m + r]; V column-major V[j*n + k]; W row-major W[j*n + k]
        for j in range(n):
            for rr, v in (<dict> cols[j]).items():
                A[j * m + <Py_ssize_t> rr] = _to_ll(v)
            V[j * n + j] = 1
            W[j * n + j] = 1
            active[j] = 1
        with nogil:
            for r in range(m):
                while True:
                    p = -1
                    best = 0
                    for j in range(n):
                        if active[j]:
                            a = llabs_(A[j * m + r])
                            if a != 0 and (best == 0 or a < best):
                                best = a
                                p = j
                    if p < 0:
                        break
                    pv = A[p * m + r]
                    k = 0
                    for j in range(n):
                        if active[j] and j != p and A[j * m + r] != 0:
                            k = 1
                            q = sym_quot(A[j * m + r], pv)
                            if q != 0:
                                for i in range(r, m):
                                    if A[p * m + i] != 0:
                                        if axpy_ll(&A[j * m + i], A[p * m + i], q):
                                            err = 1
                                            break
                                if err:
                                    break
                                for i in range(n):
                                    if V[p * n + i] != 0:
                                        if axpy_ll(&V[j * n + i], V[p * n + i], q):
                                            err = 1
                                            break
                                if err:
                                    break
                                for i in range(n):
                                    if W[j * n + i] != 0:
                                        if axpy_ll(&W[p * n + i], W[j * n + i], -q):
                                            err = 1
                                            break
                                if err:
                                    break
                    if err:
                        break
                    if k == 0:
                        active[p] = 0
                        rank += 1
                        break
                if err:
                    break
        if err:
            raise OverflowError("int64 overflow in column echelon")
        for j in range(n):
            if active[j]:
                basis.append({i: V[j * n + i] for i in range(n) if V[j * n + i] != 0})
                left.append({i: W[j * n + i] for i in range(n) if W[j * n + i] != 0})
    finally:
        free(A); free(V); free(W); free(active)
    return basis, left, rank

"""Middle-perversity intersection chains and their homology.

For a stratum ``S`` of complex codimension ``s`` an ``i``-simplex is
allowable when its closure meets ``S`` in dimension ``< i - s``; the
intersection chains ``IC_i`` are the chains on allowable simplices whose
boundary is again supported on allowable ``(i-1)``-simplices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence

from . import qlinalg
from ._kernels import column_echelon
from ._parallel import pmap
from .algebra import ExactMatrix, ZZ, coordinate_preimage, invariant_factors
from .complex import (FLAGS, Simplex, StratifiedComplex, all_faces, check_full_subcomplex,
                      validate)
from .errors import ValidationError
from .reports import DegreeGroup, EulerReport, HomologyReport

REQUIRED_FLAGS = ("simplicial_complex", "stratification_compatible", "full_triangulation")


def require_computable(X: StratifiedComplex):
    """Raise unless ``X`` is a simplicial complex with a full, compatible stratification."""
    rep = validate(X)
    for name in REQUIRED_FLAGS:
        if not rep.flags[name]:
            raise ValidationError(f"{name} check failed at {rep.violations.get(name)}", rep)
    return rep


# -- chain complexes -------------------------------------------------------

@dataclass
class ChainComplex:
    """Finite free chain complex; ``d[i]`` maps degree ``i`` to ``i - 1``."""

    ring: object
    dims: List[int]
    d: Dict[int, ExactMatrix]

    def boundary(self, i: int) -> ExactMatrix:
        if i in self.d:
            return self.d[i]
        rows = self.dims[i - 1] if 0 <= i - 1 < len(self.dims) else 0
        cols = self.dims[i] if 0 <= i < len(self.dims) else 0
        return ExactMatrix(self.ring, rows, cols)

    def homology(self, report_cls=HomologyReport) -> HomologyReport:
        top = len(self.dims) - 1
        degrees = list(range(1, top + 1))
        factors = dict(zip(degrees, pmap(lambda i: invariant_factors(self.boundary(i)), degrees)))
        out = {}
        unit = self.ring.is_unit
        for i in range(top + 1):
            r_out = len(factors.get(i, ()))
            incoming = factors.get(i + 1, [])
            rank = self.dims[i] - r_out - len(incoming)
            tors = tuple(f for f in incoming if not unit(f))
            out[i] = DegreeGroup(rank, tors)
        return report_cls(out)

    def euler(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.dims))

    def check_d2(self) -> bool:
        for i in range(2, len(self.dims)):
            if not (self.boundary(i - 1) @ self.boundary(i)).is_zero():
                return False
        return True


# -- allowability ------------------------------------------------------------

def _meet_dims(X: StratifiedComplex, s: Simplex) -> Dict[int, int]:
    """Dimension of the closed simplex met with each singular stratum."""
    out: Dict[int, int] = {}
    if not X.assign:
        return out
    for f in all_faces(s):
        sid = X.assign.get(f)
        if sid is not None:
            d = len(f) - 1
            if d > out.get(sid, -1):
                out[sid] = d
    return out


def is_allowable(X: StratifiedComplex, s: Simplex, i: Optional[int] = None) -> bool:
    i = len(s) - 1 if i is None else i
    for sid, d in _meet_dims(X, s).items():
        codim = X.n - X.strata[sid]
        if not d < i - codim:
            return False
    return True


def allowable_simplices(X: StratifiedComplex, i: int) -> List[Simplex]:
    return [s for s in X.simplices(i) if is_allowable(X, s, i)]


def allowable_indices(X: StratifiedComplex, i: int) -> List[int]:
    return [k for k, s in enumerate(X.simplices(i)) if is_allowable(X, s, i)]


@dataclass
class AllowableChainSystem:
    """Per-degree allowable simplices, IC bases and induced boundaries.

    ``basis[i]`` holds the IC_i basis as sparse vectors over the i-simplices
    of ``X``; ``left_inverse[i]`` recovers coordinates in that basis.
    """

    complex: StratifiedComplex
    ring: object
    allowable: Dict[int, List[int]] = field(default_factory=dict)
    basis: Dict[int, List[Dict[int, object]]] = field(default_factory=dict)
    left_inverse: Dict[int, List[Dict[int, object]]] = field(default_factory=dict)
    boundaries: Dict[int, ExactMatrix] = field(default_factory=dict)

    def rank(self, i: int) -> int:
        return len(self.basis.get(i, ()))

    def ranks(self) -> List[int]:
        return [self.rank(i) for i in range(self.complex.dim + 1)]

    def chain_complex(self) -> ChainComplex:
        return ChainComplex(self.ring, self.ranks(), dict(self.boundaries))

    def coordinates(self, i: int, vec: Dict[int, object]) -> List[object]:
        """Coordinates of an IC_i element (given over simplices) in ``basis[i]``."""
        z = self.ring.zero
        out = []
        for row in self.left_inverse.get(i, ()):
            acc = z
            for k, a in row.items():
                v = vec.get(k)
                if v:
                    acc = acc + a * v
            out.append(acc)
        return out

    def contains(self, i: int, vec: Dict[int, object]) -> bool:
        coords = self.coordinates(i, vec)
        back: Dict[int, object] = {}
        for c, b in zip(coords, self.basis.get(i, ())):
            if c:
                for k, a in b.items():
                    back[k] = back.get(k, self.ring.zero) + c * a
        back = {k: v for k, v in back.items() if v}
        return back == {k: v for k, v in vec.items() if v}


def build_ic(X: StratifiedComplex, boundary: Optional[Callable[[int], ExactMatrix]] = None,
             ring=ZZ, check: bool = True) -> AllowableChainSystem:
    """Allowable chain system for ``X``.

    ``boundary(i)`` defaults to the integer simplicial boundary; the twisted
    engine passes its Laurent boundary and ``ring=LAURENT``.
    """
    if check:
        require_computable(X)
    source = boundary or X.boundary_matrix
    cache: Dict[int, ExactMatrix] = {}

    def boundary(i: int) -> ExactMatrix:
        if i not in cache:
            cache[i] = source(i)
        return cache[i]

    sysm = AllowableChainSystem(X, ring)
    top = X.dim
    allow = {i: allowable_indices(X, i) for i in range(top + 1)}
    sysm.allowable = allow
    for i in range(top + 1):
        A = allow[i]
        if i == 0 or len(allow[i - 1]) == len(X.simplices(i - 1)):
            sysm.basis[i] = [{k: ring.one} for k in A]
            sysm.left_inverse[i] = [{k: ring.one} for k in A]
            continue
        D = boundary(i).submatrix(list(range(len(X.simplices(i - 1)))), A)
        basis, left = coordinate_preimage(D, allow[i - 1])
        # re-index from positions in A to simplex indices
        sysm.basis[i] = [{A[p]: v for p, v in b.items()} for b in basis]
        sysm.left_inverse[i] = [{A[p]: v for p, v in row.items()} for row in left]
    for i in range(1, top + 1):
        D = boundary(i)
        cols = []
        dcols = D.column_dicts()
        for b in sysm.basis[i]:
            w: Dict[int, object] = {}
            for k, a in b.items():
                for r, v in dcols[k].items():
                    w[r] = w.get(r, ring.zero) + a * v
            w = {r: v for r, v in w.items() if v}
            coords = sysm.coordinates(i - 1, w)
            cols.append({r: c for r, c in enumerate(coords) if c})
        sysm.boundaries[i] = ExactMatrix.from_columns(ring, sysm.rank(i - 1), cols)
    return sysm


# -- homology ----------------------------------------------------------------

def simplicial_chain_complex(X: StratifiedComplex) -> ChainComplex:
    dims = [len(X.simplices(i)) for i in range(X.dim + 1)]
    return ChainComplex(ZZ, dims, {i: X.boundary_matrix(i) for i in range(1, X.dim + 1)})


def intersection_homology(X: StratifiedComplex, system: Optional[AllowableChainSystem] = None) -> HomologyReport:
    system = system or build_ic(X)
    return system.chain_complex().homology()


def ordinary_homology(X: StratifiedComplex) -> HomologyReport:
    return simplicial_chain_complex(X).homology()


# -- relative intersection homology --------------------------------------------

@dataclass
class RelativeIC:
    """IC(X), its subcomplex of chains supported in ``A`` and the quotient.

    ``sub_basis[i]`` expresses the subcomplex basis in IC_i coordinates;
    ``lift[i]`` / ``proj[i]`` split IC_i as ``sub + complement``.
    """

    system: AllowableChainSystem
    sub: ChainComplex
    quotient: ChainComplex
    sub_basis: Dict[int, List[Dict[int, object]]]
    sub_left: Dict[int, List[Dict[int, object]]]
    lift: Dict[int, List[Dict[int, object]]]
    proj: Dict[int, List[Dict[int, object]]]


def _apply_sparse(M: ExactMatrix, vec: Dict[int, object], cols=None) -> Dict[int, object]:
    cols = cols or M.column_dicts()
    out: Dict[int, object] = {}
    for k, a in vec.items():
        for r, v in cols[k].items():
            out[r] = out.get(r, 0) + a * v
    return {r: v for r, v in out.items() if v}


def _dot(row: Dict[int, object], vec: Dict[int, object]):
    acc = 0
    for k, a in row.items():
        v = vec.get(k)
        if v:
            acc += a * v
    return acc


def relative_ic(X: StratifiedComplex, A: Iterable[Sequence[int]],
                system: Optional[AllowableChainSystem] = None) -> RelativeIC:
    A = check_full_subcomplex(X, A)
    system = system or build_ic(X)
    top = X.dim
    sub_basis, sub_left, lift, proj = {}, {}, {}, {}
    for i in range(top + 1):
        B = system.basis[i]
        outside = [k for k, s in enumerate(X.simplices(i)) if s not in A]
        # z with (sum z_j B_j) vanishing off A  <=>  kernel of B restricted to outside rows
        opos = {k: r for r, k in enumerate(outside)}
        cols = [{opos[k]: v for k, v in b.items() if k in opos} for b in B]
        kernel, pivots, Vc, Vi = column_echelon(ZZ, cols, len(outside))
        sub_basis[i] = [Vc[j] for j in kernel]
        sub_left[i] = [Vi[j] for j in kernel]
        lift[i] = [Vc[j] for j in pivots]
        proj[i] = [Vi[j] for j in pivots]
    sub_d, quo_d = {}, {}
    for i in range(1, top + 1):
        D = system.boundaries[i]
        dcols = D.column_dicts()
        scols, qcols = [], []
        for z in sub_basis[i]:
            w = _apply_sparse(D, z, dcols)
            scols.append({r: c for r, c in enumerate(_dot(row, w) for row in sub_left[i - 1]) if c})
        for z in lift[i]:
            w = _apply_sparse(D, z, dcols)
            qcols.append({r: c for r, c in enumerate(_dot(row, w) for row in proj[i - 1]) if c})
        sub_d[i] = ExactMatrix.from_columns(ZZ, len(sub_basis[i - 1]), scols)
        quo_d[i] = ExactMatrix.from_columns(ZZ, len(lift[i - 1]), qcols)
    sub = ChainComplex(ZZ, [len(sub_basis[i]) for i in range(top + 1)], sub_d)
    quo = ChainComplex(ZZ, [len(lift[i]) for i in range(top + 1)], quo_d)
    return RelativeIC(system, sub, quo, sub_basis, sub_left, lift, proj)


def relative_ih(X: StratifiedComplex, A: Iterable[Sequence[int]],
                system: Optional[AllowableChainSystem] = None) -> HomologyReport:
    """Homology of IC(X) modulo the intersection chains supported in ``A``.

    ``A`` must be a full subcomplex; the chains supported in its open star
    are exactly the chains on ``A`` itself, so the quotient computes the
    intersection homology of the pair (X, open star of A).
    """
    return relative_ic(X, A, system).quotient.homology()


# -- long exact sequence of a pair, checked over QQ -------------------------------

@dataclass
class _QHomology:
    cycles: Dict[int, List[List]]
    boundaries: Dict[int, List[List]]
    reps: Dict[int, List[List]]

    def dim(self, i: int) -> int:
        return len(self.reps.get(i, ()))

    def coords(self, i: int, z) -> List:
        """Coordinates of the class of cycle ``z`` in the chosen basis."""
        cols = self.boundaries[i] + self.reps[i]
        x = qlinalg.solve(cols, list(z))
        if x is None:
            raise ArithmeticError("vector is not a cycle")
        return x[len(self.boundaries[i]):]


def _dense_q(M: ExactMatrix) -> List[List]:
    return qlinalg.to_q(M.to_dense())


def _q_homology(C: ChainComplex) -> _QHomology:
    top = len(C.dims) - 1
    cyc, bnd, reps = {}, {}, {}
    for i in range(top + 1):
        n = C.dims[i]
        d = C.boundary(i) if i > 0 else ExactMatrix(ZZ, 0, n)
        Z = qlinalg.nullspace(_dense_q(d), n) if d.rows else [[qlinalg.Fraction(int(a == b)) for a in range(n)] for b in range(n)]
        if i < top and C.dims[i + 1]:
            dn = _dense_q(C.boundary(i + 1))
            B = qlinalg.column_space_basis(qlinalg.transpose(dn))
        else:
            B = []
        cyc[i], bnd[i] = Z, B
        reps[i] = qlinalg.extend_basis(B, Z)
    return _QHomology(cyc, bnd, reps)


def _sparse_to_dense(vec: Dict[int, object], n: int) -> List:
    out = [qlinalg.Fraction(0)] * n
    for k, v in vec.items():
        out[k] = qlinalg.Fraction(v)
    return out


@dataclass
class ExactnessNode:
    label: str
    degree: int
    composition_zero: bool
    rank_image: int
    rank_kernel: int

    @property
    def exact(self) -> bool:
        return self.composition_zero and self.rank_image == self.rank_kernel


def les_check(X: StratifiedComplex, A: Iterable[Sequence[int]]) -> List[ExactnessNode]:
    """Check the long exact sequence of the pair over QQ, node by node.

    ``... -> IH_i(U) -> IH_i(X) -> IH_i(X, U) -> IH_{i-1}(U) -> ...``
    where ``U`` is the open star of ``A``.  For every node the composition
    of the incoming and outgoing maps must vanish and the image rank of the
    incoming map must equal the kernel rank of the outgoing one.
    """
    rel = relative_ic(X, A)
    full = rel.system.chain_complex()
    hs, hx, hq = _q_homology(rel.sub), _q_homology(full), _q_homology(rel.quotient)
    top = X.dim
    nX = full.dims

    def incl(i):  # H_i(U) -> H_i(X)
        out = []
        for z in hs.reps[i]:
            img = [qlinalg.Fraction(0)] * nX[i]
            for j, c in enumerate(z):
                if c:
                    for k, a in rel.sub_basis[i][j].items():
                        img[k] += c * a
            out.append(hx.coords(i, img))
        return out

    def proj(i):  # H_i(X) -> H_i(X, U)
        out = []
        for z in hx.reps[i]:
            zs = {k: v for k, v in enumerate(z) if v}
            img = [sum((qlinalg.Fraction(a) * zs.get(k, 0) for k, a in row.items()), qlinalg.Fraction(0))
                   for row in rel.proj[i]]
            out.append(hq.coords(i, img))
        return out

    def conn(i):  # H_i(X, U) -> H_{i-1}(U)
        out = []
        if i == 0:
            return [[] for _ in hq.reps[0]]
        D = rel.system.boundaries[i]
        dcols = D.column_dicts()
        for q in hq.reps[i]:
            c: Dict[int, object] = {}
            for j, x in enumerate(q):
                if x:
                    for k, a in rel.lift[i][j].items():
                        c[k] = c.get(k, 0) + x * a
            w = _apply_sparse(D, c, dcols)
            s = [_dot(row, w) for row in rel.sub_left[i - 1]]
            out.append(hs.coords(i - 1, [qlinalg.Fraction(v) for v in s]))
        return out

    def compose(f, g, inner):
        # f: list over source basis of vectors in middle coords; g likewise middle -> target
        out = []
        for v in f:
            acc = None
            for j, c in enumerate(v):
                if c:
                    gj = g[j]
                    acc = [c * b for b in gj] if acc is None else [a + c * b for a, b in zip(acc, gj)]
            out.append(acc or [])
        return out

    def rank_of(images, dim_target):
        rows = [list(v) for v in images if v]
        return qlinalg.rank(rows) if rows and dim_target else 0

    def kernel_dim(images, dim_source, dim_target):
        return dim_source - rank_of(images, dim_target)

    nodes: List[ExactnessNode] = []
    for i in range(top, -1, -1):
        f_in, f_out = incl(i), proj(i)
        g_in, g_out = proj(i), conn(i)
        # at H_i(U): incoming conn from H_{i+1}(X, U), outgoing incl
        c_in = conn(i + 1) if i + 1 <= top else []
        nodes.append(_node(f"IH_{i}(U)", i, c_in, f_in, hs.dim(i), hx.dim(i), compose, rank_of, kernel_dim))
        nodes.append(_node(f"IH_{i}(X)", i, f_in, f_out, hx.dim(i), hq.dim(i), compose, rank_of, kernel_dim))
        tgt = hs.dim(i - 1) if i > 0 else 0
        nodes.append(_node(f"IH_{i}(X,U)", i, g_in, g_out, hq.dim(i), tgt, compose, rank_of, kernel_dim))
    return nodes


def _node(label, i, incoming, outgoing, dim_mid, dim_tgt, compose, rank_of, kernel_dim):
    comp = compose(incoming, outgoing, dim_mid) if incoming and outgoing else []
    zero = all(not any(v) for v in comp)
    r_img = rank_of(incoming, dim_mid)
    r_ker = kernel_dim(outgoing, dim_mid, dim_tgt)
    return ExactnessNode(label, i, zero, r_img, r_ker)


# -- Euler characteristics ---------------------------------------------------------

def euler(X: StratifiedComplex, n: Optional[int] = None,
          ih: Optional[HomologyReport] = None, h: Optional[HomologyReport] = None,
          system: Optional[AllowableChainSystem] = None) -> EulerReport:
    """Alternating sums of IH and H ranks with the chain-level cross-checks.

    ``n`` defaults to the complex dimension of ``X``; odd-dimensional
    spaces get no sign verdicts unless ``n`` is given explicitly.
    """
    system = system or build_ic(X)
    ih = ih or intersection_homology(X, system)
    h = h or ordinary_homology(X)
    ichi_chain = system.chain_complex().euler()
    chi_chain = X.euler_from_faces()
    if ih.euler() != ichi_chain:
        raise ArithmeticError(f"IH Euler characteristic {ih.euler()} != chain-level {ichi_chain}")
    if h.euler() != chi_chain:
        raise ArithmeticError(f"H Euler characteristic {h.euler()} != face count {chi_chain}")
    if n is None and X.dim == 2 * X.n:
        n = X.n
    return EulerReport(ih.euler(), h.euler(), n, ichi_chain, chi_chain)

"""Stratified simplicial complexes.

A :class:`StratifiedComplex` is a finite simplicial complex given by its
maximal simplices, together with a stratification that assigns every open
simplex to a stratum.  Strata carry a complex dimension ``cdim``; the top
stratum has ``cdim == n`` and is implied for every simplex not listed in
the assignment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .algebra import ExactMatrix, ZZ
from .errors import NotFullSubcomplex

Simplex = Tuple[int, ...]


def simplex(vertices: Iterable[int]) -> Simplex:
    s = tuple(sorted(vertices))
    if len(set(s)) != len(s):
        raise ValueError(f"repeated vertex in {s}")
    return s


def faces(s: Simplex) -> List[Tuple[int, Simplex]]:
    """Codimension-one faces with their boundary signs ``(-1)^j``."""
    return [(-1 if j % 2 else 1, s[:j] + s[j + 1:]) for j in range(len(s))] if len(s) > 1 else []


def all_faces(s: Simplex) -> List[Simplex]:
    return [c for k in range(1, len(s) + 1) for c in combinations(s, k)]


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation that sorts ``seq`` (entries distinct)."""
    seq = list(seq)
    sign = 1
    seen = [False] * len(seq)
    order = sorted(range(len(seq)), key=seq.__getitem__)
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class StratifiedComplex:
    """Simplicial complex with a declared stratification.

    Parameters
    ----------
    n : int
        Complex dimension; the top stratum has ``cdim == n``.
    num_vertices : int
        Vertices are ``0 .. num_vertices - 1``.
    maximal : iterable of vertex tuples
        Maximal simplices; all faces are implied.
    strata : mapping ``stratum id -> cdim``
        Must contain exactly one stratum of ``cdim == n`` (the top one).  If
        empty, a single top stratum with id 0 is created.
    assign : mapping ``simplex -> stratum id``
        Stratum of each simplex outside the top stratum.
    dim : int, optional
        Real dimension, ``2n`` by default.  Only odd-dimensional toy spaces
        (the circle) need to set it.
    """

    def __init__(self, n: int, num_vertices: int, maximal: Iterable[Sequence[int]],
                 strata: Optional[Mapping[int, int]] = None,
                 assign: Optional[Mapping[Sequence[int], int]] = None,
                 dim: Optional[int] = None, name: str = ""):
        self.n = int(n)
        self.dim = 2 * self.n if dim is None else int(dim)
        self.num_vertices = int(num_vertices)
        self.name = name
        self.maximal: Tuple[Simplex, ...] = tuple(sorted({simplex(s) for s in maximal}, key=lambda s: (len(s), s)))
        self.strata: Dict[int, int] = dict(sorted((strata or {0: self.n}).items()))
        tops = [sid for sid, c in self.strata.items() if c == self.n]
        if len(tops) != 1:
            raise ValueError(f"need exactly one top stratum of cdim {self.n}, found {tops}")
        self.top_stratum = tops[0]
        self.assign: Dict[Simplex, int] = {}
        for s, sid in (assign or {}).items():
            if sid not in self.strata:
                raise ValueError(f"simplex {tuple(s)} assigned to unknown stratum {sid}")
            if sid != self.top_stratum:
                self.assign[simplex(s)] = sid
        self.assign = dict(sorted(self.assign.items(), key=lambda kv: (len(kv[0]), kv[0])))

    # -- combinatorics ----------------------------------------------------

    @cached_property
    def _simplices(self) -> List[List[Simplex]]:
        top = max((len(s) for s in self.maximal), default=0)
        levels: List[set] = [set() for _ in range(max(top, self.dim + 1))]
        for s in self.maximal:
            for f in all_faces(s):
                levels[len(f) - 1].add(f)
        return [sorted(level) for level in levels]

    @cached_property
    def _index(self) -> List[Dict[Simplex, int]]:
        return [{s: k for k, s in enumerate(level)} for level in self._simplices]

    def simplices(self, i: int) -> List[Simplex]:
        if i < 0 or i >= len(self._simplices):
            return []
        return self._simplices[i]

    def index(self, i: int) -> Dict[Simplex, int]:
        if i < 0 or i >= len(self._index):
            return {}
        return self._index[i]

    def all_simplices(self) -> List[Simplex]:
        return [s for level in self._simplices for s in level]

    def __contains__(self, s) -> bool:
        s = tuple(s)
        return s in self.index(len(s) - 1)

    def f_vector(self) -> List[int]:
        return [len(self.simplices(i)) for i in range(self.dim + 1)]

    def euler_from_faces(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.f_vector()))

    def vertices_used(self) -> set:
        return {v for s in self.maximal for v in s}

    # -- strata -----------------------------------------------------------

    def stratum_of(self, s: Simplex) -> int:
        return self.assign.get(tuple(s), self.top_stratum)

    def cdim_of(self, s: Simplex) -> int:
        return self.strata[self.stratum_of(s)]

    def singular_strata(self) -> Dict[int, int]:
        return {sid: c for sid, c in self.strata.items() if sid != self.top_stratum}

    def is_manifold_stratified(self) -> bool:
        """True when nothing is assigned to a singular stratum."""
        return not self.assign

    # -- chains -----------------------------------------------------------

    def boundary_matrix(self, i: int) -> ExactMatrix:
        """Integer matrix of the boundary map C_i -> C_{i-1}."""
        if i < 0 or i > self.dim + 1:
            raise ValueError(f"degree {i} out of range 0..{self.dim}")
        cols = self.simplices(i)
        if i == 0:
            return ExactMatrix(ZZ, 0, len(cols))
        rows = self.index(i - 1)
        ent = {}
        for c, s in enumerate(cols):
            for sign, f in faces(s):
                ent[(rows[f], c)] = sign
        return ExactMatrix(ZZ, len(rows), len(cols), ent)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return (f"<StratifiedComplex{label} n={self.n} dim={self.dim} "
                f"f={self.f_vector()} strata={self.strata}>")

    def __eq__(self, other):
        if not isinstance(other, StratifiedComplex):
            return NotImplemented
        return (self.n, self.dim, self.num_vertices, self.maximal, self.strata, self.assign) == \
               (other.n, other.dim, other.num_vertices, other.maximal, other.strata, other.assign)

    def __hash__(self):
        return hash((self.n, self.dim, self.num_vertices, self.maximal))


# -- validation ------------------------------------------------------------

FLAGS = ("simplicial_complex", "pure_dimensional", "pseudomanifold",
         "stratification_compatible", "full_triangulation", "even_codimension")


@dataclass
class ValidationReport:
    flags: Dict[str, bool] = field(default_factory=dict)
    violations: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.flags.values())

    def first_failure(self):
        for name in FLAGS:
            if not self.flags.get(name, True):
                return name, self.violations.get(name)
        return None

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "flags": {k: self.flags[k] for k in FLAGS if k in self.flags},
            "violations": {k: _jsonable(v) for k, v in self.violations.items()},
        }


def _jsonable(v):
    if isinstance(v, tuple):
        return list(v)
    return v


def _check_simplicial(X: StratifiedComplex):
    for s in X.maximal:
        if not s or s[0] < 0 or s[-1] >= X.num_vertices:
            return s
    maxset = set(X.maximal)
    for s in X.maximal:
        for f in all_faces(s):
            if f != s and f in maxset:
                return f
    missing = set(range(X.num_vertices)) - X.vertices_used()
    if missing:
        return (min(missing),)
    return None


def _check_pure(X: StratifiedComplex):
    for s in X.maximal:
        if len(s) - 1 != X.dim:
            return s
    return None


def _check_pseudomanifold(X: StratifiedComplex):
    d = X.dim
    if d == 0:
        return None
    count: Dict[Simplex, int] = {}
    for s in X.simplices(d):
        for _, f in faces(s):
            count[f] = count.get(f, 0) + 1
    for f in X.simplices(d - 1):
        if count.get(f, 0) != 2:
            return f
    for s, sid in X.assign.items():
        if len(s) - 1 > d - 2:
            return s
    return None


def _check_compatible(X: StratifiedComplex):
    for s in X.assign:
        if s not in X:
            return s
    for s in X.all_simplices():
        cs, ss = X.cdim_of(s), X.stratum_of(s)
        bound = X.dim if ss == X.top_stratum else 2 * cs
        if len(s) - 1 > bound:
            return s
        for f in all_faces(s):
            if f == s:
                continue
            cf, sf = X.cdim_of(f), X.stratum_of(f)
            if cf > cs or (sf != ss and cf >= cs):
                return s
    return None


def _check_even(X: StratifiedComplex):
    sing = X.singular_strata()
    if not sing:
        return None
    if X.dim % 2:
        return next(iter(X.assign), None)
    top_dim: Dict[int, int] = {}
    for s, sid in X.assign.items():
        top_dim[sid] = max(top_dim.get(sid, -1), len(s) - 1)
    for sid, c in sing.items():
        if sid in top_dim and top_dim[sid] != 2 * c:
            return max((s for s, k in X.assign.items() if k == sid), key=len)
    return None


def full_violation(X: StratifiedComplex):
    """First maximal simplex meeting some filtration piece in more than one face."""
    levels = sorted({c for c in X.singular_strata().values()})
    if not levels:
        return None
    for s in X.maximal:
        for j in levels:
            w = tuple(v for v in s if X.cdim_of((v,)) <= j)
            if w and X.cdim_of(w) > j:
                return s
    return None


def is_full(X: StratifiedComplex) -> bool:
    """Each closed simplex meets each closed filtration piece in one face."""
    return full_violation(X) is None


def validate(X: StratifiedComplex) -> ValidationReport:
    rep = ValidationReport()
    checks = [
        ("simplicial_complex", _check_simplicial),
        ("pure_dimensional", _check_pure),
        ("pseudomanifold", _check_pseudomanifold),
        ("stratification_compatible", _check_compatible),
        ("full_triangulation", full_violation),
        ("even_codimension", _check_even),
    ]
    for name, fn in checks:
        bad = fn(X)
        rep.flags[name] = bad is None
        if bad is not None:
            rep.violations[name] = bad
    return rep


# -- subdivision -----------------------------------------------------------

def barycentric_subdivide(X: StratifiedComplex) -> StratifiedComplex:
    """First barycentric subdivision with inherited strata.

    New vertex ids enumerate the simplices of ``X`` ordered by
    ``(dimension, vertex tuple)``.  A new simplex is a chain of faces and
    lies in the stratum of its largest member.
    """
    order = X.all_simplices()
    vid = {s: k for k, s in enumerate(order)}
    tops = []
    assign = {}
    for s in X.maximal:
        for perm in permutations(s):
            chain = tuple(vid[tuple(sorted(perm[:k]))] for k in range(1, len(perm) + 1))
            tops.append(chain)
    seen = {s for s in order if X.stratum_of(s) != X.top_stratum}
    for t in tops:
        for f in all_faces(tuple(sorted(t))):
            biggest = order[max(f)]
            if biggest in seen:
                assign[f] = X.stratum_of(biggest)
    return StratifiedComplex(X.n, len(order), tops, X.strata, assign, dim=X.dim,
                             name=f"sd({X.name})" if X.name else "")


def subdivision_chain_map(X: StratifiedComplex, i: int) -> ExactMatrix:
    """Matrix of the subdivision chain map C_i(X) -> C_i(sd X).

    Built by coning: ``sd(v) = b_v`` and ``sd(s) = b_s * sd(boundary s)``.
    Columns follow ``X.simplices(i)``, rows ``sd(X).simplices(i)``.
    """
    order = X.all_simplices()
    vid = {s: k for k, s in enumerate(order)}
    Y = barycentric_subdivide(X)
    memo: Dict[Simplex, Dict[Tuple[int, ...], int]] = {}

    def sd(s: Simplex) -> Dict[Tuple[int, ...], int]:
        # ordered tuples of new vertices -> coefficient
        if s in memo:
            return memo[s]
        b = vid[s]
        if len(s) == 1:
            out = {(b,): 1}
        else:
            out = {}
            for sign, f in faces(s):
                for tup, c in sd(f).items():
                    key = (b,) + tup
                    out[key] = out.get(key, 0) + sign * c
        memo[s] = out
        return out

    rows = Y.index(i)
    cols = X.simplices(i)
    ent: Dict[Tuple[int, int], int] = {}
    for c, s in enumerate(cols):
        for tup, coef in sd(s).items():
            key = (rows[tuple(sorted(tup))], c)
            ent[key] = ent.get(key, 0) + coef * permutation_sign(tup)
    return ExactMatrix(ZZ, len(rows), len(cols), ent)


# -- subcomplexes ------------------------------------------------------------

def induced_subcomplex(X: StratifiedComplex, vertices: Iterable[int]) -> FrozenSet[Simplex]:
    vs = set(vertices)
    return frozenset(s for s in X.all_simplices() if set(s) <= vs)


def check_full_subcomplex(X: StratifiedComplex, A: Iterable[Sequence[int]]) -> FrozenSet[Simplex]:
    A = frozenset(simplex(s) for s in A)
    for s in A:
        if s not in X:
            raise NotFullSubcomplex(f"{s} is not a simplex of the complex")
        for f in all_faces(s):
            if f not in A:
                raise NotFullSubcomplex(f"face {f} of {s} missing: not a subcomplex")
    verts = {v for s in A for v in s}
    for s in X.all_simplices():
        if set(s) <= verts and s not in A:
            raise NotFullSubcomplex(f"{s} spans vertices of A but is not in A")
    return A


def star_neighborhood(X: StratifiedComplex, A: Iterable[Sequence[int]]) -> FrozenSet[Simplex]:
    """Open star of a full subcomplex: simplices with a vertex in ``A``."""
    A = check_full_subcomplex(X, A)
    verts = {v for s in A for v in s}
    return frozenset(s for s in X.all_simplices() if verts.intersection(s))

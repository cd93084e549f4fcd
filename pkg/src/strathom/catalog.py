"""Deterministic model spaces and cocycles.

Each entry is a stratified complex that models a complex curve or surface
(or a toy odd-dimensional space), together with named integer 1-cocycles
and expected reports.  The geometric story behind an entry lives in its
metadata: the engine itself only sees the triangulation.

Expected values carry a provenance tag saying how they were obtained.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Callable, Dict, List, Optional, Tuple

from .complex import StratifiedComplex, all_faces, simplex
from .errors import CatalogError

Cocycle = Dict[Tuple[int, int], int]


@dataclass
class CatalogEntry:
    name: str
    params: dict
    complex: StratifiedComplex
    n: Optional[int]
    cocycles: Dict[str, Cocycle] = field(default_factory=dict)
    description: str = ""
    abelian_model: Optional[bool] = None
    lci: Optional[bool] = None
    closed: bool = True
    expected: dict = field(default_factory=dict)

    def fixtures(self) -> dict:
        return self.expected


# -- cochain helpers -----------------------------------------------------------

def _norm_edge(a: int, b: int, v: int) -> Tuple[Tuple[int, int], int]:
    return ((a, b), v) if a < b else ((b, a), -v)


def cocycle_from_oriented(values: Dict[Tuple[int, int], int]) -> Cocycle:
    """Cocycle from values on oriented edges ``(tail, head)``."""
    out: Cocycle = {}
    for (a, b), v in values.items():
        key, val = _norm_edge(a, b, v)
        if val:
            out[key] = out.get(key, 0) + val
    return {k: v for k, v in out.items() if v}


def coboundary(X: StratifiedComplex, potential: Dict[int, int]) -> Cocycle:
    """``delta(phi)(a, b) = phi(b) - phi(a)`` on every edge of ``X``."""
    out = {}
    for a, b in X.simplices(1):
        v = potential.get(b, 0) - potential.get(a, 0)
        if v:
            out[(a, b)] = v
    return out


def add_cocycles(*cs: Cocycle) -> Cocycle:
    out: Cocycle = {}
    for c in cs:
        for k, v in c.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _value(c: Cocycle, a: int, b: int) -> int:
    return c.get((a, b), 0) if a < b else -c.get((b, a), 0)


# -- basic complexes ---------------------------------------------------------------

def circle(k: int = 3) -> StratifiedComplex:
    if k < 3:
        raise CatalogError("a simplicial circle needs at least 3 vertices")
    return StratifiedComplex(0, k, [(i, (i + 1) % k) for i in range(k)], dim=1, name=f"circle({k})")


def two_circles(k: int = 3) -> StratifiedComplex:
    edges = [(i, (i + 1) % k) for i in range(k)] + [(k + i, k + (i + 1) % k) for i in range(k)]
    return StratifiedComplex(0, 2 * k, edges, dim=1, name=f"two_circles({k})")


def sphere() -> StratifiedComplex:
    return StratifiedComplex(1, 4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)], name="sphere")


TORUS7 = [tuple(sorted((i % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)] + \
         [tuple(sorted((i % 7, (i + 2) % 7, (i + 3) % 7))) for i in range(7)]

# lattice displacement of the 7-vertex torus edge  a -> a + k (mod 7)
_T7_STEP = {1: (1, 0), 2: (-1, 1), 3: (0, 1), 4: (0, -1), 5: (1, -1), 6: (-1, 0)}


def torus() -> StratifiedComplex:
    """Minimal 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    return StratifiedComplex(1, 7, TORUS7, name="torus")


def torus7_cocycle(fx: int, fy: int) -> Cocycle:
    """Cocycle of the linear form ``(fx, fy)`` on lattice displacements.

    The 7-vertex torus is the triangular lattice modulo the kernel of
    ``(x, y) -> x + 3y mod 7``; its period lattice is spanned by (7, 0)
    and (-3, 1), so the form evaluates to ``(7 fx, fy - 3 fx)`` on them.
    """
    out = {}
    for a in range(7):
        for b in range(a + 1, 7):
            dx, dy = _T7_STEP[(b - a) % 7]
            v = fx * dx + fy * dy
            if v:
                out[(a, b)] = v
    return out


def grid_torus(m: int = 5, k: int = 5) -> StratifiedComplex:
    """``m x k`` grid torus; vertex ``(x, y)`` has id ``x * k + y``."""
    if m < 3 or k < 3:
        raise CatalogError("grid torus needs m, k >= 3")
    vid = lambda x, y: (x % m) * k + (y % k)
    tris = []
    for x in range(m):
        for y in range(k):
            tris.append((vid(x, y), vid(x + 1, y), vid(x + 1, y + 1)))
            tris.append((vid(x, y), vid(x, y + 1), vid(x + 1, y + 1)))
    return StratifiedComplex(1, m * k, tris, name=f"grid_torus({m},{k})")


def grid_seam_cocycle(m: int, k: int, axis: int) -> Cocycle:
    """Value 1 on edges stepping across the ``x = m-1 -> 0`` seam (axis 0) or the y seam."""
    vals = {}
    for x in range(m):
        for y in range(k):
            for dx, dy in ((1, 0), (0, 1), (1, 1)):
                u, v = (x, y), ((x + dx) % m, (y + dy) % k)
                crosses = (x == m - 1 and dx) if axis == 0 else (y == k - 1 and dy)
                if crosses:
                    vals[(u[0] * k + u[1], v[0] * k + v[1])] = 1
    return cocycle_from_oriented(vals)


def _graph_distances(X: StratifiedComplex, src: int) -> Dict[int, int]:
    adj: Dict[int, List[int]] = {}
    for a, b in X.simplices(1):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for w in sorted(adj.get(u, ())):
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def identify_vertices(X: StratifiedComplex, u: int, v: int, name: str = "") -> Tuple[StratifiedComplex, Dict[int, int]]:
    """Glue ``v`` onto ``u``; the image becomes a point stratum.

    Requires combinatorial distance >= 3 so the quotient is again a
    simplicial complex.  Returns the quotient and the vertex relabelling.
    """
    d = _graph_distances(X, u).get(v)
    if d is not None and d < 3:
        raise CatalogError(f"vertices {u} and {v} are at distance {d} < 3")
    keep = [w for w in range(X.num_vertices) if w != v]
    relabel = {w: i for i, w in enumerate(keep)}
    relabel[v] = relabel[u]
    tops = [tuple(relabel[w] for w in s) for s in X.maximal]
    node = relabel[u]
    return (StratifiedComplex(X.n, len(keep), tops, {0: X.n, 1: 0}, {(node,): 1}, name=name),
            relabel)


def connected_sum_of_tori(g: int) -> Tuple[StratifiedComplex, List[Dict[int, int]]]:
    """Genus-``g`` surface glued from ``g`` copies of the 7-vertex torus.

    Copy ``c`` loses triangle (0, 1, 3) when it is glued in and, if another
    copy follows, triangle (2, 3, 5).  Returns the surface and, per copy,
    the map from torus vertex to surface vertex.
    """
    if g < 1:
        raise CatalogError("connected sum needs g >= 1")
    maps = [{v: v for v in range(7)}]
    tris = [t for t in TORUS7]
    nv = 7
    for c in range(1, g):
        prev = maps[-1]
        hole = tuple(sorted(prev[v] for v in (2, 3, 5)))
        tris.remove(hole)
        glue = {0: prev[2], 1: prev[3], 3: prev[5]}
        mp = {}
        for v in range(7):
            if v in glue:
                mp[v] = glue[v]
            else:
                mp[v] = nv
                nv += 1
        maps.append(mp)
        for t in TORUS7:
            if t == (0, 1, 3):
                continue
            tris.append(tuple(sorted(mp[v] for v in t)))
    return StratifiedComplex(1, nv, tris, name=f"genus_g({g})"), maps


def genus_g(g: int = 2) -> StratifiedComplex:
    if g == 0:
        return sphere()
    if g == 1:
        return torus()
    return connected_sum_of_tori(g)[0]


def genus_g_cocycle(g: int, copy: int, fx: int = 0, fy: int = 1) -> Cocycle:
    """Torus cocycle on copy ``copy``, gauged to vanish on its glue triangles, extended by 0."""
    X, maps = connected_sum_of_tori(g)
    c = torus7_cocycle(fx, fy)
    holes = []
    if copy > 0:
        holes.append((0, 1, 3))
    if copy < g - 1:
        holes.append((2, 3, 5))
    # one potential that kills the cocycle on every hole edge
    phi = _potential_killing(c, holes)
    c = add_cocycles(c, {k: -v for k, v in _delta(phi).items()})
    for tri in holes:
        for a in tri:
            for b in tri:
                if a < b and _value(c, a, b):
                    raise CatalogError("could not gauge the cocycle off the glue triangles")
    mp = maps[copy]
    out = {}
    for (a, b), v in c.items():
        key, val = _norm_edge(mp[a], mp[b], v)
        out[key] = val
    return out


def _delta(phi: Dict[int, int]) -> Cocycle:
    out = {}
    for a in range(7):
        for b in range(a + 1, 7):
            v = phi.get(b, 0) - phi.get(a, 0)
            if v:
                out[(a, b)] = v
    return out


def _potential_killing(c: Cocycle, holes) -> Dict[int, int]:
    # integrate c along a spanning forest of the hole edges
    phi: Dict[int, int] = {}
    for tri in holes:
        base = next((v for v in tri if v in phi), tri[0])
        phi.setdefault(base, 0)
        for w in tri:
            if w not in phi:
                phi[w] = phi[base] + _value(c, base, w)
    return phi


def pinched_torus(k: int = 3) -> StratifiedComplex:
    """Torus with one meridian collapsed to a point.

    Built as an annulus between the rings ``a_0..a_{k-1}`` and
    ``b_0..b_{k-1}`` whose two boundary circles are both coned to the
    node 0; the node is a point stratum.
    """
    a = [1 + i for i in range(k)]
    b = [1 + k + i for i in range(k)]
    tris = []
    for i in range(k):
        j = (i + 1) % k
        tris.append((a[i], a[j], b[i]))
        tris.append((a[j], b[i], b[j]))
        tris.append((0, a[i], a[j]))
        tris.append((0, b[i], b[j]))
    return StratifiedComplex(1, 1 + 2 * k, tris, {0: 1, 1: 0}, {(0,): 1}, name=f"pinched_torus({k})")


def pinched_node_loop(k: int = 3, times: int = 1) -> Cocycle:
    """``times`` on the edges from the node to the ``b`` ring."""
    return cocycle_from_oriented({(0, 1 + k + i): times for i in range(k)})


def nodal_genus1(m: int = 5, k: int = 5) -> Tuple[StratifiedComplex, Dict[int, int], int, int]:
    """Grid torus with ``(0, 0)`` glued to the first vertex at distance >= 3."""
    T = grid_torus(m, k)
    dist = _graph_distances(T, 0)
    v = min(w for w, d in dist.items() if d >= 3)
    X, relabel = identify_vertices(T, 0, v, name=f"nodal_genus1({m},{k})")
    return X, relabel, 0, v


def push_cocycle(c: Cocycle, relabel: Dict[int, int]) -> Cocycle:
    out = {}
    for (a, b), v in c.items():
        key, val = _norm_edge(relabel[a], relabel[b], v)
        out[key] = out.get(key, 0) + val
    return {k: v for k, v in out.items() if v}


def suspension(X: StratifiedComplex, name: str = "") -> StratifiedComplex:
    """Join with two points; the suspension points become point strata."""
    if X.assign:
        raise CatalogError("suspension is only built over unstratified complexes")
    if X.dim % 2 == 0:
        raise CatalogError("suspension needs an odd-dimensional base to stay even-dimensional")
    N, S = X.num_vertices, X.num_vertices + 1
    tops = [s + (N,) for s in X.maximal] + [s + (S,) for s in X.maximal]
    n = (X.dim + 1) // 2
    return StratifiedComplex(n, X.num_vertices + 2, tops, {0: n, 1: 0, 2: 0},
                             {(N,): 1, (S,): 2}, name=name or f"suspension({X.name})")


def cone(X: StratifiedComplex, name: str = "") -> StratifiedComplex:
    """Cone with the apex as a point stratum (a space with boundary)."""
    if X.assign:
        raise CatalogError("cone is only built over unstratified complexes")
    if X.dim % 2 == 0:
        raise CatalogError("cone needs an odd-dimensional base to stay even-dimensional")
    apex = X.num_vertices
    n = (X.dim + 1) // 2
    return StratifiedComplex(n, X.num_vertices + 1, [s + (apex,) for s in X.maximal],
                             {0: n, 1: 0}, {(apex,): 1}, name=name or f"cone({X.name})")


def _real_dim(X: StratifiedComplex, sid: int) -> int:
    return X.dim if sid == X.top_stratum else 2 * X.strata[sid]


def product(X: StratifiedComplex, Y: StratifiedComplex, name: str = "") -> StratifiedComplex:
    """Staircase triangulation of ``X x Y``; vertex ``(x, y)`` has id ``x * |Y| + y``.

    A product simplex is a monotone lattice path through ``sigma x tau``;
    its open simplex lies in ``(open face of sigma) x (open face of tau)``
    and so in the product of their strata.
    """
    nY = Y.num_vertices
    dim = X.dim + Y.dim
    if dim % 2:
        raise CatalogError("product must be even-dimensional")
    tops = []
    for s in X.maximal:
        for t in Y.maximal:
            p, q = len(s) - 1, len(t) - 1
            for moves in _lattice_paths(p, q):
                i = j = 0
                verts = [s[0] * nY + t[0]]
                for mv in moves:
                    if mv:
                        j += 1
                    else:
                        i += 1
                    verts.append(s[i] * nY + t[j])
                tops.append(tuple(verts))
    pairs = sorted(iproduct(X.strata, Y.strata),
                   key=lambda st: (st != (X.top_stratum, Y.top_stratum), st))
    sid = {st: k for k, st in enumerate(pairs)}
    strata = {}
    for st, k in sid.items():
        rd = _real_dim(X, st[0]) + _real_dim(Y, st[1])
        if rd % 2:
            raise CatalogError(f"product stratum {st} has odd real dimension {rd}")
        strata[k] = rd // 2
    assign = {}
    top_pair = (X.top_stratum, Y.top_stratum)
    if X.assign or Y.assign:
        seen = set()
        for tsim in tops:
            for f in all_faces(tuple(sorted(tsim))):
                if f in seen:
                    continue
                seen.add(f)
                fx = tuple(sorted({w // nY for w in f}))
                fy = tuple(sorted({w % nY for w in f}))
                st = (X.stratum_of(fx), Y.stratum_of(fy))
                if st != top_pair:
                    assign[f] = sid[st]
    used = {0} | set(assign.values())
    strata = {k: c for k, c in strata.items() if k in used}
    return StratifiedComplex(dim // 2, X.num_vertices * nY, tops, strata, assign,
                             name=name or f"product({X.name},{Y.name})")


def _lattice_paths(p: int, q: int):
    # sequences of p zeros (step in X) and q ones (step in Y)
    if p == 0 and q == 0:
        yield ()
        return
    if p:
        for rest in _lattice_paths(p - 1, q):
            yield (0,) + rest
    if q:
        for rest in _lattice_paths(p, q - 1):
            yield (1,) + rest


def product_pullback(c: Cocycle, nY: int, factor: int, other_vertices: int) -> Cocycle:
    """Pull a cocycle back along a projection of the staircase product."""
    out = {}
    if factor == 0:
        for (a, b), v in c.items():
            for y in range(other_vertices):
                out[(a * nY + y, b * nY + y)] = v
            for y in range(other_vertices):
                for y2 in range(other_vertices):
                    if y != y2:
                        key, val = _norm_edge(a * nY + y, b * nY + y2, v)
                        out[key] = val
    else:
        for (a, b), v in c.items():
            for x in range(other_vertices):
                for x2 in range(other_vertices):
                    key, val = _norm_edge(x * nY + a, x2 * nY + b, v)
                    out[key] = val
    return out


def _restrict(c: Cocycle, X: StratifiedComplex) -> Cocycle:
    edges = set(X.simplices(1))
    return {e: v for e, v in c.items() if e in edges}


# -- catalog ---------------------------------------------------------------------

def _entry_circle(k: int = 3) -> CatalogEntry:
    X = circle(k)
    return CatalogEntry(
        "circle", {"k": k}, X, None,
        cocycles={
            "winding": cocycle_from_oriented({(k - 1, 0): 1}),
            "double": cocycle_from_oriented({(k - 1, 0): 2}),
            "zero": {},
        },
        description="odd-dimensional toy space; no complex structure",
        expected={
            "h_ranks": ((1, 1), "TRIVIAL: circle"),
            "ih_ranks": ((1, 1), "TRIVIAL: single stratum"),
            "twisted": {"winding": ((0, 0), {0: [[-1, 1]]}, "DERIVED: kernel/cokernel of the 3x3 twisted boundary")},
        },
    )


def _entry_torus() -> CatalogEntry:
    X = torus()
    return CatalogEntry(
        "torus", {}, X, 1,
        cocycles={
            "meridian": torus7_cocycle(0, 1),
            "slope": torus7_cocycle(1, 4),
            "coboundary": coboundary(X, {0: 1, 3: -2}),
        },
        description="elliptic curve: a smooth curve in an abelian surface",
        abelian_model=True, lci=True,
        expected={
            "h_ranks": ((1, 2, 1), "TRIVIAL: torus"),
            "ih_ranks": ((1, 2, 1), "TRIVIAL: manifold"),
            "ichi": (0, "TRIVIAL"), "chi": (0, "DERIVED: 7 - 21 + 14"),
            "twisted": {"meridian": ((0, 0, 0), None, "DERIVED: infinite cyclic cover is an open cylinder")},
        },
    )


def _entry_genus(g: int = 2) -> CatalogEntry:
    X = genus_g(g)
    cocycles = {"zero": {}}
    if g >= 2:
        cocycles = {f"meridian_{c + 1}": genus_g_cocycle(g, c) for c in range(g)}
    elif g == 1:
        cocycles = {"meridian": torus7_cocycle(0, 1), "slope": torus7_cocycle(1, 4)}
    chi = 2 - 2 * g
    ranks = (1, 2 * g, 1)
    exp = {
        "h_ranks": (ranks, "DERIVED: classification of surfaces"),
        "ih_ranks": (ranks, "DERIVED: manifold, IH = H"),
        "ichi": (chi, "DERIVED: classification of surfaces"),
        "chi": (chi, "DERIVED: classification of surfaces"),
    }
    if g >= 1:
        exp["twisted"] = {name: ((0, 2 * g - 2, 0), None, "DERIVED: torsion in degrees 0 and 2 plus the rank identity")
                          for name in cocycles}
    return CatalogEntry(
        "genus_g", {"g": g}, X, 1, cocycles=cocycles,
        description="smooth theta divisor (genus-g curve in its Jacobian)" if g >= 2 else "smooth curve",
        abelian_model=g >= 1, lci=True, expected=exp,
    )


def _entry_pinched(k: int = 3) -> CatalogEntry:
    X = pinched_torus(k)
    return CatalogEntry(
        "pinched_torus", {"k": k}, X, 1,
        cocycles={
            "node_loop": pinched_node_loop(k),
            "double_node_loop": pinched_node_loop(k, 2),
            "zero": {},
        },
        description="rational nodal curve; no abelian variety contains it (negative control)",
        abelian_model=False, lci=True,
        expected={
            "h_ranks": ((1, 1, 1), "DERIVED: sphere with two points identified, Mayer-Vietoris"),
            "ih_ranks": ((1, 0, 1), "DERIVED: IH of a curve is H of its normalization (a sphere)"),
            "ichi": (2, "DERIVED"), "chi": (1, "DERIVED"),
            "signed_ih": (False, "DERIVED: negative control"),
        },
    )


def _entry_nodal(m: int = 5, k: int = 5) -> CatalogEntry:
    X, relabel, u, v = nodal_genus1(m, k)
    meridian = push_cocycle(grid_seam_cocycle(m, k, 0), relabel)
    longitude = push_cocycle(grid_seam_cocycle(m, k, 1), relabel)
    T = grid_torus(m, k)
    node_loop = push_cocycle(coboundary(T, {v: 1}), relabel)
    return CatalogEntry(
        "nodal_genus1", {"m": m, "k": k}, X, 1,
        cocycles={"meridian": meridian, "longitude": longitude, "node_loop": node_loop},
        description="geometric-genus-1 nodal curve in an abelian surface",
        abelian_model=True, lci=True,
        expected={
            "h_ranks": ((1, 3, 1), "DERIVED: torus with two points identified"),
            "ih_ranks": ((1, 2, 1), "DERIVED: IH of a curve is H of its normalization (a torus)"),
            "ichi": (0, "DERIVED: normalization"),
            "chi": (-1, "DERIVED: one vertex fewer than the source torus"),
            "twisted": {"meridian": ((0, 0, 0), None, "DERIVED: rank identity with torsion in degrees 0 and 2")},
        },
    )


def _entry_suspension(base: str = "two_circles", k: int = 3) -> CatalogEntry:
    B = two_circles(k) if base == "two_circles" else circle(k)
    X = suspension(B, name=f"suspension({B.name})")
    N, S = B.num_vertices, B.num_vertices + 1
    if base == "two_circles":
        cocycles = {
            "through_poles": cocycle_from_oriented({(S, k + i): 1 for i in range(k)}),
            "zero": {},
        }
        exp = {
            "h_ranks": ((1, 1, 2), "DERIVED: two spheres glued at two points"),
            "ih_ranks": ((2, 0, 2), "DERIVED: normalization is two disjoint spheres"),
            "ichi": (4, "DERIVED"), "chi": (2, "DERIVED"),
        }
        desc = "two rational curves meeting in two nodes; not in any abelian variety"
        abelian = False
    else:
        cocycles = {"zero": {}, "coboundary": coboundary(X, {N: 1})}
        exp = {
            "h_ranks": ((1, 0, 1), "DERIVED: suspension of a circle is a sphere"),
            "ih_ranks": ((1, 0, 1), "DERIVED: stratification independence"),
            "ichi": (2, "DERIVED"), "chi": (2, "DERIVED"),
        }
        desc = "projective line with two marked points"
        abelian = False
    return CatalogEntry("suspension", {"base": base, "k": k}, X, 1, cocycles=cocycles,
                        description=desc, abelian_model=abelian, lci=True, expected=exp)


def _entry_cone(k: int = 6) -> CatalogEntry:
    B = circle(k)
    X = cone(B, name=f"cone({B.name})")
    return CatalogEntry(
        "cone", {"k": k}, X, 1,
        cocycles={"zero": {}, "coboundary": coboundary(X, {k: 1})},
        description="disk with its centre declared a point stratum (has boundary)",
        closed=False,
        expected={
            "h_ranks": ((1, 0, 0), "TRIVIAL: contractible"),
            "ih_ranks": ((1, 0, 0), "DERIVED: cone formula, IH_i(cone) = IH_i(link) for i < n"),
        },
    )


def _entry_product(left: str = "circle", right: str = "circle", k: int = 3) -> CatalogEntry:
    builders = {"circle": lambda: circle(k), "sphere": sphere, "pinched_torus": pinched_torus, "torus": torus}
    if left not in builders or right not in builders:
        raise CatalogError(f"product factors must be among {sorted(builders)}")
    A, B = builders[left](), builders[right]()
    X = product(A, B)
    cocycles = {}
    if left == right == "circle":
        w = cocycle_from_oriented({(k - 1, 0): 1})
        cocycles["first"] = _restrict(product_pullback(w, B.num_vertices, 0, B.num_vertices), X)
        cocycles["second"] = _restrict(product_pullback(w, B.num_vertices, 1, A.num_vertices), X)
        exp = {
            "h_ranks": ((1, 2, 1), "TRIVIAL: torus"),
            "ih_ranks": ((1, 2, 1), "TRIVIAL: manifold"),
            "ichi": (0, "TRIVIAL"), "chi": (0, "TRIVIAL"),
            "twisted": {"first": ((0, 0, 0), None, "DERIVED: same as the torus meridian")},
        }
        abelian, desc = True, "elliptic curve as a product of circles"
    elif {left, right} == {"pinched_torus", "sphere"}:
        cocycles["zero"] = {}
        exp = {
            "h_ranks": ((1, 1, 2, 1, 1), "DERIVED: Kunneth with H(pinched torus) = (1,1,1)"),
            "ih_ranks": ((1, 0, 2, 0, 1), "DERIVED: Kunneth with IH(pinched torus) = (1,0,1)"),
        }
        abelian, desc = False, "nodal rational curve times a projective line"
    else:
        exp = {}
        abelian, desc = None, "product"
    return CatalogEntry("product", {"left": left, "right": right, "k": k}, X, X.n, cocycles=cocycles,
                        description=desc, abelian_model=abelian, lci=True if abelian else None, expected=exp)


BUILDERS: Dict[str, Callable[..., CatalogEntry]] = {
    "circle": _entry_circle,
    "torus": _entry_torus,
    "genus_g": _entry_genus,
    "pinched_torus": _entry_pinched,
    "nodal_genus1": _entry_nodal,
    "suspension": _entry_suspension,
    "cone": _entry_cone,
    "product": _entry_product,
}

NAMES = tuple(BUILDERS)


def build(name: str, **params) -> CatalogEntry:
    if name not in BUILDERS:
        raise CatalogError(f"unknown catalog entry {name!r}; choose from {', '.join(NAMES)}")
    return BUILDERS[name](**params)


def fixtures(name: str, **params) -> dict:
    return build(name, **params).expected


def default_entries() -> List[CatalogEntry]:
    return [build(name) for name in NAMES]

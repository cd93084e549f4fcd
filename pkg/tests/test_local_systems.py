import pytest
from hypothesis import given, settings, strategies as st

from oracles import oracle_twisted_ranks
from strathom import catalog
from strathom.algebra import ZZ, LaurentPoly, T
from strathom.complex import barycentric_subdivide
from strathom.errors import CocycleError
from strathom.ih import euler, intersection_homology
from strathom.io import emit_cocycle
from strathom.local_systems import (Cocycle, CoverPresentation, euler_witness, gauge, load_cocycle,
                                    cover_crosscheck, spanning_tree, subdivide_cocycle,
                                    twisted_boundary, twisted_homology, twisted_ih, validate_cocycle)

ENTRIES = catalog.default_entries()
PAIRS = [(e, name) for e in ENTRIES for name in sorted(e.cocycles)]
PAIR_IDS = [f"{e.name}-{name}" for e, name in PAIRS]


@pytest.fixture(params=PAIRS, ids=PAIR_IDS)
def pair(request):
    e, name = request.param
    return e, Cocycle.coerce(e.cocycles[name])


def specialize(M, t0=1):
    return [[v.evaluate(t0) if v else 0 for v in row] for row in M.to_dense()]


# -- cocycles -----------------------------------------------------------------------

def test_coboundary_is_trivial():
    X = catalog.torus()
    chk = validate_cocycle(X, catalog.coboundary(X, {2: 5, 4: -1}))
    assert chk.ok and not chk.surjective
    assert set(chk.epsilon) == {0}


def test_torus_meridian_on_standard_cycles():
    w = Cocycle.coerce(catalog.torus7_cocycle(0, 1))
    chk = validate_cocycle(catalog.torus(), w)
    assert chk.ok and chk.surjective
    # b: 0 -> 2 -> 1 -> 0 has lattice displacement (-3, 1); a: 0 -> 1 -> ... -> 6 -> 0 has (7, 0)
    from strathom.local_systems import evaluate
    b = {(0, 2): 1, (1, 2): -1, (0, 1): -1}
    a = {(i, i + 1): 1 for i in range(6)}
    a[(0, 6)] = -1
    assert (evaluate(w, b), evaluate(w, a)) == (1, 0)


def test_doubled_circle_cocycle_not_surjective():
    e = catalog.build("circle")
    chk = validate_cocycle(e.complex, e.cocycles["double"])
    assert chk.ok and chk.epsilon in ((2,), (-2,)) and not chk.surjective


def test_non_surjective_torus_form():
    # (1, 3) sends the period lattice into 7Z
    chk = validate_cocycle(catalog.torus(), catalog.torus7_cocycle(1, 3))
    assert chk.ok and not chk.surjective


def test_broken_cocycle_reports_triangle():
    X = catalog.torus()
    chk = validate_cocycle(X, {(0, 1): 1})
    assert not chk.ok and len(chk.offending) == 3 and {0, 1} <= set(chk.offending)


def test_loader_enforces_cocycle_condition():
    X = catalog.torus()
    with pytest.raises(CocycleError) as err:
        load_cocycle("strathom-cocycle v1\nedge 0 1 1\n", X)
    assert len(err.value.simplex) == 3
    with pytest.raises(CocycleError):
        load_cocycle("strathom-cocycle v1\nedge 0 3 1\n", catalog.circle(6))


def test_loader_round_trip(pair):
    e, w = pair
    assert load_cocycle(emit_cocycle(w.values), e.complex) == w


def test_cocycle_antisymmetry():
    w = Cocycle.coerce({(3, 1): 2})
    assert w(1, 3) == -2 and w(3, 1) == 2 and w(0, 1) == 0


# -- gauge and twisted boundaries -----------------------------------------------------------------

def test_tree_edges_gauge_to_zero(pair):
    e, w = pair
    cover = gauge(e.complex, w)
    for a, b in cover.tree:
        assert cover.gauged(a, b) == 0
    for a, b in e.complex.simplices(1):
        assert cover.potential[b] - cover.potential[a] + cover.gauged(a, b) == w(a, b)


def test_circle_example_columns():
    X = catalog.circle(3)
    w = catalog.build("circle").cocycles["winding"]
    assert Cocycle.coerce(w)(2, 0) == 1
    D = twisted_boundary(X, w, 1, tree=[(0, 1), (1, 2)])
    cols = {s: D.column(k) for k, s in enumerate(X.simplices(1))}
    zero, one = LaurentPoly(), LaurentPoly.constant(1)
    assert cols[(0, 1)] == [-one, one, zero]
    assert cols[(1, 2)] == [zero, -one, one]
    # the cyclically oriented edge v2 -> v0 has boundary t v0 - v2; the
    # sorted edge (0, 2) carries the opposite orientation and lift, which is
    # the same column up to the unit -t
    expected = [T, zero, -one]
    assert [(-T) * c for c in cols[(0, 2)]] == expected


def test_zero_cocycle_gives_ordinary_boundary():
    X = catalog.pinched_torus()
    for i in range(1, 3):
        assert specialize(twisted_boundary(X, {}, i), 5) == X.boundary_matrix(i).to_dense()


def test_specialization_at_one(pair):
    e, w = pair
    X = e.complex
    for i in range(1, X.dim + 1):
        assert specialize(twisted_boundary(X, w, i)) == X.boundary_matrix(i).to_dense()


def test_twisted_boundary_squares_to_zero(pair):
    e, w = pair
    cover = gauge(e.complex, w)
    for i in range(2, e.complex.dim + 1):
        assert (cover.boundary(i - 1) @ cover.boundary(i)).is_zero()


def test_spanning_tree_orders():
    X = catalog.genus_g(2)
    for order in ("bfs", "dfs"):
        tree = spanning_tree(X, order=order)
        assert len(tree) == X.num_vertices - 1
    assert spanning_tree(X, order="bfs") != spanning_tree(X, order="dfs")
    with pytest.raises(ValueError):
        spanning_tree(X, order="random")


def test_gauge_rejects_cyclic_tree():
    X = catalog.circle(3)
    with pytest.raises(CocycleError):
        gauge(X, {(0, 2): -1}, tree=[(0, 1), (1, 2), (0, 2)])


# -- twisted homology ---------------------------------------------------------------------------

def test_circle_twisted():
    e = catalog.build("circle")
    r = twisted_ih(e.complex, e.cocycles["winding"])
    assert r.ranks == (0, 0)
    assert r.torsion(0) == (T - 1,) and r.torsion(1) == ()


def test_torus_meridian_all_torsion():
    r = twisted_ih(catalog.torus(), catalog.torus7_cocycle(0, 1))
    assert r.ranks == (0, 0, 0)


def test_genus_two_twisted_ranks():
    e = catalog.build("genus_g", g=2)
    for name in e.cocycles:
        assert twisted_ih(e.complex, e.cocycles[name]).ranks == (0, 2, 0)


FIXTURED = [(e, name) for e, name in PAIRS if name in e.expected.get("twisted", {})]


@pytest.mark.parametrize("e,name", FIXTURED, ids=[f"{e.name}-{n}" for e, n in FIXTURED])
def test_fixtures(e, name):
    ranks, torsion, _ = e.expected["twisted"][name]
    r = twisted_ih(e.complex, e.cocycles[name])
    assert r.ranks == ranks
    if torsion is not None:
        for i, facs in torsion.items():
            assert [f.coefficient_list() for f in r.torsion(i)] == facs


def test_ranks_match_oracle(pair):
    e, w = pair
    X = e.complex
    assert twisted_ih(X, w).ranks == oracle_twisted_ranks(X, w.values)
    assert twisted_homology(X, w).ranks == oracle_twisted_ranks(X, w.values, ic=False)


def test_euler_identity(pair):
    e, w = pair
    X = e.complex
    ev = euler(X, e.n)
    assert twisted_ih(X, w).euler() == ev.ichi
    assert twisted_homology(X, w).euler() == ev.chi


def test_torsion_factors_normalized(pair):
    e, w = pair
    r = twisted_ih(e.complex, w)
    for i in r.degrees:
        facs = r.torsion(i)
        for f in facs:
            assert f == f.normalized() and not f.is_unit()
        for a, b in zip(facs, facs[1:]):
            assert a.divides(b)


@pytest.mark.parametrize("order,root", [("dfs", None), ("bfs", "last"), ("dfs", "middle")])
def test_gauge_independence(pair, order, root):
    e, w = pair
    X = e.complex
    r = {None: None, "last": X.num_vertices - 1, "middle": X.num_vertices // 2}[root]
    assert twisted_ih(X, w, order=order, root=r) == twisted_ih(X, w)


def test_cohomologous_cocycles_agree(pair):
    e, w = pair
    X = e.complex
    shifted = w + catalog.coboundary(X, {v: (3 * v) % 5 - 2 for v in range(X.num_vertices)})
    assert twisted_ih(X, shifted) == twisted_ih(X, w)


@settings(max_examples=15)
@given(st.dictionaries(st.integers(0, 6), st.integers(-3, 3)))
def test_random_coboundary_shift_on_torus(potential):
    X = catalog.torus()
    w = Cocycle.coerce(catalog.torus7_cocycle(1, 4))
    assert twisted_ih(X, w + catalog.coboundary(X, potential)) == twisted_ih(X, w)


def test_subdivided_cocycle_gives_same_report():
    e = catalog.build("pinched_torus")
    X, w = e.complex, e.cocycles["node_loop"]
    Y = barycentric_subdivide(X)
    v = subdivide_cocycle(X, w)
    assert validate_cocycle(Y, v).surjective
    assert twisted_ih(Y, v) == twisted_ih(X, w)


# -- cover cross-check ------------------------------------------------------------------------------

def test_crosscheck(pair):
    e, w = pair
    res = cover_crosscheck(e.complex, w)
    assert res.ok, res.mismatch


def test_crosscheck_on_torus_with_unit_window():
    res = cover_crosscheck(catalog.torus(), catalog.torus7_cocycle(0, 1), window=1)
    assert res.ok and res.window == 1


def test_crosscheck_window_too_small():
    with pytest.raises(LookupError):
        cover_crosscheck(catalog.torus(), catalog.torus7_cocycle(1, 4), window=0)


def test_crosscheck_reports_mismatch(monkeypatch):
    X = catalog.torus()
    w = catalog.torus7_cocycle(0, 1)
    real = CoverPresentation.boundary

    def broken(self, i):
        M = real(self, i)
        if i == 2:
            ent = dict(M.items())
            key = next(iter(sorted(ent)))
            ent[key] = ent[key] * T
            return type(M)(M.ring, M.rows, M.cols, ent)
        return M

    monkeypatch.setattr(CoverPresentation, "boundary", broken)
    res = cover_crosscheck(X, w)
    assert not res.ok and res.mismatch["degree"] == 2


# -- witness --------------------------------------------------------------------------------------

def test_genus_two_witness():
    e = catalog.build("genus_g", g=2)
    rep = euler_witness(e.complex, e.cocycles["meridian_1"], 1)
    assert rep.ih.applicable and rep.ih.twisted_ranks == (0, 2, 0)
    assert rep.ih.euler == -2 == (-1) ** 1 * rep.ih.rank_n
    assert rep.ordinary.applicable and rep.ordinary.euler == -2


def test_nodal_witness():
    e = catalog.build("nodal_genus1")
    rep = euler_witness(e.complex, e.cocycles["meridian"], 1)
    assert rep.ih.applicable and rep.ih.rank_n == 0 and rep.ih.euler == 0
    # the ordinary twisted ranks concentrate in degree 1 too, with chi = -1
    assert rep.ordinary.applicable and rep.ordinary.euler == -1 and rep.ordinary.rank_n == 1


def test_zero_cocycle_is_rejected():
    with pytest.raises(CocycleError):
        euler_witness(catalog.torus(), {}, 1)


def test_negative_control_is_inapplicable():
    e = catalog.build("pinched_torus")
    rep = euler_witness(e.complex, e.cocycles["node_loop"], 1)
    assert not rep.ih.applicable and rep.ih.offending_degrees == (0, 2)
    d = rep.as_dict()
    assert d["ih"]["status"] == "inapplicable" and "rank_n" not in d["ih"]


def test_subdivision_invariance(pair):
    e, w = pair
    X = e.complex
    assert twisted_ih(barycentric_subdivide(X), subdivide_cocycle(X, w)) == twisted_ih(X, w)

import pytest

from oracles import oracle_allowable, oracle_h_ranks, oracle_ih_ranks
from strathom import catalog
from strathom.algebra import ZZ, ExactMatrix, integer_kernel
from strathom.complex import (StratifiedComplex, barycentric_subdivide, induced_subcomplex,
                              subdivision_chain_map)
from strathom.errors import NotFullSubcomplex, ValidationError
from strathom.ih import (allowable_simplices, build_ic, euler, intersection_homology, is_allowable,
                         les_check, ordinary_homology, relative_ih)

RP2 = StratifiedComplex(1, 6, [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
                               (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5)], name="rp2")

ENTRIES = catalog.default_entries()


@pytest.fixture(params=ENTRIES, ids=lambda e: e.name)
def entry(request):
    return request.param


# -- allowability ------------------------------------------------------------------

def test_node_vertex_not_allowable():
    X = catalog.pinched_torus()
    allowed = allowable_simplices(X, 0)
    assert (0,) not in allowed
    assert len(allowed) == X.num_vertices - 1


def test_all_triangles_allowable_on_pinched_torus():
    X = catalog.pinched_torus()
    assert allowable_simplices(X, 2) == X.simplices(2)


def test_edges_through_node_not_allowable():
    X = catalog.pinched_torus()
    for e in X.simplices(1):
        assert is_allowable(X, e) == (0 not in e)


def test_manifold_everything_allowable():
    X = catalog.torus()
    for i in range(3):
        assert allowable_simplices(X, i) == X.simplices(i)


def test_allowability_matches_definition(entry):
    X = entry.complex
    for i in range(X.dim + 1):
        for s in X.simplices(i):
            assert is_allowable(X, s) == oracle_allowable(X, s)


# -- the allowable chain system ------------------------------------------------------------

def test_manifold_ic_is_whole_chain_group():
    X = catalog.torus()
    sysm = build_ic(X)
    assert sysm.ranks() == [len(X.simplices(i)) for i in range(3)]


def test_fundamental_cycle_lies_in_ic2():
    X = catalog.pinched_torus()
    sysm = build_ic(X)
    (z,) = integer_kernel(X.boundary_matrix(2))
    assert sysm.contains(2, {k: v for k, v in enumerate(z) if v})


def test_chain_through_node_excluded_from_ic1():
    X = catalog.pinched_torus()
    sysm = build_ic(X)
    idx = X.index(1)
    for b in sysm.basis[1]:
        for k in b:
            assert 0 not in X.simplices(1)[k]
    e = idx[(0, 1)]
    assert not sysm.contains(1, {e: 1})


def test_induced_boundaries_compose_to_zero(entry):
    sysm = build_ic(entry.complex)
    assert sysm.chain_complex().check_d2()


def test_ic_basis_is_saturated(entry):
    """Coordinates of any integral IC chain in the basis are integral."""
    X = entry.complex
    sysm = build_ic(X)
    for i in range(X.dim + 1):
        for b in sysm.basis[i]:
            assert all(isinstance(v, int) for v in b.values())
        for row in sysm.left_inverse[i]:
            assert all(isinstance(v, int) for v in row.values())


def test_requires_full_triangulation():
    X = StratifiedComplex(1, 4, catalog.sphere().maximal, {0: 1, 1: 0}, {(0,): 1, (1,): 1})
    with pytest.raises(ValidationError):
        build_ic(X)


# -- homology ---------------------------------------------------------------------------

def test_fixtures(entry):
    exp = entry.expected
    assert intersection_homology(entry.complex).ranks == exp["ih_ranks"][0]
    assert ordinary_homology(entry.complex).ranks == exp["h_ranks"][0]


def test_ranks_match_oracle(entry):
    X = entry.complex
    assert intersection_homology(X).ranks == oracle_ih_ranks(X)
    assert ordinary_homology(X).ranks == oracle_h_ranks(X)


def test_pinched_torus_contrast():
    X = catalog.pinched_torus()
    ih, h = intersection_homology(X), ordinary_homology(X)
    assert ih.ranks == (1, 0, 1) and not ih.has_torsion()
    assert h.ranks == (1, 1, 1)


def test_nodal_curve_ih():
    assert intersection_homology(catalog.build("nodal_genus1").complex).ranks == (1, 2, 1)


def test_genus_two_homology():
    assert ordinary_homology(catalog.genus_g(2)).ranks == (1, 4, 1)


def test_torsion_in_projective_plane():
    h = ordinary_homology(RP2)
    assert h.ranks == (1, 0, 0)
    assert h.torsion(1) == (2,)
    assert intersection_homology(RP2).degrees == h.degrees


@pytest.mark.parametrize("X", [catalog.circle(3), catalog.torus(), catalog.genus_g(2), RP2],
                         ids=["circle", "torus", "genus2", "rp2"])
def test_ih_equals_h_on_manifolds(X):
    assert intersection_homology(X).degrees == ordinary_homology(X).degrees


def test_parallel_degrees_give_same_answer(monkeypatch):
    X = catalog.build("nodal_genus1").complex
    serial = intersection_homology(X)
    monkeypatch.setenv("STRATHOM_THREADS", "4")
    assert intersection_homology(X) == serial


# -- relative groups and the long exact sequence ---------------------------------------------

def test_relative_to_everything_is_zero():
    X = catalog.torus()
    assert relative_ih(X, X.all_simplices()).is_zero()


def test_relative_to_nothing_is_absolute():
    X = catalog.pinched_torus()
    assert relative_ih(X, []) == intersection_homology(X)


def test_circle_relative_to_a_point():
    assert relative_ih(catalog.circle(3), [(0,)]).ranks == (0, 1)


def test_relative_needs_full_subcomplex():
    with pytest.raises(NotFullSubcomplex):
        relative_ih(catalog.torus(), [(0,), (1,)])


LES_PAIRS = [
    ("circle", catalog.circle(3), [0]),
    ("pinched_node", catalog.pinched_torus(), [0]),
    ("pinched_ring", catalog.pinched_torus(), [1, 2, 3]),
    ("torus_triangle", catalog.torus(), [0, 1, 3]),
    ("nodal_node", catalog.build("nodal_genus1").complex, [0]),
    ("suspension_pole", catalog.build("suspension").complex, [6]),
    ("genus2_edge", catalog.genus_g(2), [0, 1]),
]


@pytest.mark.parametrize("name,X,verts", LES_PAIRS, ids=[p[0] for p in LES_PAIRS])
def test_long_exact_sequence(name, X, verts):
    nodes = les_check(X, induced_subcomplex(X, verts))
    assert len(nodes) == 3 * (X.dim + 1)
    for node in nodes:
        assert node.composition_zero, node
        assert node.rank_image == node.rank_kernel, node


# -- Euler characteristics ---------------------------------------------------------------------

def test_genus_two_euler():
    ev = euler(catalog.genus_g(2))
    assert (ev.ichi, ev.chi) == (-2, -2)
    assert ev.signed_ih and ev.signed_lci


def test_nodal_euler():
    ev = euler(catalog.build("nodal_genus1").complex)
    assert (ev.ichi, ev.chi) == (0, -1)
    assert ev.signed_ih and ev.signed_lci


def test_pinched_torus_is_negative_control():
    ev = euler(catalog.pinched_torus())
    assert (ev.ichi, ev.chi) == (2, 1)
    assert ev.signed_ih is False and ev.signed_lci is False


def test_chain_level_identity(entry):
    ev = euler(entry.complex, entry.n)
    assert ev.ichi == ev.ichi_chain
    assert ev.chi == ev.chi_chain == entry.complex.euler_from_faces()


def test_euler_json_shape():
    d = euler(catalog.torus()).as_dict()
    assert set(d) == {"ichi", "chi", "n", "signed_ih", "signed_lci"}


def test_odd_dimensional_space_has_no_verdict():
    assert euler(catalog.circle(3)).signed_ih is None


# -- subdivision -----------------------------------------------------------------------------

def test_subdivision_invariance(entry):
    X = entry.complex
    Y = barycentric_subdivide(X)
    assert intersection_homology(Y) == intersection_homology(X)
    assert ordinary_homology(Y) == ordinary_homology(X)


def test_allowable_chains_push_forward(entry):
    X = entry.complex
    Y = barycentric_subdivide(X)
    sx, sy = build_ic(X), build_ic(Y)
    for i in range(X.dim + 1):
        S = subdivision_chain_map(X, i)
        cols = S.column_dicts()
        for b in sx.basis[i]:
            img = {}
            for k, a in b.items():
                for r, v in cols[k].items():
                    img[r] = img.get(r, 0) + a * v
            img = {r: v for r, v in img.items() if v}
            assert sy.contains(i, img)


def test_subdivision_map_is_a_chain_map():
    X = catalog.pinched_torus()
    Y = barycentric_subdivide(X)
    for i in range(1, X.dim + 1):
        lhs = Y.boundary_matrix(i) @ subdivision_chain_map(X, i)
        rhs = subdivision_chain_map(X, i - 1) @ X.boundary_matrix(i)
        assert lhs == rhs

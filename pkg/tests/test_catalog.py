import pytest

from strathom import catalog
from strathom.complex import is_full, validate
from strathom.errors import CatalogError
from strathom.ih import euler, intersection_homology, ordinary_homology
from strathom.io import emit_complex
from strathom.local_systems import twisted_ih, validate_cocycle

ENTRIES = catalog.default_entries()
PROVENANCE = ("TRIVIAL", "DERIVED")


@pytest.fixture(params=ENTRIES, ids=lambda e: e.name)
def entry(request):
    return request.param


def test_names():
    assert set(catalog.NAMES) == {"circle", "torus", "genus_g", "pinched_torus", "nodal_genus1",
                                  "suspension", "cone", "product"}


def test_circle_counts():
    e = catalog.build("circle", k=3)
    X = e.complex
    assert X.num_vertices == 3 and len(X.simplices(1)) == 3
    assert validate(X).ok


def test_torus_face_counts():
    X = catalog.build("torus").complex
    assert [len(X.simplices(i)) for i in range(3)] == [7, 21, 14]
    assert X.euler_from_faces() == 0


def test_nodal_loses_one_vertex():
    e = catalog.build("nodal_genus1")
    assert e.complex.num_vertices == catalog.grid_torus(5, 5).num_vertices - 1
    assert e.complex.euler_from_faces() == -1


def test_entry_validates_and_is_full(entry):
    X = entry.complex
    assert is_full(X)
    flags = validate(X).flags
    failing = [k for k, v in flags.items() if not v]
    assert failing == ([] if entry.closed else ["pseudomanifold"])


def test_fixtures_carry_provenance(entry):
    def tags(exp):
        for key, val in exp.items():
            if key == "twisted":
                for fixture in val.values():
                    yield fixture[-1]
            else:
                yield val[1]
    for tag in tags(entry.expected):
        assert tag.split(":")[0] in PROVENANCE


def test_fixtures_match_engine(entry):
    exp, X = entry.expected, entry.complex
    if "ih_ranks" in exp:
        assert intersection_homology(X).ranks == exp["ih_ranks"][0]
    if "h_ranks" in exp:
        assert ordinary_homology(X).ranks == exp["h_ranks"][0]
    ev = euler(X, entry.n)
    if "ichi" in exp:
        assert ev.ichi == exp["ichi"][0]
    if "chi" in exp:
        assert ev.chi == exp["chi"][0]
    if "signed_ih" in exp:
        assert ev.signed_ih is exp["signed_ih"][0]
    for name, (ranks, _, _) in exp.get("twisted", {}).items():
        assert twisted_ih(X, entry.cocycles[name]).ranks == ranks


def test_fixtures_function_returns_expected():
    assert catalog.fixtures("pinched_torus")["ih_ranks"][0] == (1, 0, 1)
    assert catalog.fixtures("genus_g", g=2)["ichi"][0] == -2
    nodal = catalog.fixtures("nodal_genus1")
    assert (nodal["ichi"][0], nodal["chi"][0]) == (0, -1)


def test_cocycles_are_valid(entry):
    for name, w in entry.cocycles.items():
        assert validate_cocycle(entry.complex, w).ok, name


def test_builds_are_deterministic(entry):
    again = catalog.build(entry.name, **entry.params)
    assert emit_complex(again.complex) == emit_complex(entry.complex)
    assert again.cocycles == entry.cocycles


def test_product_of_circles_is_the_torus():
    P = catalog.build("product")
    T = catalog.build("torus")
    assert intersection_homology(P.complex) == intersection_homology(T.complex)
    assert ordinary_homology(P.complex) == ordinary_homology(T.complex)
    assert euler(P.complex, 1).as_dict() == euler(T.complex, 1).as_dict()
    assert twisted_ih(P.complex, P.cocycles["first"]) == twisted_ih(T.complex, T.cocycles["meridian"])
    assert twisted_ih(P.complex, P.cocycles["second"]) == twisted_ih(T.complex, T.cocycles["meridian"])


@pytest.mark.parametrize("g", [1, 2, 3])
def test_genus_family(g):
    e = catalog.build("genus_g", g=g)
    assert ordinary_homology(e.complex).ranks == (1, 2 * g, 1)
    for w in e.cocycles.values():
        assert validate_cocycle(e.complex, w).surjective


def test_metadata_flags():
    by_name = {e.name: e for e in ENTRIES}
    assert by_name["pinched_torus"].abelian_model is False
    assert by_name["genus_g"].abelian_model and by_name["nodal_genus1"].abelian_model
    assert not by_name["cone"].closed


def test_unknown_name():
    with pytest.raises(CatalogError):
        catalog.build("klein_bottle")


def test_identification_too_close():
    X = catalog.grid_torus(5, 5)
    with pytest.raises(CatalogError):
        catalog.identify_vertices(X, 0, 1)


def test_small_circle_rejected():
    with pytest.raises(CatalogError):
        catalog.build("circle", k=2)


def test_bad_product_factor():
    with pytest.raises(CatalogError):
        catalog.build("product", left="circle", right="klein_bottle")

import pytest

from affhecke.rootdata import (
    IncompatibleLattice,
    InvalidCartan,
    build_root_datum,
    cartan_matrix,
    dominance_tools,
    root_datum_from_config,
)

ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "C2": 8, "G2": 12}
NPOS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "C2": 4, "G2": 6}


@pytest.mark.parametrize("t", sorted(ORDERS))
@pytest.mark.parametrize("lat", ["sc", "ad"])
def test_sizes_and_pairing(t, lat):
    rd = build_root_datum(t, lat)
    assert len(rd.weyl_group) == ORDERS[t]
    assert len(rd.positive_roots) == NPOS[t]
    for a, c in zip(rd.positive_roots, rd.positive_coroots):
        assert sum(x * y for x, y in zip(a, c)) == 2
    assert [list(r) for r in rd.cartan] == cartan_matrix(t)


@pytest.mark.parametrize("t", sorted(ORDERS))
def test_weyl_group_structure(t):
    rd = build_root_datum(t, "sc")
    assert rd.weyl_group[0].is_identity()
    w0 = rd.longest_element()
    assert rd.length(w0) == NPOS[t]
    for w in rd.weyl_group:
        assert rd.from_word(rd.reduced_word(w)) == w
        assert len(rd.reduced_word(w)) == rd.length(w)
        assert (w * w.inverse()).is_identity()
    for s in rd.simple_reflections:
        assert (s * s).is_identity()


def test_gl_lattice():
    rd = build_root_datum("A2", "gl")
    assert rd.dim == 3 and rd.rank == 2
    assert len(rd.orbit((1, 0, 0))) == 3
    with pytest.raises(IncompatibleLattice):
        build_root_datum("B2", "gl")


def test_bad_types():
    with pytest.raises(InvalidCartan):
        build_root_datum("Z9")
    with pytest.raises(InvalidCartan):
        build_root_datum("custom", "custom", {"simple_roots": [[2, -3], [-3, 2]], "simple_coroots": [[1, 0], [0, 1]]})


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_decompositions(t):
    rd = build_root_datum(t, "sc")
    for x in [(1, -2), (-3, 1), (0, 0), (2, 2)]:
        dom, (y, z) = dominance_tools(rd, x)
        assert dom == rd.is_dominant(x)
        assert rd.is_dominant(y) and rd.is_dominant(z)
        assert tuple(a - b for a, b in zip(y, z)) == x
        y2, z2 = rd.decompose_minimal(x)
        assert rd.is_dominant(y2) and rd.is_dominant(z2)
        assert tuple(a - b for a, b in zip(y2, z2)) == x
        assert rd.rho_pair(z2) <= rd.rho_pair(z)


def test_config_round_trip(tmp_path):
    rd = build_root_datum("B2", "ad")
    assert root_datum_from_config(rd.to_config()).cartan == rd.cartan
    p = tmp_path / "c.json"
    p.write_text('{"simple_roots": [[2, -1], [-1, 2]], "simple_coroots": [[1, 0], [0, 1]]}')
    assert len(root_datum_from_config(str(p)).weyl_group) == 6

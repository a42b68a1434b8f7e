from itertools import product

import pytest

from affhecke.extweyl import ExtAffElt, affine_simple, ext_length, from_word, reduced_word, translation
from affhecke.rootdata import build_root_datum

OMEGA = {("A1", "sc"): 1, ("A1", "ad"): 2, ("A2", "ad"): 3, ("B2", "ad"): 2, ("B2", "sc"): 1, ("G2", "sc"): 1}


@pytest.mark.parametrize("t,lat", sorted(OMEGA))
def test_length_zero_subgroup(t, lat):
    rd = build_root_datum(t, lat)
    zero = {ExtAffElt(x, w) for x in product(range(-2, 3), repeat=rd.dim) for w in rd.weyl_group
            if ext_length(rd, ExtAffElt(x, w)) == 0}
    assert len(zero) == OMEGA[(t, lat)]
    for a in zero:
        for b in zero:
            assert ext_length(rd, a * b) == 0


@pytest.mark.parametrize("t,lat", [("A1", "sc"), ("A2", "sc"), ("B2", "ad"), ("C2", "sc"), ("G2", "sc"), ("A2", "gl")])
def test_descents_and_reduced_words(t, lat):
    rd = build_root_datum(t, lat)
    simples = [affine_simple(rd, i) for i in range(rd.rank + 1)]
    assert all(ext_length(rd, s) == 1 for s in simples)
    for x in product(range(-2, 3), repeat=rd.dim):
        for w in rd.weyl_group:
            u = ExtAffElt(x, w)
            n = ext_length(rd, u)
            assert ext_length(rd, u.inverse()) == n
            for s in simples:
                assert abs(ext_length(rd, u * s) - n) == 1
                assert abs(ext_length(rd, s * u) - n) == 1
            rw = reduced_word(rd, u)
            assert len(rw.indices) == n
            assert from_word(rd, rw.indices, rw.omega) == u


def test_group_law():
    rd = build_root_datum("A2", "sc")
    s1 = rd.simple_reflections[0]
    a = ExtAffElt((1, 0), s1)
    b = ExtAffElt((0, 1), rd.identity)
    assert (a * b).x == tuple(p + q for p, q in zip((1, 0), s1.act((0, 1))))
    assert (a * a.inverse()).is_identity()
    assert translation(rd, (1, 1)) * translation(rd, (-1, -1)) == ExtAffElt((0, 0), rd.identity)


@pytest.mark.parametrize("t", ["A1", "A2", "B2", "G2"])
def test_dominant_translation_length(t):
    rd = build_root_datum(t, "sc")
    for x in product(range(0, 4), repeat=rd.dim):
        if rd.is_dominant(x):
            assert ext_length(rd, translation(rd, x)) == rd.rho_pair(x)

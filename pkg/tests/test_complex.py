import itertools
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from crossmod import catalog
from crossmod.complex import (Cochain, NotInSubmodule, betti, coboundary, connecting_hom, d_eval,
                              full_windowed_betti, hs_d2_apply, hs_d3_apply, hs_e2_page, les_ranks,
                              relative_slice, sort_sign, weight_slice)
from crossmod.lie import NonDiagonalGrading, sl2, sl3
from crossmod.modules import DensityModule, TrivialModule, VermaDual, density_ses, pbw_ses, verma_ses

G = sl2()


def test_sort_sign():
    assert sort_sign((2, 0, 1)) == ((0, 1, 2), 1)
    assert sort_sign((1, 0, 2)) == ((0, 1, 2), -1)
    assert sort_sign((1, 1)) == (None, 0)


def test_cochain_is_alternating():
    c = Cochain(G, TrivialModule(G), 2, values={(0, 1): {0: Q(3)}})
    assert c(1, 0) == {0: -3}
    assert c(0, 0) == {}
    with pytest.raises(ValueError):
        c(0, 1, 2)


def test_coboundary_convention_in_degree_one():
    # dc(x0, x1) = x0 c(x1) - x1 c(x0) - c([x0, x1])
    F0 = DensityModule(G, 0)
    c = Cochain(G, F0, 1, values={(1,): {0: Q(1)}})
    e, h, f = (G.index(s) for s in "ehf")
    assert d_eval(c, (e, f)) == {0: -1}


@st.composite
def random_cochain(draw, alg, mod, max_key=4):
    q = draw(st.integers(0, 2))
    vals = {}
    for t in itertools.combinations(alg.basis(), q):
        if draw(st.booleans()):
            m = draw(st.integers(0, max_key)) if not isinstance(mod, TrivialModule) else 0
            vals[t] = {m: Q(draw(st.integers(-3, 3)))}
    return Cochain(alg, mod, q, values=vals)


@settings(max_examples=60, deadline=None)
@given(st.data(), st.sampled_from([0, 1, 2]))
def test_d_squared_vanishes_on_random_cochains(data, lam):
    mod = DensityModule(G, lam, (0, 12))
    c = data.draw(random_cochain(G, mod))
    dc = coboundary(c)
    for t in itertools.combinations(G.basis(), c.degree + 2):
        assert d_eval(dc, t) == {}


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_d_squared_vanishes_on_sl3_trivial(data):
    g = sl3()
    c = data.draw(random_cochain(g, TrivialModule(g)))
    dc = coboundary(c)
    for t in itertools.combinations(g.basis(), c.degree + 2):
        assert d_eval(dc, t) == {}


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["C", "F0", "F1", "F2", "M", "N"]), st.integers(-6, 6))
def test_euler_characteristic_per_weight(name, w):
    mod = {"C": TrivialModule(G), "M": VermaDual(G, "M"), "N": VermaDual(G, "N")}.get(name) or \
        DensityModule(G, int(name[1]))
    s = weight_slice(G, mod, None, w)
    assert s.d_squared_zero()
    b = s.betti()
    assert sum((-1) ** q * d for q, d in enumerate(s.dims)) == sum((-1) ** q * d for q, d in enumerate(b))


@pytest.mark.parametrize("mod, expected", [
    (TrivialModule(G), [1, 0, 0, 1]),
    (DensityModule(G, 0), [1, 1, 0, 0]),
    (DensityModule(G, 1), [0, 1, 1, 0]),
    (DensityModule(G, 2), [0, 0, 0, 0]),
    (VermaDual(G, "M"), [1, 1, 0, 0]),
    (VermaDual(G, "N"), [0, 1, 1, 0]),
    (VermaDual(G, "L"), [1, 0, 0, 1]),
], ids=lambda x: getattr(x, "name", ""))
def test_weight_zero_betti_numbers(mod, expected):
    assert betti(G, mod).row() == expected


def test_weight_zero_slice_dimensions():
    # d^1 of (sl2, M(0)#) at weight 0 is a 2x2 matrix with one-dimensional kernel
    s = weight_slice(G, VermaDual(G, "M"), None, 0)
    assert s.dims == [1, 2, 2, 1]
    assert len(s.cocycle_basis(1)) == 1


def test_sl3_trivial_cohomology():
    assert betti(sl3(), TrivialModule(sl3())).row() == [1, 0, 0, 1, 0, 1, 0, 0, 1]


def test_windowed_complex_matches_slice():
    full, dd = full_windowed_betti(G, DensityModule(G, 1), 6)
    assert dd and full == [0, 1, 1, 0]


def test_connecting_map_of_omega1_is_killing_multiple():
    s = density_ses(G, (0, 12))
    om = catalog.named_generator("omega1", G, (0, 11))
    d = connecting_hom(s, om)
    k = catalog.killing_3cocycle(G)
    e, h, f = (G.index(x) for x in "ehf")
    assert d(e, h, f) == {0: 4}
    assert k.scalar(e, h, f) == -8


def test_connecting_map_rejects_non_cocycles():
    s = pbw_ses(G, 2)
    bad = Cochain(G, s.quot, 1, values={(0,): {(1,): Q(1)}})
    with pytest.raises(NotInSubmodule):
        connecting_hom(s, bad).materialize()


@pytest.mark.parametrize("make", [density_ses, verma_ses], ids=["density", "verma"])
def test_long_exact_sequence_ranks(make):
    r = les_ranks(make(G, (0, 12)))
    assert r["i*"] == [1, 0, 0, 0]
    assert r["p*"] == [0, 1, 0, 0]
    assert r["delta"] == [0, 0, 1, 0]


def test_relative_complex():
    h = ["h"]
    assert relative_slice(G, h, TrivialModule(G)).betti() == [1, 0, 1]
    rel = relative_slice(G, h, VermaDual(G, "M"))
    assert rel.dims == [1, 1, 1]
    assert rel.betti() == [1, 0, 0]
    assert rel.check_annihilated()
    with pytest.raises(NonDiagonalGrading):
        relative_slice(G, ["e"], TrivialModule(G))


def test_e2_page_dimensions():
    page = hs_e2_page(G, ["h"], VermaDual(G, "M"))
    assert {k: v for k, v in page.dims.items() if v} == {(0, 0): 1, (0, 1): 1}
    page = hs_e2_page(G, ["h"], TrivialModule(G))
    assert {k: v for k, v in page.dims.items() if v} == {(0, 0): 1, (0, 1): 1, (2, 0): 1, (2, 1): 1}


def test_differential_argument_checks():
    h = [G.index("h")]
    rep = hs_e2_page(G, h, TrivialModule(G)).reps[(0, 1)][0]
    e, hh, f = (G.index(x) for x in "ehf")
    assert hs_d2_apply(rep, (e, f), (0, 1), h) != {}
    with pytest.raises(ValueError):
        hs_d2_apply(rep, (e,), (0, 1), h)
    with pytest.raises(ValueError):
        hs_d3_apply(rep, (e, f), (0, 1), h)

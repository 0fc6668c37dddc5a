import itertools
from fractions import Fraction as Q

import pytest

from crossmod import catalog
from crossmod.complex import NotInSubmodule, connecting_hom, d_eval, push_forward
from crossmod.lie import sl2, sl2_into_w1, sl3, w1
from crossmod.modules import pbw_ses

G = sl2()


@pytest.mark.parametrize("name", sorted(catalog.GENERATORS))
def test_generators_are_closed(name):
    assert catalog.check_closed(catalog.get(name)).ok


@pytest.mark.parametrize("alg", [sl2, sl3], ids=["sl2", "sl3"])
def test_killing_3cocycle_closed(alg):
    assert catalog.check_closed(catalog.killing_3cocycle(alg())).ok


def test_w1_cocycles_closed():
    W = w1((-1, 6))
    assert catalog.check_closed(catalog.gelfand_fuks_alpha(W, (0, 24))).ok
    assert catalog.check_closed(catalog.theta0(W)).ok


def test_theta0_sample_values():
    W = w1((-1, 4))
    th = catalog.theta0(W)
    assert th.scalar(-1, 0, 1) == 2
    assert th.scalar(0, 1, 2) == 0


def test_restriction_to_sl2():
    assert catalog.check_restriction_to_omega1().ok
    v = catalog.killing_theta_values()
    assert v["ratios"] == {Q(-1, 2)}
    inc = sl2_into_w1((-1, 4))
    assert catalog.restriction_commutes(catalog.theta0(inc.target), inc).ok


def test_transgression_and_connecting_checks():
    trans, conn = catalog.check_gv_transgression(3)
    assert trans.ok and conn.ok
    assert trans.details["ratio_theta_over_dalpha"] == [(Q(-1),)]


def test_evaluate_by_labels():
    assert catalog.evaluate("killing_3cocycle", ["e", "f", "h"]) == {0: 8}
    assert catalog.evaluate("killing_3cocycle", ["f", "e", "h"]) == {0: -8}
    with pytest.raises(KeyError):
        catalog.get("no-such-cochain")


def test_ug_dual_alpha_unit_part_holds():
    unit, _ = catalog.ug_alpha_check(G, 2)
    assert unit.ok


def test_ug_dual_alpha_higher_terms_do_not_vanish():
    """d(ug_dual_alpha) has a length-one component coming from f h = h f + 2 f."""
    a = catalog.ug_dual_alpha(G, 2)
    e, h, f = (G.index(s) for s in "ehf")
    val = d_eval(a, (e, h, f))
    assert val[()] == catalog.killing_3cocycle(G).scalar(e, h, f)
    assert val[(h,)] == Q(-16, 3)
    assert val[(h, h)] == Q(-32, 3)


def test_pbw_zig_zag_stops_without_cocycle():
    s = pbw_ses(G, 2)
    ia = push_forward(catalog.ug_dual_alpha(G, 2), s.surj, s.quot)
    with pytest.raises(NotInSubmodule):
        connecting_hom(s, ia).materialize()


def test_verma_alpha_values():
    a = catalog.verma_alpha(G)
    assert catalog.check_closed(a).ok
    assert a.mod.name == "N(0)#"

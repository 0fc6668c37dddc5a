"""Acceptance criteria, one test each, exact arithmetic throughout.

Criteria 2 and 8 are implemented literally and fail on the mathematics; they
are marked xfail(strict=True) so a silent change in either direction is caught.
See notes/decisions.md for the analysis.
"""

import itertools
from fractions import Fraction as Q

import pytest

from crossmod import catalog, vec
from crossmod.complex import (connecting_hom, d_eval, full_windowed_betti, les_consistency, relative_slice,
                              weight_slice, betti)
from crossmod.config import RunConfig
from crossmod.crossed import (check_axioms, difference, exactness_certificate, extract_3cocycle,
                              principal_construction, principal_four_term)
from crossmod.lie import sl2, sl3, w1
from crossmod.modules import (DensityModule, TrivialModule, Trivialized, VermaDual, density_ses,
                              density_verma_isomorphism_check, verma_ses)
from crossmod import suite

WINDOW = 6


def crit(n, label):
    return pytest.mark.criterion(n, label)


@crit(1, "killing and theta(0) values on sl2")
def test_killing_and_theta0_values():
    v = catalog.killing_theta_values()
    assert v["killing(e,f,h)"] == 8
    assert v["theta(0)(e,f,h)"] == -4


@crit(2, "d(ug_dual_alpha) = unit pairing with killing, zero on lengths 1-2")
@pytest.mark.xfail(strict=True, raises=AssertionError, reason="d(ug_dual_alpha) is nonzero on length-1 and length-2 monomials; see ledger")
@pytest.mark.parametrize("alg", [sl2, sl3], ids=["sl2", "sl3"])
def test_ug_dual_alpha_coboundary(alg):
    unit, higher = catalog.ug_alpha_check(alg(), length=2)
    assert unit.ok, unit.witness
    assert higher.ok, higher.witness


@crit(3, "connecting(gelfand_fuks_alpha) = theta(0) on W1[-1,6]")
def test_connecting_alpha_is_theta0():
    g = w1((-1, 2 * WINDOW + 1))
    top = 3 * WINDOW + 4
    delta = connecting_hom(density_ses(g, (0, top)), catalog.gelfand_fuks_alpha(g, (0, top)))
    th = catalog.theta0(g)
    for t in itertools.combinations(range(-1, WINDOW + 1), 3):
        assert delta(*t) == ({0: th.scalar(*t)} if th.scalar(*t) else {}), t


@crit(4, "theta'(x) = d alpha as polynomials, overall sign -1 under the fixed convention")
def test_transgression_polynomial_identity():
    g = w1((-1, 2 * WINDOW + 1))
    top = 3 * WINDOW + 4
    alpha = catalog.gelfand_fuks_alpha(g, (0, top))
    theta = catalog.godbillon_vey_theta(g, (0, top))
    triv = Trivialized(alpha.mod)
    nonzero = 0
    for t in itertools.combinations(range(-1, WINDOW + 1), 3):
        dth = vec.poly_deriv(theta(*t))
        da = d_eval(alpha, t, triv)
        assert dth == vec.scale(-1, da), t
        nonzero += bool(dth)
    assert nonzero > 0


@crit(5, "principal construction on Verma duals: axioms and [gamma] = [connecting alpha]")
def test_principal_construction_verma():
    g = sl2()
    ses = verma_ses(g, (0, 12))
    a = catalog.verma_alpha(g, (0, 12))
    cm = principal_construction(ses, a)
    vs = check_axioms(cm)
    assert len(vs) == 5 and all(v.status == "pass" for v in vs), [v for v in vs if not v.ok]
    gamma = extract_3cocycle(cm, principal_four_term(cm))
    cert = exactness_certificate(difference(gamma, connecting_hom(ses, a)))
    assert cert.status == "pass"
    assert "primitive" in cert.details


@crit(6, "f_i -> phi_i intertwines e, h, f up to index 12")
def test_verma_quotient_isomorphism():
    vs = density_verma_isomorphism_check(12)
    assert vs and all(v.status == "pass" for v in vs), [v for v in vs if not v.ok]


@crit(7, "H(sl2, C) = (1,0,0,1), H0(sl2, F0) = 1, H3(sl2, F0) = 0")
def test_betti_baselines():
    g = sl2()
    assert betti(g, TrivialModule(g)).row() == [1, 0, 0, 1]
    f0 = betti(g, DensityModule(g, 0, (0, 12))).row()
    assert f0[0] == 1 and f0[3] == 0


@crit(8, "H(sl2, h; M(0)#) = (1,1,0,0)")
@pytest.mark.xfail(strict=True, raises=AssertionError, reason="relative complex of M(0)# has cohomology (1,0,0,0); see ledger")
def test_relative_cohomology_verma_dual():
    g = sl2()
    b = relative_slice(g, ["h"], VermaDual(g, "M", (0, 12))).betti()
    assert b + [0] * (4 - len(b)) == [1, 1, 0, 0]


@crit(9, "rank H3(L(0)#) -> H3(M(0)#) = 0")
def test_zero_map_in_degree_three():
    vs, ranks = les_consistency(verma_ses(sl2(), (0, 12)))
    assert all(v.ok for v in vs)
    assert ranks["i*"][3] == 0


@crit(10, "weight-0 slice = windowed complex, other weights acyclic, d^2 = 0, section independence")
def test_fuks_reduction_and_sections():
    g = sl2()
    for mod in [VermaDual(g, "M", (0, 12))] + [DensityModule(g, lam, (0, 12)) for lam in (0, 1, 2)]:
        full, dd = full_windowed_betti(g, mod, 8)
        assert dd
        assert weight_slice(g, mod, None, 0).betti() == full, mod.name
        for w in range(-8, 9):
            s = weight_slice(g, mod, None, w)
            assert s.d_squared_zero()
            if w:
                assert not any(s.betti()), (mod.name, w)
    vs = suite.section_independence(RunConfig())
    assert len(vs) == 2 and all(v.status == "pass" for v in vs)


@crit(11, "reconciliation report: verdicts per generator, every printed dimension paired")
def test_reconciliation_report():
    rep = suite.reconcile(RunConfig())
    assert not rep.failed
    names = [v.name for v in rep.verdicts]
    for gen in suite.PRINTED_GENERATORS:
        assert f"{gen} closedness" in names
        assert any(n.startswith(f"{gen} exactness") for n in names)
    paired = {c["item"] for c in rep.comparisons}
    for key, dims in suite.PRINTED_DENSITY_TABLE.items():
        for p in range(len(dims)):
            assert f"dim H{p}(sl2, {key})" in paired
    assert all(c["computed"] is not None for c in rep.comparisons)

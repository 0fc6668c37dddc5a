from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from crossmod import catalog
from crossmod.complex import connecting_hom
from crossmod.crossed import (AbelianExtension, check_axioms, check_elementary_equivalence, difference,
                              exactness_certificate, extract_3cocycle, inner_crossed_module,
                              principal_construction, principal_four_term, mu_kills_dbeta,
                              structural_checks, zero_action_module)
from crossmod.lie import sl2, sl3, verify_jacobi
from crossmod.modules import density_ses, f0_to_m_map, f1_to_n_map, verma_ses

G = sl2()


@pytest.fixture(scope="module")
def verma_cm():
    ses = verma_ses(G, (0, 12))
    a = catalog.verma_alpha(G, (0, 12))
    return ses, a, principal_construction(ses, a)


@pytest.fixture(scope="module")
def density_cm():
    ses = density_ses(G, (0, 12))
    om = catalog.named_generator("omega1", G, (0, 11))
    return principal_construction(ses, om)


def test_abelian_extension_is_a_lie_algebra():
    a = catalog.verma_alpha(G, (0, 6))
    ext = AbelianExtension(a.mod, a)
    assert verify_jacobi(ext, [("V", k) for k in range(1, 5)] + [("g", i) for i in G.basis()]).ok


def test_principal_construction_axioms(verma_cm, density_cm):
    for cm in (verma_cm[2], density_cm):
        vs = check_axioms(cm) + [mu_kills_dbeta(cm)] + structural_checks(cm)
        assert all(v.ok for v in vs), [v for v in vs if not v.ok]


def test_extracted_class_matches_connecting_map(verma_cm):
    ses, a, cm = verma_cm
    gamma = extract_3cocycle(cm, principal_four_term(cm))
    e, h, f = (G.index(s) for s in "ehf")
    assert gamma(e, h, f) == connecting_hom(ses, a)(e, h, f) == {0: 4}
    assert exactness_certificate(difference(gamma, connecting_hom(ses, a))).ok


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=12, max_size=12))
def test_section_change_changes_connecting_map_by_a_coboundary(shifts):
    ses = verma_ses(G, (0, 12))
    a = catalog.verma_alpha(G, (0, 12))
    alt = lambda i: {i: Q(1), 0: Q(shifts[i - 1])} if shifts[i - 1] else {i: Q(1)}
    d1 = connecting_hom(ses, a).materialize()
    d2 = connecting_hom(ses, a, section=alt).materialize()
    assert exactness_certificate(difference(d2, d1)).ok


def test_section_change_in_extraction(verma_cm):
    ses, a, cm = verma_cm
    alt = lambda i: {i: Q(1), 0: Q(1)} if i == 1 else {i: Q(1)}
    g1 = extract_3cocycle(cm, principal_four_term(cm))
    g2 = extract_3cocycle(cm, principal_four_term(cm, alt))
    assert exactness_certificate(difference(g1, g2)).ok


@pytest.mark.parametrize("alg", [sl2, sl3], ids=["sl2", "sl3"])
def test_inner_crossed_module(alg):
    assert all(v.ok for v in check_axioms(inner_crossed_module(alg())))


def test_zero_action_violates_peiffer_identities():
    vs = {v.name: v for v in check_axioms(zero_action_module(G))}
    failed = [n for n, v in vs.items() if not v.ok]
    assert len(failed) == 2


def _psi(n):
    if n[0] == "V":
        return {("V", k): c for k, c in f1_to_n_map(n[1]).items()}
    return {n: Q(1)}


def test_ladder_between_density_and_verma_constructions(verma_cm, density_cm):
    vs = check_elementary_equivalence(density_cm, verma_cm[2], f0_to_m_map, _psi, V_map=lambda k: {0: Q(1)})
    assert vs and all(v.ok for v in vs)


def test_ladder_with_wrong_sign_is_rejected(verma_cm, density_cm):
    neg = lambda n: {k: -c for k, c in _psi(n).items()}
    vs = check_elementary_equivalence(density_cm, verma_cm[2], f0_to_m_map, neg, V_map=lambda k: {0: Q(1)})
    assert not all(v.ok for v in vs)


def test_identity_is_an_equivalence(verma_cm):
    cm = verma_cm[2]
    one = lambda k: {k: Q(1)}
    assert all(v.ok for v in check_elementary_equivalence(cm, cm, one, one))

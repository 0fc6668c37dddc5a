from fractions import Fraction as Q
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from crossmod import vec
from crossmod.lie import sl2, sl3, w1
from crossmod.modules import (PBW, DensityModule, PBWDual, TrivialModule, VermaDual, VermaModule,
                              check_weight_bookkeeping, density_ses, density_verma_isomorphism_check, load_module,
                              module_by_name, pbw_ses, ses_validate, verify_module_axiom,
                              verify_pbw_dual_axiom, verma_ses)
from crossmod.report import WindowOverflow

G = sl2()
E, H, F = (G.index(s) for s in "ehf")


@pytest.mark.parametrize("mod", [
    DensityModule(G, 0), DensityModule(G, 1), DensityModule(G, 2), DensityModule(G, Q(1, 2)),
    VermaModule(G), VermaDual(G, "M"), VermaDual(G, "N"), VermaDual(G, "L"), TrivialModule(G),
], ids=lambda m: m.name)
def test_module_axiom_and_weights(mod):
    assert verify_module_axiom(mod).ok
    assert check_weight_bookkeeping(mod).ok


def test_density_action_formula():
    F1 = DensityModule(G, 1)
    # e = x^2 d/dx acting on x^n dx: x^2 n x^{n-1} + 2x x^n = (n+2) x^{n+1}
    assert F1.act(E, 3) == {4: 5}
    assert DensityModule(G, 0).act(F, 0) == {}


def test_density_module_over_w1():
    W = w1((-1, 4))
    assert verify_module_axiom(DensityModule(W, 0, (0, 12))).ok
    assert verify_module_axiom(DensityModule(W, 1, (0, 12))).ok


def test_verma_dual_action():
    M = VermaDual(G, "M")
    assert M.act(E, 1) == {2: 2}
    assert M.act(F, 1) == {0: -1}
    assert M.act(F, 3) == {2: -2}
    assert M.act(H, 3) == {3: 6}
    assert M.act(E, 0) == M.act(F, 0) == {}
    assert VermaDual(G, "N").act(F, 1) == {}


def test_window_overflow_is_raised_not_truncated():
    M = VermaDual(G, "M", (0, 4))
    with pytest.raises(WindowOverflow):
        M.act(E, 4)
    with pytest.raises(WindowOverflow):
        M.basis_of_weight(20)
    assert VermaDual(G, "L", (0, 4)).basis_of_weight(20) == []


def _phi_norm(i):
    return Q(1) if i == 0 else Q(factorial(i - 1))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([E, H, F]), st.integers(0, 10), st.integers(0, 10))
def test_verma_dual_pairs_with_verma(x, i, j):
    """phi_i = (i-1)! (f^i)^*: (x.phi)(m) + phi(x.m) = 0."""
    D, M = VermaDual(G, "M", (0, 12)), VermaModule(G, (0, 12))
    lhs = sum(a * (_phi_norm(j) if k == j else 0) for k, a in D.act(x, i).items())
    rhs = sum(a * (_phi_norm(i) if k == i else 0) for k, a in M.act(x, j).items())
    assert lhs + rhs == 0


def test_pbw_commutator():
    p = PBW(G)
    # order e < h < f: f h = h f + 2 f
    assert p.normal_form([F, H]) == {(H, F): 1, (F,): 2}
    assert p.normal_form([F, E]) == {(E, F): 1, (H,): -1}


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from([0, 1, 2]), min_size=0, max_size=4), st.permutations([0, 1, 2]))
def test_pbw_normal_form_is_order_invariant(word, order):
    """Rewriting the normal form under another order in the original order gives the same element."""
    a = PBW(G)
    b = PBW(G, order)
    back = vec.linear_map(lambda m: a.normal_form(list(m)), b.normal_form(word))
    assert back == a.normal_form(word)


@pytest.mark.parametrize("alg", [sl2, sl3], ids=["sl2", "sl3"])
def test_pbw_dual_axiom(alg):
    g = alg()
    assert verify_pbw_dual_axiom(PBWDual(g, 2)).ok
    assert all(v.ok for v in ses_validate(pbw_ses(g, 2)))


@pytest.mark.parametrize("make", [density_ses, verma_ses], ids=["density", "verma"])
def test_short_exact_sequences(make):
    s = make(G, (0, 12))
    vs = ses_validate(s)
    assert vs and all(v.ok for v in vs), [v for v in vs if not v.ok]


def test_density_section_integrates_term_by_term():
    s = density_ses(G, (0, 12))
    assert s.lift({3: Q(1)}) == {4: Q(1, 4)}
    assert s.pull_back({0: Q(5)}) == {0: 5}
    assert s.pull_back({1: Q(1)}) is None


def test_quotient_isomorphism_checks():
    assert all(v.ok for v in density_verma_isomorphism_check(12))


def test_custom_module_loader():
    spec = {"kind": "custom", "labels": ["v"], "action": [], "weights": [0]}
    assert load_module(spec, G).basis() == range(1)
    bad = {"kind": "custom", "labels": ["a", "b"], "action": [["e", "a", "b", "1"], ["f", "b", "a", "1"]]}
    with pytest.raises(ValueError):
        load_module(bad, G)
    with pytest.raises(ValueError):
        load_module({"kind": "nope"}, G)


def test_module_short_names():
    assert module_by_name("F1", G).lam == 1
    assert module_by_name("N", G).name == "N(0)#"
    with pytest.raises(ValueError):
        module_by_name("Z", G)

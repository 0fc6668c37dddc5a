"""Named cochains with exact closed-form evaluation.

Vector-field cochains are determinants of derivative rows of the
coefficient polynomials f(x), g(x), ... of the arguments f d/dx; they work
on any algebra with a polynomial vector-field realization (W1, sl2).
"""

import itertools
from fractions import Fraction

from . import vec
from .complex import (Cochain, check_cocycle, coboundary, connecting_hom, d_eval,
                       push_forward, scalar_cochain)
from .lie import SubalgebraInclusion, sl2, sl2_into_w1, w1
from .modules import (DensityModule, PBWDual, TrivialModule, Trivialized, density_ses,
                      f1_to_n_map, VermaDual)
from .report import WindowOverflow, verdict

Q = Fraction


class NamedCochain(Cochain):
    def __init__(self, alg, mod, degree, rule, name, description=""):
        super().__init__(alg, mod, degree, rule=rule, name=name)
        self.description = description


def _field(alg, i):
    if hasattr(alg, "vector_field"):
        return alg.vector_field(i)
    return alg.vector_fields[i]


def wronskian(alg, orders, t):
    """det[[f_j^(o_i)]] for arguments t (columns) and derivative orders (rows)."""
    cols = [_field(alg, i) for i in t]
    m = [[vec.poly_deriv(f, o) for f in cols] for o in orders]
    return vec.poly_det(m)


def density_cochain(alg, orders, lam, name, window=None, description=""):
    """Cochain into F_lam given by a derivative determinant."""
    window = window or _default_density_window(alg, len(orders))
    mod = DensityModule(alg, lam, window)
    return NamedCochain(alg, mod, len(orders), lambda t: wronskian(alg, orders, t), name, description)


def _default_density_window(alg, q):
    hi = max(alg.basis()) + 1
    return (0, max(12, q * hi + 2))


def gelfand_fuks_alpha(alg=None, window=None):
    alg = alg or w1()
    return density_cochain(alg, (1, 2), 1, "gelfand_fuks_alpha", window, "det[[f',g'],[f'',g'']] (dx)^1")


def godbillon_vey_theta(alg=None, window=None):
    """theta(x) as a polynomial-valued 3-cochain (values in F0)."""
    alg = alg or w1()
    return density_cochain(alg, (0, 1, 2), 0, "godbillon_vey_theta", window, "det of f, f', f'' rows")


def theta0(alg=None):
    """theta(x) at x = 0: the constant coefficient, a scalar 3-cochain."""
    alg = alg or w1()
    c = scalar_cochain(alg, 3, lambda t: wronskian(alg, (0, 1, 2), t).get(0, 0), name="theta0")
    c.description = "constant coefficient of theta(x)"
    return c


def killing_3cocycle(alg=None):
    alg = alg or sl2()
    c = scalar_cochain(alg, 3, lambda t: alg.killing_form(alg.bracket_basis(t[0], t[1]), {t[2]: Q(1)}),
                       name="killing_3cocycle")
    c.description = "kappa([x, y], z)"
    return c


UG_ALPHA_SCALE = Q(-1, 3)


def ug_dual_alpha(alg=None, length=2, order=None, scale=UG_ALPHA_SCALE):
    """alpha(x, y) = scale * (u -> kappa([x, y], u)) on length-1 monomials, 0 elsewhere.

    The Killing form replaces an orthonormal basis (no square roots needed).
    scale = -1/3 makes d(alpha) pair with the unit monomial as kappa([x1,x2],x3)
    under the coboundary sign convention of crossmod.complex.
    """
    alg = alg or sl2()
    mod = PBWDual(alg, length, order)

    def rule(t):
        br = alg.bracket_basis(t[0], t[1])
        out = {}
        for u in alg.basis():
            k = alg.killing_form(br, {u: Q(1)})
            if k:
                out[(u,)] = scale * k
        return out

    return NamedCochain(alg, mod, 2, rule, "ug_dual_alpha", "kappa([x,y], .) on length-1 monomials")


# generators of the printed density table on sl2 (also meaningful on W1)

GENERATORS = {
    # name: (orders, lambda)
    "theta1": ((0,), 0),
    "theta2": ((1,), 0),
    "eta": ((0, 1), 0),
    "zeta": ((2,), 1),
    "omega1": ((1, 2), 1),
    "omega2": ((0, 2), 1),
    "theta3": ((0, 1, 2), 1),
}


def named_generator(name, alg=None, window=None):
    orders, lam = GENERATORS[name]
    alg = alg or sl2()
    return density_cochain(alg, orders, lam, name, window or (0, 12))


def verma_alpha(alg=None, window=(0, 12)):
    """omega1 on sl2 transported to N(0)# along x^n dx -> phi_(n+1)."""
    alg = alg or sl2()
    om = named_generator("omega1", alg, (0, window[1] - 1))
    return push_forward(om, f1_to_n_map, VermaDual(alg, "N", window), name="verma_alpha")


CATALOG = {
    "gelfand_fuks_alpha": lambda alg=None, **kw: gelfand_fuks_alpha(alg, kw.get("window")),
    "godbillon_vey_theta": lambda alg=None, **kw: godbillon_vey_theta(alg, kw.get("window")),
    "theta0": lambda alg=None, **kw: theta0(alg),
    "killing_3cocycle": lambda alg=None, **kw: killing_3cocycle(alg),
    "ug_dual_alpha": lambda alg=None, **kw: ug_dual_alpha(alg, kw.get("length", 2), kw.get("order")),
    "verma_alpha": lambda alg=None, **kw: verma_alpha(alg),
    **{n: (lambda n: lambda alg=None, **kw: named_generator(n, alg, kw.get("window")))(n)
       for n in GENERATORS},
}

DEFAULT_ALGEBRA = {
    "gelfand_fuks_alpha": "W1", "godbillon_vey_theta": "W1", "theta0": "W1",
    "killing_3cocycle": "sl2", "ug_dual_alpha": "sl2", "verma_alpha": "sl2",
    **{n: "sl2" for n in GENERATORS},
}


def get(name, alg=None, **kw):
    if name not in CATALOG:
        raise KeyError(f"unknown cochain {name!r}; known: {', '.join(sorted(CATALOG))}")
    return CATALOG[name](alg, **kw)


def evaluate(name, args, alg=None, **kw):
    """Exact value of a named cochain on basis labels or indices."""
    c = get(name, alg, **kw)
    idx = tuple(c.alg.index(a) for a in args)
    if hasattr(c.alg, "contains"):
        for i in idx:
            if not c.alg.contains(i):
                raise WindowOverflow(c.alg.name, i, c.alg.window)
    return c(*idx)


# identity checks


def check_closed(c, tuples=None):
    return check_cocycle(c, tuples)


def ug_alpha_check(alg=None, length=2, order=None, scale=UG_ALPHA_SCALE):
    """d(ug_dual_alpha) on every basis triple: unit monomial vs kappa([x1,x2],x3),
    and vanishing on all stored monomials of length 1..length."""
    alg = alg or sl2()
    a = ug_dual_alpha(alg, length, order, scale)
    unit_bad, higher_bad = [], []
    ntriples = 0
    for t in itertools.combinations(alg.basis(), 3):
        ntriples += 1
        v = d_eval(a, t)
        k = alg.killing_form(alg.bracket_basis(t[0], t[1]), {t[2]: Q(1)})
        if v.get((), Q(0)) != k:
            unit_bad.append({"args": [alg.label(i) for i in t], "value": v.get((), Q(0)), "kappa": k})
        rest = {a.mod.label(m): c for m, c in v.items() if m != ()}
        if rest:
            higher_bad.append({"args": [alg.label(i) for i in t], "values": rest})
    nmono = len(a.mod.basis())
    return [
        verdict(f"d(ug_dual_alpha) on unit = kappa([,],) [{alg.name}]", not unit_bad,
                unit_bad[0] if unit_bad else None, triples=ntriples, monomials=nmono),
        verdict(f"d(ug_dual_alpha) = 0 on lengths 1..{length} [{alg.name}]", not higher_bad,
                higher_bad[0] if higher_bad else None, triples=ntriples, failing_triples=len(higher_bad)),
    ]


def check_gv_transgression(hi=6):
    """theta'(x) + d_triv(alpha) = 0 as polynomials, and connecting(alpha) = theta(0),
    on every W1 triple with indices in [-1, hi]."""
    alg = w1((-1, 2 * hi + 1))
    alpha = gelfand_fuks_alpha(alg, (0, 3 * hi + 4))
    theta = godbillon_vey_theta(alg, (0, 3 * hi + 4))
    th0 = theta0(alg)
    triv = Trivialized(alpha.mod)
    ses = density_ses(alg, (0, 3 * hi + 4))
    delta = connecting_hom(ses, alpha)
    triples = list(itertools.combinations(range(-1, hi + 1), 3))
    trans_bad, lem1_bad = None, None
    ratios = set()
    for t in triples:
        dth = vec.poly_deriv(theta(*t))
        da = d_eval(alpha, t, triv)
        if vec.add(dth, da):
            trans_bad = trans_bad or {"args": t, "theta'": dth, "d alpha": da}
        if dth:
            ratios.add(tuple(sorted({dth[k] / da[k] for k in dth})))
        lhs = delta(*t).get(0, Q(0))
        rhs = th0.scalar(*t)
        if lhs != rhs:
            lem1_bad = lem1_bad or {"args": t, "delta alpha": lhs, "theta(0)": rhs}
    return [
        verdict("theta'(x) = -d_triv alpha (polynomial identity)", trans_bad is None, trans_bad,
                triples=len(triples), window=[-1, hi], ratio_theta_over_dalpha=sorted(ratios)),
        verdict("connecting(alpha) = theta(0)", lem1_bad is None, lem1_bad, triples=len(triples), window=[-1, hi]),
    ]


def restrict(c, inclusion, mod=None, name=None):
    """Pullback of c along inclusion: (i*c)(y1..yq) = c(i y1, .., i yq)."""
    src = inclusion.source
    if mod is None:
        m = c.mod
        if isinstance(m, TrivialModule):
            mod = TrivialModule(src)
        elif isinstance(m, DensityModule):
            mod = DensityModule(src, m.lam, m.window)
        else:
            raise ValueError("pass the coefficient module over the source algebra")
    images = [inclusion.images[i] for i in src.basis()]

    def rule(t):
        return c.eval_vecs(*(images[i] for i in t))

    return Cochain(src, mod, c.degree, rule=rule, name=name or f"i*({c.name})")


def restriction_commutes(c, inclusion, mod=None):
    """i*(dc) == d(i*c) on all source tuples of degree q+1."""
    rc = restrict(c, inclusion, mod)
    drc = coboundary(rc)
    dc = coboundary(c)
    rdc = restrict(dc, inclusion, rc.mod)
    for t in itertools.combinations(inclusion.source.basis(), c.degree + 1):
        if drc.on_sorted(t) != rdc.on_sorted(t):
            return verdict(f"restriction commutes with d ({c.name})", False, {"args": t})
    return verdict(f"restriction commutes with d ({c.name})", True)


def killing_theta_values():
    g = sl2()
    e, h, f = (g.index(s) for s in "ehf")
    k = killing_3cocycle(g).scalar(e, f, h)
    inc = sl2_into_w1((-1, 2))
    th = restrict(theta0(inc.target), inc)
    t = th.scalar(e, f, h)
    ratios = set()
    for tri in itertools.combinations(g.basis(), 3):
        a, b = th.scalar(*tri), killing_3cocycle(g).scalar(*tri)
        if b:
            ratios.add(a / b)
        elif a:
            ratios.add(None)
    return {"killing(e,f,h)": k, "theta(0)(e,f,h)": t, "ratios": ratios}


def check_killing_theta():
    v = killing_theta_values()
    return [
        verdict("killing_3cocycle(e,f,h) = 8", v["killing(e,f,h)"] == 8, None, value=v["killing(e,f,h)"]),
        verdict("theta(0)(e,f,h) = -4", v["theta(0)(e,f,h)"] == -4, None, value=v["theta(0)(e,f,h)"]),
        verdict("theta(0) = -1/2 killing on sl2", v["ratios"] == {Q(-1, 2)}, None,
                ratios=sorted(v["ratios"], key=repr)),
    ]


def check_restriction_to_omega1(window=(-1, 4)):
    """restrict(gelfand_fuks_alpha, sl2 -> W1) equals omega1 on all sl2 pairs."""
    inc = sl2_into_w1(window)
    ra = restrict(gelfand_fuks_alpha(inc.target), inc, DensityModule(inc.source, 1, (0, 12)))
    om = named_generator("omega1")
    bad = [t for t in itertools.combinations(inc.source.basis(), 2) if ra.on_sorted(t) != om.on_sorted(t)]
    return verdict("i*(gelfand_fuks_alpha) = omega1", not bad, bad[:1] or None)

"""Crossed modules of Lie algebras, the principal construction and 3-cocycle extraction.

Keys of an abelian extension V x_alpha g are ("V", m) and ("g", i).
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import vec
from .complex import Cochain, check_cocycle, d_eval
from .lie import FiniteLieAlgebra, LieAlgebra
from .linalg import SparseMatrix, in_image
from .report import WindowOverflow, verdict

Q = Fraction


class AbelianLieAlgebra(LieAlgebra):
    """A module viewed as an abelian Lie algebra on its basis keys."""

    def __init__(self, mod, name=None):
        self.mod = mod
        self.name = name or mod.name
        self.labels = None

    def basis(self):
        return list(self.mod.basis())

    def label(self, m):
        return self.mod.label(m)

    def bracket_basis(self, a, b):
        return {}


class AbelianExtension(LieAlgebra):
    """V x_alpha g with [(w,x),(v,y)] = (x.v - y.w + alpha(x,y), [x,y])."""

    def __init__(self, mod, alpha, name=None):
        self.mod = mod
        self.base = mod.algebra
        self.alpha = alpha
        self.name = name or f"{mod.name} x_alpha {self.base.name}"
        self.labels = None

    def basis(self):
        return [("V", m) for m in self.mod.basis()] + [("g", i) for i in self.base.basis()]

    def label(self, k):
        return self.mod.label(k[1]) if k[0] == "V" else self.base.label(k[1])

    def index(self, key):
        return key

    def bracket_basis(self, a, b):
        (ta, ka), (tb, kb) = a, b
        if ta == "V" and tb == "V":
            return {}
        if ta == "g" and tb == "V":
            return {("V", m): c for m, c in self.mod.act(ka, kb).items()}
        if ta == "V" and tb == "g":
            return {("V", m): -c for m, c in self.mod.act(kb, ka).items()}
        out = {("V", m): c for m, c in (self.alpha(ka, kb) if self.alpha is not None else {}).items()}
        out.update({("g", k): c for k, c in self.base.bracket_basis(ka, kb).items()})
        return out


@dataclass
class CrossedModule:
    """mu: m -> n with an action eta of n on m.

    mu(key) and eta(n_key, m_key) return vectors.  The optional ladder data
    records V = ker mu (kernel_inj: V key -> m vector) and g = coker mu
    (coker_proj: n key -> g vector).
    """

    m_alg: object
    n_alg: object
    mu: object
    eta: object
    name: str = "crossed module"
    m_window: list = None
    n_window: list = None
    V_mod: object = None
    g_alg: object = None
    kernel_inj: object = None
    coker_proj: object = None
    extras: dict = field(default_factory=dict)

    def m_basis(self):
        return list(self.m_alg.basis() if self.m_window is None else self.m_window)

    def n_basis(self):
        return list(self.n_alg.basis() if self.n_window is None else self.n_window)

    def mu_vec(self, v):
        return vec.linear_map(self.mu, v)

    def eta_vec(self, n, m):
        return vec.bilinear_map(self.eta, n, m)


def _run(check):
    try:
        return check()
    except WindowOverflow:
        return None


def check_axioms(cm):
    """Homomorphism, action, derivation, (a) and (b) on the declared windows.

    Each verdict records how many tuples were skipped because an
    intermediate result left a window.
    """
    M, N = cm.m_alg, cm.n_alg
    mb, nb = cm.m_basis(), cm.n_basis()
    one = lambda k: {k: Q(1)}
    out = []

    def sweep(name, tuples, f):
        skipped = 0
        for t in tuples:
            res = _run(lambda: f(*t))
            if res is None:
                skipped += 1
                continue
            lhs, rhs = res
            if lhs != rhs:
                return verdict(name, False, {"args": [str(x) for x in t], "lhs": lhs, "rhs": rhs}, skipped=skipped)
        return verdict(name, True, None, skipped=skipped)

    out.append(sweep("mu is a Lie homomorphism", itertools.combinations(mb, 2),
                     lambda a, b: (cm.mu_vec(M.bracket_basis(a, b)), N.bracket(cm.mu(a), cm.mu(b)))))
    out.append(sweep("eta is an action", ((x, y, m) for x, y in itertools.combinations(nb, 2) for m in mb),
                     lambda x, y, m: (cm.eta_vec(N.bracket_basis(x, y), one(m)),
                                      vec.sub(cm.eta_vec(one(x), cm.eta(y, m)), cm.eta_vec(one(y), cm.eta(x, m))))))
    out.append(sweep("eta acts by derivations", ((x, a, b) for x in nb for a, b in itertools.combinations(mb, 2)),
                     lambda x, a, b: (cm.eta_vec(one(x), M.bracket_basis(a, b)),
                                      vec.add(M.bracket(cm.eta(x, a), one(b)), M.bracket(one(a), cm.eta(x, b))))))
    out.append(sweep("axiom (a): mu(eta(n) m) = [n, mu(m)]", itertools.product(nb, mb),
                     lambda x, m: (cm.mu_vec(cm.eta(x, m)), N.bracket(one(x), cm.mu(m)))))
    out.append(sweep("axiom (b): eta(mu(m)) m' = [m, m']", itertools.product(mb, mb),
                     lambda a, b: (cm.eta_vec(cm.mu(a), one(b)), M.bracket_basis(a, b))))
    return out


def principal_construction(ses, alpha, tuples=None, name=None, m_window=None, n_window=None):
    """Splice ses (V1 -> V2 -> V3 over g) with the abelian extension V3 x_alpha g.

    mu(v) = (p(v), 0) and eta((w, x)) v = x . v.  alpha must be closed on
    the given 3-tuples (all tuples for finite algebras).
    """
    g = ses.mid.algebra
    if alpha is not None:
        rep = check_cocycle(alpha, tuples)
        if not rep.ok:
            raise ValueError(f"alpha is not closed: {rep.witness}")
    m_alg = AbelianLieAlgebra(ses.mid)
    n_alg = AbelianExtension(ses.quot, alpha)

    def mu(v):
        return {("V", w): c for w, c in ses.surj(v).items()}

    def eta(n, v):
        if n[0] == "V":
            return {}
        return ses.mid.act(n[1], v)

    cm = CrossedModule(
        m_alg, n_alg, mu, eta, name=name or f"{ses.name} with {getattr(alpha, 'name', 'alpha')}",
        m_window=m_window, n_window=n_window, V_mod=ses.sub, g_alg=g,
        kernel_inj=lambda k: ses.inj(k),
        coker_proj=lambda n: {n[1]: Q(1)} if n[0] == "g" else {},
        extras={"ses": ses, "alpha": alpha},
    )
    return cm


def mu_kills_dbeta(cm):
    """mu(eta(w,x) v) = (x.v, 0) = [(w,x), (p v, 0)] on basis pairs."""
    ses = cm.extras["ses"]
    N = cm.n_alg
    skipped = 0
    for n in cm.n_basis():
        for v in cm.m_basis():
            try:
                lhs = cm.mu_vec(cm.eta(n, v))
                mid = {("V", w): c for w, c in (ses.quot.act_vec({n[1]: Q(1)}, ses.surj(v)) if n[0] == "g" else {}).items()}
                rhs = N.bracket({n: Q(1)}, cm.mu(v))
            except WindowOverflow:
                skipped += 1
                continue
            if not (lhs == mid == rhs):
                return verdict("mu(eta(w,x).v) = (x.v,0) = [(w,x),(v,0)]", False, {"n": n, "v": v})
    return verdict("mu(eta(w,x).v) = (x.v,0) = [(w,x),(v,0)]", True, None, skipped=skipped)


def structural_checks(cm):
    """im mu is an ideal of n; ker mu is central in m (on windows)."""
    ses = cm.extras.get("ses")
    out = []
    N = cm.n_alg
    bad = None
    for n in cm.n_basis():
        for v in cm.m_basis():
            try:
                br = N.bracket({n: Q(1)}, cm.mu(v))
            except WindowOverflow:
                continue
            if any(k[0] != "V" for k in br):
                bad = (n, v)
    out.append(verdict("im mu is an ideal", bad is None, bad))
    bad = None
    if ses is not None:
        for k in ses.sub.basis():
            iv = ses.inj(k)
            if cm.mu_vec(iv):
                bad = k
            for v in cm.m_basis():
                if cm.m_alg.bracket(iv, {v: Q(1)}):
                    bad = (k, v)
    out.append(verdict("ker mu is central", bad is None, bad))
    return out


@dataclass
class FourTermData:
    """Sections for 0 -> V -> m -> n -> g -> 0.

    rho: g key -> n vector with pi(rho(x)) = x; sigma: n vector in im mu -> m
    vector with mu(sigma(y)) = y; tau: m vector (in ker mu) -> V vector.
    """

    g_alg: object
    V_mod: object
    pi: object
    rho: object
    sigma: object
    tau: object


def principal_four_term(cm, section=None):
    """Default sections for a principal construction (basis projections)."""
    ses = cm.extras["ses"]
    section = section or ses.section

    def sigma(y):
        v = {k[1]: c for k, c in y.items() if k[0] == "V"}
        if any(k[0] != "V" for k in y):
            raise ValueError("sigma called off im mu")
        return vec.linear_map(section, v)

    def tau(v):
        pre = ses.pull_back(v)
        if pre is None:
            raise ValueError(f"{v} is not in ker mu")
        return pre

    return FourTermData(cm.g_alg, ses.sub, cm.coker_proj, lambda x: {("g", x): Q(1)}, sigma, tau)


class InconsistentData(ValueError):
    pass


def extract_3cocycle(cm, d, tuples=None, check=True):
    """gamma = tau o d^m beta, beta = sigma o alpha_rho, alpha_rho = [rho x, rho y] - rho[x, y].

    d^m uses the (generally non-action) rho-twisted eta.  Returns a lazy
    3-cochain on g with values in V; mu(d^m beta) != 0 raises
    InconsistentData.  With check, d(gamma) = 0 is asserted on tuples.
    """
    g, N = d.g_alg, cm.n_alg

    def alpha_rho(x, y):
        out = N.bracket(d.rho(x), d.rho(y))
        vec.axpy(out, -1, vec.linear_map(d.rho, g.bracket_basis(x, y)))
        return out

    def beta(x, y):
        return d.sigma(alpha_rho(x, y))

    def beta_vec(xv, y):
        out = {}
        for k, c in xv.items():
            vec.axpy(out, c, beta(k, y))
        return out

    def rule(t):
        x = t
        out = {}
        for i in range(3):
            rest = x[:i] + x[i + 1:]
            vec.axpy(out, (-1) ** i, cm.eta_vec(d.rho(x[i]), beta(*rest)))
        for i, j in itertools.combinations(range(3), 2):
            k = 3 - i - j
            vec.axpy(out, (-1) ** (i + j), beta_vec(g.bracket_basis(x[i], x[j]), x[k]))
        if cm.mu_vec(out):
            raise InconsistentData(f"mu(d beta) = {cm.mu_vec(out)} at {t}")
        return d.tau(out)

    gamma = Cochain(g, d.V_mod, 3, rule=rule, name="gamma")
    if check:
        rep = check_cocycle(gamma, tuples)
        if not rep.ok:
            raise InconsistentData(f"gamma is not closed: {rep.witness}")
    return gamma


def full_coboundary_matrix(alg, mod, q):
    """Matrix of d: C^q -> C^(q+1) over all tuples and all module basis keys."""
    src = [(t, m) for t in itertools.combinations(alg.basis(), q) for m in mod.basis()]
    dst = [(t, m) for t in itertools.combinations(alg.basis(), q + 1) for m in mod.basis()]
    didx = {b: r for r, b in enumerate(dst)}
    cols = []
    for t, m in src:
        c = Cochain(alg, mod, q, values={t: {m: Q(1)}})
        col = {}
        for u in itertools.combinations(alg.basis(), q + 1):
            for m2, a in d_eval(c, u).items():
                col[didx[(u, m2)]] = a
        cols.append(col)
    return SparseMatrix.from_columns(len(dst), cols), src, dst


def exactness_certificate(c, name="difference"):
    """Primitive b with db = c on a finite algebra and finite module, or None."""
    mat, src, dst = full_coboundary_matrix(c.alg, c.mod, c.degree - 1)
    target = [c(*t).get(m, Q(0)) for t, m in dst]
    x = in_image(mat, target)
    if x is None:
        return verdict(f"{name} is exact", False, {"nonzero values": {str(k): v for k, v in zip(dst, target) if v}})
    prim = {f"{t}:{m}": a for (t, m), a in zip(src, x) if a}
    return verdict(f"{name} is exact", True, None, primitive=prim)


def difference(c1, c2, name=None):
    return Cochain(c1.alg, c1.mod, c1.degree,
                   rule=lambda t: vec.sub(c1.on_sorted(t), c2.on_sorted(t)), name=name or f"{c1.name}-{c2.name}")


def inner_crossed_module(alg):
    """mu = id, eta = ad."""
    zero = FiniteLieAlgebra("0", (), {})
    return CrossedModule(alg, alg, lambda k: {k: Q(1)}, lambda n, m: alg.bracket_basis(n, m),
                         name=f"inner {alg.name}", g_alg=zero, V_mod=None,
                         kernel_inj=lambda k: {}, coker_proj=lambda n: {})


def zero_action_module(alg):
    """mu = id with the zero action: violates (b) when alg is nonabelian."""
    return CrossedModule(alg, alg, lambda k: {k: Q(1)}, lambda n, m: {}, name=f"zero action on {alg.name}")


def check_elementary_equivalence(cm, cm2, phi, psi, V_map=None, g_map=None):
    """phi: m -> m', psi: n -> n' (basis key -> vector) forming a morphism of
    crossed modules that is the identity on V and g.

    V_map, g_map identify V, g of cm with those of cm2 (default: identity on keys).
    """
    one = lambda k: {k: Q(1)}
    V_map = V_map or one
    g_map = g_map or one
    phi_v = lambda v: vec.linear_map(phi, v)
    psi_v = lambda v: vec.linear_map(psi, v)
    out = []

    def sweep(name, tuples, f):
        skipped = 0
        for t in tuples:
            try:
                lhs, rhs = f(*t)
            except WindowOverflow:
                skipped += 1
                continue
            if lhs != rhs:
                return verdict(name, False, {"args": [str(x) for x in t], "lhs": lhs, "rhs": rhs}, skipped=skipped)
        return verdict(name, True, None, skipped=skipped)

    mb, nb = cm.m_basis(), cm.n_basis()
    out.append(sweep("phi is a Lie homomorphism", itertools.combinations(mb, 2),
                     lambda a, b: (phi_v(cm.m_alg.bracket_basis(a, b)), cm2.m_alg.bracket(phi(a), phi(b)))))
    out.append(sweep("psi is a Lie homomorphism", itertools.combinations(nb, 2),
                     lambda a, b: (psi_v(cm.n_alg.bracket_basis(a, b)), cm2.n_alg.bracket(psi(a), psi(b)))))
    out.append(sweep("phi(eta(n) m) = eta'(psi n) phi(m)", itertools.product(nb, mb),
                     lambda n, m: (phi_v(cm.eta(n, m)), cm2.eta_vec(psi(n), phi(m)))))
    out.append(sweep("mu' o phi = psi o mu", ((m,) for m in mb),
                     lambda m: (cm2.mu_vec(phi(m)), psi_v(cm.mu(m)))))
    if cm.V_mod is not None and cm.kernel_inj is not None:
        out.append(sweep("identity on V", ((k,) for k in cm.V_mod.basis()),
                         lambda k: (phi_v(cm.kernel_inj(k)), vec.linear_map(cm2.kernel_inj, V_map(k)))))
    if cm.coker_proj is not None:
        out.append(sweep("identity on g", ((n,) for n in nb),
                         lambda n: (vec.linear_map(cm2.coker_proj, psi(n)), vec.linear_map(g_map, cm.coker_proj(n)))))
    return out

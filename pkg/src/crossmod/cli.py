"""Command-line driver.

    crossmod verify <name|all>
    crossmod betti --algebra sl2 --module F0
    crossmod connecting --ses density --cochain omega1
    crossmod crossed build|check|equiv --ses verma
    crossmod catalog [--name theta0 --args e-1,e0,e1]
    crossmod reconcile | e2 | relative
"""

import argparse
import itertools
import sys
from fractions import Fraction

from . import catalog, suite
from .complex import betti, connecting_hom, hs_e2_page, relative_slice
from .config import RunConfig
from .crossed import (check_axioms, check_elementary_equivalence, extract_3cocycle, principal_construction,
                      principal_four_term, mu_kills_dbeta, structural_checks)
from .lie import get_algebra, sl2
from .modules import density_ses, f0_to_m_map, f1_to_n_map, module_by_name, verma_ses
from .report import WindowOverflow, verdict
from .reports import Report

Q = Fraction


def _pair(s):
    lo, hi = (int(x) for x in s.split(","))
    return lo, hi


def build_parser():
    p = argparse.ArgumentParser(prog="crossmod", description="Exact Lie algebra cohomology and crossed modules")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", type=int, default=None,
                        help="upper W1 index for identity checks (default 6 for transgression, 8 elsewhere)")
    common.add_argument("--module-window", type=_pair, default=None, help="lo,hi for density / Verma-dual windows")
    common.add_argument("--weight-range", type=int, default=8, help="bound |w| for weight slices")
    common.add_argument("--pbw-length", type=int, default=2)
    common.add_argument("--format", choices=("json", "markdown"), default="markdown")
    common.add_argument("--out", default="")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a named identity check or all of them")
    v.add_argument("name", help="check name or 'all'; see 'crossmod verify list'")

    b = sub.add_parser("betti", parents=[common], help="cohomology dimensions from weight slices")
    b.add_argument("--algebra", default="sl2", help="sl2, sl3 or a structure-constant JSON file")
    b.add_argument("--module", default="trivial", help="trivial, F<lambda>, M, N, L, pbw or a module JSON file")
    b.add_argument("--q-max", type=int, default=None)
    b.add_argument("--all-weights", action="store_true", help="tabulate every weight with |w| <= --weight-range")

    c = sub.add_parser("connecting", parents=[common], help="connecting map of a named cochain")
    c.add_argument("--ses", choices=("density", "verma", "w1"), default="density")
    c.add_argument("--cochain", default=None, help="catalog name (default omega1, verma_alpha, gelfand_fuks_alpha)")

    x = sub.add_parser("crossed", parents=[common], help="principal construction and checks")
    x.add_argument("action", choices=("build", "check", "equiv"))
    x.add_argument("--ses", choices=("density", "verma"), default="verma")

    k = sub.add_parser("catalog", parents=[common], help="list or evaluate named cochains")
    k.add_argument("--name", default=None)
    k.add_argument("--args", default=None, help="comma-separated basis labels, e.g. e,f,h")
    k.add_argument("--algebra", default=None)

    sub.add_parser("reconcile", parents=[common], help="computed vs printed dimension table")
    e = sub.add_parser("e2", parents=[common], help="Hochschild-Serre E2 page relative to the Cartan subalgebra")
    e.add_argument("--module", default="M")
    r = sub.add_parser("relative", parents=[common], help="relative cohomology H(g, h; M)")
    r.add_argument("--module", default="M")
    r.add_argument("--algebra", default="sl2")
    return p


def make_config(args):
    kw = dict(command=args.command, weight_bound=args.weight_range, pbw_length=args.pbw_length,
              fmt=args.format, out=args.out)
    if args.window is not None:
        kw["w1_window"] = (-1, args.window)
        kw["gv_window"] = args.window
    if args.module_window is not None:
        kw["density_window"] = kw["verma_window"] = args.module_window
    for name in ("name", "module", "algebra", "ses", "cochain"):
        if hasattr(args, name) and getattr(args, name) is not None:
            key = "target" if name == "name" else name
            kw[key] = getattr(args, name)
    if getattr(args, "action", None):
        kw["extra"] = {"action": args.action}
    return RunConfig(**kw)


def cmd_verify(args, cfg):
    if args.name == "list":
        rep = Report("verify list", cfg.as_dict())
        rep.tables["checks"] = sorted(suite.CHECKS)
        rep.tables["acceptance criteria"] = {str(k): v for k, v in suite.CRITERIA.items()}
        return rep
    if args.name == "all":
        return suite.run_all(cfg)
    return suite.run(args.name, cfg)


def cmd_betti(args, cfg):
    alg = get_algebra(args.algebra)
    mod = module_by_name(args.module, alg, cfg.density_window, cfg.pbw_length)
    rep = Report("betti", cfg.as_dict())
    ws = range(-cfg.weight_bound, cfg.weight_bound + 1) if args.all_weights else [0]
    tab = betti(alg, mod, args.q_max, ws)
    rep.tables[f"H({alg.name}, {mod.name})"] = tab.row(0) if 0 in ws else None
    if args.all_weights:
        rep.tables["by weight"] = {str(w): tab.row(w) for w in tab.weights if any(tab.row(w))}
    rep.tables["cochain dims (weight 0)"] = [tab.cochain_dims[(q, Q(0))] for q in range(tab.q_max + 1)] if 0 in ws else None
    rep.verdicts.append(verdict("Euler characteristic per weight", tab.euler_ok()))
    return rep


def cmd_connecting(args, cfg):
    rep = Report("connecting", cfg.as_dict())
    if args.ses == "w1":
        hi = cfg.gv_window
        rep.verdicts += catalog.check_gv_transgression(hi)
        return rep
    g = sl2()
    if args.ses == "density":
        ses = density_ses(g, cfg.density_window)
        c = catalog.get(args.cochain or "omega1", g, window=(0, cfg.density_window[1] - 1))
    else:
        ses = verma_ses(g, cfg.verma_window)
        c = catalog.get(args.cochain or "verma_alpha", g)
    if c.mod.name != ses.quot.name:
        raise ValueError(f"{c.name} takes values in {c.mod.name}, not in {ses.quot.name}")
    d = connecting_hom(ses, c, check_cocycle_on=itertools.combinations(g.basis(), c.degree + 1))
    vals = {",".join(g.label(i) for i in t): d(*t) for t in itertools.combinations(g.basis(), c.degree + 1)}
    rep.tables[f"connecting({c.name})"] = vals
    rep.verdicts.append(verdict("zig-zag values lie in the submodule", True))
    return rep


def _principal(cfg, which):
    g = sl2()
    if which == "verma":
        ses = verma_ses(g, cfg.verma_window)
        return principal_construction(ses, catalog.verma_alpha(g, cfg.verma_window))
    ses = density_ses(g, cfg.density_window)
    return principal_construction(ses, catalog.named_generator("omega1", g, (0, cfg.density_window[1] - 1)))


def cmd_crossed(args, cfg):
    rep = Report(f"crossed {args.action}", cfg.as_dict())
    cm = _principal(cfg, args.ses)
    rep.tables["crossed module"] = {"name": cm.name, "m": cm.m_alg.name, "n": cm.n_alg.name,
                                    "m window": len(cm.m_basis()), "n window": len(cm.n_basis())}
    if args.action in ("build", "check"):
        rep.verdicts += check_axioms(cm)
        rep.verdicts.append(mu_kills_dbeta(cm))
        rep.verdicts += structural_checks(cm)
    if args.action == "check":
        g = cm.g_alg
        gamma = extract_3cocycle(cm, principal_four_term(cm))
        rep.tables["gamma"] = {",".join(g.label(i) for i in t): gamma(*t) for t in itertools.combinations(g.basis(), 3)}
    if args.action == "equiv":
        other = _principal(cfg, "density" if args.ses == "verma" else "verma")
        cmF, cmM = (other, cm) if args.ses == "verma" else (cm, other)
        psi = lambda n: ({("V", k): c for k, c in f1_to_n_map(n[1]).items()} if n[0] == "V" else {n: Q(1)})
        rep.verdicts += check_elementary_equivalence(cmF, cmM, f0_to_m_map, psi, V_map=lambda k: {0: Q(1)})
    return rep


def cmd_catalog(args, cfg):
    rep = Report("catalog", cfg.as_dict())
    if args.name is None:
        rep.tables["cochains"] = {n: {"default algebra": catalog.DEFAULT_ALGEBRA[n],
                                      "degree": catalog.get(n).degree,
                                      "module": catalog.get(n).mod.name} for n in sorted(catalog.CATALOG)}
        return rep
    alg = None
    if args.algebra:
        alg = get_algebra(args.algebra, cfg.w1_window)
    elif catalog.DEFAULT_ALGEBRA.get(args.name) == "W1":
        alg = get_algebra("W1", cfg.w1_window)
    c = catalog.get(args.name, alg)
    rep.tables["cochain"] = {"name": c.name, "degree": c.degree, "module": c.mod.name}
    if args.args:
        labels = args.args.split(",")
        val = catalog.evaluate(args.name, labels, alg)
        rep.tables["value"] = {c.mod.label(m): a for m, a in val.items()}
    return rep


def cmd_e2(args, cfg):
    g = sl2()
    mod = module_by_name(args.module, g, cfg.verma_window, cfg.pbw_length)
    page = hs_e2_page(g, ["h"], mod)
    rep = Report("e2", cfg.as_dict())
    rep.tables[f"E2({mod.name})"] = {f"{p},{q}": d for (p, q), d in sorted(page.dims.items())}
    rep.tables["relative Betti"] = page.relative_betti
    return rep


def cmd_relative(args, cfg):
    alg = get_algebra(args.algebra)
    mod = module_by_name(args.module, alg, cfg.verma_window, cfg.pbw_length)
    h = [i for i in alg.grading] if alg.name != "sl2" else ["h"]
    rel = relative_slice(alg, h, mod)
    rep = Report("relative", cfg.as_dict())
    rep.tables[f"H({alg.name}, h; {mod.name})"] = rel.betti()
    rep.tables["cochain dims"] = rel.dims
    rep.verdicts.append(verdict("relative cochains annihilated by i_x and L_x", rel.check_annihilated()))
    return rep


COMMANDS = {"verify": cmd_verify, "betti": cmd_betti, "connecting": cmd_connecting, "crossed": cmd_crossed,
            "catalog": cmd_catalog, "reconcile": lambda a, c: suite.reconcile(c), "e2": cmd_e2,
            "relative": cmd_relative}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
        rep = COMMANDS[args.command](args, cfg)
    except WindowOverflow as exc:
        print(f"error: {exc}; enlarge the window", file=sys.stderr)
        return 2
    except (KeyError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = rep.render(args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())

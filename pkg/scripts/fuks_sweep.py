"""Cohomology of sl2 with coefficients in F_lambda and the Verma duals, weight by weight.

Prints a table of nonzero (weight, degree) entries and the cochain dimensions of
each weight slice, as evidence that only weight 0 contributes.

    python3 scripts/fuks_sweep.py --bound 10 --lambdas 0 1 2 1/2 -1
"""

import argparse
from fractions import Fraction

from crossmod.complex import betti
from crossmod.lie import sl2
from crossmod.modules import DensityModule, TrivialModule, VermaDual


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=8)
    ap.add_argument("--lambdas", nargs="*", default=["0", "1", "2", "1/2", "-1"])
    ap.add_argument("--window", type=int, default=16)
    args = ap.parse_args()
    g = sl2()
    mods = [TrivialModule(g)] + [DensityModule(g, Fraction(s), (0, args.window)) for s in args.lambdas]
    mods += [VermaDual(g, p, (0, args.window)) for p in "MNL"]
    ws = range(-args.bound, args.bound + 1)
    for mod in mods:
        tab = betti(g, mod, None, ws)
        nz = {str(w): tab.row(w) for w in tab.nonzero_weights()}
        dims = {str(w): [tab.cochain_dims[(q, w)] for q in range(4)] for w in tab.weights
                if any(tab.cochain_dims[(q, w)] for q in range(4))}
        print(f"{mod.name:8s} nonzero cohomology: {nz or 'none'}   euler ok: {tab.euler_ok()}")
        print(f"{'':8s} nonempty slices: {len(dims)} of {len(ws)}")


if __name__ == "__main__":
    main()

"""Plane curve germs: pair counts, Euler characteristics and branches.

For each bundled curve the script prints nu^1 at every order two ways
(pair-count formula and Euler characteristic of B) and checks nu^1 at
lambda = 1 against the number of branches minus one.

    python3 demos/plane_curves.py
"""

import warnings

from jordanmax import branches_nu_lambda1, curve_nu_03, lambda_orders, nu, theorem3_nu
from jordanmax.corpus import load_bundled

STEMS = ["curve_node", "curve_cusp", "curve_ordinary3", "curve_ordinary4", "ex4_4_a2", "ex4_4_a3", "ex4_4_a4"]


def main():
    for stem in STEMS:
        model, atlas = load_bundled(stem)
        r = model.flags["branches"]
        print(f"{model.name}  (r = {r})")
        for d in lambda_orders(model):
            euler = theorem3_nu(model, atlas, d)[1]
            direct = nu(model, atlas, d, 1, 1)
            if d == 1:
                print(f"  d=1: nu^1 = {direct}, r - 1 = {branches_nu_lambda1(r)}")
                continue
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                pairs = curve_nu_03(model, d)
            note = "  (several points on one pair)" if caught else ""
            print(f"  d={d}: nu^1 = {direct}, Euler {euler}, pair count {pairs}{note}")


if __name__ == "__main__":
    main()

"""Margin eta(n) - rho(case graph) for every case graph, including n below f(alpha).

Shows where the case graphs cross above eta once the order bound is dropped:

    python3 scripts/family_margins.py --n 5:26 --alpha 0.5,0.75,0.9
"""

import argparse

from specfac.campaign import family_instances
from specfac.spectral import rho
from specfac.thresholds import eta, f_alpha, meets_order_bound


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", default="5:26")
    parser.add_argument("--alpha", default="0,0.5,0.75,0.9")
    args = parser.parse_args()
    lo, hi = (int(x) for x in args.n.split(":"))
    for a in (float(x) for x in args.alpha.split(",")):
        crossings = []
        smallest = None
        for n in range(max(5, lo), hi + 1):
            for inst in family_instances(n):
                if inst.family in ("extremal", "claim1"):
                    continue
                margin = eta(n, a, check_domain=False) - rho(inst.graph, a)
                if meets_order_bound(n, a) and (smallest is None or margin < smallest[0]):
                    smallest = (margin, inst.family, n, inst.params["s"])
                if margin <= 0:
                    crossings.append((inst.family, n, inst.params["s"], margin))
        print(f"alpha = {a:g}  f(alpha) = {f_alpha(a):g}")
        if smallest:
            print(f"  smallest in-domain margin {smallest[0]:.4f} at {smallest[1]} n={smallest[2]} s={smallest[3]}")
        for fam, n, s, m in crossings:
            print(f"  rho >= eta: {fam} n={n} s={s} margin={m:.4f}")


if __name__ == "__main__":
    main()

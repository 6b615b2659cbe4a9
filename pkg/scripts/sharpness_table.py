"""Print eta(n), theta(n) and the extremal radius for a grid of (n, alpha).

    python3 scripts/sharpness_table.py --n 14:30 --alpha 0,0.5,0.75,0.8
"""

import argparse

from specfac.families import extremal_graph
from specfac.spectral import rho
from specfac.thresholds import eta, meets_order_bound, theta


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", default="14:30")
    parser.add_argument("--alpha", default="0,0.25,0.5,0.7,0.75,0.8,0.9")
    parser.add_argument("--all", action="store_true", help="include n below f(alpha)")
    args = parser.parse_args()
    lo, hi = (int(x) for x in args.n.split(":"))
    alphas = [float(a) for a in args.alpha.split(",")]

    print(f"{'n':>3} {'alpha':>6} {'theta':>16} {'eta':>16} {'rho(extremal)':>16} {'|eta-rho|':>10} {'eta-(n-3)':>10}")
    for a in alphas:
        for n in range(lo, hi + 1):
            in_domain = meets_order_bound(n, a)
            if not in_domain and not args.all:
                continue
            e = eta(n, a, check_domain=False)
            t = theta(n, a, check_domain=False)
            r = rho(extremal_graph(n).graph, a)
            mark = "" if in_domain else "  *"
            print(f"{n:>3} {a:>6.3g} {t:>16.12f} {e:>16.12f} {r:>16.12f} {abs(e - r):>10.1e} {e - (n - 3):>10.3e}{mark}")
    if args.all:
        print("* below f(alpha); the theorem makes no claim there")


if __name__ == "__main__":
    main()

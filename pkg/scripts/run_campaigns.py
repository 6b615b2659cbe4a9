"""Run the verification campaigns and write one report per configuration.

    python3 scripts/run_campaigns.py --out results/ [--quick]

Writes ``<out>/<name>.json`` for each campaign and prints a summary line.
"""

from __future__ import annotations

import argparse
import json
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path

from specfac import campaign
from specfac.campaign import CampaignConfig

log = logging.getLogger("run_campaigns")


@dataclass
class Experiment:
    name: str
    config: CampaignConfig
    quick: dict = field(default_factory=dict)


EXPERIMENTS = [
    Experiment(
        "random_n14_p07",
        CampaignConfig(mode="random", n_min=14, n_max=14, alphas=(0.0, 0.5), trials=1000, seed=20240601, p=0.7),
        {"trials": 50},
    ),
    Experiment(
        "random_n14_p09",
        CampaignConfig(mode="random", n_min=14, n_max=14, alphas=(0.0, 0.5), trials=1000, seed=20240601, p=0.9),
        {"trials": 50},
    ),
    Experiment(
        "random_n20_p09",
        CampaignConfig(mode="random", n_min=20, n_max=20, alphas=(0.7, 0.75), trials=300, seed=7, p=0.9),
        {"trials": 20},
    ),
    Experiment(
        "exhaustive_n1_8",
        CampaignConfig(mode="exhaustive", n_min=1, n_max=8, alphas=(0.0, 0.5)),
        {"n_max": 6},
    ),
    Experiment(
        "families_n14_26",
        CampaignConfig(mode="families", n_min=14, n_max=26, alphas=(0.0, 0.25, 0.5, 0.7, 0.75, 0.8)),
        {"n_max": 16},
    ),
    Experiment(
        "audit_n14_30",
        CampaignConfig(mode="audit", n_min=14, n_max=30, alphas=(0.0, 0.25, 0.5, 2 / 3, 0.7, 0.75, 0.8, 0.9)),
    ),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="results")
    parser.add_argument("--quick", action="store_true", help="shrink every campaign for a smoke run")
    parser.add_argument("--only", nargs="*", help="experiment names to run")
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    all_ok = True
    for exp in EXPERIMENTS:
        if args.only and exp.name not in args.only:
            continue
        cfg = replace(exp.config, workers=args.threads, **(exp.quick if args.quick else {}))
        report = campaign.run(cfg)
        report.write(str(out / f"{exp.name}.json"))
        all_ok &= report.ok
        summary = {k: v for k, v in report.summary.items() if k not in ("failed", "counterexample_indices")}
        log.info("%-18s %5.1fs ok=%s %s", exp.name, report.wall_time, report.ok, json.dumps(summary, sort_keys=True))
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())

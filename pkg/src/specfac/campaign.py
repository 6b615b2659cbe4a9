"""Verification campaigns: random, exhaustive, families and audit.

Every campaign returns a :class:`Report` whose body is a pure function of the
configuration.  Wall-clock data (timestamp, per-record timings) lives in the
report header only, so two runs with the same config differ only there.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Callable, Sequence

from specfac import thresholds
from specfac.config import DEFAULT, Tolerances
from specfac.factor import Violation, is_covered_direct, is_covered_structural
from specfac.families import FamilyInstance, case_graph, claim1_graph, extremal_graph
from specfac.generate import connected_gnp, graph_classes, trial_rng
from specfac.graph import Graph, graph6_encode
from specfac.spectral import quotient, quotient_largest_eig, rho
from specfac.thresholds import AuditReport, eta, meets_order_bound

log = logging.getLogger(__name__)

SCHEMA = 1
MODES = ("exhaustive", "random", "families", "audit")
MAX_EXHAUSTIVE_ORDER = 9
MAX_RANDOM_ORDER = 26
DIRECT_ORACLE_ORDER = 10


@dataclass
class CampaignConfig:
    mode: str = "random"
    n_min: int = 14
    n_max: int = 14
    alphas: tuple[float, ...] = (0.0,)
    trials: int = 1000
    seed: int = 0
    p: float = 0.5
    out: str | None = None
    fmt: str = "json"
    workers: int = 1

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError(f"bad order range {self.n_min}..{self.n_max}")
        if not self.alphas or any(not 0 <= a < 1 for a in self.alphas):
            raise ValueError("alphas must be a nonempty list in [0, 1)")
        if not 0 <= self.p <= 1:
            raise ValueError("p must lie in [0, 1]")
        if self.fmt not in ("json", "csv"):
            raise ValueError("format must be json or csv")
        if self.mode == "exhaustive" and self.n_max > MAX_EXHAUSTIVE_ORDER:
            raise ValueError(f"exhaustive mode supports n <= {MAX_EXHAUSTIVE_ORDER}")
        if self.mode == "random" and self.n_max > MAX_RANDOM_ORDER:
            raise ValueError(f"random mode supports n <= {MAX_RANDOM_ORDER}")

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("out")
        d.pop("workers")
        d["alphas"] = list(self.alphas)
        return d


BUCKETS = ("ABOVE", "BOUNDARY", "BELOW")


@dataclass
class VerificationRecord:
    index: int
    graph6: str
    n: int
    alpha: float
    rho: float
    eta: float
    in_domain: bool
    bucket: str
    covered: bool
    violation: Violation | None
    oracle_agrees: bool | None = None
    elapsed: float = 0.0

    @property
    def above_threshold(self) -> bool:
        return self.bucket == "ABOVE"

    @property
    def counterexample(self) -> bool:
        return self.above_threshold and self.in_domain and not self.covered

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "graph6": self.graph6,
            "n": self.n,
            "alpha": self.alpha,
            "rho": self.rho,
            "eta": self.eta,
            "in_domain": self.in_domain,
            "bucket": self.bucket,
            "above_threshold": self.above_threshold,
            "covered": self.covered,
            "violation": None if self.violation is None else self.violation.as_dict(),
            "oracle_agrees": self.oracle_agrees,
            "status": "COUNTEREXAMPLE" if self.counterexample else "OK",
        }


CSV_COLUMNS = (
    "index", "graph6", "n", "alpha", "rho", "eta", "in_domain", "bucket", "above_threshold",
    "covered", "violation_kind", "violation_s", "violation_isolated", "violation_bound",
    "oracle_agrees", "status",
)


def bucket_of(rho_value: float, eta_value: float, tol: Tolerances = DEFAULT) -> str:
    if rho_value > eta_value + tol.tie:
        return "ABOVE"
    if rho_value < eta_value - tol.tie:
        return "BELOW"
    return "BOUNDARY"


def classify(
    g: Graph,
    alpha: float,
    index: int = 0,
    direct_oracle: bool = False,
    tol: Tolerances = DEFAULT,
) -> VerificationRecord:
    """Evaluate one connected graph against the coveredness threshold."""
    t0 = time.perf_counter()
    r = rho(g, alpha, tol)
    e = eta(g.n, alpha, check_domain=False, tol=tol)
    violation = is_covered_structural(g)
    covered = violation is None
    agrees = None
    if direct_oracle:
        agrees = is_covered_direct(g) == covered
    return VerificationRecord(
        index=index,
        graph6=graph6_encode(g),
        n=g.n,
        alpha=alpha,
        rho=r,
        eta=e,
        in_domain=meets_order_bound(g.n, alpha, tol),
        bucket=bucket_of(r, e, tol),
        covered=covered,
        violation=violation,
        oracle_agrees=agrees,
        elapsed=time.perf_counter() - t0,
    )


# -- family replay -----------------------------------------------------------------


@dataclass
class FamilyRecord:
    family: str
    params: dict
    n: int
    alpha: float
    rho: float
    quotient_rho: float
    eta: float
    in_domain: bool
    expectation: str | None
    passed: bool | None
    covered: bool | None
    violation: Violation | None
    elapsed: float = 0.0

    @property
    def margin(self) -> float:
        return self.eta - self.rho

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "n": self.n,
            "alpha": self.alpha,
            "rho": self.rho,
            "quotient_rho": self.quotient_rho,
            "eta": self.eta,
            "margin": self.margin,
            "in_domain": self.in_domain,
            "expectation": self.expectation,
            "passed": self.passed,
            "covered": self.covered,
            "violation": None if self.violation is None else self.violation.as_dict(),
        }


FAMILY_COLUMNS = (
    "family", "n", "s", "alpha", "rho", "quotient_rho", "eta", "margin", "in_domain",
    "expectation", "passed", "covered", "violation_kind",
)


def family_instances(n: int) -> list[FamilyInstance]:
    """Every family graph of order n, in a fixed order."""
    out = [extremal_graph(n)]
    if n >= 6:
        out.append(claim1_graph(n))
    for s in range(1, (n - 2) // 3 + 1):
        out.append(case_graph("B1", n, s))
    for s in range(2, (n - 1) // 3 + 1):
        out.append(case_graph("B2", n, s))
    if (n + 1) % 3 == 0 and (n + 1) // 3 >= 2:
        out.append(case_graph("B3", n, (n + 1) // 3))
    if n % 3 == 0 and n // 3 >= 2:
        out.append(case_graph("B4", n, n // 3))
    return out


def _family_expectation(inst: FamilyInstance) -> str | None:
    """What the threshold argument says about rho versus eta for this instance.

    "equal" for the graphs attaining eta, "below" for the case graphs the
    argument rules out, None where nothing is claimed.
    """
    fam = inst.family
    s = inst.params.get("s")
    if fam == "extremal" or (fam == "B1" and s == 1):
        return "equal"
    if fam in ("B1", "B2") and s >= 2:
        return "below"
    if fam in ("B3", "B4") and s >= 5:
        return "below"
    if fam == "claim1":
        return "below"
    return None


def family_record(inst: FamilyInstance, alpha: float, covered_check: bool = True, tol: Tolerances = DEFAULT) -> FamilyRecord:
    t0 = time.perf_counter()
    g = inst.graph
    r = rho(g, alpha, tol)
    qr = quotient_largest_eig(quotient(g, alpha, inst.partition), tol)
    e = eta(g.n, alpha, check_domain=False, tol=tol)
    in_domain = meets_order_bound(g.n, alpha, tol)
    expectation = _family_expectation(inst)
    passed = None
    if in_domain and expectation == "equal":
        passed = abs(r - e) <= 1e-8
    elif in_domain and expectation == "below":
        passed = e - r > tol.strict_slack
    violation = None
    covered = None
    if covered_check:
        violation = is_covered_structural(g)
        covered = violation is None
    return FamilyRecord(
        inst.family, dict(inst.params), g.n, alpha, r, qr, e, in_domain, expectation, passed, covered, violation,
        time.perf_counter() - t0,
    )


# -- sharpness ---------------------------------------------------------------------


@dataclass
class SharpnessRow:
    n: int
    alpha: float
    eta: float
    rho_extremal: float
    difference: float
    passed: bool

    def as_dict(self) -> dict:
        return asdict(self)


def sharpness_table(n_values: Sequence[int], alphas: Sequence[float], tol: Tolerances = DEFAULT) -> list[SharpnessRow]:
    rows = []
    for a in alphas:
        for n in n_values:
            if not meets_order_bound(n, a, tol):
                continue
            e = eta(n, a, tol=tol)
            r = rho(extremal_graph(n).graph, a, tol)
            rows.append(SharpnessRow(n, a, e, r, abs(e - r), abs(e - r) <= 1e-8))
    return sorted(rows, key=lambda row: (row.n, row.alpha))


# -- reports -------------------------------------------------------------------------


@dataclass
class Report:
    config: CampaignConfig
    records: list = field(default_factory=list)
    audit: list[AuditReport] = field(default_factory=list)
    sharpness: list[SharpnessRow] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    started: str = ""
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return bool(self.summary.get("ok", True))

    def body(self) -> dict:
        out = {
            "schema": SCHEMA,
            "config": self.config.as_dict(),
            "summary": self.summary,
            "records": [r.as_dict() for r in self.records],
        }
        if self.config.mode == "audit":
            out["audit"] = [r.as_dict() for r in self.audit]
            out["sharpness"] = [r.as_dict() for r in self.sharpness]
        return out

    def to_json(self) -> str:
        doc = {
            "header": {
                "timestamp": self.started,
                "wall_time": self.wall_time,
                "elapsed": [getattr(r, "elapsed", 0.0) for r in self.records],
            },
            **self.body(),
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        mode = self.config.mode
        if mode in ("random", "exhaustive"):
            w.writerow(CSV_COLUMNS)
            for r in self.records:
                v = r.violation
                w.writerow([
                    r.index, r.graph6, r.n, repr(r.alpha), repr(r.rho), repr(r.eta), r.in_domain, r.bucket,
                    r.above_threshold, r.covered,
                    "" if v is None else v.kind.value,
                    "" if v is None else " ".join(map(str, v.vertices)),
                    "" if v is None else v.isolated,
                    "" if v is None else v.bound,
                    "" if r.oracle_agrees is None else r.oracle_agrees,
                    "COUNTEREXAMPLE" if r.counterexample else "OK",
                ])
        elif mode == "families":
            w.writerow(FAMILY_COLUMNS)
            for r in self.records:
                w.writerow([
                    r.family, r.n, r.params.get("s", ""), repr(r.alpha), repr(r.rho), repr(r.quotient_rho),
                    repr(r.eta), repr(r.margin), r.in_domain, r.expectation or "",
                    "" if r.passed is None else r.passed, "" if r.covered is None else r.covered,
                    "" if r.violation is None else r.violation.kind.value,
                ])
        else:
            w.writerow(("claim", "n", "s", "alpha", "value", "sign", "passed"))
            for a in self.audit:
                w.writerow((a.claim, a.n, "" if a.s is None else a.s, repr(a.alpha), repr(a.value), a.sign, a.passed))
            w.writerow(())
            w.writerow(("n", "alpha", "eta", "rho_extremal", "difference", "passed"))
            for row in self.sharpness:
                w.writerow((row.n, repr(row.alpha), repr(row.eta), repr(row.rho_extremal), repr(row.difference), row.passed))
        return buf.getvalue()

    def dumps(self) -> str:
        return self.to_json() if self.config.fmt == "json" else self.to_csv()

    def write(self, path: str | None = None) -> None:
        path = path or self.config.out
        if path is None:
            raise ValueError("no output path")
        with open(path, "w", newline="") as fh:
            fh.write(self.dumps())


def _map_ordered(fn: Callable, items: Sequence, workers: int) -> list:
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _record_summary(records: Sequence[VerificationRecord]) -> dict:
    counts = {b: 0 for b in BUCKETS}
    for r in records:
        counts[r.bucket] += 1
    counterexamples = [r.index for r in records if r.counterexample]
    disagreements = [r.index for r in records if r.oracle_agrees is False]
    return {
        "records": len(records),
        "buckets": counts,
        "in_domain": sum(r.in_domain for r in records),
        "out_of_domain": sum(not r.in_domain for r in records),
        "covered": sum(r.covered for r in records),
        "not_covered": sum(not r.covered for r in records),
        "counterexamples": len(counterexamples),
        "counterexample_indices": counterexamples,
        "oracle_checked": sum(r.oracle_agrees is not None for r in records),
        "oracle_disagreements": len(disagreements),
        "ok": not counterexamples and not disagreements,
    }


def random_graphs(cfg: CampaignConfig) -> list[tuple[int, Graph]]:
    """The connected G(n, p) samples of a random campaign, with their stream indices.

    Sample t at order n comes from stream index (n << 32) | t, so the graphs
    do not depend on the alpha list or on the other orders requested.
    """
    out = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        for t in range(cfg.trials):
            k = (n << 32) | t
            out.append((k, connected_gnp(n, cfg.p, trial_rng(cfg.seed, k))))
    return out


def run_random(cfg: CampaignConfig, tol: Tolerances = DEFAULT) -> list[VerificationRecord]:
    graphs = random_graphs(cfg)
    jobs = [(g, a) for _, g in graphs for a in cfg.alphas]
    direct = cfg.n_max <= DIRECT_ORACLE_ORDER
    recs = _map_ordered(lambda job: classify(job[0], job[1], direct_oracle=direct, tol=tol), jobs, cfg.workers)
    for i, r in enumerate(recs):
        r.index = i
    return recs


def run_exhaustive(cfg: CampaignConfig, tol: Tolerances = DEFAULT) -> list[VerificationRecord]:
    jobs = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        for g in graph_classes(n, connected=True):
            jobs.extend((g, a) for a in cfg.alphas)
    recs = _map_ordered(
        lambda job: classify(job[0], job[1], direct_oracle=job[0].n <= DIRECT_ORACLE_ORDER, tol=tol), jobs, cfg.workers
    )
    for i, r in enumerate(recs):
        r.index = i
    return recs


def run_families(cfg: CampaignConfig, tol: Tolerances = DEFAULT) -> list[FamilyRecord]:
    jobs = []
    for n in range(max(5, cfg.n_min), cfg.n_max + 1):
        for inst in family_instances(n):
            jobs.extend((inst, a) for a in cfg.alphas)
    return _map_ordered(lambda job: family_record(job[0], job[1], tol=tol), jobs, cfg.workers)


def _family_summary(records: Sequence[FamilyRecord]) -> dict:
    checked = [r for r in records if r.passed is not None]
    failed = [f"{r.family}{r.params}@{r.alpha}" for r in checked if not r.passed]
    return {
        "records": len(records),
        "checked": len(checked),
        "failed": failed,
        "covered": sum(bool(r.covered) for r in records),
        "max_quotient_gap": max((abs(r.rho - r.quotient_rho) for r in records), default=0.0),
        "ok": not failed,
    }


def run(cfg: CampaignConfig, tol: Tolerances = DEFAULT) -> Report:
    cfg.validate()
    started = datetime.now(timezone.utc).isoformat(timespec="seconds")
    t0 = time.perf_counter()
    report = Report(cfg, started=started)
    if cfg.mode == "random":
        report.records = run_random(cfg, tol)
        report.summary = _record_summary(report.records)
    elif cfg.mode == "exhaustive":
        report.records = run_exhaustive(cfg, tol)
        report.summary = _record_summary(report.records)
    elif cfg.mode == "families":
        report.records = run_families(cfg, tol)
        report.summary = _family_summary(report.records)
    else:
        report.audit = thresholds.audit_grid(n_max=cfg.n_max, alphas=cfg.alphas, n_min=cfg.n_min, tol=tol)
        n_values = range(cfg.n_min, cfg.n_max + 1)
        report.sharpness = sharpness_table(n_values, cfg.alphas, tol)
        failed = [f"{a.claim}(n={a.n}, s={a.s}, alpha={a.alpha})" for a in report.audit if not a.passed]
        failed += [f"sharpness(n={r.n}, alpha={r.alpha})" for r in report.sharpness if not r.passed]
        report.summary = {
            "audit_reports": len(report.audit),
            "sharpness_rows": len(report.sharpness),
            "failed": failed,
            "ok": not failed,
        }
    report.wall_time = time.perf_counter() - t0
    log.info("%s campaign finished in %.2fs", cfg.mode, report.wall_time)
    return report

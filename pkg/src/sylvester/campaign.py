"""Randomized verification campaigns over exact fields."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import identities as ident
from .fields import FieldConfig
from .records import report_to_record
from .sampling import random_element, random_nodeset, trial_rng

CAMPAIGN_IDENTITIES = tuple(ident.IDENTITIES)


@dataclass(frozen=True)
class CampaignConfig:
    identity: str
    trials: int
    n_range: tuple[int, int]
    d_range: tuple[int, int]
    field: FieldConfig
    seed: int
    workers: int = 1

    def __post_init__(self):
        if self.identity not in CAMPAIGN_IDENTITIES:
            raise ValueError(f"unknown identity {self.identity!r}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        lo, hi = self.n_range
        if lo < 2 or hi < lo:
            raise ValueError(f"bad n range {lo}..{hi}: need 2 <= lo <= hi")
        dlo, dhi = self.d_range
        if dlo < 0 or dhi < dlo:
            raise ValueError(f"bad d range {dlo}..{dhi}: need 0 <= lo <= hi")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.field.kind == "float64":
            raise ValueError("campaigns need an exact field (rational or prime)")
        self.field.check_nodes(hi)
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


def _draw(rng, lo, hi) -> int:
    return int(rng.integers(lo, hi + 1))


def run_trial(cfg: CampaignConfig, index: int) -> tuple[ident.IdentityReport, list[str]]:
    """Run trial ``index``; returns the report and the formatted nodes used."""
    rng = trial_rng(cfg.seed, index)
    fld = cfg.field.build()
    n = _draw(rng, *cfg.n_range)
    dlo, dhi = cfg.d_range
    name = cfg.identity

    if name == "dilcher":
        report = ident.dilcher_check(n, max(1, _draw(rng, dlo, dhi)))
        return report, []

    ns = random_nodeset(rng, n, fld)
    if name == "euler":
        report = ident.verify_euler(ns, _draw(rng, 0, n - 1))
    elif name == "sylvester":
        report = ident.verify_sylvester(ns, _draw(rng, dlo, dhi), cross_check=True)
    elif name == "newton":
        report = ident.verify_newton_relation(ns, max(1, _draw(rng, dlo, dhi)))
    elif name == "extended_euler":
        report = ident.verify_extended_euler(ns, _draw(rng, 0, n - 1), _draw(rng, 0, n - 1))
    elif name == "f2":
        report = ident.verify_f2(ns, random_element(rng, fld))
    elif name == "egf":
        report = ident.egf_truncated_check(ns, max(n - 1, _draw(rng, dlo, dhi)))
    elif name == "remainder":
        report = ident.verify_remainder(ns, _draw(rng, max(n, dlo), max(n, dhi)))
    else:
        report = ident.extended_sylvester_check(ns, _draw(rng, max(n, dlo), max(n, dhi)))
    return report, ns.formatted()


def cmd_campaign(cfg: CampaignConfig) -> list[dict]:
    """Run every trial and return output records: a summary, then one per failure.

    Records depend only on the config minus ``workers``: trials are seeded
    by index and collected in index order.
    """
    indices = range(cfg.trials)
    if cfg.workers == 1:
        results = [run_trial(cfg, i) for i in indices]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(lambda i: run_trial(cfg, i), indices))

    failures = []
    for i, (report, nodes) in enumerate(results):
        if not report.passed:
            failures.append(
                {
                    "record": "campaign_failure",
                    "seed": cfg.seed,
                    "trial": i,
                    "nodes": nodes,
                    "report": report_to_record(report),
                }
            )
    summary = {
        "record": "campaign_summary",
        "identity": cfg.identity,
        "field": cfg.field.build().label,
        "seed": cfg.seed,
        "n_range": list(cfg.n_range),
        "d_range": list(cfg.d_range),
        "trials": cfg.trials,
        "passed": cfg.trials - len(failures),
        "failed": len(failures),
    }
    return [summary] + failures

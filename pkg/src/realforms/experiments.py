"""Seeded Monte Carlo experiments over random real binary forms.

Two experiments are provided:

``typical_rank_experiment``
    samples forms of a fixed degree, certifies their real rank and real-root
    count, and tabulates both. Ranks whose search ran out of budget are kept in
    their own ``"undetermined[lo,hi]"`` bucket.

``theorem_fuzz``
    runs :func:`~realforms.theorem.verify_theorem1` on each sample and
    collects every report that contradicts the all-real-roots criteria or the
    winding-degree relations.

Sample ``i`` depends only on ``(seed, i)``, so results do not depend on the
number of workers, and two runs with one config serialize to identical JSON
(apart from ``wallTime``).
"""
from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import roots
from .errors import FormError
from .forms import BinaryForm
from .parser import format_form
from .rank import SearchBudget, real_rank
from .theorem import verify_theorem1

DISTRIBUTIONS = ("gaussian_rationalized", "uniform_int")
DISCLAIMER = (
    "Empirical frequencies only. Which ranks between floor(n/2)+1 and n are typical is open "
    "for n > 5; these counts depend on the sampling distribution and are evidence, not proof."
)
MAX_RETRIES = 64


@dataclass(frozen=True)
class ExperimentConfig:
    degree: int
    samples: int = 100
    seed: int = 0
    distribution: str = "gaussian_rationalized"
    budget: SearchBudget = field(default_factory=SearchBudget)
    workers: int = 1
    dyadic_bits: int = 32
    int_range: int = 10

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f"distribution must be one of {DISTRIBUTIONS}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def to_dict(self):
        return {
            "degree": self.degree,
            "samples": self.samples,
            "seed": self.seed,
            "coefficientDistribution": self.distribution,
            "coefficientBasis": "monomial",
            "dyadicBits": self.dyadic_bits,
            "intRange": self.int_range,
            "budget": self.budget.to_dict(),
            "workers": self.workers,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            degree=int(d["degree"]),
            samples=int(d.get("samples", 100)),
            seed=int(d.get("seed", 0)),
            distribution=d.get("coefficientDistribution", d.get("distribution", "gaussian_rationalized")),
            budget=SearchBudget.from_dict(d.get("budget", {})),
            workers=int(d.get("workers", 1)),
            dyadic_bits=int(d.get("dyadicBits", 32)),
            int_range=int(d.get("intRange", 10)),
        )


def _draw(config: ExperimentConfig, rng) -> BinaryForm:
    n = config.degree
    if config.distribution == "gaussian_rationalized":
        scale = 2 ** config.dyadic_bits
        return BinaryForm(Fraction(int(round(v * scale)), scale) for v in rng.standard_normal(n + 1))
    return BinaryForm(int(v) for v in rng.integers(-config.int_range, config.int_range + 1, n + 1))


def sample_form(config: ExperimentConfig, index: int) -> BinaryForm:
    """Deterministic square-free form for ``(config.seed, index)``."""
    rng = np.random.default_rng([config.seed, index])
    for _ in range(MAX_RETRIES):
        f = _draw(config, rng)
        if not f.is_zero() and roots.is_squarefree(f):
            return f
    raise RuntimeError(f"no square-free form after {MAX_RETRIES} draws; check the configuration")


@dataclass
class ExperimentReport:
    kind: str
    config: ExperimentConfig
    rank_counts: dict
    root_counts: dict
    counterexamples: list
    failures: list
    extra: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_dict(self, include_wall_time=True):
        d = {
            "schemaVersion": 1,
            "kind": self.kind,
            "config": self.config.to_dict(),
            "rankCounts": dict(sorted(self.rank_counts.items())),
            "rootCounts": dict(sorted(self.root_counts.items())),
            "counterexamples": self.counterexamples,
            "failures": self.failures,
            "disclaimer": DISCLAIMER,
        }
        d.update(self.extra)
        if include_wall_time:
            d["wallTime"] = self.wall_time
        return d

    def to_json(self, include_wall_time=True) -> str:
        return json.dumps(self.to_dict(include_wall_time), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        """One row per rank bucket."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["rank_bucket", "count"])
        for k, v in sorted(self.rank_counts.items()):
            w.writerow([k, v])
        return buf.getvalue()


def _rank_bucket(cert) -> str:
    if cert.real_exact is not None:
        return str(cert.real_exact)
    return f"undetermined[{cert.real_lower},{cert.real_upper}]"


def _rank_task(args):
    config, index = args
    try:
        f = sample_form(config, index)
        cert = real_rank(f, config.budget)
        nroots = roots.count_projective_real_roots(f).distinct_real_projective
    except (FormError, RuntimeError, ArithmeticError) as exc:
        return {"index": index, "error": f"{type(exc).__name__}: {exc}"}
    return {
        "index": index,
        "form": format_form(f),
        "bucket": _rank_bucket(cert),
        "realExact": cert.real_exact,
        "realUpper": cert.real_upper,
        "roots": nroots,
    }


def _fuzz_task(args):
    config, index = args
    try:
        f = sample_form(config, index)
        return {"index": index, "report": verify_theorem1(f).to_dict()}
    except (FormError, RuntimeError, ArithmeticError) as exc:
        return {"index": index, "error": f"{type(exc).__name__}: {exc}"}


def _run(task, config: ExperimentConfig):
    jobs = [(config, i) for i in range(config.samples)]
    if config.workers <= 1:
        return [task(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(task, jobs, chunksize=max(1, len(jobs) // (4 * config.workers))))


def typical_rank_experiment(config: ExperimentConfig) -> ExperimentReport:
    if config.degree < 3:
        raise ValueError("experiments need degree >= 3")
    start = time.perf_counter()
    n = config.degree
    rank_counts, root_counts = {}, {}
    counterexamples, failures = [], []
    for res in _run(_rank_task, config):
        if "error" in res:
            failures.append(res)
            continue
        rank_counts[res["bucket"]] = rank_counts.get(res["bucket"], 0) + 1
        key = str(res["roots"])
        root_counts[key] = root_counts.get(key, 0) + 1
        all_real = res["roots"] == n
        if res["realExact"] is not None and (res["realExact"] == n) != all_real:
            counterexamples.append(res)
        elif res["realExact"] is None and (all_real or res["realUpper"] >= n):
            counterexamples.append(res)
    report = ExperimentReport("typical_rank", config, rank_counts, root_counts, counterexamples, failures)
    report.wall_time = time.perf_counter() - start
    return report


def _fuzz_problems(rep, n):
    problems = []
    if not rep["consistent"]:
        problems.append("criterionA != criterionB")
    if rep["criterionB"] and not rep["criterionC"]:
        problems.append("criterionB without criterionC")
    phi, psi = rep["windingPhi"], rep["windingPsi"]
    if phi is not None and psi is not None and psi != phi - 1:
        problems.append("windingPsi != windingPhi - 1")
    if rep["criterionA"] and (phi != -(n - 1) or psi != -n):
        problems.append("all-real form with unexpected winding degrees")
    if rep["windingPhiExact"] is not None and phi is not None and rep["windingPhiExact"] != phi:
        problems.append("exact and numeric phi degrees differ")
    return problems


def theorem_fuzz(config: ExperimentConfig) -> ExperimentReport:
    if config.degree < 3:
        raise ValueError("experiments need degree >= 3")
    start = time.perf_counter()
    n = config.degree
    root_counts = {}
    counterexamples, failures = [], []
    tallies = {"criterionA": 0, "criterionB": 0, "criterionC": 0, "criterionCWithoutA": 0}
    for res in _run(_fuzz_task, config):
        if "error" in res:
            failures.append(res)
            continue
        rep = res["report"]
        for k in ("criterionA", "criterionB", "criterionC"):
            tallies[k] += rep[k]
        tallies["criterionCWithoutA"] += rep["criterionC"] and not rep["criterionA"]
        key = "all_real" if rep["criterionA"] else "not_all_real"
        root_counts[key] = root_counts.get(key, 0) + 1
        problems = _fuzz_problems(rep, n)
        if problems:
            counterexamples.append({"index": res["index"], "problems": problems, "report": rep})
    report = ExperimentReport("theorem_fuzz", config, {}, root_counts, counterexamples, failures,
                              extra={"criterionTallies": tallies})
    report.wall_time = time.perf_counter() - start
    return report


def default_workers() -> int:
    return int(os.environ.get("REALFORMS_WORKERS", "1"))


__all__ = [
    "ExperimentConfig",
    "ExperimentReport",
    "sample_form",
    "typical_rank_experiment",
    "theorem_fuzz",
    "default_workers",
]

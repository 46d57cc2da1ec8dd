"""How often does each real rank occur for random cubics?

For cubics the real rank is 2 with one real root and 3 with three, so the two
histograms must agree. The run is seeded and repeatable; set
REALFORMS_WORKERS to spread it over several processes.
"""
from realforms import ExperimentConfig, theorem_fuzz, typical_rank_experiment
from realforms.experiments import default_workers

cfg = ExperimentConfig(degree=3, samples=500, seed=0, workers=default_workers())
report = typical_rank_experiment(cfg)
print("rank histogram:     ", report.rank_counts)
print("real-root histogram:", report.root_counts)
print(f"counterexamples: {len(report.counterexamples)}  time: {report.wall_time:.1f}s")

fuzz = theorem_fuzz(ExperimentConfig(degree=6, samples=100, seed=1, workers=default_workers()))
print("degree 6 criterion tallies:", fuzz.extra["criterionTallies"], "counterexamples:", len(fuzz.counterexamples))
print(report.to_csv())

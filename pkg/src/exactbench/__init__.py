"""exactbench: ground-truth benchmarking for post-hoc feature attribution.

Generates synthetic and semi-synthetic image classification datasets with
pixel-level ground-truth masks, trains small reference classifiers, runs
attribution methods (in-process baselines or external plug-ins), and scores
the resulting maps with Precision, an exact earth-mover's score, and
importance mass accuracy, ranked on per-challenge leaderboards.
"""

__version__ = "0.1.0"

from .errors import ExactBenchError

__all__ = ["ExactBenchError", "__version__"]

from .batch import ACTION_KINDS, BatchResult, EpisodeRecord, episode_record, roster_for, run_batch
from .metrics import MeanSE, MetricSummary, aggregate, mean_and_se, reward_over_time
from .stats import (
    EXACT_LIMIT,
    MatrixCell,
    SignificanceMatrix,
    WilcoxonResult,
    signed_ranks,
    significance_matrix,
    wilcoxon_signed_rank,
)

__all__ = [
    "BatchResult",
    "EpisodeRecord",
    "ACTION_KINDS",
    "run_batch",
    "episode_record",
    "roster_for",
    "MetricSummary",
    "MeanSE",
    "aggregate",
    "mean_and_se",
    "reward_over_time",
    "wilcoxon_signed_rank",
    "WilcoxonResult",
    "signed_ranks",
    "significance_matrix",
    "SignificanceMatrix",
    "MatrixCell",
    "EXACT_LIMIT",
]

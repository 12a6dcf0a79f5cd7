"""Wilcoxon signed-rank test and the pairwise significance matrix.

The test is two-sided on seed-paired cumulative rewards.  Zero differences
are dropped; absolute differences are ranked with average ranks on ties; the
statistic is W = min(W+, W-).  For n <= 25 remaining pairs the p-value is
exact, computed by counting sign assignments over the realised rank multiset
(dynamic programming over doubled ranks, equivalent to full 2^n
enumeration).  Larger n uses the normal approximation with tie correction
and a continuity correction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from ..core.errors import NoInformationError, PairingError
from .batch import BatchResult

EXACT_LIMIT = 25


class WilcoxonResult(NamedTuple):
    w: float
    p: float
    n: int  # pairs remaining after dropping zero differences
    method: str  # "exact" or "normal"


def signed_ranks(differences: Sequence[float]) -> list[tuple[float, float]]:
    """(difference, rank) pairs with average ranks on tied magnitudes."""
    indexed = sorted(range(len(differences)), key=lambda i: abs(differences[i]))
    ranks = [0.0] * len(differences)
    i = 0
    while i < len(indexed):
        j = i
        while j + 1 < len(indexed) and abs(differences[indexed[j + 1]]) == abs(differences[indexed[i]]):
            j += 1
        average = (i + j) / 2 + 1  # ranks are 1-based
        for k in range(i, j + 1):
            ranks[indexed[k]] = average
        i = j + 1
    return [(d, r) for d, r in zip(differences, ranks)]


def wilcoxon_signed_rank(x: Sequence[float], y: Sequence[float]) -> WilcoxonResult:
    if len(x) != len(y):
        raise PairingError(f"paired samples differ in length: {len(x)} vs {len(y)}")
    differences = [a - b for a, b in zip(x, y) if a != b]
    if not differences:
        raise NoInformationError("all paired differences are zero")
    ranked = signed_ranks(differences)
    n = len(differences)
    w_plus = math.fsum(r for d, r in ranked if d > 0)
    w_minus = math.fsum(r for d, r in ranked if d < 0)
    w = min(w_plus, w_minus)

    if n <= EXACT_LIMIT:
        return WilcoxonResult(w, _exact_p(ranked, w), n, "exact")
    return WilcoxonResult(w, _normal_p(ranked, w, n), n, "normal")


def _exact_p(ranked: list[tuple[float, float]], w: float) -> float:
    # Doubling the ranks makes tied (half-integer) ranks exact integers, so
    # the subset-sum table counts sign assignments without rounding.
    doubled = [int(round(2 * r)) for _, r in ranked]
    total = sum(doubled)
    target = int(round(2 * w))
    ways = [0] * (total + 1)
    ways[0] = 1
    for r in doubled:
        for s in range(total, r - 1, -1):
            ways[s] += ways[s - r]
    cumulative = sum(ways[: target + 1])
    # Two-sided tail of a symmetric null: counts divide a power of two, so
    # the division below is exact in binary floating point.
    return min(1.0, 2.0 * cumulative / 2 ** len(doubled))


def _normal_p(ranked: list[tuple[float, float]], w: float, n: int) -> float:
    mu = n * (n + 1) / 4.0
    tie_groups: dict[float, int] = {}
    for _, r in ranked:
        tie_groups[r] = tie_groups.get(r, 0) + 1
    tie_term = sum(t**3 - t for t in tie_groups.values())
    sigma2 = n * (n + 1) * (2 * n + 1) / 24.0 - tie_term / 48.0
    sigma = math.sqrt(sigma2)
    numerator = max(0.0, abs(w - mu) - 0.5)  # continuity correction
    return min(1.0, math.erfc(numerator / (sigma * math.sqrt(2.0))))


@dataclass(frozen=True)
class MatrixCell:
    policy_a: str
    policy_b: str
    n_pairs: int
    w: float | None
    p: float | None
    significant: bool
    degenerate: bool = False


@dataclass
class SignificanceMatrix:
    policies: tuple[str, ...]
    alpha: float
    config_digest: str
    config_label: str
    cells: dict[tuple[int, int], MatrixCell] = field(default_factory=dict)

    def cell(self, i: int, j: int) -> MatrixCell | None:
        if i == j:
            return None  # diagonal is undefined
        key = (i, j) if i < j else (j, i)
        return self.cells.get(key)


def significance_matrix(batches: list[BatchResult], alpha: float) -> SignificanceMatrix:
    """Pairwise two-sided signed-rank comparisons over seed-paired rewards.

    All batches must share config digest, base seed, and episode count (the
    common-random-numbers pairing).  Pairs where either episode crashed are
    dropped.  A degenerate comparison (all differences zero) is rendered as
    not significant.
    """
    if not batches:
        raise PairingError("no batches to compare")
    first = batches[0]
    for b in batches[1:]:
        if b.config_digest != first.config_digest:
            raise PairingError(
                f"config digests differ: {first.policy}={first.config_digest[:12]} vs {b.policy}={b.config_digest[:12]}"
            )
        if b.base_seed != first.base_seed or b.n != first.n:
            raise PairingError(
                f"seed pairing differs: {first.policy}=(seed {first.base_seed}, n {first.n}) "
                f"vs {b.policy}=(seed {b.base_seed}, n {b.n})"
            )
    matrix = SignificanceMatrix(
        policies=tuple(b.policy for b in batches),
        alpha=alpha,
        config_digest=first.config_digest,
        config_label=first.config_label,
    )
    for i in range(len(batches)):
        for j in range(i + 1, len(batches)):
            xs, ys = [], []
            for ri, rj in zip(batches[i].paired_rewards(), batches[j].paired_rewards()):
                if ri is not None and rj is not None:
                    xs.append(ri)
                    ys.append(rj)
            try:
                result = wilcoxon_signed_rank(xs, ys)
                cell = MatrixCell(
                    batches[i].policy, batches[j].policy, result.n,
                    result.w, result.p, result.p < alpha,
                )
            except NoInformationError:
                cell = MatrixCell(batches[i].policy, batches[j].policy, 0, None, None, False, degenerate=True)
            matrix.cells[(i, j)] = cell
    return matrix

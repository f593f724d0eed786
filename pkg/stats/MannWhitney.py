import numpy as np
from scipy.stats import mannwhitneyu

from utils.const import EXACT_MWU_LIMIT
from utils.Exceptions import EmptySampleException


def mann_whitney_u(a, b) -> float:
    """Two-tailed p of the unpaired Wilcoxon-Mann-Whitney test.

    Exact null distribution for small tie-free samples (combined size up to
    EXACT_MWU_LIMIT); otherwise the normal approximation with midrank tie
    correction and continuity correction.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if len(a) == 0 or len(b) == 0:
        raise EmptySampleException()

    pooled = np.concatenate([a, b])
    if np.all(pooled == pooled[0]):
        # no rank separation at all; scipy would divide by a zero variance
        return 1.0

    hasTies = len(np.unique(pooled)) < len(pooled)
    if len(pooled) <= EXACT_MWU_LIMIT and not hasTies:
        result = mannwhitneyu(a, b, alternative="two-sided", method="exact")
    else:
        result = mannwhitneyu(a, b, alternative="two-sided", method="asymptotic", use_continuity=True)
    return float(min(1.0, result.pvalue))

import numpy as np
from scipy.stats import rankdata

from utils.const import EffectMagnitude
from utils.Exceptions import EmptySampleException

# |2 * A12 - 1| boundaries between negligible, small, medium and large
MAGNITUDE_LEVELS = [0.147, 0.33, 0.474]


def vargha_delaney_a12(a, b) -> float:
    """Probability that a value from `a` exceeds one from `b`, ties counted half.

    Uses the rank-sum form (2 * R1 - na * (na + 1)) / (2 * na * nb), where R1
    is the midrank sum of `a` in the pooled sample.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        raise EmptySampleException()

    ranks = rankdata(np.concatenate([a, b]))
    r1 = float(ranks[:na].sum())
    return (2 * r1 - na * (na + 1)) / (2 * na * nb)


def effect_magnitude(a12: float) -> EffectMagnitude:
    scaled = abs(2 * a12 - 1)
    if scaled < MAGNITUDE_LEVELS[0]:
        return "negligible"
    elif scaled < MAGNITUDE_LEVELS[1]:
        return "small"
    elif scaled < MAGNITUDE_LEVELS[2]:
        return "medium"
    return "large"

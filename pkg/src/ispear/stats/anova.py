from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ispear.errors import DegenerateGroupsError
from ispear.stats.special import f_sf


@dataclass(frozen=True)
class TestResult:
    """Test statistic (LRT chi-square or ANOVA F), its df and upper-tail p."""

    __test__ = False  # keep pytest from collecting this as a test class

    statistic: float
    df: object
    p_value: float


def anova_oneway(groups) -> TestResult:
    """One-way ANOVA F test across ``groups`` (a list of observation lists).

    Conventions for degenerate data: if every observation is identical the
    result is F=0, p=1; if the within-group variance is zero but group means
    differ, F=inf, p=0.
    """
    arrays = [np.asarray(g, dtype=np.float64).ravel() for g in groups]
    k = len(arrays)
    if k < 2:
        raise DegenerateGroupsError(f"ANOVA needs at least 2 groups, got {k}")
    if any(a.size == 0 for a in arrays):
        raise DegenerateGroupsError("ANOVA groups must be non-empty")
    n = sum(a.size for a in arrays)
    if n <= k:
        raise DegenerateGroupsError(f"ANOVA needs more observations ({n}) than groups ({k})")
    pooled = np.concatenate(arrays)
    grand = pooled.mean()
    ssb = float(sum(a.size * (a.mean() - grand) ** 2 for a in arrays))
    ssw = float(sum(((a - a.mean()) ** 2).sum() for a in arrays))
    df_b, df_w = k - 1, n - k
    # sums of squares below round-off of the data magnitude count as zero
    scale = n * (1e-12 * float(np.abs(pooled).max())) ** 2
    if ssb <= scale:
        return TestResult(0.0, (df_b, df_w), 1.0)
    if ssw <= scale:
        return TestResult(float("inf"), (df_b, df_w), 0.0)
    f = (ssb / df_b) / (ssw / df_w)
    return TestResult(f, (df_b, df_w), f_sf(f, df_b, df_w))

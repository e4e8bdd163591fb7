"""Per-feature full-vs-null mixed-model comparisons."""
from __future__ import annotations

from dataclasses import dataclass

from ispear.stats.anova import TestResult
from ispear.stats.lmm import LmmFit, ModelSpec, fit_lmm, fit_ols, lrt


@dataclass(frozen=True)
class FeatureAnalysis:
    response: str
    full: LmmFit
    null_fixed: LmmFit  # emotion dropped, random intercept kept
    null_random: LmmFit  # random intercept dropped
    fixed_test: TestResult
    random_test: TestResult


def analyze_response(table, response, fixed="emotion", random_group="gender", reference="happy",
                     boundary_correction=False) -> FeatureAnalysis:
    spec = ModelSpec(response, (fixed,), random_group, {fixed: reference})
    full = fit_lmm(spec, table)
    null_fixed = fit_lmm(spec.without_fixed(), table)
    null_random = fit_ols(spec, table)
    return FeatureAnalysis(
        response,
        full,
        null_fixed,
        null_random,
        lrt(full, null_fixed),
        lrt(full, null_random, boundary_correction=boundary_correction),
    )

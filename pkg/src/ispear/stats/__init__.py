"""Special functions, ANOVA, OLS / linear mixed models and likelihood-ratio tests."""
from ispear.stats.special import betainc, chi_square_sf, f_sf, gammaincc, ln_gamma
from ispear.stats.anova import TestResult, anova_oneway

__all__ = [
    "betainc",
    "chi_square_sf",
    "f_sf",
    "gammaincc",
    "ln_gamma",
    "TestResult",
    "anova_oneway",
]

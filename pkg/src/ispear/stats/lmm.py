"""OLS and single-factor random-intercept linear mixed models fitted by ML.

Model: y = X beta + Z b + e,  b ~ N(0, sigma_b^2 I),  e ~ N(0, sigma_e^2 I),
with Z the indicator matrix of one grouping factor. Writing theta =
sigma_b / sigma_e, the covariance of group g is sigma_e^2 (I + theta^2 11').
Its inverse and determinant are available in closed form, so for fixed theta
the GLS estimate of beta and the ML residual variance follow from per-group
sufficient statistics, and the profiled deviance

    d(theta) = sum_g log(1 + n_g theta^2) + n (1 + log(2 pi q(theta) / n))

is a cheap scalar function minimized over theta in [0, theta_max].
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ispear.errors import (
    DataMismatchError,
    NotNestedError,
    RankDeficientError,
    SingularGroupError,
    UnknownColumnError,
)
from ispear.stats.anova import TestResult
from ispear.stats.special import chi_square_sf

THETA_MAX = 100.0
GOLDEN_TOL = 1e-8
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ModelSpec:
    """Response, categorical fixed effects (treatment-coded) and an optional random intercept."""

    response: str
    fixed: tuple = ("emotion",)
    random_group: str | None = None
    reference: dict = field(default_factory=lambda: {"emotion": "happy"})

    def without_fixed(self) -> "ModelSpec":
        return ModelSpec(self.response, (), self.random_group, self.reference)

    def without_random(self) -> "ModelSpec":
        return ModelSpec(self.response, self.fixed, None, self.reference)


@dataclass(frozen=True, eq=False)
class LmmFit:
    spec: ModelSpec
    beta: np.ndarray
    beta_names: tuple
    beta_se: np.ndarray
    theta: float
    sigma_e: float
    sigma_b: float
    blups: dict
    log_lik: float
    n_params: int
    n_obs: int

    @property
    def deviance(self) -> float:
        return -2.0 * self.log_lik

    def coef(self, name):
        return float(self.beta[self.beta_names.index(name)])


def _column(table, name):
    try:
        return np.asarray(table[name])
    except (KeyError, IndexError, ValueError) as exc:
        raise UnknownColumnError(f"unknown column {name!r}") from exc


def factor_levels(values, reference=None) -> list:
    levels = sorted({str(v) for v in values})
    if reference is not None:
        if reference not in levels:
            raise ValueError(f"reference level {reference!r} not among levels {levels}")
        levels.remove(reference)
        levels.insert(0, reference)
    return levels


def design_matrix(spec: ModelSpec, table) -> tuple:
    """Intercept plus treatment contrasts. Returns (X, column names)."""
    n = len(_column(table, spec.response))
    cols = [np.ones(n)]
    names = ["(Intercept)"]
    for factor in spec.fixed:
        values = np.array([str(v) for v in _column(table, factor)], dtype=object)
        levels = factor_levels(values, spec.reference.get(factor))
        if len(levels) < 2:
            raise ValueError(f"factor {factor!r} needs >= 2 levels, got {levels}")
        for level in levels[1:]:
            cols.append((values == level).astype(np.float64))
            names.append(f"{factor}[{level}]")
    return np.column_stack(cols), tuple(names)


class _Profile:
    """Sufficient statistics for evaluating the profiled deviance at many theta."""

    def __init__(self, X, y, codes, n_groups):
        self.n, self.p = X.shape
        if np.linalg.matrix_rank(X) < self.p:
            raise RankDeficientError(f"design matrix of shape {X.shape} is rank deficient")
        # center/scale y for conditioning; the intercept absorbs the shift
        self.shift = float(y.mean())
        spread = float(y.std())
        self.scale = spread if spread > 0 else 1.0
        ys = (y - self.shift) / self.scale
        self.constant = spread == 0.0
        self.XtX = X.T @ X
        self.Xty = X.T @ ys
        self.yty = float(ys @ ys)
        self.ng = np.bincount(codes, minlength=n_groups).astype(np.float64)
        self.S = np.zeros((n_groups, self.p))
        np.add.at(self.S, codes, X)
        self.t = np.bincount(codes, weights=ys, minlength=n_groups)

    def solve(self, thetas):
        thetas = np.atleast_1d(np.asarray(thetas, dtype=np.float64))
        th2 = thetas[:, None] ** 2
        c = th2 / (1.0 + self.ng[None, :] * th2)
        A = self.XtX[None] - np.einsum("tg,gi,gj->tij", c, self.S, self.S)
        b = self.Xty[None] - np.einsum("tg,gi,g->ti", c, self.S, self.t)
        beta = np.linalg.solve(A, b[..., None])[..., 0]
        q = self.yty - (c * self.t[None] ** 2).sum(axis=1) - np.einsum("ti,ti->t", beta, b)
        q = np.maximum(q, 0.0)
        logdet = np.log1p(self.ng[None, :] * th2).sum(axis=1)
        return beta, q, A, c, logdet

    def deviance(self, thetas):
        _, q, _, _, logdet = self.solve(thetas)
        with np.errstate(divide="ignore"):
            dev = logdet + self.n * (1.0 + np.log(2.0 * np.pi * q / self.n))
        return dev + 2.0 * self.n * math.log(self.scale)

    def minimize(self, theta_max):
        if self.constant:
            return 0.0
        grid = np.unique(np.concatenate([[0.0], np.geomspace(1e-4, theta_max, 241),
                                         np.linspace(0.0, theta_max, 1001)]))
        dev = self.deviance(grid)
        i = int(np.argmin(dev))
        lo = grid[max(i - 1, 0)]
        hi = grid[min(i + 1, grid.size - 1)]
        f = lambda th: float(self.deviance(th)[0])  # noqa: E731
        a, b = lo, hi
        x1 = b - _INVPHI * (b - a)
        x2 = a + _INVPHI * (b - a)
        f1, f2 = f(x1), f(x2)
        while b - a > GOLDEN_TOL:
            if f1 <= f2:
                b, x2, f2 = x2, x1, f1
                x1 = b - _INVPHI * (b - a)
                f1 = f(x1)
            else:
                a, x1, f1 = x1, x2, f2
                x2 = a + _INVPHI * (b - a)
                f2 = f(x2)
        candidates = [(f1, x1), (f2, x2), (float(dev[i]), float(grid[i]))]
        return min(candidates)[1]


def _group_codes(table, name):
    values = np.array([str(v) for v in _column(table, name)], dtype=object)
    levels = factor_levels(values)
    if len(levels) < 2:
        raise SingularGroupError(f"grouping factor {name!r} has a single level {levels}")
    index = {lvl: k for k, lvl in enumerate(levels)}
    return np.array([index[v] for v in values], dtype=np.int64), levels


def _fit(spec, table, theta, random):
    y = np.asarray(_column(table, spec.response), dtype=np.float64)
    X, names = design_matrix(spec, table)
    if random:
        codes, levels = _group_codes(table, spec.random_group)
    else:
        codes, levels = np.zeros(y.size, dtype=np.int64), ["(all)"]
    prof = _Profile(X, y, codes, len(levels))
    if theta is None:
        theta = prof.minimize(THETA_MAX) if random else 0.0
    theta = float(theta)
    beta_s, q, A, c, _ = prof.solve([theta])
    beta_s, q, A, c = beta_s[0], float(q[0]), A[0], c[0]
    n = prof.n
    sigma2_s = q / n
    beta = beta_s * prof.scale
    beta[0] += prof.shift
    beta_se = np.sqrt(np.clip(np.diag(np.linalg.inv(A)) * sigma2_s, 0.0, None)) * prof.scale
    sigma_e = math.sqrt(sigma2_s) * prof.scale
    if q <= 0.0:
        log_lik = math.inf
    else:
        log_lik = -0.5 * float(prof.deviance([theta])[0])
    blups = {}
    if random:
        resid_sum = prof.t - prof.S @ beta_s
        blups = {lvl: float(c[k] * resid_sum[k] * prof.scale) for k, lvl in enumerate(levels)}
    n_params = X.shape[1] + (2 if random else 1)
    return LmmFit(spec, beta, names, beta_se, theta, sigma_e, theta * sigma_e, blups, log_lik, n_params, n)


def fit_ols(spec: ModelSpec, table) -> LmmFit:
    """Least squares with ML variance RSS/n; ``spec.random_group`` is ignored."""
    return _fit(spec.without_random(), table, 0.0, random=False)


def fit_lmm(spec: ModelSpec, table, theta: float | None = None) -> LmmFit:
    """ML fit of the random-intercept model; pass ``theta`` to hold it fixed."""
    if spec.random_group is None:
        raise ValueError("fit_lmm needs spec.random_group; use fit_ols for fixed-effects models")
    if theta is not None and not 0.0 <= theta:
        raise ValueError("theta must be non-negative")
    return _fit(spec, table, theta, random=True)


def profiled_deviance(spec: ModelSpec, table, thetas) -> np.ndarray:
    """Profiled ML deviance of the random-intercept model at each theta."""
    y = np.asarray(_column(table, spec.response), dtype=np.float64)
    X, _ = design_matrix(spec, table)
    codes, levels = _group_codes(table, spec.random_group)
    return _Profile(X, y, codes, len(levels)).deviance(thetas)


def lrt(full: LmmFit, null: LmmFit, boundary_correction: bool = False) -> TestResult:
    """Likelihood-ratio test of a nested null model against the full model.

    With ``boundary_correction`` and a null that drops the random intercept,
    the p-value uses the 50:50 mixture of chi-square(df-1) and chi-square(df).
    """
    if full.n_obs != null.n_obs or full.spec.response != null.spec.response:
        raise DataMismatchError(
            f"fits differ in data: {full.spec.response}/{full.n_obs} vs {null.spec.response}/{null.n_obs}"
        )
    df = full.n_params - null.n_params
    if df <= 0:
        raise NotNestedError(f"null model must have fewer parameters (df = {df})")
    stat = null.deviance - full.deviance
    if math.isnan(stat):  # both fits exact (constant response)
        stat = 0.0
    stat = max(0.0, stat)
    if math.isinf(stat):
        return TestResult(stat, df, 0.0)
    p = chi_square_sf(stat, df)
    drops_random = full.spec.random_group is not None and null.spec.random_group is None
    if boundary_correction and drops_random and stat > 0.0:
        lower = chi_square_sf(stat, df - 1) if df > 1 else 0.0
        p = 0.5 * p + 0.5 * lower
    return TestResult(stat, df, p)


@dataclass(frozen=True)
class GroupSummary:
    label: str
    n: int
    mean: float
    sd: float
    se: float


def group_summary(table, group_by: str, response: str) -> list:
    groups = np.array([str(v) for v in _column(table, group_by)], dtype=object)
    y = np.asarray(_column(table, response), dtype=np.float64)
    out = []
    for level in factor_levels(groups):
        vals = y[groups == level]
        sd = float(vals.std(ddof=1)) if vals.size > 1 else 0.0
        out.append(GroupSummary(level, int(vals.size), float(vals.mean()), sd, sd / math.sqrt(vals.size)))
    return out

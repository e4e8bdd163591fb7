"""Log-gamma and the chi-square / F upper tail probabilities.

Regularized incomplete gamma and beta functions use the classic series and
modified-Lentz continued-fraction expansions; both converge to ~1e-15.
"""
from __future__ import annotations

import math

from ispear.errors import DomainError

_EPS = 1e-16
_TINY = 1e-300
_MAX_ITER = 10_000

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
# Bernoulli-number coefficients of the Stirling series for ln Gamma.
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    x = float(x)
    if not x > 0.0 or math.isinf(x):
        raise DomainError(f"ln_gamma requires finite x > 0, got {x}")
    # recurrence up to x >= 12 where the asymptotic series is exact to eps
    shift = 0.0
    while x < 12.0:
        shift += math.log(x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    series = 0.0
    term = inv
    for c in _STIRLING:
        series += c * term
        term *= inv2
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + series - shift


def _gamma_series(a, x):
    # P(a, x) by its power series; valid for x < a + 1
    ap = a
    total = delta = 1.0 / a
    for _ in range(_MAX_ITER):
        ap += 1.0
        delta *= x / ap
        total += delta
        if abs(delta) < abs(total) * _EPS:
            break
    return total * math.exp(-x + a * math.log(x) - ln_gamma(a))


def _gamma_cfrac(a, x):
    # Q(a, x) by Lentz's continued fraction; valid for x >= a + 1
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x + a * math.log(x) - ln_gamma(a)) * h


def gammaincc(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x)."""
    if a <= 0.0 or x < 0.0:
        raise DomainError(f"gammaincc requires a > 0 and x >= 0, got a={a}, x={x}")
    if x == 0.0:
        return 1.0
    if math.isinf(x):
        return 0.0
    if x < a + 1.0:
        return 1.0 - _gamma_series(a, x)
    return _gamma_cfrac(a, x)


def _beta_cfrac(a, b, x):
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _MAX_ITER):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return h


def betainc(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b)."""
    if a <= 0.0 or b <= 0.0 or not 0.0 <= x <= 1.0:
        raise DomainError(f"betainc requires a, b > 0 and 0 <= x <= 1, got a={a}, b={b}, x={x}")
    if x == 0.0 or x == 1.0:
        return x
    log_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * math.log(x) + b * math.log1p(-x)
    front = math.exp(log_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cfrac(a, b, x) / a
    return 1.0 - front * _beta_cfrac(b, a, 1.0 - x) / b


def chi_square_sf(x: float, df: float) -> float:
    """P(X > x) for X ~ chi-square with ``df`` degrees of freedom."""
    if df <= 0 or x < 0 or math.isnan(x):
        raise DomainError(f"chi_square_sf requires x >= 0 and df > 0, got x={x}, df={df}")
    return min(1.0, max(0.0, gammaincc(0.5 * df, 0.5 * x)))


def f_sf(x: float, d1: float, d2: float) -> float:
    """P(X > x) for X ~ F(d1, d2)."""
    if d1 <= 0 or d2 <= 0 or x < 0 or math.isnan(x):
        raise DomainError(f"f_sf requires x >= 0 and d1, d2 > 0, got x={x}, d1={d1}, d2={d2}")
    if x == 0.0:
        return 1.0
    if math.isinf(x):
        return 0.0
    # P(F > x) = I_{d2 / (d2 + d1 x)}(d2/2, d1/2)
    z = d2 / (d2 + d1 * x)
    return min(1.0, max(0.0, betainc(0.5 * d2, 0.5 * d1, z)))

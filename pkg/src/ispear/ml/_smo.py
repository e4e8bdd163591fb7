"""SMO solver for the C-SVC dual, numba and numpy variants.

Solves  min_a  0.5 a'Qa - e'a  s.t.  y'a = 0,  0 <= a_i <= C_i,  with
Q_ij = y_i y_j K_ij. Working pairs are chosen by maximal violation for i
and second-order gain for j (Fan, Chen & Lin 2005); the loop stops when the
maximal KKT violation m(a) - M(a) drops below ``tol``. Both variants break
ties toward the highest index so they follow the same trajectory.
"""
import numpy as np

from ispear._backend import njit, resolve

TAU = 1e-12


@njit
def _select_nb(K, y, C, alpha, G):
    n = y.size
    gmax = -np.inf
    i = -1
    for t in range(n):
        if y[t] > 0:
            if alpha[t] < C[t] and -G[t] >= gmax:
                gmax = -G[t]
                i = t
        else:
            if alpha[t] > 0.0 and G[t] >= gmax:
                gmax = G[t]
                i = t
    gmax2 = -np.inf
    j = -1
    best = np.inf
    if i < 0:
        return i, j, gmax, gmax2
    for t in range(n):
        if y[t] > 0:
            if alpha[t] > 0.0:
                diff = gmax + G[t]
                if G[t] >= gmax2:
                    gmax2 = G[t]
            else:
                continue
        else:
            if alpha[t] < C[t]:
                diff = gmax - G[t]
                if -G[t] >= gmax2:
                    gmax2 = -G[t]
            else:
                continue
        if diff > 0.0:
            quad = K[i, i] + K[t, t] - 2.0 * K[i, t]
            if quad <= 0.0:
                quad = TAU
            obj = -(diff * diff) / quad
            if obj <= best:
                best = obj
                j = t
    return i, j, gmax, gmax2


@njit
def _smo_nb(K, y, C, tol, max_iter):
    n = y.size
    alpha = np.zeros(n)
    G = -np.ones(n)
    it = 0
    converged = False
    while it < max_iter:
        i, j, gmax, gmax2 = _select_nb(K, y, C, alpha, G)
        if i < 0 or j < 0 or gmax + gmax2 < tol:
            converged = True
            break
        it += 1
        old_ai = alpha[i]
        old_aj = alpha[j]
        ci = C[i]
        cj = C[j]
        if y[i] != y[j]:
            quad = K[i, i] + K[j, j] - 2.0 * K[i, j]
            if quad <= 0.0:
                quad = TAU
            delta = (-G[i] - G[j]) / quad
            diff = old_ai - old_aj
            ai = old_ai + delta
            aj = old_aj + delta
            if diff > 0.0:
                if aj < 0.0:
                    aj = 0.0
                    ai = diff
            else:
                if ai < 0.0:
                    ai = 0.0
                    aj = -diff
            if diff > ci - cj:
                if ai > ci:
                    ai = ci
                    aj = ci - diff
            else:
                if aj > cj:
                    aj = cj
                    ai = cj + diff
        else:
            quad = K[i, i] + K[j, j] - 2.0 * K[i, j]
            if quad <= 0.0:
                quad = TAU
            delta = (G[i] - G[j]) / quad
            total = old_ai + old_aj
            ai = old_ai - delta
            aj = old_aj + delta
            if total > ci:
                if ai > ci:
                    ai = ci
                    aj = total - ci
            else:
                if aj < 0.0:
                    aj = 0.0
                    ai = total
            if total > cj:
                if aj > cj:
                    aj = cj
                    ai = total - cj
            else:
                if ai < 0.0:
                    ai = 0.0
                    aj = total
        alpha[i] = ai
        alpha[j] = aj
        dai = (ai - old_ai) * y[i]
        daj = (aj - old_aj) * y[j]
        for k in range(n):
            G[k] += y[k] * (K[i, k] * dai + K[j, k] * daj)
    return alpha, G, it, converged


def _select_np(K, y, C, alpha, G):
    pos = y > 0
    up = np.where(pos, alpha < C, alpha > 0.0)
    low = np.where(pos, alpha > 0.0, alpha < C)
    if not up.any():
        return -1, -1, -np.inf, -np.inf
    score_i = np.where(up, -y * G, -np.inf)
    gmax = score_i.max()
    i = int(np.flatnonzero(score_i == gmax)[-1])
    yg = y * G
    gmax2 = yg[low].max() if low.any() else -np.inf
    diff = gmax + yg
    cand = low & (diff > 0.0)
    if not cand.any():
        return i, -1, gmax, gmax2
    quad = K[i, i] + np.diag(K) - 2.0 * K[i]
    quad = np.where(quad <= 0.0, TAU, quad)
    obj = np.where(cand, -(diff * diff) / quad, np.inf)
    best = obj.min()
    j = int(np.flatnonzero(obj == best)[-1])
    return i, j, gmax, gmax2


def _smo_np(K, y, C, tol, max_iter):
    n = y.size
    alpha = np.zeros(n)
    G = -np.ones(n)
    it = 0
    converged = False
    while it < max_iter:
        i, j, gmax, gmax2 = _select_np(K, y, C, alpha, G)
        if i < 0 or j < 0 or gmax + gmax2 < tol:
            converged = True
            break
        it += 1
        old_ai, old_aj = alpha[i], alpha[j]
        ci, cj = C[i], C[j]
        quad = K[i, i] + K[j, j] - 2.0 * K[i, j]
        if quad <= 0.0:
            quad = TAU
        if y[i] != y[j]:
            delta = (-G[i] - G[j]) / quad
            diff = old_ai - old_aj
            ai, aj = old_ai + delta, old_aj + delta
            if diff > 0.0:
                if aj < 0.0:
                    aj, ai = 0.0, diff
            elif ai < 0.0:
                ai, aj = 0.0, -diff
            if diff > ci - cj:
                if ai > ci:
                    ai, aj = ci, ci - diff
            elif aj > cj:
                aj, ai = cj, cj + diff
        else:
            delta = (G[i] - G[j]) / quad
            total = old_ai + old_aj
            ai, aj = old_ai - delta, old_aj + delta
            if total > ci:
                if ai > ci:
                    ai, aj = ci, total - ci
            elif aj < 0.0:
                aj, ai = 0.0, total
            if total > cj:
                if aj > cj:
                    aj, ai = cj, total - cj
            elif ai < 0.0:
                ai, aj = 0.0, total
        alpha[i], alpha[j] = ai, aj
        dai = (ai - old_ai) * y[i]
        daj = (aj - old_aj) * y[j]
        G += y * (K[i] * dai + K[j] * daj)
    return alpha, G, it, converged


def smo_solve(K, y, C, tol=1e-3, max_iter=10_000_000, backend=None):
    """Return (alpha, gradient, iterations, converged)."""
    K = np.ascontiguousarray(K, dtype=np.float64)
    y = np.ascontiguousarray(y, dtype=np.float64)
    C = np.ascontiguousarray(np.broadcast_to(C, y.shape), dtype=np.float64)
    if resolve(backend) == "numba":
        return _smo_nb(K, y, C, float(tol), int(max_iter))
    return _smo_np(K, y, C, float(tol), int(max_iter))


def compute_rho(y, C, alpha, G):
    """Threshold rho; decision values are sum_i a_i y_i K(x_i, x) - rho."""
    yg = y * G
    at_upper = alpha >= C
    at_lower = alpha <= 0.0
    free = ~(at_upper | at_lower)
    if free.any():
        return float(yg[free].mean())
    pos = y > 0
    ub_mask = (at_upper & ~pos) | (at_lower & pos)
    lb_mask = (at_upper & pos) | (at_lower & ~pos)
    ub = yg[ub_mask].min() if ub_mask.any() else np.inf
    lb = yg[lb_mask].max() if lb_mask.any() else -np.inf
    return float((ub + lb) / 2.0)

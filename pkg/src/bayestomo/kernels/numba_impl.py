"""Numba-compiled kernels. Same contracts as ``numpy_impl``.

Parallelism is over independent output elements only (no shared
accumulators except exact min/max reductions), so results do not depend
on the thread count.
"""

import numpy as np
from numba import njit, prange


@njit(parallel=True, cache=True)
def record_log_likelihood(points, axes, outcomes, counts):
    m_total = points.shape[0]
    k_total = axes.shape[0]
    out = np.empty(m_total)
    for m in prange(m_total):
        acc = 0.0
        for k in range(k_total):
            d = (
                axes[k, 0] * points[m, 0]
                + axes[k, 1] * points[m, 1]
                + axes[k, 2] * points[m, 2]
            )
            p = 0.5 * (1.0 + outcomes[k] * d)
            if p <= 0.0:
                acc = -np.inf
                break
            acc += counts[k] * np.log(p)
        out[m] = acc
    return out


@njit(parallel=True, cache=True)
def lemma4_max_residual(ptable):
    e_total = ptable.shape[0]
    worst = 0.0
    for i in prange(e_total):
        local = 0.0
        for j in range(e_total):
            res = abs(ptable[i & j] - (ptable[i] + ptable[j] - ptable[i | j]))
            if res > local:
                local = res
        worst = max(worst, local)
    return worst

"""Pure-numpy implementations of the hot kernels.

These are the reference semantics; the numba backend must match them
(up to floating-point association differences well below 1e-12).
"""

import numpy as np


def record_log_likelihood(points, axes, outcomes, counts):
    """Log-likelihood of a grouped measurement record for many Bloch points.

    points   : (M, 3) Bloch vectors of the candidate states
    axes     : (K, 3) unit measurement axes (one row per distinct group)
    outcomes : (K,)   +1.0 or -1.0
    counts   : (K,)   positive multiplicities

    Returns (M,) sums of counts[k] * log(0.5*(1 + outcomes[k] * points.axes[k])).
    Rows where any observed outcome has probability <= 0 get -inf.
    """
    dots = points @ axes.T
    prob = 0.5 * (1.0 + outcomes * dots)
    bad = (prob <= 0.0).any(axis=1)
    # keep -inf out of the matmul: BLAS may turn inf*0 blocks into NaN
    logp = np.log(np.where(prob > 0.0, prob, 1.0))
    out = logp @ counts
    out[bad] = -np.inf
    return out


def lemma4_max_residual(ptable):
    """Worst |P(S1&S2) - (P(S1) + P(S2) - P(S1|S2))| over all event pairs.

    ptable : (E,) probabilities indexed by atom bitmask, E = 2**n_atoms.
    Sweeps all E*E ordered pairs in chunks of one row at a time.
    """
    e_total = ptable.shape[0]
    idx = np.arange(e_total, dtype=np.int64)
    worst = 0.0
    for i in range(e_total):
        both = ptable[i & idx]
        either = ptable[i | idx]
        res = np.abs(both - (ptable[i] + ptable - either))
        worst = max(worst, float(res.max()))
    return worst

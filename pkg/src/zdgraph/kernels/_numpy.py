"""Pure-numpy implementations of the hot kernels."""

import numpy as np

# pattern codes shared with the numba path
C4, P4, TWO_K2 = 1, 2, 3


def modular_zero_products(values, modulus):
    v = np.asarray(values, dtype=np.int64)
    return (v[:, None] * v[None, :]) % np.int64(modulus) == 0


def disjoint_masks(masks):
    m = np.asarray(masks, dtype=np.uint64)
    return (m[:, None] & m[None, :]) == 0


def _classify(e01, e02, e03, e12, e13, e23):
    """Vectorised C4/P4/2K2 classification of 4-vertex induced subgraphs."""
    e01, e02, e03, e12, e13, e23 = (np.asarray(x, dtype=np.int64) for x in (e01, e02, e03, e12, e13, e23))
    d0 = e01 + e02 + e03
    d1 = e01 + e12 + e13
    d2 = e02 + e12 + e23
    d3 = e03 + e13 + e23
    edges = (d0 + d1 + d2 + d3) // 2
    dmax = np.maximum(np.maximum(d0, d1), np.maximum(d2, d3))
    dmin = np.minimum(np.minimum(d0, d1), np.minimum(d2, d3))
    code = np.zeros(edges.shape, dtype=np.int64)
    code[(edges == 4) & (dmin == 2) & (dmax == 2)] = C4
    # three edges, no isolated vertex and no claw centre: exactly P4
    code[(edges == 3) & (dmin == 1) & (dmax == 2)] = P4
    code[(edges == 2) & (dmin == 1) & (dmax == 1)] = TWO_K2
    return code


def first_forbidden_quad(adj):
    """Lexicographically first 4-subset inducing C4, P4 or 2K2.

    Returns an int64 array ``[a, b, c, d, code]``; all -1 when none exists.
    """
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    out = np.full(5, -1, dtype=np.int64)
    if n < 4:
        return out
    ci, di = np.triu_indices(n, k=1)
    for a in range(n - 3):
        for b in range(a + 1, n - 2):
            sel = ci > b
            c = ci[sel]
            d = di[sel]
            code = _classify(adj[a, b], adj[a, c], adj[a, d], adj[b, c], adj[b, d], adj[c, d])
            hit = np.flatnonzero(code)
            if hit.size:
                k = hit[0]
                out[:] = (a, b, c[k], d[k], code[k])
                return out
    return out

"""numba-compiled versions of the kernels in ``_numpy``."""

import numpy as np
from numba import njit


@njit(cache=True)
def modular_zero_products(values, modulus):
    k = values.shape[0]
    out = np.zeros((k, k), dtype=np.bool_)
    for i in range(k):
        vi = values[i]
        for j in range(i, k):
            z = (vi * values[j]) % modulus == 0
            out[i, j] = z
            out[j, i] = z
    return out


@njit(cache=True)
def disjoint_masks(masks):
    k = masks.shape[0]
    out = np.zeros((k, k), dtype=np.bool_)
    for i in range(k):
        mi = masks[i]
        for j in range(i, k):
            z = (mi & masks[j]) == 0
            out[i, j] = z
            out[j, i] = z
    return out


@njit(cache=True)
def _code(adj, a, b, c, d):
    e01 = adj[a, b]
    e02 = adj[a, c]
    e03 = adj[a, d]
    e12 = adj[b, c]
    e13 = adj[b, d]
    e23 = adj[c, d]
    d0 = e01 + e02 + e03
    d1 = e01 + e12 + e13
    d2 = e02 + e12 + e23
    d3 = e03 + e13 + e23
    edges = (d0 + d1 + d2 + d3) // 2
    dmax = max(max(d0, d1), max(d2, d3))
    dmin = min(min(d0, d1), min(d2, d3))
    if edges == 4 and dmin == 2 and dmax == 2:
        return 1
    if edges == 3 and dmin == 1 and dmax == 2:
        return 2
    if edges == 2 and dmin == 1 and dmax == 1:
        return 3
    return 0


@njit(cache=True)
def _first_quad(adj):
    n = adj.shape[0]
    out = np.full(5, -1, dtype=np.int64)
    for a in range(n - 3):
        for b in range(a + 1, n - 2):
            for c in range(b + 1, n - 1):
                for d in range(c + 1, n):
                    code = _code(adj, a, b, c, d)
                    if code:
                        out[0] = a
                        out[1] = b
                        out[2] = c
                        out[3] = d
                        out[4] = code
                        return out
    return out


def first_forbidden_quad(adj):
    return _first_quad(np.ascontiguousarray(adj, dtype=np.int64))

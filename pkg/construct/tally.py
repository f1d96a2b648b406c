"""Compiled survivor tallies for the search-based constructions.

support is an (S, B) 0/1 matrix: survivor s has a 1 at candidate index b.
weights holds the codeword weight of each survivor. Each parent p (a 0/1
row over the candidates) gets a (B, n_weights) histogram of increments,
one row per candidate index that could be added to it.
"""
import numpy as np
from numba import njit, prange


@njit(parallel=True, cache=True)
def tally_completions(support, weights, parents, n_weights):
    """Survivors with exactly one 1 outside the parent, counted at it"""
    n_parents, n_candidates = parents.shape
    increments = np.zeros((n_parents, n_candidates, n_weights),
                          dtype=np.int64)
    for p in prange(n_parents):
        for s in range(support.shape[0]):
            outside = -1
            count = 0
            for b in range(n_candidates):
                if support[s, b] == 1 and parents[p, b] == 0:
                    count += 1
                    if count > 1:
                        break
                    outside = b
            if count == 1:
                increments[p, outside, weights[s]] += 1
    return increments


@njit(parallel=True, cache=True)
def tally_coverage(support, weights, parents, n_weights):
    """Survivors not yet hit by the parent, counted at each of their 1s"""
    n_parents, n_candidates = parents.shape
    increments = np.zeros((n_parents, n_candidates, n_weights),
                          dtype=np.int64)
    for p in prange(n_parents):
        for s in range(support.shape[0]):
            covered = False
            for c in range(n_candidates):
                if support[s, c] == 1 and parents[p, c] == 1:
                    covered = True
                    break
            if covered:
                continue
            for c in range(n_candidates):
                if support[s, c] == 1:
                    increments[p, c, weights[s]] += 1
    return increments

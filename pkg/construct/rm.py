"""Reed-Muller scores, the RM partition and the RM-based rate profiles"""
from dataclasses import dataclass

import numpy as np

from channel.gaussian import ga_reliability_order
from codec.coding import RateProfile, block_exponent
from construct.exceptions import ConstructionError


def rm_score(index, n_stages):
    """s(i): number of ones in the binary representation of i"""
    if not 0 <= index < 1 << n_stages:
        raise ConstructionError(
            f'index {index} outside [0, {1 << n_stages})')
    return bin(int(index)).count('1')


def rm_scores(n_bits):
    n_stages = block_exponent(n_bits)
    return np.array([rm_score(i, n_stages) for i in range(n_bits)])


@dataclass(frozen=True, eq=False)
class RmPartition:
    """Split of the indices around the threshold score r.

    initial_set holds s(i) > r, optional_set s(i) = r. When K equals the
    size of initial_set the RM profile exists and the code is exact.
    """
    n_bits: int
    k_bits: int
    order: int
    initial_set: np.ndarray
    optional_set: np.ndarray
    generalized_set: np.ndarray

    @property
    def exact(self):
        return self.initial_set.size == self.k_bits

    @property
    def missing(self):
        """Number of optional indices an information set must take"""
        return self.k_bits - self.initial_set.size


def rm_partition(n_bits, k_bits):
    scores = rm_scores(n_bits)
    if not 1 <= k_bits <= n_bits:
        raise ConstructionError(f'K={k_bits} outside [1, {n_bits}]')
    # smallest r with |{s > r}| <= K, hence K < |{s >= r}| unless K = N
    order = -1
    while np.count_nonzero(scores > order) > k_bits:
        order += 1
    return RmPartition(
        n_bits=n_bits,
        k_bits=k_bits,
        order=order,
        initial_set=np.flatnonzero(scores > order),
        optional_set=np.flatnonzero(scores == order),
        generalized_set=np.flatnonzero(scores >= order),
    )


def rm_profile(n_bits, k_bits):
    partition = rm_partition(n_bits, k_bits)
    if not partition.exact:
        raise ConstructionError(
            f'no RM profile for ({n_bits},{k_bits}); nearest sizes are '
            f'{partition.initial_set.size} and '
            f'{partition.generalized_set.size}')
    return RateProfile.from_indices(n_bits, partition.initial_set)


def rm_polar_profile(n_bits, k_bits, stats=None):
    """All s(i) > r plus the most reliable s(i) = r indices"""
    partition = rm_partition(n_bits, k_bits)
    if partition.exact:
        return RateProfile.from_indices(n_bits, partition.initial_set)
    if stats is None:
        raise ConstructionError('RM-polar needs channel statistics')
    optional = partition.optional_set
    ranked = optional[np.argsort(stats.z[optional], kind='stable')]
    return RateProfile.from_indices(
        n_bits,
        np.concatenate([partition.initial_set, ranked[:partition.missing]]))


def ga_profile(n_bits, k_bits, stats):
    """The K most reliable bit channels"""
    if stats.n_bits != n_bits:
        raise ConstructionError('statistics do not match the block length')
    return RateProfile.from_indices(
        n_bits, ga_reliability_order(stats)[:k_bits])

"""List-Search construction of PAC rate profiles.

One noiseless SCL run over the generalized set C = A u B collects a pool of
low-weight codewords. A search node is an information set A plus some of
the optional indices B; its metric is the weight histogram of the pool
codewords that lie in the node's code and use at least one optional index.
Nodes grow one optional index per round. After every round duplicates are
dropped, nodes failing the finite-complexity condition at the design SNR
are removed, and the Lg nodes with the smallest metrics (compared
lexicographically from the lowest weight up) survive.
"""
import logging
from dataclasses import dataclass

import numpy as np

from channel.gaussian import (
    ChannelParams, finite_complexity_mask, gaussian_approximation,
)
from codec.coding import CodeConfig, ConvPolynomial, RateProfile
from construct.exceptions import ConstructionError
from construct.rm import rm_partition
from construct.tally import tally_completions
from spectrum.estimation import DEFAULT_NOISELESS_LLR, spectrum_survivors
from spectrum.weights import WeightSpectrum

logger = logging.getLogger(__name__)


def _metric_vector(metric):
    if isinstance(metric, WeightSpectrum):
        counts = metric.counts
        if not counts:
            return np.zeros(0, dtype=np.int64)
        return metric.as_vector(max(counts))
    return np.asarray(metric, dtype=np.int64).ravel()


def ls_metric_compare(first, second):
    """-1, 0 or 1 as `first` is smaller, equal or larger than `second`"""
    a, b = _metric_vector(first), _metric_vector(second)
    length = max(a.size, b.size)
    a = np.pad(a, (0, length - a.size))
    b = np.pad(b, (0, length - b.size))
    differ = np.flatnonzero(a != b)
    if not differ.size:
        return 0
    return 1 if a[differ[0]] > b[differ[0]] else -1


def lexicographic_order(metrics, descending=False):
    """Stable row order of a (P, W) metric matrix, weight 0 first"""
    keys = -metrics if descending else metrics
    return np.lexsort(keys.T[::-1])


def first_occurrences(rows):
    _, first = np.unique(rows, axis=0, return_index=True)
    return np.sort(first)


def grow(parents, parent_metrics, increments, allowed=None):
    """Children adding one unused (allowed) candidate to each parent"""
    free = parents == 0
    if allowed is not None:
        free &= allowed[np.newaxis, :]
    parent_idx, new_idx = np.nonzero(free)
    children = parents[parent_idx]
    children[np.arange(parent_idx.size), new_idx] = 1
    metrics = parent_metrics[parent_idx] + increments[parent_idx, new_idx]
    return children, metrics, parent_idx


@dataclass(eq=False)
class LsSearchNode:
    info_set: np.ndarray
    remaining_optional: np.ndarray
    metric: WeightSpectrum


@dataclass(eq=False)
class LsOutcome:
    profile: RateProfile
    metric: WeightSpectrum
    nodes: list
    partition: object


class ListSearch:

    def __init__(self, n_bits, k_bits, conv_poly, list_size, search_size,
                 design_snr_db, keep_duplicates=False,
                 noiseless_llr=DEFAULT_NOISELESS_LLR):
        if int(search_size) < 1:
            raise ConstructionError('search list size must be at least 1')
        if isinstance(conv_poly, str):
            conv_poly = ConvPolynomial.from_octal(conv_poly)
        self.n_bits = n_bits
        self.k_bits = k_bits
        self.conv_poly = conv_poly
        self.list_size = list_size
        self.search_size = int(search_size)
        self.design_snr_db = design_snr_db
        self.keep_duplicates = keep_duplicates
        self.noiseless_llr = noiseless_llr

    def run(self):
        partition = rm_partition(self.n_bits, self.k_bits)
        if partition.exact:
            profile = RateProfile.from_indices(self.n_bits,
                                               partition.initial_set)
            node = LsSearchNode(partition.initial_set,
                                np.zeros(0, dtype=np.int64), WeightSpectrum())
            return LsOutcome(profile, WeightSpectrum(), [node], partition)

        stats = gaussian_approximation(
            self.n_bits,
            ChannelParams(self.design_snr_db, self.k_bits / self.n_bits))
        support, weights = self._survivor_support(partition)
        n_weights = self.n_bits + 1

        nodes = np.zeros((1, partition.optional_set.size), dtype=np.uint8)
        metrics = np.zeros((1, n_weights), dtype=np.int64)
        for step in range(partition.missing):
            increments = tally_completions(support, weights, nodes,
                                           n_weights)
            nodes, metrics, _ = grow(nodes, metrics, increments)
            nodes, metrics = self._prune(nodes, metrics, partition, stats)
            logger.info('LS round %d/%d: %d nodes, best metric head %s',
                        step + 1, partition.missing, len(nodes),
                        _head(metrics[0]))

        search_nodes = [self._search_node(row, metric, partition)
                        for row, metric in zip(nodes, metrics)]
        best = search_nodes[0]
        profile = RateProfile.from_indices(self.n_bits, best.info_set)
        return LsOutcome(profile, best.metric, search_nodes, partition)

    def _survivor_support(self, partition):
        cfg = CodeConfig.from_info_set(
            self.n_bits, partition.generalized_set, self.conv_poly)
        pool = spectrum_survivors(cfg, self.list_size, self.noiseless_llr)
        support = pool.sources[:, partition.optional_set].astype(np.uint8)
        used = support.sum(axis=1)
        # codewords of A alone are common to every node
        useful = (used >= 1) & (used <= partition.missing)
        logger.info('LS pool: %d survivors, %d use optional indices',
                    len(used), int(useful.sum()))
        return support[useful], pool.weights[useful]

    def _prune(self, nodes, metrics, partition, stats):
        if not self.keep_duplicates:
            keep = first_occurrences(nodes)
            nodes, metrics = nodes[keep], metrics[keep]

        profiles = np.zeros((len(nodes), self.n_bits), dtype=np.uint8)
        profiles[:, partition.initial_set] = 1
        profiles[:, partition.optional_set] = nodes
        passing = finite_complexity_mask(stats, profiles)
        if not passing.any():
            raise ConstructionError(
                f'every candidate violates the finite-complexity condition '
                f'at {self.design_snr_db} dB; raise the design SNR')
        nodes, metrics = nodes[passing], metrics[passing]

        order = lexicographic_order(metrics)[:self.search_size]
        return nodes[order], metrics[order]

    def _search_node(self, row, metric, partition):
        chosen = partition.optional_set[row == 1]
        return LsSearchNode(
            info_set=np.sort(np.concatenate([partition.initial_set,
                                             chosen])),
            remaining_optional=partition.optional_set[row == 0],
            metric=WeightSpectrum(
                {d: a for d, a in enumerate(metric) if a},
                self.list_size),
        )


def _head(metric):
    nonzero = np.flatnonzero(metric)
    return {int(d): int(metric[d]) for d in nonzero[:3]}


def ls_construct(n_bits, k_bits, conv_poly, list_size, search_size,
                 design_snr_db, keep_duplicates=False):
    return ListSearch(n_bits, k_bits, conv_poly, list_size, search_size,
                      design_snr_db, keep_duplicates).run().profile

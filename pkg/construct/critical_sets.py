"""Path-splitting critical sets.

The complete set (CPSCS) holds the information indices at the threshold
RM score(s): s = r + 1 for an exact RM code, s in {r, r + 1} otherwise.
The reduced sets (PSCS) grow greedily over the complete set, first through
CS1 (the lower score) and then CS2, ranking candidate subsets by how many
low-weight pool codewords they hit.
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from construct.exceptions import ConstructionError
from construct.list_search import first_occurrences, grow, \
    lexicographic_order
from construct.rm import rm_partition, rm_scores
from construct.tally import tally_coverage
from spectrum.estimation import DEFAULT_NOISELESS_LLR, spectrum_survivors

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class CriticalSets:
    cpscs: np.ndarray
    pscs_ladder: list = field(default_factory=list)


def critical_subsets(n_bits, k_bits, info_set):
    """(CS1, CS2) of an information set"""
    partition = rm_partition(n_bits, k_bits)
    info = np.sort(np.asarray(info_set, dtype=np.int64))
    if info.size != k_bits:
        raise ConstructionError(
            f'information set has {info.size} indices, expected {k_bits}')
    scores = rm_scores(n_bits)[info]
    order = partition.order
    if partition.exact:
        return info[scores == order + 1], np.zeros(0, dtype=np.int64)
    return info[scores == order], info[scores == order + 1]


def cpscs_construct(n_bits, k_bits, info_set):
    first, second = critical_subsets(n_bits, k_bits, info_set)
    return np.sort(np.concatenate([first, second]))


def pscs_construct(cfg, list_size, search_size,
                   noiseless_llr=DEFAULT_NOISELESS_LLR):
    """CPSCS and the ladder of best PSCS of every size"""
    if int(search_size) < 1:
        raise ConstructionError('search list size must be at least 1')
    first, second = critical_subsets(cfg.n_bits, cfg.k_bits, cfg.info_set)
    candidates = np.concatenate([first, second])
    cpscs = np.sort(candidates)
    if not candidates.size:
        return CriticalSets(cpscs, [])

    pool = spectrum_survivors(cfg, list_size, noiseless_llr)
    support = pool.sources[:, candidates].astype(np.uint8)
    hit = support.any(axis=1)
    support, weights = support[hit], pool.weights[hit]
    n_weights = cfg.n_bits + 1

    in_first = np.zeros(candidates.size, dtype=bool)
    in_first[:first.size] = True

    beam = np.zeros((1, candidates.size), dtype=np.uint8)
    beam_metrics = np.zeros((1, n_weights), dtype=np.int64)
    ladder = []
    previous = None
    for size in range(1, candidates.size + 1):
        allowed = in_first if size <= first.size else ~in_first
        increments = tally_coverage(support, weights, beam, n_weights)
        children, metrics, _ = grow(beam, beam_metrics, increments, allowed)
        keep = first_occurrences(children)
        children, metrics = children[keep], metrics[keep]
        order = lexicographic_order(metrics, descending=True)
        children, metrics = children[order], metrics[order]

        if previous is None:
            best = 0
        else:
            extends = np.all(children[:, previous == 1] == 1, axis=1)
            best = int(np.argmax(extends))
        kept = list(range(min(int(search_size), len(children))))
        if best not in kept:
            kept[-1] = best

        previous = children[best]
        ladder.append(np.sort(candidates[previous == 1]))
        beam, beam_metrics = children[kept], metrics[kept]
        logger.debug('PSCS size %d: %d candidates kept', size, len(kept))

    logger.info('PSCS ladder for %s: %d sizes from %d survivors', cfg,
                len(ladder), len(weights))
    return CriticalSets(cpscs, ladder)


def format_index_list(indices):
    return ''.join(f'{int(i)}\n' for i in indices)


def read_index_file(path):
    """One index per line; '#' comments and blank lines are skipped"""
    try:
        with open(path) as stream:
            lines = [line.split('#')[0].strip() for line in stream]
    except OSError as exc:
        raise ConstructionError(f'cannot read {path}: {exc}') from exc
    try:
        return np.array([int(line) for line in lines if line],
                        dtype=np.int64)
    except ValueError:
        raise ConstructionError(f'{path} must list one index per line') \
            from None


def format_ladder_csv(ladder):
    rows = ['size,indices']
    rows += [f'{len(entry)},{" ".join(str(int(i)) for i in entry)}'
             for entry in ladder]
    return '\n'.join(rows) + '\n'

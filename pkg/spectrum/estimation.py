"""Partial weight spectra from list decoding over a noiseless channel.

The all-zero codeword is received with every channel LLR equal to the same
positive constant. With min-sum combining the final path metric of a path
is then the Hamming weight of its codeword, so the L survivors of a full
splitting SCL run are low-weight codewords of the code. Survivors are
re-encoded and their weights tallied.
"""
import logging
from dataclasses import dataclass

import numpy as np

from codec.transforms import encode_sources, rate_profile_embed
from decoders.scl import ListDecoder
from spectrum.exceptions import SpectrumError
from spectrum.weights import WeightSpectrum, min_weight

logger = logging.getLogger(__name__)

DEFAULT_NOISELESS_LLR = 1.0
MAX_ENUMERATION_BITS = 20
_ENUMERATION_CHUNK = 1 << 16


@dataclass(eq=False)
class SurvivorPool:
    """Source words of the surviving paths and their codeword weights"""
    sources: np.ndarray
    weights: np.ndarray
    list_size_used: int


def effective_list_size(cfg, list_size):
    if int(list_size) < 2:
        raise SpectrumError('spectrum estimation needs a list size >= 2')
    if cfg.k_bits < 63 and list_size > 1 << cfg.k_bits:
        logger.warning('list size %d clamped to 2^K = %d for %s',
                       list_size, 1 << cfg.k_bits, cfg)
        return 1 << cfg.k_bits
    return int(list_size)


def spectrum_survivors(cfg, list_size, noiseless_llr=DEFAULT_NOISELESS_LLR):
    """Noiseless SCL run with splitting on every information index"""
    if not noiseless_llr > 0:
        raise SpectrumError('the noiseless LLR must be positive')
    list_size = effective_list_size(cfg, list_size)
    decoder = ListDecoder(cfg, list_size, split_set=None, min_sum=True)
    outcome = decoder.run(np.full(cfg.n_bits, float(noiseless_llr)))
    weights = encode_sources(outcome.sources, cfg).sum(axis=1,
                                                       dtype=np.int64)
    return SurvivorPool(outcome.sources, weights, list_size)


def estimate_spectrum(cfg, list_size, noiseless_llr=DEFAULT_NOISELESS_LLR):
    pool = spectrum_survivors(cfg, list_size, noiseless_llr)
    spectrum = WeightSpectrum.from_weights(pool.weights, pool.list_size_used)
    if any(d > 0 for d in spectrum.counts):
        logger.info('%s, L=%d: d_min=%d, A_dmin=%d', cfg,
                    pool.list_size_used, min_weight(spectrum),
                    spectrum.count(min_weight(spectrum)))
    return spectrum


def enumerate_spectrum(cfg):
    """Exact spectrum by encoding all 2^K messages"""
    k_bits = cfg.k_bits
    if k_bits > MAX_ENUMERATION_BITS:
        raise SpectrumError(
            f'exhaustive enumeration is limited to K <= '
            f'{MAX_ENUMERATION_BITS}')
    histogram = np.zeros(cfg.n_bits + 1, dtype=np.int64)
    shifts = np.arange(k_bits - 1, -1, -1, dtype=np.int64)
    for start in range(0, 1 << k_bits, _ENUMERATION_CHUNK):
        stop = min(start + _ENUMERATION_CHUNK, 1 << k_bits)
        values = np.arange(start, stop, dtype=np.int64)
        messages = ((values[:, np.newaxis] >> shifts) & 1).astype(np.uint8)
        codewords = encode_sources(rate_profile_embed(messages, cfg), cfg)
        histogram += np.bincount(codewords.sum(axis=1, dtype=np.int64),
                                 minlength=cfg.n_bits + 1)
    return WeightSpectrum({d: a for d, a in enumerate(histogram) if a})

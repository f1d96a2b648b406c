"""Weight spectra and the union bound on ML block error rate"""
import numpy as np
from scipy.special import erfc

from spectrum.exceptions import SpectrumError


class WeightSpectrum:
    """Sparse weight enumerator d -> A_d.

    Zero counts are not stored. list_size_used records the SCL list size
    of the estimating run (None for an exhaustive enumeration).
    """

    def __init__(self, counts=None, list_size_used=None):
        cleaned = {}
        for weight, count in dict(counts or {}).items():
            weight, count = int(weight), int(count)
            if weight < 0 or count < 0:
                raise SpectrumError('weights and counts must be non-negative')
            if count:
                cleaned[weight] = count
        self._counts = dict(sorted(cleaned.items()))
        self.list_size_used = list_size_used

    @classmethod
    def from_weights(cls, weights, list_size_used=None):
        weights = np.asarray(weights, dtype=np.int64)
        if not weights.size:
            return cls({}, list_size_used)
        histogram = np.bincount(weights)
        return cls({d: a for d, a in enumerate(histogram) if a},
                   list_size_used)

    @property
    def counts(self):
        return dict(self._counts)

    @property
    def total(self):
        return sum(self._counts.values())

    def count(self, weight):
        return self._counts.get(weight, 0)

    def as_vector(self, n_bits):
        """Dense counts over weights 0..N"""
        vector = np.zeros(n_bits + 1, dtype=np.int64)
        for weight, count in self._counts.items():
            if weight > n_bits:
                raise SpectrumError(f'weight {weight} exceeds N={n_bits}')
            vector[weight] = count
        return vector

    def __bool__(self):
        return bool(self._counts)

    def __eq__(self, other):
        if not isinstance(other, WeightSpectrum):
            return NotImplemented
        return self._counts == other._counts

    def __repr__(self):
        return f'WeightSpectrum({self._counts}, ' \
               f'list_size_used={self.list_size_used})'


def min_weight(spectrum):
    nonzero = [d for d in spectrum.counts if d > 0]
    if not nonzero:
        raise SpectrumError('spectrum has no nonzero-weight codeword')
    return min(nonzero)


def q_function(x):
    return 0.5 * erfc(np.asarray(x, dtype=np.float64) / np.sqrt(2.0))


def union_bound(spectrum, rate, ebn0_db, dominant_only=False):
    """sum_d A_d Q(sqrt(2 d R Eb/N0)); only the d_min term if dominant_only"""
    if not spectrum:
        raise SpectrumError('cannot bound with an empty spectrum')
    terms = {d: a for d, a in spectrum.counts.items() if d > 0}
    if dominant_only and terms:
        d_min = min(terms)
        terms = {d_min: terms[d_min]}
    if not terms:
        return 0.0
    weights = np.array(list(terms), dtype=np.float64)
    counts = np.array(list(terms.values()), dtype=np.float64)
    ebn0 = 10.0 ** (ebn0_db / 10.0)
    return float(np.sum(counts * q_function(np.sqrt(2.0 * weights * rate
                                                    * ebn0))))


def union_bound_table(spectrum, rate, snr_grid):
    """(snr_db, full bound, d_min term) rows"""
    return [(snr, union_bound(spectrum, rate, snr),
             union_bound(spectrum, rate, snr, dominant_only=True))
            for snr in snr_grid]

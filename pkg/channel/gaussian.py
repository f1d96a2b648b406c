"""BI-AWGN channel with BPSK, and bit-channel reliabilities by Gaussian
approximation.

The recursion tracks the mean m of the (consistent Gaussian) LLR density of
every bit channel. The lower branch doubles the mean; the upper branch uses
a piecewise fit of phi^-1(1 - (1 - phi(m))^2). From the means:

    z  = exp(-m / 4)            (sigma_i^2 = 2 / m)
    e0 = 1 - log2(1 + z)        cutoff rate
    capacity = J(sqrt(2 m))     J-function fit
"""
import logging
from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from channel.exceptions import ChannelError

logger = logging.getLogger(__name__)

# J(sigma) ~ (1 - 2^(-H1 sigma^(2 H2)))^H3
J_H1 = 0.3073
J_H2 = 0.8935
J_H3 = 1.1064

PolarizedProfiles = namedtuple(
    'PolarizedProfiles', ['cum_rate', 'cum_e0', 'cum_capacity'])


@dataclass(frozen=True)
class ChannelParams:
    """Eb/N0 in dB and code rate of a BPSK transmission over AWGN"""
    ebn0_db: float
    rate: float

    def __post_init__(self):
        if not 0 < self.rate <= 1:
            raise ChannelError(f'rate must lie in (0, 1], got {self.rate}')
        if not np.isfinite(self.ebn0_db):
            raise ChannelError('Eb/N0 must be finite')

    @property
    def sigma2(self):
        return 1.0 / (2.0 * self.rate * 10.0 ** (self.ebn0_db / 10.0))

    @staticmethod
    def bpsk(bits):
        """0 -> +1, 1 -> -1"""
        return 1.0 - 2.0 * np.asarray(bits, dtype=np.float64)

    def llrs(self, received):
        return 2.0 * np.asarray(received, dtype=np.float64) / self.sigma2

    def noise(self, rng, shape):
        return rng.normal(0.0, np.sqrt(self.sigma2), size=shape)


@dataclass(frozen=True, eq=False)
class ChannelStats:
    """Per bit-channel mean LLR, Bhattacharyya z, cutoff rate and capacity"""
    n_bits: int
    mean_llr: np.ndarray
    z: np.ndarray
    e0: np.ndarray
    capacity: np.ndarray


def phi_upper(mean):
    """Mean LLR of the upper (check-node) branch"""
    mean = np.asarray(mean, dtype=np.float64)
    return np.select(
        [mean > 12.0, mean > 3.5, mean > 1.0],
        [0.9861 * mean - 2.3152,
         mean * (0.009005 * mean + 0.7694) - 0.9507,
         mean * (0.062883 * mean + 0.3678) - 0.1627],
        default=mean * (0.2202 * mean + 0.06448),
    )


def j_function(sigma):
    sigma = np.asarray(sigma, dtype=np.float64)
    return (1.0 - 2.0 ** (-J_H1 * sigma ** (2.0 * J_H2))) ** J_H3


def gaussian_approximation(n_bits, design_snr):
    if n_bits < 1 or n_bits & (n_bits - 1):
        raise ChannelError(f'block length {n_bits} is not a power of two')
    sigma2 = design_snr.sigma2
    if not sigma2 > 0:
        raise ChannelError('noise variance must be positive')

    mean = np.array([2.0 / sigma2])
    while mean.size < n_bits:
        # the index bit processed first ends up most significant
        grown = np.empty(2 * mean.size)
        grown[0::2] = phi_upper(mean)
        grown[1::2] = 2.0 * mean
        mean = grown

    z = np.exp(-mean / 4.0)
    e0 = 1.0 - np.log2(1.0 + z)
    capacity = j_function(np.sqrt(2.0 * mean))
    logger.debug('GA for N=%d at %.2f dB (R=%.4f): sum e0 = %.3f',
                 n_bits, design_snr.ebn0_db, design_snr.rate, e0.sum())
    return ChannelStats(n_bits, mean, z, e0, capacity)


def ga_reliability_order(stats):
    """Bit-channel indices from most to least reliable"""
    return np.argsort(stats.z, kind='stable')


def _profile_bits(stats, profile):
    bits = getattr(profile, 'bits', profile)
    bits = np.asarray(bits, dtype=np.int64)
    if bits.shape[-1] != stats.n_bits:
        raise ChannelError(
            f'profile length {bits.shape[-1]} does not match N='
            f'{stats.n_bits}')
    return bits


def polarized_profiles(stats, profile):
    bits = _profile_bits(stats, profile)
    return PolarizedProfiles(
        np.cumsum(bits),
        np.cumsum(stats.e0),
        np.cumsum(stats.capacity),
    )


def check_finite_complexity(stats, profile):
    """cum_rate[i] < cum_e0[i] wherever cum_rate[i] > 0"""
    cum_rate, cum_e0, _ = polarized_profiles(stats, profile)
    active = cum_rate > 0
    return bool(np.all(cum_rate[active] < cum_e0[active]))


def finite_complexity_mask(stats, profiles):
    """Row-wise check_finite_complexity for a (P, N) stack of profiles"""
    bits = _profile_bits(stats, profiles)
    cum_rate = np.cumsum(bits, axis=-1)
    cum_e0 = np.cumsum(stats.e0)
    return np.all((cum_rate == 0) | (cum_rate < cum_e0), axis=-1)

"""PAC code parameters: convolution polynomial, rate profile, code config.

A PAC code is identified by (N, K, A, g). The rate profile is stored as a
length-N bit vector alpha with alpha[i] = 1 for information indices; its
hex form follows the published tables, where index 0 is the most
significant bit of the first hex digit.
"""
from dataclasses import dataclass

import numpy as np

from codec.exceptions import CodeConfigError, ProfileFormatError

HEX_DIGITS = '0123456789ABCDEF'

# the decoders pack the shift register of a path into one int64
MAX_CONV_MEMORY = 62

_NIBBLE_WEIGHTS = np.array([8, 4, 2, 1], dtype=np.uint8)


def is_power_of_two(value):
    return value >= 1 and value & (value - 1) == 0


def block_exponent(n_bits):
    """Return n such that N = 2^n"""
    if not is_power_of_two(int(n_bits)):
        raise CodeConfigError(
            f'block length {n_bits} is not a power of two')
    return int(n_bits).bit_length() - 1


def profile_to_hex(bits):
    """Format a rate-profile bit vector as an upper-case hex string"""
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.ndim != 1 or bits.size % 4:
        raise ProfileFormatError(
            'hex profiles need a length that is a multiple of 4')
    digits = bits.reshape(-1, 4) @ _NIBBLE_WEIGHTS
    return ''.join(HEX_DIGITS[d] for d in digits)


def hex_to_profile(text, n_bits):
    """Parse a hex string into a length-N rate-profile bit vector"""
    text = str(text).strip().upper()
    if n_bits % 4 or len(text) != n_bits // 4:
        raise ProfileFormatError(
            f'expected {n_bits // 4} hex digits for N={n_bits}, '
            f'got {len(text)}')
    bad = set(text) - set(HEX_DIGITS)
    if bad:
        raise ProfileFormatError(
            f'invalid hex characters: {"".join(sorted(bad))}')
    digits = np.array([HEX_DIGITS.index(c) for c in text], dtype=np.uint8)
    return ((digits[:, np.newaxis] >> np.arange(3, -1, -1)) & 1) \
        .astype(np.uint8).ravel()


@dataclass(frozen=True)
class ConvPolynomial:
    """Rate-1 convolution polynomial g = (g_0, ..., g_m) over GF(2)"""
    coeffs: tuple = (1,)

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs or any(c not in (0, 1) for c in coeffs):
            raise CodeConfigError('polynomial coefficients must be bits')
        if coeffs[0] != 1 or coeffs[-1] != 1:
            raise CodeConfigError('polynomial needs g_0 = g_m = 1')
        if len(coeffs) - 1 > MAX_CONV_MEMORY:
            raise CodeConfigError(
                f'polynomial memory is limited to {MAX_CONV_MEMORY}')
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def from_octal(cls, text):
        """Build from octal notation, e.g. '3211' or '0o133'"""
        digits = str(text).strip().lower()
        if digits.startswith('0o'):
            digits = digits[2:]
        try:
            value = int(digits, 8)
        except ValueError:
            raise CodeConfigError(
                f'{text!r} is not an octal polynomial') from None
        if value <= 0:
            raise CodeConfigError('polynomial must be nonzero')
        return cls(tuple(int(b) for b in format(value, 'b')))

    @property
    def octal_repr(self):
        return format(int(''.join(map(str, self.coeffs)), 2), 'o')

    @property
    def memory(self):
        return len(self.coeffs) - 1

    @property
    def taps(self):
        """g_1..g_m packed with g_j at bit j-1, matching the shift register"""
        return sum(1 << (j - 1)
                   for j, c in enumerate(self.coeffs) if j and c)

    def as_array(self):
        return np.array(self.coeffs, dtype=np.uint8)

    def __str__(self):
        return self.octal_repr


class RateProfile:
    """Information/frozen assignment alpha of a length-N code"""

    def __init__(self, bits):
        bits = np.array(bits, dtype=np.int64)
        if bits.ndim != 1:
            raise CodeConfigError('a rate profile is a bit vector')
        if bits.size and (bits.min() < 0 or bits.max() > 1):
            raise CodeConfigError('rate profile entries must be 0 or 1')
        block_exponent(bits.size)
        self._bits = bits.astype(np.uint8)
        self._bits.flags.writeable = False

    @classmethod
    def from_indices(cls, n_bits, indices):
        indices = np.asarray(sorted(int(i) for i in indices), dtype=np.int64)
        if indices.size and (indices[0] < 0 or indices[-1] >= n_bits):
            raise CodeConfigError(f'information index outside [0, {n_bits})')
        if np.unique(indices).size != indices.size:
            raise CodeConfigError('information indices must be distinct')
        bits = np.zeros(n_bits, dtype=np.uint8)
        bits[indices] = 1
        return cls(bits)

    @classmethod
    def from_hex(cls, text, n_bits):
        return cls(hex_to_profile(text, n_bits))

    @property
    def bits(self):
        return self._bits

    @property
    def n_bits(self):
        return self._bits.size

    @property
    def k_bits(self):
        return int(self._bits.sum())

    @property
    def info_set(self):
        return np.flatnonzero(self._bits)

    @property
    def frozen_set(self):
        return np.flatnonzero(self._bits == 0)

    def to_hex(self):
        return profile_to_hex(self._bits)

    def __eq__(self, other):
        if not isinstance(other, RateProfile):
            return NotImplemented
        return np.array_equal(self._bits, other._bits)

    def __hash__(self):
        return hash(self._bits.tobytes())

    def __len__(self):
        return self.n_bits

    def __repr__(self):
        if self.n_bits % 4 == 0:
            return f'RateProfile({self.n_bits}, {self.k_bits}, ' \
                   f'{self.to_hex()!r})'
        return f'RateProfile({self._bits.tolist()})'


@dataclass(frozen=True)
class CodeConfig:
    """A PAC code (N, K, A, g)"""
    profile: RateProfile
    conv_poly: ConvPolynomial = ConvPolynomial()

    def __post_init__(self):
        if not isinstance(self.profile, RateProfile):
            raise CodeConfigError('profile must be a RateProfile')
        if not isinstance(self.conv_poly, ConvPolynomial):
            raise CodeConfigError('conv_poly must be a ConvPolynomial')

    @classmethod
    def from_info_set(cls, n_bits, info_set, conv_poly=None):
        return cls(RateProfile.from_indices(n_bits, info_set),
                   conv_poly or ConvPolynomial())

    @classmethod
    def from_hex(cls, text, n_bits, conv_poly=None):
        return cls(RateProfile.from_hex(text, n_bits),
                   conv_poly or ConvPolynomial())

    @property
    def n_bits(self):
        return self.profile.n_bits

    @property
    def k_bits(self):
        return self.profile.k_bits

    @property
    def info_set(self):
        return self.profile.info_set

    @property
    def frozen_mask(self):
        return self.profile.bits == 0

    @property
    def rate(self):
        return self.k_bits / self.n_bits

    def __str__(self):
        return f'PAC({self.n_bits},{self.k_bits}) g={self.conv_poly}'

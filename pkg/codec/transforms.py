"""PAC encoding pipeline: rate profiling, convolution, polar transform.

All transforms take a single word of shape (N,) or a batch of shape
(B, N) and return uint8 arrays of the same shape.
"""
import numpy as np

from codec.coding import block_exponent
from codec.exceptions import CodecError, CodeConfigError


def as_bits(word):
    bits = np.asarray(word)
    if bits.ndim == 0:
        raise CodecError('expected a bit vector')
    bits = bits.astype(np.uint8)
    if bits.size and bits.max() > 1:
        raise CodecError('words must be binary')
    return bits


def rate_profile_embed(message, cfg):
    """Place K message bits on the information indices, zeros elsewhere"""
    message = as_bits(message)
    if message.shape[-1] != cfg.k_bits:
        raise CodeConfigError(
            f'message has {message.shape[-1]} bits, code expects '
            f'{cfg.k_bits}')
    source = np.zeros(message.shape[:-1] + (cfg.n_bits,), dtype=np.uint8)
    source[..., cfg.info_set] = message
    return source


def conv_transform(source, conv_poly):
    """u_i = sum_j g_j v_(i-j) over GF(2), with v_k = 0 for k < 0"""
    source = as_bits(source)
    length = source.shape[-1]
    conv = source.copy()
    for shift, coeff in enumerate(conv_poly.coeffs[1:], start=1):
        if coeff and shift < length:
            conv[..., shift:] ^= source[..., :length - shift]
    return conv


def conv_inverse(conv, conv_poly):
    """Feedback inverse of conv_transform (g_0 = 1)"""
    conv = as_bits(conv)
    source = np.zeros_like(conv)
    taps = [j for j, c in enumerate(conv_poly.coeffs) if j and c]
    for i in range(conv.shape[-1]):
        bit = conv[..., i].copy()
        for shift in taps:
            if shift > i:
                break
            bit ^= source[..., i - shift]
        source[..., i] = bit
    return source


def polar_transform(conv):
    """x = u F^(kron n), computed with the butterfly in O(N log N)"""
    codeword = as_bits(conv).copy()
    n_bits = codeword.shape[-1]
    block_exponent(n_bits)
    lead = codeword.shape[:-1]
    half = 1
    while half < n_bits:
        # each 2*half block: first half ^= second half
        blocks = codeword.reshape(lead + (n_bits // (2 * half), 2, half))
        blocks[..., 0, :] ^= blocks[..., 1, :]
        half *= 2
    return codeword


def pac_encode(message, cfg):
    source = rate_profile_embed(message, cfg)
    return polar_transform(conv_transform(source, cfg.conv_poly))


def encode_sources(sources, cfg):
    """Encode already-embedded source words (used to re-encode SCL paths)"""
    return polar_transform(conv_transform(sources, cfg.conv_poly))


def parse_bit_string(text):
    """'0110 1...' -> uint8 vector; whitespace is ignored"""
    digits = ''.join(str(text).split())
    if not digits or set(digits) - {'0', '1'}:
        raise CodecError('expected a string of 0 and 1 digits')
    return np.frombuffer(digits.encode(), dtype=np.uint8) - ord('0')


def format_bits(bits):
    return ''.join('1' if b else '0' for b in np.asarray(bits).ravel())

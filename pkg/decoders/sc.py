"""Successive-cancellation LLR kernel.

Layers are kept for a whole list of paths at once: alpha[s] has shape
(paths, 2^s) and holds the LLRs of stage s, alpha[n] is the channel;
beta[s] holds the partial sums of the left sibling at stage s. Layers are
only ever replaced, never written in place, so snapshots can share them.
"""
import numpy as np

from codec.coding import block_exponent
from decoders.exceptions import DecoderError

DEFAULT_LLR_CLAMP = 1e6


def clamp_llrs(llrs, clamp=DEFAULT_LLR_CLAMP):
    llrs = np.asarray(llrs, dtype=np.float64)
    if llrs.ndim != 1:
        raise DecoderError('channel LLRs must be a vector')
    if np.isnan(llrs).any():
        raise DecoderError('channel LLRs contain NaN')
    return np.clip(llrs, -clamp, clamp)


def trailing_zeros(index):
    return (index & -index).bit_length() - 1


def trailing_ones(index):
    return trailing_zeros(index + 1)


def parity(words):
    """Bitwise parity of non-negative int64 words"""
    words = np.asarray(words, dtype=np.int64)
    for shift in (32, 16, 8, 4, 2, 1):
        words = words ^ (words >> shift)
    return (words & 1).astype(np.uint8)


def soft_xor(first, second, min_sum=False):
    """2 atanh(tanh(a/2) tanh(b/2)) in a numerically stable form"""
    approx = np.sign(first) * np.sign(second) * \
        np.minimum(np.abs(first), np.abs(second))
    if min_sum:
        return approx
    return approx + np.log1p(np.exp(-np.abs(first + second))) \
        - np.log1p(np.exp(-np.abs(first - second)))


class ScWorkspace:
    """SC butterfly state shared by a list of paths"""

    def __init__(self, channel_llrs, min_sum=False):
        llrs = np.asarray(channel_llrs, dtype=np.float64)
        self.n_bits = llrs.size
        self.n_stages = block_exponent(self.n_bits)
        self.min_sum = min_sum
        self.paths = 1
        self.alpha = [np.zeros((1, 1 << s)) for s in range(self.n_stages)]
        self.alpha.append(llrs.reshape(1, -1))
        self.beta = [np.zeros((1, 1 << s), dtype=np.uint8)
                     for s in range(self.n_stages)]
        self.codeword = None

    def decision_llrs(self, index):
        """Decision LLR of bit `index` for every path"""
        if index == 0:
            start = self.n_stages - 1
        else:
            stage = trailing_zeros(index)
            half = 1 << stage
            parent = self.alpha[stage + 1]
            signs = 1.0 - 2.0 * self.beta[stage]
            self.alpha[stage] = parent[:, half:] + signs * parent[:, :half]
            start = stage - 1
        for stage in range(start, -1, -1):
            half = 1 << stage
            parent = self.alpha[stage + 1]
            values = soft_xor(parent[:, :half], parent[:, half:],
                              self.min_sum)
            if values.shape[0] != self.paths:
                values = np.repeat(values, self.paths, axis=0)
            self.alpha[stage] = values
        return np.broadcast_to(self.alpha[0][:, 0], (self.paths,)).copy()

    def commit(self, index, bits):
        """Feed the decided u bits of `index` back into the partial sums"""
        partial = np.asarray(bits, dtype=np.uint8).reshape(self.paths, 1)
        for stage in range(self.n_stages):
            if not (index >> stage) & 1:
                self.beta[stage] = partial
                return
            partial = np.concatenate(
                [self.beta[stage] ^ partial, partial], axis=1)
        self.codeword = partial

    def select(self, parents):
        """Keep the paths listed in `parents` (repeats allowed)"""
        parents = np.asarray(parents, dtype=np.int64)
        for stage in range(self.n_stages):
            self.alpha[stage] = self.alpha[stage][parents]
            self.beta[stage] = self.beta[stage][parents]
        self.paths = parents.size


class RewindableWorkspace(ScWorkspace):
    """Single-path workspace that can return to any decided level.

    After the LLRs of level i are computed, layers 0..ctz(i) are kept (all
    layers for i = 0); after level k is committed, the partial-sum layer it
    wrote is kept. rewind(j) rebuilds the state right before bit j was
    committed from those checkpoints, so memory stays O(N log N).
    """

    def __init__(self, channel_llrs, min_sum=False):
        super().__init__(channel_llrs, min_sum)
        self._llr_marks = [None] * self.n_bits
        self._sum_marks = [None] * self.n_bits

    def decision_llrs(self, index):
        llrs = super().decision_llrs(index)
        top = self.n_stages - 1 if index == 0 else trailing_zeros(index)
        self._llr_marks[index] = self.alpha[:top + 1]
        return llrs

    def commit(self, index, bits):
        super().commit(index, bits)
        stage = trailing_ones(index)
        if stage < self.n_stages:
            self._sum_marks[index] = self.beta[stage]

    def rewind(self, index):
        for stage in range(self.n_stages):
            mark = index & ~((1 << stage) - 1)
            self.alpha[stage] = self._llr_marks[mark][stage]
            if (index >> stage) & 1:
                self.beta[stage] = \
                    self._sum_marks[((index >> stage) << stage) - 1]


def sc_llr_kernel(channel_llrs, decisions, min_sum=False):
    """Decision LLR of bit len(decisions) given the earlier u decisions"""
    workspace = ScWorkspace(channel_llrs, min_sum)
    for index, bit in enumerate(decisions):
        workspace.decision_llrs(index)
        workspace.commit(index, [bit])
    return float(workspace.decision_llrs(len(decisions))[0])

"""Fano sequential decoding of PAC codes over the SC tree.

The branch metric of bit i decided as u given its decision LLR lambda is

    mu_i = 1 - b_i - log2(1 + exp(-(1 - 2u) lambda))

with the bias b_i usually set to the cutoff rate of bit channel i. The
search moves forward while the path metric stays above the running
threshold, tightening it in steps of delta on first visits, and otherwise
looks back for the best unexplored sibling or loosens the threshold.
Backtracking restores the SC state from per-level checkpoints.
"""
import logging
from dataclasses import dataclass

import numpy as np

from decoders.exceptions import DecoderError
from decoders.results import DecodeResult, message_extract
from decoders.sc import DEFAULT_LLR_CLAMP, RewindableWorkspace, clamp_llrs

logger = logging.getLogger(__name__)

DEFAULT_DELTA = 2.0
DEFAULT_MAX_VISITS = 1_000_000


@dataclass(frozen=True, eq=False)
class FanoConfig:
    bias: np.ndarray
    delta: float = DEFAULT_DELTA
    max_visits: int = DEFAULT_MAX_VISITS

    def __post_init__(self):
        bias = np.asarray(self.bias, dtype=np.float64)
        if bias.ndim != 1 or not np.isfinite(bias).all():
            raise DecoderError('bias must be a finite vector')
        if not self.delta > 0:
            raise DecoderError('threshold spacing must be positive')
        if int(self.max_visits) < 1:
            raise DecoderError('visit budget must be at least 1')
        object.__setattr__(self, 'bias', bias)

    @classmethod
    def from_stats(cls, stats, delta=DEFAULT_DELTA,
                   max_visits=DEFAULT_MAX_VISITS):
        """Bias every bit channel by its cutoff rate"""
        return cls(stats.e0.copy(), delta, max_visits)


def branch_metric(conv_bit, llr, bias):
    return 1.0 - bias - np.logaddexp(0.0, -(1.0 - 2.0 * conv_bit) * llr) \
        / np.log(2.0)


class FanoDecoder:

    def __init__(self, cfg, fano_cfg, min_sum=False,
                 llr_clamp=DEFAULT_LLR_CLAMP):
        if fano_cfg.bias.size != cfg.n_bits:
            raise DecoderError(
                f'bias has {fano_cfg.bias.size} entries for N={cfg.n_bits}')
        self.cfg = cfg
        self.fano = fano_cfg
        self.min_sum = min_sum
        self.llr_clamp = llr_clamp

    def _branches(self, index, llr, state):
        """(v, u, mu) options of bit `index`, best first"""
        feedback = bin(state & self.cfg.conv_poly.taps).count('1') & 1
        bias = self.fano.bias[index]
        options = [(0, feedback, branch_metric(feedback, llr, bias))]
        if not self.cfg.frozen_mask[index]:
            options.append(
                (1, feedback ^ 1, branch_metric(feedback ^ 1, llr, bias)))
            options.sort(key=lambda option: -option[2])
        return options

    def decode(self, channel_llrs):
        cfg = self.cfg
        n_bits = cfg.n_bits
        llrs = clamp_llrs(channel_llrs, self.llr_clamp)
        if llrs.size != n_bits:
            raise DecoderError(
                f'got {llrs.size} channel LLRs for N={n_bits}')

        workspace = RewindableWorkspace(llrs, self.min_sum)
        delta = self.fano.delta
        register_mask = (1 << cfg.conv_poly.memory) - 1

        # states[i]: shift register before deciding bit i
        states = [0] * (n_bits + 1)
        metrics = np.zeros(n_bits)
        choices = [0] * n_bits
        branches = [None] * n_bits
        sources = np.zeros(n_bits, dtype=np.uint8)

        threshold = 0.0
        level = 0
        child = 0
        visits = 0
        fresh = True

        while level < n_bits:
            if visits >= self.fano.max_visits:
                logger.debug('Fano budget of %d visits exhausted at level %d',
                             self.fano.max_visits, level)
                sources[level:] = 0
                return self._result(sources, metrics[level - 1] if level
                                    else 0.0, visits, exhausted=True)
            if fresh:
                llr = float(workspace.decision_llrs(level)[0])
                branches[level] = self._branches(level, llr, states[level])
                fresh = False

            previous = metrics[level - 1] if level else 0.0
            options = branches[level]
            if child < len(options):
                forward = previous + options[child][2]
            else:
                forward = -np.inf

            if forward >= threshold:
                source, conv, _ = options[child]
                workspace.commit(level, conv)
                sources[level] = source
                choices[level] = child
                metrics[level] = forward
                states[level + 1] = \
                    ((states[level] << 1) | source) & register_mask
                if previous < threshold + delta:
                    # first visit: tighten
                    while forward >= threshold + delta:
                        threshold += delta
                visits += 1
                level += 1
                child = 0
                fresh = True
                continue

            while True:
                back = metrics[level - 2] if level >= 2 else 0.0
                if level > 0 and back >= threshold:
                    level -= 1
                    visits += 1
                    workspace.rewind(level)
                    if choices[level] + 1 < len(branches[level]):
                        child = choices[level] + 1
                        break
                else:
                    threshold -= delta
                    child = 0
                    break

        return self._result(sources, metrics[n_bits - 1], visits)

    def _result(self, sources, metric, visits, exhausted=False):
        return DecodeResult(
            d_hat=message_extract(sources, self.cfg),
            v_hat=sources.copy(),
            metric=float(metric),
            sort_ops=0,
            anv=float(visits),
            list_rank=0,
            exhausted=exhausted,
        )


def fano_decode(y_llrs, cfg, fano_cfg, min_sum=False,
                llr_clamp=DEFAULT_LLR_CLAMP):
    return FanoDecoder(cfg, fano_cfg, min_sum, llr_clamp).decode(y_llrs)

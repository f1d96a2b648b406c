"""Successive-cancellation list decoding of PAC codes.

Paths only split on the indices of the split set; other information
indices follow the hard decision of their own LLR without a penalty, and
frozen indices force v = 0. The path metric grows by |lambda| whenever the
committed u bit disagrees with the hard decision h(lambda), h = 0 iff
lambda > 0. When the candidates outnumber L, the L smallest metrics are
kept (stable in candidate order 2p + v) and one sort operation is counted.
"""
import logging
from dataclasses import dataclass

import numpy as np

from decoders.exceptions import DecoderError
from decoders.results import DecodeResult, PathState, message_extract
from decoders.sc import DEFAULT_LLR_CLAMP, ScWorkspace, clamp_llrs, parity

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class ListOutcome:
    """Surviving paths in ascending path-metric order"""
    sources: np.ndarray
    convs: np.ndarray
    metrics: np.ndarray
    states: np.ndarray
    sort_ops: int
    visits: int


class ListDecoder:

    def __init__(self, cfg, list_size, split_set=None, min_sum=False,
                 llr_clamp=DEFAULT_LLR_CLAMP):
        if int(list_size) < 1:
            raise DecoderError('list size must be at least 1')
        self.cfg = cfg
        self.list_size = int(list_size)
        self.min_sum = min_sum
        self.llr_clamp = llr_clamp

        info = ~cfg.frozen_mask
        if split_set is None:
            self.split_mask = info.copy()
        else:
            split = np.asarray(list(split_set), dtype=np.int64)
            if split.size and (split.min() < 0 or split.max() >= cfg.n_bits
                               or not info[split].all()):
                raise DecoderError(
                    'split set must be a subset of the information set')
            self.split_mask = np.zeros(cfg.n_bits, dtype=bool)
            self.split_mask[split] = True
        self._workspace = None

    def run(self, channel_llrs):
        cfg = self.cfg
        llrs = clamp_llrs(channel_llrs, self.llr_clamp)
        if llrs.size != cfg.n_bits:
            raise DecoderError(
                f'got {llrs.size} channel LLRs for N={cfg.n_bits}')

        workspace = ScWorkspace(llrs, self.min_sum)
        frozen = cfg.frozen_mask
        taps = cfg.conv_poly.taps
        register_mask = (1 << cfg.conv_poly.memory) - 1

        states = np.zeros(1, dtype=np.int64)
        metrics = np.zeros(1)
        sources = np.zeros((1, cfg.n_bits), dtype=np.uint8)
        convs = np.zeros((1, cfg.n_bits), dtype=np.uint8)
        sort_ops = 0
        visits = 0

        for index in range(cfg.n_bits):
            llr = workspace.decision_llrs(index)
            hard = (llr <= 0).astype(np.uint8)
            penalty = np.abs(llr)
            feedback = parity(states & taps)

            if frozen[index]:
                source = np.zeros_like(feedback)
                conv = feedback
                metrics = metrics + np.where(conv != hard, penalty, 0.0)
            elif self.split_mask[index]:
                candidate_metrics = np.stack([
                    metrics + np.where(feedback != hard, penalty, 0.0),
                    metrics + np.where(feedback == hard, penalty, 0.0),
                ], axis=1).ravel()
                if candidate_metrics.size > self.list_size:
                    keep = np.argsort(candidate_metrics, kind='stable')
                    keep = np.sort(keep[:self.list_size])
                    sort_ops += 1
                else:
                    keep = np.arange(candidate_metrics.size)
                parents = keep // 2
                workspace.select(parents)
                states = states[parents]
                sources = sources[parents]
                convs = convs[parents]
                metrics = candidate_metrics[keep]
                source = (keep % 2).astype(np.uint8)
                conv = feedback[parents] ^ source
            else:
                conv = hard
                source = conv ^ feedback

            sources[:, index] = source
            convs[:, index] = conv
            states = ((states << 1) | source) & register_mask
            workspace.commit(index, conv)
            visits += metrics.size

        order = np.argsort(metrics, kind='stable')
        workspace.select(order)
        self._workspace = workspace
        return ListOutcome(sources[order], convs[order], metrics[order],
                           states[order], sort_ops, visits)

    def decode(self, channel_llrs):
        outcome = self.run(channel_llrs)
        return best_result(outcome, self.cfg)

    def path_state(self, outcome, rank):
        """PathState of the survivor ranked `rank` in the last run"""
        workspace = self._workspace
        return PathState(
            v_hat=outcome.sources[rank].copy(),
            u_hat=outcome.convs[rank].copy(),
            shift_reg=int(outcome.states[rank]),
            pm=float(outcome.metrics[rank]),
            llr_tree=[layer[rank].copy() for layer in workspace.alpha[:-1]],
            partial_sums=[layer[rank].copy() for layer in workspace.beta],
        )


def best_result(outcome, cfg):
    source = outcome.sources[0]
    return DecodeResult(
        d_hat=message_extract(source, cfg),
        v_hat=source.copy(),
        metric=float(outcome.metrics[0]),
        sort_ops=outcome.sort_ops,
        anv=float(outcome.visits),
        list_rank=0,
    )


def scl_decode(y_llrs, cfg, list_size, split_set=None, min_sum=False,
               llr_clamp=DEFAULT_LLR_CLAMP, return_list=False):
    """List decoding; split_set defaults to the whole information set"""
    decoder = ListDecoder(cfg, list_size, split_set, min_sum, llr_clamp)
    outcome = decoder.run(y_llrs)
    result = best_result(outcome, cfg)
    if return_list:
        return result, outcome
    return result


def sc_decode(y_llrs, cfg, min_sum=False, llr_clamp=DEFAULT_LLR_CLAMP):
    return ListDecoder(cfg, 1, (), min_sum, llr_clamp).decode(y_llrs)

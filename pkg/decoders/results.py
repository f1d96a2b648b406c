from dataclasses import dataclass, field

import numpy as np


def message_extract(source, cfg):
    """Read the information bits back out of a source word"""
    return np.asarray(source, dtype=np.uint8)[..., cfg.info_set]


@dataclass(eq=False)
class DecodeResult:
    """Outcome of decoding one frame.

    metric is the final path metric (list decoders) or the final Fano
    metric. anv counts node visits of this frame. exhausted is set when a
    Fano search ran out of its visit budget; d_hat is then the partial
    path padded with zeros.
    """
    d_hat: np.ndarray
    v_hat: np.ndarray
    metric: float
    sort_ops: int = 0
    anv: float = 0.0
    list_rank: int = 0
    exhausted: bool = False

    def as_dict(self):
        return {
            'd_hat': ''.join(str(b) for b in self.d_hat),
            'v_hat': ''.join(str(b) for b in self.v_hat),
            'metric': float(self.metric),
            'sort_ops': int(self.sort_ops),
            'anv': float(self.anv),
            'list_rank': int(self.list_rank),
            'exhausted': bool(self.exhausted),
        }


@dataclass(eq=False)
class PathState:
    """Snapshot of one list-decoding path"""
    v_hat: np.ndarray
    u_hat: np.ndarray
    shift_reg: int
    pm: float
    llr_tree: list = field(default_factory=list)
    partial_sums: list = field(default_factory=list)

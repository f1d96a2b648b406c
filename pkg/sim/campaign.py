"""Monte-Carlo BLER and complexity campaigns over BI-AWGN with BPSK.

Every frame draws its message and noise from its own generator keyed by
(seed, snr index, frame index), and outcomes are consumed in frame order,
so a campaign gives the same statistics for any number of workers.
"""
import logging
import time
from dataclasses import dataclass, field
from multiprocessing import Pool

import numpy as np

from channel.gaussian import ChannelParams
from codec.transforms import pac_encode
from decoders.factory import DECODER_KINDS, make_decoder
from decoders.fano import DEFAULT_DELTA, DEFAULT_MAX_VISITS
from decoders.sc import DEFAULT_LLR_CLAMP
from sim.exceptions import SimulationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DecoderSpec:
    kind: str = 'scl'
    list_size: int = 1
    delta: float = DEFAULT_DELTA
    split_set: tuple = None
    max_visits: int = DEFAULT_MAX_VISITS
    min_sum: bool = False
    llr_clamp: float = DEFAULT_LLR_CLAMP

    def __post_init__(self):
        if self.kind not in DECODER_KINDS:
            raise SimulationError(
                f'unknown decoder {self.kind!r}; choose from '
                f'{", ".join(DECODER_KINDS)}')
        if int(self.list_size) < 1:
            raise SimulationError('list size must be at least 1')
        if self.kind == 'scl-cs' and self.split_set is None:
            raise SimulationError('scl-cs needs a critical set')
        if self.split_set is not None:
            object.__setattr__(self, 'split_set',
                               tuple(int(i) for i in self.split_set))

    def build(self, code, snr_db):
        """A decode(llrs) -> DecodeResult callable for one SNR point"""
        return make_decoder(code, self.kind, self.list_size, self.split_set,
                            self.delta, self.max_visits, snr_db,
                            self.min_sum, self.llr_clamp)

    def describe(self):
        if self.kind == 'fano':
            return f'fano delta={self.delta:g}'
        if self.kind == 'sc':
            return 'sc'
        text = f'{self.kind} L={self.list_size}'
        if self.split_set is not None:
            text += f' |split|={len(self.split_set)}'
        return text


@dataclass(frozen=True, eq=False)
class SimConfig:
    code: object
    decoder: DecoderSpec
    snr_grid: tuple
    min_frame_errors: int = 100
    max_frames: int = 10_000_000
    seed: int = 0
    workers: int = 1
    chunk_frames: int = 256
    noiseless: bool = False
    spectrum_list_size: int = None

    def __post_init__(self):
        object.__setattr__(self, 'snr_grid',
                           tuple(float(s) for s in self.snr_grid))
        if not self.snr_grid:
            raise SimulationError('the SNR grid is empty')
        if int(self.min_frame_errors) < 1:
            raise SimulationError('min frame errors must be at least 1')
        if int(self.max_frames) < 1:
            raise SimulationError('max frames must be at least 1')
        if int(self.workers) < 1 or int(self.chunk_frames) < 1:
            raise SimulationError('workers and chunk size must be positive')


@dataclass
class SimRecord:
    snr_db: float
    frames: int
    frame_errors: int
    mean_anv: float
    mean_sort_ops: float
    wall_time: float = 0.0
    budget_exhausted: int = 0
    bler: float = field(init=False)

    def __post_init__(self):
        self.bler = self.frame_errors / self.frames if self.frames else 0.0


@dataclass(frozen=True)
class FrameOutcome:
    error: bool
    visits: float
    sort_ops: int
    exhausted: bool


def simulate_frame(code, params, decode, seed, snr_index, frame_index,
                   noiseless=False, llr_clamp=DEFAULT_LLR_CLAMP):
    rng = np.random.default_rng([seed, snr_index, frame_index])
    message = rng.integers(0, 2, size=code.k_bits, dtype=np.uint8)
    symbols = params.bpsk(pac_encode(message, code))
    if noiseless:
        llrs = symbols * llr_clamp
    else:
        llrs = params.llrs(symbols + params.noise(rng, symbols.size))
    result = decode(llrs)
    error = result.exhausted or not np.array_equal(result.d_hat, message)
    return FrameOutcome(bool(error), result.anv, result.sort_ops,
                        result.exhausted)


def _run_chunk(job):
    cfg, snr_index, start, stop = job
    snr_db = cfg.snr_grid[snr_index]
    params = ChannelParams(snr_db, cfg.code.rate)
    decode = cfg.decoder.build(cfg.code, snr_db)
    return [simulate_frame(cfg.code, params, decode, cfg.seed, snr_index,
                           frame, cfg.noiseless, cfg.decoder.llr_clamp)
            for frame in range(start, stop)]


def _simulate_point(cfg, snr_index, mapper):
    started = time.perf_counter()
    frames = errors = exhausted = sort_ops = 0
    visits = 0.0
    next_frame = 0
    done = False
    while not done and next_frame < cfg.max_frames:
        jobs = []
        for _ in range(cfg.workers):
            if next_frame >= cfg.max_frames:
                break
            stop = min(next_frame + cfg.chunk_frames, cfg.max_frames)
            jobs.append((cfg, snr_index, next_frame, stop))
            next_frame = stop
        for outcomes in mapper(_run_chunk, jobs):
            for outcome in outcomes:
                frames += 1
                errors += outcome.error
                exhausted += outcome.exhausted
                visits += outcome.visits
                sort_ops += outcome.sort_ops
                if errors >= cfg.min_frame_errors:
                    done = True
                    break
            if done:
                break

    record = SimRecord(
        snr_db=cfg.snr_grid[snr_index],
        frames=frames,
        frame_errors=errors,
        mean_anv=visits / frames,
        mean_sort_ops=sort_ops / frames,
        wall_time=time.perf_counter() - started,
        budget_exhausted=exhausted,
    )
    logger.info('%.2f dB: %d/%d frame errors, BLER %.3e, ANV %.1f, '
                'sorts %.1f, %.1fs', record.snr_db, errors, frames,
                record.bler, record.mean_anv, record.mean_sort_ops,
                record.wall_time)
    if exhausted:
        logger.warning('%.2f dB: %d frames ran out of their visit budget',
                       record.snr_db, exhausted)
    return record


def run_campaign(cfg):
    logger.info('campaign %s with %s over %s dB (seed %d, %d workers)',
                cfg.code, cfg.decoder.describe(), list(cfg.snr_grid),
                cfg.seed, cfg.workers)
    if cfg.workers == 1:
        return [_simulate_point(cfg, i, map)
                for i in range(len(cfg.snr_grid))]
    with Pool(cfg.workers) as pool:
        return [_simulate_point(cfg, i, pool.map)
                for i in range(len(cfg.snr_grid))]

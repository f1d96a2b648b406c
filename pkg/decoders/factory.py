"""Build a decode(llrs) -> DecodeResult callable from a decoder kind"""
from channel.gaussian import ChannelParams, gaussian_approximation
from decoders.exceptions import DecoderError
from decoders.fano import DEFAULT_DELTA, DEFAULT_MAX_VISITS, FanoConfig, \
    FanoDecoder
from decoders.sc import DEFAULT_LLR_CLAMP
from decoders.scl import ListDecoder

DECODER_KINDS = ('sc', 'scl', 'scl-cs', 'fano')


def make_decoder(cfg, kind, list_size=1, split_set=None, delta=DEFAULT_DELTA,
                 max_visits=DEFAULT_MAX_VISITS, snr_db=None, min_sum=False,
                 llr_clamp=DEFAULT_LLR_CLAMP):
    """Fano biases every bit by its cutoff rate at snr_db"""
    if kind == 'fano':
        if snr_db is None:
            raise DecoderError('Fano decoding needs the channel Eb/N0')
        stats = gaussian_approximation(cfg.n_bits,
                                       ChannelParams(snr_db, cfg.rate))
        fano = FanoConfig.from_stats(stats, delta, max_visits)
        return FanoDecoder(cfg, fano, min_sum, llr_clamp).decode
    if kind == 'sc':
        return ListDecoder(cfg, 1, (), min_sum, llr_clamp).decode
    if kind == 'scl':
        return ListDecoder(cfg, list_size, None, min_sum, llr_clamp).decode
    if kind == 'scl-cs':
        if split_set is None:
            raise DecoderError('scl-cs needs a critical set')
        return ListDecoder(cfg, list_size, split_set, min_sum,
                           llr_clamp).decode
    raise DecoderError(f'unknown decoder {kind!r}; choose from '
                       f'{", ".join(DECODER_KINDS)}')

"""Dispatch over the rate-profile construction methods"""
from channel.gaussian import ChannelParams, gaussian_approximation
from construct.exceptions import ConstructionError
from construct.list_search import ListSearch
from construct.rm import ga_profile, rm_partition, rm_polar_profile, \
    rm_profile
from spectrum.estimation import DEFAULT_NOISELESS_LLR

CONSTRUCTION_METHODS = ('rm', 'rm-polar', 'ga', 'ls')


def exact_rm_size(n_bits, k_bits):
    """Whether K is the dimension of an RM code of length N"""
    try:
        return rm_partition(n_bits, k_bits).exact
    except ValueError:
        return False


def build_profile(method, n_bits, k_bits, conv_poly, design_snr_db=None,
                  list_size=1024, search_size=64, keep_duplicates=False,
                  noiseless_llr=DEFAULT_NOISELESS_LLR):
    if method not in CONSTRUCTION_METHODS:
        raise ConstructionError(f'unknown construction method {method!r}')
    if method == 'rm':
        return rm_profile(n_bits, k_bits)
    if method == 'rm-polar' and exact_rm_size(n_bits, k_bits):
        return rm_polar_profile(n_bits, k_bits)
    if design_snr_db is None:
        raise ConstructionError(f'the {method} method needs a design SNR')
    if method == 'ls':
        return ListSearch(n_bits, k_bits, conv_poly, list_size, search_size,
                          design_snr_db, keep_duplicates,
                          noiseless_llr).run().profile
    stats = gaussian_approximation(
        n_bits, ChannelParams(design_snr_db, k_bits / n_bits))
    if method == 'rm-polar':
        return rm_polar_profile(n_bits, k_bits, stats)
    return ga_profile(n_bits, k_bits, stats)

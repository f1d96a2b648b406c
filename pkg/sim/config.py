"""key=value campaign files.

    # PAC(128,64) RM profile, CPSCS-restricted SCL
    profile = profiles/pac128_64.txt
    decoder = scl-cs
    list_size = 128
    critical_set = cpscs
    snr_grid = 2.0, 2.5, 3.0
    seed = 7

Command-line overrides replace file values; unset keys fall back to the
defaults passed in (the PACLAB settings for the simulate command).
"""
from codec.catalog import parse_catalog_key
from codec.profile_io import read_profile_file
from construct.critical_sets import cpscs_construct, pscs_construct, \
    read_index_file
from sim.campaign import DecoderSpec, SimConfig
from sim.exceptions import SimulationError

CONFIG_KEYS = (
    'profile', 'catalog', 'decoder', 'list_size', 'delta', 'max_visits',
    'critical_set', 'pscs_list_size', 'pscs_search_size', 'snr_grid',
    'min_errors', 'max_frames', 'seed', 'workers', 'chunk_frames',
    'noiseless', 'min_sum', 'spectrum_list_size', 'llr_clamp',
)

_TRUE = ('1', 'true', 'yes', 'on')


def parse_key_values(text):
    values = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#')[0].strip()
        if not line:
            continue
        key, sep, value = line.partition('=')
        key = key.strip()
        if not sep or not key:
            raise SimulationError(f'line {number}: expected key = value')
        if key not in CONFIG_KEYS:
            raise SimulationError(f'line {number}: unknown key {key!r}')
        values[key] = value.strip()
    return values


def parse_snr_grid(text):
    try:
        grid = tuple(float(p) for p in str(text).replace(' ', '').split(',')
                     if p)
    except ValueError:
        raise SimulationError(f'bad SNR grid {text!r}') from None
    if not grid:
        raise SimulationError('the SNR grid is empty')
    return grid


def _split_set(value, code, values, defaults):
    if value == 'cpscs':
        return cpscs_construct(code.n_bits, code.k_bits, code.info_set)
    if value.startswith('pscs:'):
        size = int(value[len('pscs:'):])
        ladder = pscs_construct(
            code,
            int(values.get('pscs_list_size',
                           defaults.get('PSCS_LIST_SIZE', 20000))),
            int(values.get('pscs_search_size',
                           defaults.get('PSCS_SEARCH_SIZE', 400))),
        ).pscs_ladder
        if not 1 <= size <= len(ladder):
            raise SimulationError(
                f'PSCS size must lie in [1, {len(ladder)}]')
        return ladder[size - 1]
    return read_index_file(value)


def load_sim_config(path=None, overrides=None, defaults=None):
    values = {}
    if path:
        try:
            with open(path) as stream:
                values = parse_key_values(stream.read())
        except OSError as exc:
            raise SimulationError(f'cannot read {path}: {exc}') from exc
    overrides = {key: str(value) for key, value in (overrides or {})
                 .items() if value is not None}
    # a code given on the command line replaces the file's code
    if 'profile' in overrides or 'catalog' in overrides:
        values.pop('profile', None)
        values.pop('catalog', None)
    values.update(overrides)
    defaults = defaults or {}

    if 'profile' in values:
        code, _ = read_profile_file(values['profile'])
    elif 'catalog' in values:
        code = parse_catalog_key(values['catalog']).code_config()
    else:
        raise SimulationError('set either profile or catalog')
    if 'snr_grid' not in values:
        raise SimulationError('snr_grid is required')

    try:
        kind = values.get('decoder', 'scl')
        split_set = None
        if kind == 'scl-cs':
            if 'critical_set' not in values:
                raise SimulationError('scl-cs needs critical_set')
            split_set = _split_set(values['critical_set'], code, values,
                                   defaults)
        decoder = DecoderSpec(
            kind=kind,
            list_size=int(values.get('list_size', 1)),
            delta=float(values.get('delta',
                                   defaults.get('FANO_DELTA', 2.0))),
            split_set=split_set,
            max_visits=int(values.get(
                'max_visits', defaults.get('FANO_MAX_VISITS', 1_000_000))),
            min_sum=values.get('min_sum', '0').lower() in _TRUE,
            llr_clamp=float(values.get('llr_clamp',
                                       defaults.get('LLR_CLAMP', 1e6))),
        )
        spectrum_list_size = values.get('spectrum_list_size')
        return SimConfig(
            code=code,
            decoder=decoder,
            snr_grid=parse_snr_grid(values['snr_grid']),
            min_frame_errors=int(values.get(
                'min_errors', defaults.get('MIN_FRAME_ERRORS', 100))),
            max_frames=int(values.get(
                'max_frames', defaults.get('MAX_FRAMES', 10_000_000))),
            seed=int(values.get('seed', 0)),
            workers=int(values.get('workers',
                                   defaults.get('SIM_WORKERS', 1))),
            chunk_frames=int(values.get(
                'chunk_frames', defaults.get('SIM_CHUNK_FRAMES', 256))),
            noiseless=values.get('noiseless', '0').lower() in _TRUE,
            spectrum_list_size=int(spectrum_list_size)
            if spectrum_list_size else None,
        )
    except ValueError as exc:
        if isinstance(exc, SimulationError):
            raise
        raise SimulationError(str(exc)) from exc

"""Profile files: a header `N K g_octal design_snr_db` and one hex line.

Lines starting with '#' and blank lines are ignored. An unknown design
SNR is written as '-'.
"""
from codec.catalog import parse_catalog_key
from codec.coding import CodeConfig, ConvPolynomial, RateProfile
from codec.exceptions import ProfileFormatError


def format_profile(cfg, design_snr_db=None):
    snr = '-' if design_snr_db is None else f'{float(design_snr_db):g}'
    header = f'{cfg.n_bits} {cfg.k_bits} {cfg.conv_poly.octal_repr} {snr}'
    return f'{header}\n{cfg.profile.to_hex()}\n'


def parse_profile(text):
    """Return (CodeConfig, design_snr_db or None) from profile file text"""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith('#')]
    if len(lines) != 2:
        raise ProfileFormatError(
            'a profile file holds one header line and one hex line')
    fields = lines[0].split()
    if len(fields) != 4:
        raise ProfileFormatError(
            'header must read "N K g_octal design_snr_db"')
    try:
        n_bits, k_bits = int(fields[0]), int(fields[1])
        design_snr_db = None if fields[3] == '-' else float(fields[3])
    except ValueError:
        raise ProfileFormatError(f'bad header: {lines[0]!r}') from None

    profile = RateProfile.from_hex(lines[1], n_bits)
    if profile.k_bits != k_bits:
        raise ProfileFormatError(
            f'header says K={k_bits} but the profile has {profile.k_bits} '
            f'information bits')
    cfg = CodeConfig(profile, ConvPolynomial.from_octal(fields[2]))
    return cfg, design_snr_db


def write_profile_file(path, cfg, design_snr_db=None):
    with open(path, 'w') as stream:
        stream.write(format_profile(cfg, design_snr_db))


def read_profile_file(path):
    try:
        with open(path) as stream:
            return parse_profile(stream.read())
    except OSError as exc:
        raise ProfileFormatError(f'cannot read {path}: {exc}') from exc


def load_code(profile_path=None, catalog_key=None):
    """CodeConfig and design SNR from a profile file or a catalog key"""
    if bool(profile_path) == bool(catalog_key):
        raise ProfileFormatError('give exactly one of a profile file and a '
                                 'catalog key')
    if profile_path:
        return read_profile_file(profile_path)
    entry = parse_catalog_key(catalog_key)
    return entry.code_config(), entry.design_snr_db

"""Rate profiles reported for the List-Search construction.

Each entry records the code, the polynomial, the SCL list size L and the
search list size Lg used to build it, and the design Eb/N0. The single
entry with retains_duplicates=True was built keeping duplicate paths
during pruning.
"""
from dataclasses import dataclass

from codec.coding import CodeConfig, ConvPolynomial
from codec.exceptions import CodeConfigError


@dataclass(frozen=True)
class PublishedProfile:
    n_bits: int
    k_bits: int
    conv_poly: str
    list_size: int
    search_size: int
    design_snr_db: float
    profile_hex: str
    retains_duplicates: bool = False

    def code_config(self):
        return CodeConfig.from_hex(
            self.profile_hex, self.n_bits,
            ConvPolynomial.from_octal(self.conv_poly))


PUBLISHED_PROFILES = (
    PublishedProfile(256, 128, '3211', 40000, 400, 2.5,
                     '00000001000305770013077F1757577F'
                     '0013075F17773FFF175F177F177F7FFF'),
    PublishedProfile(256, 128, '3211', 40000, 400, 3.0,
                     '00000003000317570013075F1757577F'
                     '0013075F17773F7F175F177F177F7FFF'),
    PublishedProfile(256, 128, '3211', 40000, 400, 3.2,
                     '00000005001317170013075F1757577F'
                     '0013075F17773F7F175F177F177F7FFF'),
    PublishedProfile(256, 128, '133', 40000, 400, 2.5,
                     '000000010005033F0015155717577FFF'
                     '0015155707777FFF171737FF177F7FFF'),
    PublishedProfile(256, 128, '133', 40000, 400, 3.2,
                     '00000005001511770015155717577F7F'
                     '00151557133F7FFF1717377F177F7FFF'),
    PublishedProfile(256, 128, '1', 200000, 400, 3.2,
                     '000000050011031700031117051717FF'
                     '01031557155F7FFF177F7FFF7FFFFFFF'),
    PublishedProfile(256, 128, '133', 40000, 400, 3.2,
                     '00000005001511770015155717575FFF'
                     '0015155717577F7F171737FF177F7FFF',
                     retains_duplicates=True),
    PublishedProfile(128, 42, '3211', 40000, 400, 2.5,
                     '0000000300130757001307171717177F'),
    PublishedProfile(128, 42, '3211', 40000, 400, 3.0,
                     '0000000500130757001307171717177F'),
    PublishedProfile(128, 42, '3211', 40000, 400, 3.5,
                     '0000001500130357001307171717177F'),
    PublishedProfile(128, 85, '3211', 40000, 400, 2.5,
                     '0001133F077F7FFF173F7F7F177F7FFF'),
    PublishedProfile(128, 85, '3211', 40000, 400, 3.0,
                     '0003077F177F7FFF171F377F177F7FFF'),
    PublishedProfile(128, 85, '3211', 40000, 400, 3.5,
                     '0013077F177F3FFF175F177F177F7FFF'),
    PublishedProfile(64, 32, '3211', 40000, 400, 2.5, '0003157F171F177F'),
    PublishedProfile(64, 32, '3211', 40000, 400, 3.0, '0007177F1517177F'),
    PublishedProfile(64, 32, '133', 40000, 400, 2.5, '0005077F1337577F'),
    PublishedProfile(64, 32, '133', 40000, 400, 3.0, '0013077F1337177F'),
    PublishedProfile(64, 32, '1', 100000, 400, 2.5, '00051357153F1FFF'),
)


def published_profile(n_bits, k_bits, conv_poly, design_snr_db,
                      retains_duplicates=False):
    """Look up a catalog entry; conv_poly is given in octal"""
    octal = ConvPolynomial.from_octal(conv_poly).octal_repr
    for entry in PUBLISHED_PROFILES:
        if (entry.n_bits, entry.k_bits, entry.conv_poly) == \
                (n_bits, k_bits, octal) \
                and abs(entry.design_snr_db - design_snr_db) < 1e-9 \
                and entry.retains_duplicates == retains_duplicates:
            return entry
    raise CodeConfigError(
        f'no published profile for ({n_bits},{k_bits}) g={octal} '
        f'at {design_snr_db} dB')


def parse_catalog_key(text):
    """'N,K,g,snr[,rdp]' -> PublishedProfile"""
    parts = [part.strip() for part in str(text).split(',')]
    if len(parts) not in (4, 5) or (len(parts) == 5 and parts[4] != 'rdp'):
        raise CodeConfigError(
            f'catalog key must read N,K,g,snr[,rdp], got {text!r}')
    try:
        n_bits, k_bits, snr = int(parts[0]), int(parts[1]), float(parts[3])
    except ValueError:
        raise CodeConfigError(f'bad catalog key {text!r}') from None
    return published_profile(n_bits, k_bits, parts[2], snr,
                             retains_duplicates=len(parts) == 5)

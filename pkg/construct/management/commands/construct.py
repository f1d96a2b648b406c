from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from codec.coding import CodeConfig, ConvPolynomial
from codec.management.code_options import open_output
from codec.profile_io import format_profile
from construct.methods import CONSTRUCTION_METHODS, build_profile


class Command(BaseCommand):
    help = 'Construct a PAC rate profile and write it as a profile file'

    def add_arguments(self, parser):
        parser.add_argument('--method', choices=CONSTRUCTION_METHODS,
                            default='ls')
        parser.add_argument('--n', type=int, required=True, dest='n_bits')
        parser.add_argument('--k', type=int, required=True, dest='k_bits')
        parser.add_argument('--g-octal', dest='conv_poly')
        parser.add_argument('--design-snr', type=float,
                            help='design Eb/N0 in dB')
        parser.add_argument('--list-size', type=int, default=1024,
                            help='SCL list size L of the spectrum run')
        parser.add_argument('--search-size', type=int, default=64,
                            help='search list size Lg')
        parser.add_argument('--keep-duplicates', action='store_true')
        parser.add_argument('--out', help='profile file (default stdout)')

    def handle(self, *args, **options):
        try:
            conv_poly = ConvPolynomial.from_octal(
                options['conv_poly'] or settings.PACLAB['DEFAULT_CONV_POLY'])
            profile = build_profile(
                options['method'], options['n_bits'], options['k_bits'],
                conv_poly, options['design_snr'], options['list_size'],
                options['search_size'], options['keep_duplicates'],
                settings.PACLAB['NOISELESS_LLR'])
        except ValueError as exc:
            raise CommandError(str(exc))

        text = format_profile(CodeConfig(profile, conv_poly),
                              options['design_snr'])
        with open_output(options['out'], self.stdout) as out:
            out.write(text)

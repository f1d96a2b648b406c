from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from codec.management.code_options import add_code_arguments, \
    code_from_options, open_output
from sim.config import parse_snr_grid
from spectrum.estimation import enumerate_spectrum, estimate_spectrum
from spectrum.weights import min_weight, union_bound_table


def format_spectrum_report(spectrum, rate, snr_grid):
    """`d,count` CSV, the minimum distance and the union-bound table"""
    lines = ['d,count']
    lines += [f'{d},{a}' for d, a in spectrum.counts.items()]
    lines += ['', f'd_min,{min_weight(spectrum)}']
    if snr_grid:
        lines += ['', 'snr_db,union_bound,dominant_term']
        lines += [f'{snr:g},{full:.6e},{dominant:.6e}'
                  for snr, full, dominant in
                  union_bound_table(spectrum, rate, snr_grid)]
    return '\n'.join(lines) + '\n'


class Command(BaseCommand):
    help = 'Estimate (or enumerate) the weight spectrum of a PAC code'

    def add_arguments(self, parser):
        add_code_arguments(parser)
        parser.add_argument('--list-size', type=int, default=1024)
        parser.add_argument('--exhaustive', action='store_true',
                            help='encode all 2^K messages (K <= 20)')
        parser.add_argument('--snr-grid', default='',
                            help='comma separated Eb/N0 values in dB')
        parser.add_argument('--out', help='report file (default stdout)')

    def handle(self, *args, **options):
        code, _ = code_from_options(options)
        try:
            snr_grid = parse_snr_grid(options['snr_grid']) \
                if options['snr_grid'] else ()
            if options['exhaustive']:
                spectrum = enumerate_spectrum(code)
            else:
                spectrum = estimate_spectrum(
                    code, options['list_size'],
                    settings.PACLAB['NOISELESS_LLR'])
            report = format_spectrum_report(spectrum, code.rate, snr_grid)
        except ValueError as exc:
            raise CommandError(str(exc))

        with open_output(options['out'], self.stdout) as out:
            out.write(report)

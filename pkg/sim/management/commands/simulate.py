from django.conf import settings
from django.contrib.auth import get_user_model
from django.core.management.base import BaseCommand, CommandError

from codec.management.code_options import open_output
from decoders.factory import DECODER_KINDS
from sim.campaign import run_campaign
from sim.config import load_sim_config
from sim.recording import record_campaign
from sim.report import emit_report, write_plot_data
from spectrum.estimation import estimate_spectrum

# option dest -> config key
OVERRIDES = {
    'profile': 'profile',
    'catalog': 'catalog',
    'decoder': 'decoder',
    'list_size': 'list_size',
    'delta': 'delta',
    'max_visits': 'max_visits',
    'critical_set': 'critical_set',
    'snr_grid': 'snr_grid',
    'min_errors': 'min_errors',
    'max_frames': 'max_frames',
    'seed': 'seed',
    'workers': 'workers',
    'spectrum_list_size': 'spectrum_list_size',
}


class Command(BaseCommand):
    help = 'Run a Monte-Carlo BLER/complexity campaign and print CSV'

    def add_arguments(self, parser):
        parser.add_argument('config', nargs='?',
                            help='key=value campaign file')
        parser.add_argument('--profile')
        parser.add_argument('--catalog', metavar='N,K,g,snr')
        parser.add_argument('--decoder', choices=DECODER_KINDS)
        parser.add_argument('--list-size', type=int)
        parser.add_argument('--delta', type=float)
        parser.add_argument('--max-visits', type=int)
        parser.add_argument('--critical-set',
                            help='index file, "cpscs" or "pscs:<size>"')
        parser.add_argument('--snr-grid', help='e.g. 1.0,1.5,2.0')
        parser.add_argument('--min-errors', type=int)
        parser.add_argument('--max-frames', type=int)
        parser.add_argument('--seed', type=int)
        parser.add_argument('--workers', type=int)
        parser.add_argument('--spectrum-list-size', type=int,
                            help='add a union-bound column from a spectrum '
                                 'estimated with this list size')
        parser.add_argument('--noiseless', action='store_true')
        parser.add_argument('--min-sum', action='store_true')
        parser.add_argument('--out', help='CSV file (default stdout)')
        parser.add_argument('--plot-data', metavar='DIR',
                            help='write one .dat file per curve')
        parser.add_argument('--record', metavar='USERNAME',
                            help='store the campaign for this user')

    def handle(self, *args, **options):
        overrides = {key: options[dest] for dest, key in OVERRIDES.items()
                     if options[dest] is not None}
        for flag in ('noiseless', 'min_sum'):
            if options[flag]:
                overrides[flag] = 'true'

        user = None
        if options['record']:
            try:
                user = get_user_model().objects.get_by_natural_key(
                    options['record'])
            except get_user_model().DoesNotExist:
                raise CommandError(f'no user {options["record"]!r}')

        try:
            cfg = load_sim_config(options['config'], overrides,
                                  settings.PACLAB)
            spectrum = None
            if cfg.spectrum_list_size:
                spectrum = estimate_spectrum(
                    cfg.code, cfg.spectrum_list_size,
                    settings.PACLAB['NOISELESS_LLR'])
            records = run_campaign(cfg)
        except ValueError as exc:
            raise CommandError(str(exc))

        with open_output(options['out'], self.stdout) as out:
            out.write(emit_report(records, spectrum, cfg.code.rate))
        if options['plot_data']:
            write_plot_data(records, options['plot_data'], spectrum,
                            cfg.code.rate)
        if user is not None:
            record_campaign(user, cfg, records, spectrum)

        exhausted = sum(record.budget_exhausted for record in records)
        if exhausted:
            raise CommandError(
                f'{exhausted} frames exhausted their Fano visit budget')

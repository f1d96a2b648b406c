import csv
import io

import numpy as np
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from codec.management.code_options import add_code_arguments, \
    code_from_options, open_output
from construct.critical_sets import read_index_file
from decoders.factory import DECODER_KINDS, make_decoder

CSV_COLUMNS = ('frame', 'd_hat', 'v_hat', 'metric', 'sort_ops', 'anv',
               'list_rank', 'exhausted')


class Command(BaseCommand):
    help = 'Decode frames of channel LLRs, one frame per line, into CSV rows'

    def add_arguments(self, parser):
        add_code_arguments(parser)
        parser.add_argument('--decoder', choices=DECODER_KINDS,
                            default='scl')
        parser.add_argument('--list-size', type=int, default=1)
        parser.add_argument('--delta', type=float)
        parser.add_argument('--max-visits', type=int)
        parser.add_argument('--snr', type=float,
                            help='channel Eb/N0 in dB (sets the Fano bias)')
        parser.add_argument('--critical-set',
                            help='split-set file, one index per line')
        parser.add_argument('--min-sum', action='store_true')
        parser.add_argument('--llr-file', required=True)
        parser.add_argument('--out', help='CSV file (default stdout)')

    def handle(self, *args, **options):
        defaults = settings.PACLAB
        code, _ = code_from_options(options)
        try:
            frames = np.loadtxt(options['llr_file'], ndmin=2,
                                dtype=np.float64)
            split_set = read_index_file(options['critical_set']) \
                if options['critical_set'] else None
            decode = make_decoder(
                code,
                options['decoder'],
                list_size=options['list_size'],
                split_set=split_set,
                delta=defaults['FANO_DELTA'] if options['delta'] is None
                else options['delta'],
                max_visits=defaults['FANO_MAX_VISITS']
                if options['max_visits'] is None else options['max_visits'],
                snr_db=options['snr'],
                min_sum=options['min_sum'],
                llr_clamp=defaults['LLR_CLAMP'],
            )
            results = [decode(frame) for frame in frames]
        except (OSError, ValueError) as exc:
            raise CommandError(str(exc))

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for index, result in enumerate(results):
            row = result.as_dict()
            writer.writerow([index] + [row[c] for c in CSV_COLUMNS[1:]])
        with open_output(options['out'], self.stdout) as out:
            out.write(buffer.getvalue())

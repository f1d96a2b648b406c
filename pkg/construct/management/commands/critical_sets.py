from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from codec.management.code_options import add_code_arguments, \
    code_from_options, open_output
from construct.critical_sets import cpscs_construct, format_index_list, \
    format_ladder_csv, pscs_construct


class Command(BaseCommand):
    help = 'Write the complete or a reduced path-splitting critical set'

    def add_arguments(self, parser):
        add_code_arguments(parser)
        parser.add_argument('--method', choices=('cpscs', 'pscs'),
                            default='cpscs')
        parser.add_argument('--size', type=int,
                            help='PSCS size (default: the full ladder top)')
        parser.add_argument('--list-size', type=int)
        parser.add_argument('--search-size', type=int)
        parser.add_argument('--ladder', help='CSV file for the PSCS ladder')
        parser.add_argument('--out', help='index file (default stdout)')

    def handle(self, *args, **options):
        code, _ = code_from_options(options)
        defaults = settings.PACLAB
        ladder = None
        try:
            if options['method'] == 'cpscs':
                indices = cpscs_construct(code.n_bits, code.k_bits,
                                          code.info_set)
            else:
                ladder = pscs_construct(
                    code,
                    defaults['PSCS_LIST_SIZE'] if options['list_size'] is None
                    else options['list_size'],
                    defaults['PSCS_SEARCH_SIZE']
                    if options['search_size'] is None
                    else options['search_size'],
                    defaults['NOISELESS_LLR'],
                ).pscs_ladder
                if not ladder:
                    raise CommandError('the critical set is empty')
                size = len(ladder) if options['size'] is None \
                    else options['size']
                if not 1 <= size <= len(ladder):
                    raise CommandError(
                        f'--size must lie in [1, {len(ladder)}]')
                indices = ladder[size - 1]
        except ValueError as exc:
            raise CommandError(str(exc))

        with open_output(options['out'], self.stdout) as out:
            out.write(format_index_list(indices))
        if ladder is not None and options['ladder']:
            with open(options['ladder'], 'w') as stream:
                stream.write(format_ladder_csv(ladder))

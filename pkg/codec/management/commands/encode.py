from django.core.management.base import BaseCommand, CommandError

from codec.management.code_options import add_code_arguments, \
    code_from_options, open_output
from codec.transforms import format_bits, pac_encode, parse_bit_string


class Command(BaseCommand):
    help = 'Encode binary messages (one per line) into PAC codewords'

    def add_arguments(self, parser):
        add_code_arguments(parser)
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--message', help='one message as a 0/1 string')
        source.add_argument('--message-file',
                            help='file with one 0/1 message per line')
        parser.add_argument('--out', help='codeword file (default stdout)')

    def handle(self, *args, **options):
        code, _ = code_from_options(options)
        if options['message']:
            lines = [options['message']]
        else:
            try:
                with open(options['message_file']) as stream:
                    lines = [line for line in stream.read().splitlines()
                             if line.strip() and not line.startswith('#')]
            except OSError as exc:
                raise CommandError(str(exc))

        try:
            codewords = [format_bits(pac_encode(parse_bit_string(line), code))
                         for line in lines]
        except ValueError as exc:
            raise CommandError(str(exc))

        with open_output(options['out'], self.stdout) as out:
            out.write(''.join(f'{word}\n' for word in codewords))

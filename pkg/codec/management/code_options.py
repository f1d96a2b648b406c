"""--profile / --catalog options shared by the management commands"""
from contextlib import nullcontext

from django.core.management.base import CommandError

from codec.profile_io import load_code


def add_code_arguments(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--profile', help='profile file (N K g snr + hex)')
    group.add_argument('--catalog', metavar='N,K,g,snr',
                       help='published profile, append ",rdp" for the '
                            'duplicate-retaining one')


def code_from_options(options):
    """(CodeConfig, design SNR) named by the options"""
    try:
        return load_code(options.get('profile'), options.get('catalog'))
    except ValueError as exc:
        raise CommandError(str(exc))


def open_output(path, stdout):
    """Write to `path` when given, to the command's stdout otherwise"""
    if path:
        return open(path, 'w')
    return nullcontext(stdout)

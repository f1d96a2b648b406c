#!/usr/bin/env python
"""paclab command-line entry point.

Besides the usual Django commands it runs the toolkit subcommands:
construct, critical_sets, encode, decode, spectrum and simulate.
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Install the packages listed in "
            "requirements.txt and activate the virtual environment."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
